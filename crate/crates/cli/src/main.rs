//! `tgw`: command-line workbench for finite ternary Γ-semirings.

mod commands;
mod input;
mod report;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tgw_core::homology::Backend;
use tgw_core::{Error, Options};

use commands::{Ctx, Format, Out};

#[derive(Parser)]
#[command(name = "tgw", version, about = "Finite ternary Γ-semiring workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Module fixture: bundled name, path, `regular` or `zero`. Repeatable; order is M, N, P.
    #[arg(long = "module", global = true)]
    modules: Vec<String>,
    /// Downgrade axiom failures to warnings and continue.
    #[arg(long, global = true)]
    lenient: bool,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Embedding dimension.
    #[arg(long, global = true, default_value_t = 2)]
    k: usize,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Valuation table: JSON object from parameter label to one real per element.
    #[arg(long, global = true)]
    valuation: Option<String>,
    /// `default` or a JSON object from point label to weight.
    #[arg(long, global = true)]
    weights: Option<String>,
    /// Spectrum point to localize at, as printed by `spec`.
    #[arg(long, global = true)]
    prime: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Auto)]
    backend: BackendArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Auto,
    Idempotent,
    Group,
    Saturation,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive axiom check with witnesses.
    Check { fixtures: Vec<String> },
    /// Ideal lattice with prime and maximal flags.
    Ideals { fixture: String },
    /// Prime spectrum, closed sets and the Zariski identities.
    Spec { fixture: String },
    /// Catalog of cyclic modules.
    Modules { fixture: String },
    /// Simple catalog modules with End census and Schur check.
    Simples { fixture: String },
    /// Density search on a simple module.
    Density { fixture: String },
    /// Ext⁰ and Ext¹.
    Ext { fixture: String },
    /// Tor₀ and Tor₁.
    Tor { fixture: String },
    /// Tensor-Hom adjunction check.
    Adjunction { fixture: String },
    /// Annihilators of simples and the Jacobson radical.
    Radical { fixture: String },
    /// Localization at spectrum points.
    Localize { fixture: String },
    /// Injectivity of the map into the product of localizations.
    Gelfand { fixture: String },
    /// Spectral embedding and graph export.
    Embed { fixture: String },
    /// Full battery over the bundled structures.
    Report,
}

fn budget_from_env(opts: &mut Options) -> Result<(), String> {
    if let Ok(v) = std::env::var("TGW_BUDGET") {
        let n: usize = v.trim().parse().map_err(|_| format!("TGW_BUDGET must be a non-negative integer, got `{v}`"))?;
        opts.budget.max_enumeration = n.min(63);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Out, Error> {
    let mut opts = if cli.lenient { Options::lenient() } else { Options::strict() };
    budget_from_env(&mut opts).map_err(Error::Parse)?;
    let format = match cli.format {
        FormatArg::Table => Format::Table,
        FormatArg::Json => Format::Json,
        FormatArg::Dot => Format::Dot,
        FormatArg::Csv => Format::Csv,
    };
    let is_embed = matches!(cli.command, Command::Embed { .. });
    if matches!(format, Format::Dot | Format::Csv) && !is_embed {
        return Err(Error::UnknownFormat(format!("{:?} is only available for embed", format).to_lowercase()));
    }
    let ctx = Ctx {
        opts,
        modules: cli.modules,
        k: cli.k,
        format,
        valuation: cli.valuation,
        weights: cli.weights,
        prime: cli.prime,
        backend: match cli.backend {
            BackendArg::Auto => Backend::Auto,
            BackendArg::Idempotent => Backend::Idempotent,
            BackendArg::Group => Backend::Group,
            BackendArg::Saturation => Backend::Saturation,
        },
    };
    let one = |f: &str| input::structure(f);
    match &cli.command {
        Command::Check { fixtures } => {
            if fixtures.is_empty() {
                return Err(Error::Parse("check needs at least one fixture".into()));
            }
            let structures = fixtures.iter().map(|f| one(f)).collect::<Result<Vec<_>, _>>()?;
            commands::check(&structures, &ctx)
        }
        Command::Ideals { fixture } => commands::ideals(&one(fixture)?, &ctx),
        Command::Spec { fixture } => commands::spec(&one(fixture)?, &ctx),
        Command::Modules { fixture } => commands::modules(&one(fixture)?, &ctx),
        Command::Simples { fixture } => commands::simples(&one(fixture)?, &ctx),
        Command::Density { fixture } => commands::density(&one(fixture)?, &ctx),
        Command::Ext { fixture } => commands::ext(&one(fixture)?, &ctx),
        Command::Tor { fixture } => commands::tor(&one(fixture)?, &ctx),
        Command::Adjunction { fixture } => commands::adjunction(&one(fixture)?, &ctx),
        Command::Radical { fixture } => commands::radical(&one(fixture)?, &ctx),
        Command::Localize { fixture } => commands::localize_cmd(&one(fixture)?, &ctx),
        Command::Gelfand { fixture } => commands::gelfand(&one(fixture)?, &ctx),
        Command::Embed { fixture } => commands::embed(&one(fixture)?, &ctx),
        Command::Report => report::report(&ctx.opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = matches!(cli.format, FormatArg::Json);
    let out_path = cli.out.clone();
    match run(cli) {
        Ok(out) => {
            let text = if json {
                serde_json::to_string_pretty(&out.json).expect("values serialize") + "\n"
            } else {
                out.text
            };
            let written = match &out_path {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("{path}: {e}")),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(out.finding))
        }
        Err(Error::AxiomsFailed(name)) => {
            eprintln!("finding: `{name}` fails its axioms (run `tgw check {name}` for witnesses, or pass --lenient)");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
