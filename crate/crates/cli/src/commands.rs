use std::sync::Arc;

use serde_json::{json, Value};
use tgw_core::geometry::{self, GraphFormat, ValuationTable, WeightScheme};
use tgw_core::homology::{self, Backend, MonoidPresentation};
use tgw_core::ideals::{enumerate_ideals, Flag};
use tgw_core::localize::{gelfand_injectivity, localize};
use tgw_core::module;
use tgw_core::spectrum::{spectrum, zariski_report};
use tgw_core::subset;
use tgw_core::{AxiomReport, Error, Options, Result, Semiring};

use crate::input::{self, Structure};
use crate::table::Table;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Dot,
    Csv,
}

pub struct Ctx {
    pub opts: Options,
    pub modules: Vec<String>,
    pub k: usize,
    pub format: Format,
    pub valuation: Option<String>,
    pub weights: Option<String>,
    pub prime: Option<String>,
    pub backend: Backend,
}

pub struct Out {
    pub text: String,
    pub json: Value,
    /// A verified-false outcome (exit code 1).
    pub finding: bool,
}

impl Out {
    fn new(text: String, json: Value, finding: bool) -> Self {
        Out { text, json, finding }
    }
}

fn flag(f: Flag) -> &'static str {
    match f {
        Flag::Yes => "yes",
        Flag::No => "no",
        Flag::Unchecked => "unchecked",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn lenient_note(lenient: bool) -> &'static str {
    if lenient {
        "note: axioms failed; results computed under the lenient override\n"
    } else {
        ""
    }
}

fn render_presentation(p: &MonoidPresentation) -> String {
    if p.is_trivial() {
        "0".into()
    } else {
        p.structure_tag.clone()
    }
}

fn axiom_rows(t: &mut Table, owner: &str, report: &AxiomReport, severity: &str) {
    let mut laws: Vec<&str> = report.violations.iter().map(|v| v.law.as_str()).collect();
    laws.dedup();
    for law in laws {
        let count = report.violations.iter().filter(|v| v.law == law).count();
        let v = report.first(law).expect("law has a violation");
        t.row([
            owner.to_string(),
            severity.to_string(),
            law.to_string(),
            format!("{:?}", v.witness),
            v.left.to_string(),
            v.right.to_string(),
            count.to_string(),
        ]);
    }
}

pub fn check(structures: &[Structure], ctx: &Ctx) -> Result<Out> {
    let mut t = Table::new(["structure", "severity", "law", "witness", "left", "right", "count"]);
    let mut json = Vec::new();
    let mut finding = false;
    let severity = if ctx.opts.lenient { "warning" } else { "violation" };
    for st in structures {
        let s = &st.semiring;
        let report = s.axiom_report();
        finding |= !report.passed && !ctx.opts.lenient;
        axiom_rows(&mut t, s.name(), report, severity);
        let mut modules = Vec::new();
        for arg in &ctx.modules {
            let m = input::module(arg, s)?;
            let mr = m.axiom_report();
            finding |= !mr.passed && !ctx.opts.lenient;
            axiom_rows(&mut t, m.name(), mr, severity);
            modules.push(json!({"module": m.name(), "report": mr}));
        }
        json.push(json!({"structure": s.name(), "report": report, "modules": modules}));
    }
    let mut text = String::new();
    if t.is_empty() {
        text += "no violations\n";
    } else {
        text += &t.render();
    }
    Ok(Out::new(text, json!({"check": json, "lenient": ctx.opts.lenient}), finding))
}

pub fn ideals(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let lattice = enumerate_ideals(s, &ctx.opts)?;
    let mut t = Table::new(["ideal", "prime", "maximal"]);
    for i in &lattice.ideals {
        t.row([i.render(s), flag(i.is_prime).into(), flag(i.is_maximal).into()]);
    }
    let text = format!("{}{}", lenient_note(lattice.lenient), t.render());
    Ok(Out::new(text, json!({"structure": s.name(), "ideals": lattice}), false))
}

pub fn spec(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let space = spectrum(s, &ctx.opts)?;
    let z = zariski_report(s, &space);
    let labels = space.point_labels(s);
    let mut t = Table::new(["ideal I", "V(I)"]);
    for c in &space.closed_sets {
        let pts: Vec<&str> = c.points.iter().map(|&p| labels[p].as_str()).collect();
        t.row([space.lattice.ideals[c.ideal].render(s), format!("[{}]", pts.join(" "))]);
    }
    let text = format!(
        "{}points: {}\n{}V(I)∩V(J) = V(I+J): {} ({} pairs)\nT0: {}\n",
        lenient_note(space.lattice.lenient),
        if labels.is_empty() { "none".to_string() } else { labels.join(" ") },
        t.render(),
        if z.passed { "holds" } else { "fails" },
        z.pairs_checked,
        yes_no(z.t0),
    );
    Ok(Out::new(
        text,
        json!({"structure": s.name(), "points": labels, "closed_sets": space.closed_sets, "zariski": z}),
        !z.passed,
    ))
}

fn catalog(s: &Arc<Semiring>, opts: &Options) -> Result<module::Catalog> {
    module::cyclic_module_catalog_from(&input::regular(s)?, opts)
}

pub fn modules(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let c = catalog(s, &ctx.opts)?;
    let mut t = Table::new(["module", "size", "carrier", "simple"]);
    let mut json = Vec::new();
    for e in &c.entries {
        t.row([
            e.module.name().to_string(),
            e.module.size().to_string(),
            subset::render(&(0..e.module.size()).collect::<Vec<_>>(), e.module.carrier()),
            yes_no(e.simple).to_string(),
        ]);
        json.push(json!({"module": e.module.name(), "carrier": e.module.carrier(), "congruence": e.congruence, "simple": e.simple}));
    }
    let text = format!("{}{}", lenient_note(c.lenient), t.render());
    Ok(Out::new(text, json!({"structure": s.name(), "catalog": json}), false))
}

pub fn simples(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let c = catalog(s, &ctx.opts)?;
    let mut t = Table::new(["module", "size", "|End|", "bijective", "Schur", "local", "dense"]);
    let mut json = Vec::new();
    let mut finding = false;
    for e in c.simples() {
        let end = module::end_semiring(&e.module, &ctx.opts)?;
        let dense = module::density_check(&e.module, &ctx.opts, false).map(|d| d.dense);
        let dense_cell = match &dense {
            Ok(d) => yes_no(*d).to_string(),
            Err(err) => format!("n/a ({err})"),
        };
        finding |= end.schur == Some(false) || matches!(dense, Ok(false));
        t.row([
            e.module.name().to_string(),
            e.module.size().to_string(),
            end.size().to_string(),
            end.bijective_count.to_string(),
            end.schur.map_or("skipped", yes_no).to_string(),
            end.locality.map_or("skipped", yes_no).to_string(),
            dense_cell,
        ]);
        json.push(json!({"module": e.module.name(), "end": end, "dense": dense.ok()}));
    }
    let text = format!("{}{}", lenient_note(c.lenient), t.render());
    Ok(Out::new(text, json!({"structure": s.name(), "simples": json}), finding))
}

pub fn density(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let m = input::nth_module(&ctx.modules, 0, s)?;
    let r = module::density_check(&m, &ctx.opts, true)?;
    let mut t = Table::new(["m", "n", "a", "α", "β"]);
    for w in &r.witnesses {
        t.row([
            m.label(w.source).to_string(),
            m.label(w.target).to_string(),
            s.label(w.a).to_string(),
            s.gamma()[w.alpha].clone(),
            s.gamma()[w.beta].clone(),
        ]);
    }
    let mut text = format!("{}module: {}\nanchor: {}\n", lenient_note(r.lenient), m.name(), s.label(r.anchor));
    text += &t.render();
    for &(x, y) in &r.failures {
        text += &format!("unsolved: {} -> {}\n", m.label(x), m.label(y));
    }
    text += &format!(
        "dense: {}\nrank-2: {}\n",
        if r.dense { "Yes" } else { "No" },
        r.rank2.map_or("unchecked", yes_no)
    );
    Ok(Out::new(text, json!({"module": m.name(), "density": r}), !r.dense))
}

pub fn ext(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let m = input::nth_module(&ctx.modules, 0, s)?;
    let n = input::nth_module(&ctx.modules, 1, s)?;
    let r = homology::ext1(&m, &n, &ctx.opts)?;
    let text = format!(
        "M = {}\nN = {}\nresolution ranks: {:?} (exact: {})\n|Z¹| = {}, |B¹| = {}\nExt¹(M,N) = {} ({} classes)\nExt⁰(M,N): {} maps, |Hom(M,N)| = {}, agree: {}\n",
        m.name(),
        n.name(),
        r.ranks,
        yes_no(r.exact),
        r.cycles,
        r.boundaries,
        render_presentation(&r.ext1),
        r.ext1.size(),
        r.ext0_size,
        r.hom_size,
        yes_no(r.ext0_matches_hom),
    );
    let finding = !r.exact || !r.ext0_matches_hom;
    Ok(Out::new(text, json!({"M": m.name(), "N": n.name(), "ext": r}), finding))
}

pub fn tor(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let m = input::nth_module(&ctx.modules, 0, s)?;
    let n = input::nth_module(&ctx.modules, 1, s)?;
    let r = homology::tor1(&m, &n, ctx.backend, &ctx.opts)?;
    let text = format!(
        "M = {}\nN = {}\nresolution ranks: {:?} (exact: {})\nTor₁(M,N) = {} ({} classes, backend {})\nTor₀(M,N) = {} ({} classes), ≅ M⊗N: {}\n",
        m.name(),
        n.name(),
        r.ranks,
        yes_no(r.exact),
        render_presentation(&r.tor1),
        r.tor1.size(),
        r.tor1.backend,
        render_presentation(&r.tor0),
        r.tor0.size(),
        yes_no(r.tor0_matches_tensor),
    );
    let finding = !r.exact || !r.tor0_matches_tensor;
    Ok(Out::new(text, json!({"M": m.name(), "N": n.name(), "tor": r}), finding))
}

pub fn adjunction(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let m = input::nth_module(&ctx.modules, 0, s)?;
    let n = input::nth_module(&ctx.modules, 1, s)?;
    let p = input::nth_module(&ctx.modules, 2, s)?;
    let r = homology::adjunction_check(&m, &n, &p, &ctx.opts)?;
    let text = format!(
        "M = {}, N = {}, P = {}\n|Hom(M⊗N,P)| = {}\n|Hom(M,Hom(N,P))| = {}\nΦ bijective: {}\nΨ∘Φ = id and Φ∘Ψ = id: {}\n",
        m.name(),
        n.name(),
        p.name(),
        r.left_size,
        r.right_size,
        yes_no(r.phi_bijective),
        yes_no(r.round_trips),
    );
    Ok(Out::new(text, json!({"M": m.name(), "N": n.name(), "P": p.name(), "adjunction": r}), !r.holds))
}

pub fn radical(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let c = catalog(s, &ctx.opts)?;
    let mut t = Table::new(["simple module", "Ann", "0 by convention"]);
    let mut anns = Vec::new();
    for e in c.simples() {
        let a = module::annihilator(&e.module, &ctx.opts)?;
        t.row([
            e.module.name().to_string(),
            subset::render(&a.members, s.elements()),
            yes_no(a.zero_by_convention).to_string(),
        ]);
        anns.push(json!({"module": e.module.name(), "annihilator": a}));
    }
    let j = module::jacobson_radical(s, &c, &ctx.opts)?;
    let mut text = format!("{}{}", lenient_note(c.lenient), t.render());
    text += &format!(
        "J = {} over {} cyclic simple module(s)\nsemiprimitive: {}\n",
        subset::render(&j.members, s.elements()),
        j.simple_count,
        yes_no(j.semiprimitive)
    );
    let homological = match homology::homological_semisimplicity(s, &c, &ctx.opts) {
        Ok(h) => {
            text += &format!(
                "Ext¹ vanishes on catalog pairs: {} (consistent with J: {})\n",
                yes_no(h.semisimple),
                yes_no(h.consistent)
            );
            json!(h)
        }
        Err(e) => {
            text += &format!("Ext¹ on catalog pairs: n/a ({e})\n");
            Value::Null
        }
    };
    Ok(Out::new(
        text,
        json!({"structure": s.name(), "annihilators": anns, "radical": j, "homological": homological}),
        false,
    ))
}

pub fn localize_cmd(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let space = spectrum(s, &ctx.opts)?;
    let labels = space.point_labels(s);
    let chosen: Vec<usize> = match &ctx.prime {
        Some(p) => vec![labels.iter().position(|l| l == p).ok_or_else(|| Error::Reference {
            label: p.clone(),
            context: "spectrum points".into(),
        })?],
        None => (0..labels.len()).collect(),
    };
    let mut t = Table::new(["P", "classes", "well defined", "local", "maximal ideal"]);
    let mut json = Vec::new();
    let mut finding = false;
    for i in chosen {
        let l = localize(s, &space.points[i], &ctx.opts)?;
        finding |= !l.well_defined || l.local == Some(false);
        let max: Vec<&str> = l.maximal_ideal.iter().map(|&c| l.labels[c].as_str()).collect();
        t.row([
            labels[i].clone(),
            format!("[{}]", l.labels.join(" ")),
            yes_no(l.well_defined).to_string(),
            l.local.map_or("unchecked", yes_no).to_string(),
            format!("{{{}}}", max.join(",")),
        ]);
        json.push(json!({"prime": labels[i], "localization": l}));
    }
    let text = if t.is_empty() {
        "empty spectrum: nothing to localize\n".to_string()
    } else {
        t.render()
    };
    Ok(Out::new(text, json!({"structure": s.name(), "localizations": json}), finding))
}

pub fn gelfand(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let space = spectrum(s, &ctx.opts)?;
    let g = gelfand_injectivity(s, &space, &ctx.opts)?;
    let mut text = format!("maximal points: {}\ninjective: {}\n", g.maximal_points.len(), yes_no(g.injective));
    if let Some((a, b)) = g.witness {
        text += &format!("collision: {} and {}\n", s.label(a), s.label(b));
    }
    Ok(Out::new(text, json!({"structure": s.name(), "gelfand": g}), !g.injective))
}

pub fn embed(st: &Structure, ctx: &Ctx) -> Result<Out> {
    let s = &st.semiring;
    let nu = match (&ctx.valuation, &st.valuation) {
        (Some(path), _) => ValuationTable::parse(s, &read(path)?)?,
        (None, Some(map)) => ValuationTable::from_map(s, map)?,
        (None, None) => ValuationTable::index(s),
    };
    let scheme = match ctx.weights.as_deref() {
        None | Some("default") => WeightScheme::Default,
        Some(path) => WeightScheme::parse(&read(path)?)?,
    };
    let g = geometry::embed(s, ctx.k, &nu, &scheme, &ctx.opts)?;
    let text = match ctx.format {
        Format::Dot => geometry::export_graph(&g, GraphFormat::Dot)?,
        Format::Csv => geometry::export_graph(&g, GraphFormat::Csv)?,
        Format::Json | Format::Table => {
            let mut t = Table::new(["point", "μ"].into_iter().map(String::from).chain((1..=g.k).map(|i| format!("x{i}"))));
            for (p, label) in g.points.iter().enumerate() {
                let mut row = vec![label.clone(), format!("{:.6}", g.weights[p])];
                row.extend(g.coordinates[p].iter().map(|x| format!("{x:.6}")));
                t.row(row);
            }
            let eig: Vec<String> = g.eigenvalues.iter().map(|x| format!("{x:.6}")).collect();
            let mut text = t.render();
            text += &format!(
                "eigenvalues: {}\nreconstruction error ≤ 1e-9: {}\northonormality error ≤ 1e-9: {}\n",
                eig.join(" "),
                yes_no(g.reconstruction_error <= 1e-9),
                yes_no(g.orthonormality_error <= 1e-9)
            );
            for w in &g.warnings {
                text += &format!("warning: {w}\n");
            }
            text
        }
    };
    let finding = g.reconstruction_error > 1e-9 || g.orthonormality_error > 1e-9;
    Ok(Out::new(text, serde_json::to_value(&g)?, finding))
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}
