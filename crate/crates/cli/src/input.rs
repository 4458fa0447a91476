use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use tgw_core::fixture;
use tgw_core::module::GammaModule;
use tgw_core::{Error, Result, Semiring};

pub struct Structure {
    pub semiring: Arc<Semiring>,
    pub valuation: Option<BTreeMap<String, Vec<f64>>>,
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

/// A bundled structure name or a path to a structure fixture.
pub fn structure(arg: &str) -> Result<Structure> {
    let text = match fixture::STRUCTURES.iter().find(|(n, _)| *n == arg) {
        Some((_, text)) => text.to_string(),
        None if Path::new(arg).exists() => read(arg)?,
        None => {
            return Err(Error::Reference {
                label: arg.to_string(),
                context: "structure fixtures".into(),
            })
        }
    };
    Ok(Structure {
        semiring: Arc::new(fixture::load_structure(&text)?),
        valuation: fixture::load_structure_valuation(&text)?,
    })
}

/// The regular module, preferring a bundled copy (which may carry an anchor).
pub fn regular(s: &Arc<Semiring>) -> Result<GammaModule> {
    match fixture::bundled_module_text(&format!("{}-regular", s.name())) {
        Some(text) => {
            let m = fixture::load_module(text, s)?;
            if m.same_tables(&GammaModule::regular(s)) {
                return Ok(m);
            }
            Ok(GammaModule::regular(s))
        }
        None => Ok(GammaModule::regular(s)),
    }
}

/// `regular`, `zero`, a bundled module name, or a path to a module fixture.
pub fn module(arg: &str, s: &Arc<Semiring>) -> Result<GammaModule> {
    match arg {
        "regular" => regular(s),
        "zero" => Ok(GammaModule::zero_module(s)),
        _ => {
            let text = match fixture::bundled_module_text(arg) {
                Some(text) => text.to_string(),
                None if Path::new(arg).exists() => read(arg)?,
                None => {
                    return Err(Error::Reference {
                        label: arg.to_string(),
                        context: "module fixtures".into(),
                    })
                }
            };
            fixture::load_module(&text, s)
        }
    }
}

/// The `i`-th `--module` argument, defaulting to the regular module.
pub fn nth_module(args: &[String], i: usize, s: &Arc<Semiring>) -> Result<GammaModule> {
    match args.get(i) {
        Some(a) => module(a, s),
        None => regular(s),
    }
}
