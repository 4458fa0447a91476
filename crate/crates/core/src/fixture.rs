//! JSON fixture format for structures and modules, plus the bundled fixtures.
//!
//! Structure fixture fields: `name`, `elements`, `zero`, `unit` (string or
//! null), `gamma`, `add` (n×n labels), `tri` (n×g×n×g×n labels),
//! `commutative` (default true) and an optional `valuation`
//! (gamma label → n reals).
//!
//! Module fixture fields: `name`, `base`, `carrier`, `zero`, `madd`, `act`
//! (n×g×m×g×n labels), `m2_profile` (`"none"` or `"nested"`) and an
//! optional density `anchor` (a base element label).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::{GammaModule, M2Profile};
use crate::semiring::Semiring;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct SemiringFixture {
    name: String,
    elements: Vec<String>,
    zero: String,
    unit: Option<String>,
    gamma: Vec<String>,
    add: Vec<Vec<String>>,
    tri: Vec<Vec<Vec<Vec<Vec<String>>>>>,
    #[serde(default = "default_true")]
    commutative: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    valuation: Option<BTreeMap<String, Vec<f64>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct ModuleFixture {
    #[serde(default)]
    name: String,
    base: String,
    carrier: Vec<String>,
    zero: String,
    madd: Vec<Vec<String>>,
    act: Vec<Vec<Vec<Vec<Vec<String>>>>>,
    #[serde(default)]
    m2_profile: M2Profile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    anchor: Option<String>,
}

fn default_true() -> bool {
    true
}

fn lookup(labels: &[String], label: &str, context: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::Reference {
            label: label.to_string(),
            context: context.to_string(),
        })
}

fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Shape(format!(
            "{what} has length {got}, expected {want}"
        )));
    }
    Ok(())
}

fn check_unique(what: &str, labels: &[String]) -> Result<()> {
    let mut sorted: Vec<&String> = labels.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Parse(format!("duplicate label in {what}")));
    }
    Ok(())
}

/// Flattens a 5-level nested table of labels, checking every dimension.
fn flatten5(
    table: &[Vec<Vec<Vec<Vec<String>>>>],
    dims: [usize; 5],
    values: &[String],
    context: &str,
) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(dims.iter().product());
    check_len(context, table.len(), dims[0])?;
    for l1 in table {
        check_len(context, l1.len(), dims[1])?;
        for l2 in l1 {
            check_len(context, l2.len(), dims[2])?;
            for l3 in l2 {
                check_len(context, l3.len(), dims[3])?;
                for l4 in l3 {
                    check_len(context, l4.len(), dims[4])?;
                    for v in l4 {
                        out.push(lookup(values, v, context)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn flatten2(table: &[Vec<String>], n: usize, values: &[String], context: &str) -> Result<Vec<usize>> {
    check_len(context, table.len(), n)?;
    let mut out = Vec::with_capacity(n * n);
    for row in table {
        check_len(context, row.len(), n)?;
        for v in row {
            out.push(lookup(values, v, context)?);
        }
    }
    Ok(out)
}

fn nest5(flat: &[usize], dims: [usize; 5], labels: &[String]) -> Vec<Vec<Vec<Vec<Vec<String>>>>> {
    let mut it = flat.iter();
    (0..dims[0])
        .map(|_| {
            (0..dims[1])
                .map(|_| {
                    (0..dims[2])
                        .map(|_| {
                            (0..dims[3])
                                .map(|_| {
                                    (0..dims[4])
                                        .map(|_| labels[*it.next().unwrap()].clone())
                                        .collect()
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn nest2(flat: &[usize], n: usize, labels: &[String]) -> Vec<Vec<String>> {
    flat.chunks(n.max(1))
        .map(|row| row.iter().map(|&i| labels[i].clone()).collect())
        .collect()
}

/// Parses a structure fixture. No axiom checking is performed.
pub fn load_structure(text: &str) -> Result<Semiring> {
    let fx: SemiringFixture =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    structure_from_fixture(&fx)
}

fn structure_from_fixture(fx: &SemiringFixture) -> Result<Semiring> {
    check_unique("elements", &fx.elements)?;
    check_unique("gamma", &fx.gamma)?;
    let n = fx.elements.len();
    let g = fx.gamma.len();
    let zero = lookup(&fx.elements, &fx.zero, "zero")?;
    let unit = fx
        .unit
        .as_deref()
        .map(|u| lookup(&fx.elements, u, "unit"))
        .transpose()?;
    let add = flatten2(&fx.add, n, &fx.elements, "add")?;
    let tri = flatten5(&fx.tri, [n, g, n, g, n], &fx.elements, "tri")?;
    Semiring::from_tables(
        fx.name.clone(),
        fx.elements.clone(),
        zero,
        unit,
        fx.gamma.clone(),
        add,
        tri,
        fx.commutative,
    )
}

/// Optional valuation table carried by a structure fixture.
pub fn load_structure_valuation(text: &str) -> Result<Option<BTreeMap<String, Vec<f64>>>> {
    let fx: SemiringFixture =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(fx.valuation)
}

pub fn serialize_structure(s: &Semiring) -> String {
    let n = s.size();
    let g = s.gamma_size();
    let fx = SemiringFixture {
        name: s.name().to_string(),
        elements: s.elements().to_vec(),
        zero: s.label(s.zero()).to_string(),
        unit: s.unit().map(|u| s.label(u).to_string()),
        gamma: s.gamma().to_vec(),
        add: nest2(s.add_table(), n, s.elements()),
        tri: nest5(s.tri_table(), [n, g, n, g, n], s.elements()),
        commutative: s.is_commutative(),
        valuation: None,
    };
    serde_json::to_string_pretty(&fx).expect("fixture serializes")
}

/// Parses a module fixture over `base`; the fixture's `base` field must name it.
pub fn load_module(text: &str, base: &Arc<Semiring>) -> Result<GammaModule> {
    let fx: ModuleFixture =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if fx.base != base.name() {
        return Err(Error::Reference {
            label: fx.base.clone(),
            context: format!("module base (expected `{}`)", base.name()),
        });
    }
    check_unique("carrier", &fx.carrier)?;
    let n = base.size();
    let g = base.gamma_size();
    let m = fx.carrier.len();
    let zero = lookup(&fx.carrier, &fx.zero, "module zero")?;
    let madd = flatten2(&fx.madd, m, &fx.carrier, "madd")?;
    let act = flatten5(&fx.act, [n, g, m, g, n], &fx.carrier, "act")?;
    let anchor = fx
        .anchor
        .as_deref()
        .map(|a| lookup(base.elements(), a, "anchor"))
        .transpose()?;
    let name = if fx.name.is_empty() {
        format!("{}-module", base.name())
    } else {
        fx.name.clone()
    };
    let mut module = GammaModule::from_tables(
        name,
        Arc::clone(base),
        fx.carrier.clone(),
        zero,
        madd,
        act,
        fx.m2_profile,
    )?;
    module.set_anchor(anchor);
    Ok(module)
}

/// Fixture base name for a module text, without resolving it.
pub fn module_base_name(text: &str) -> Result<String> {
    #[derive(Deserialize)]
    struct Head {
        base: String,
    }
    let head: Head = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(head.base)
}

pub fn serialize_module(m: &GammaModule) -> String {
    let s = m.base();
    let n = s.size();
    let g = s.gamma_size();
    let fx = ModuleFixture {
        name: m.name().to_string(),
        base: s.name().to_string(),
        carrier: m.carrier().to_vec(),
        zero: m.label(m.zero()).to_string(),
        madd: nest2(m.madd_table(), m.size(), m.carrier()),
        act: nest5(m.act_table(), [n, g, m.size(), g, n], m.carrier()),
        m2_profile: m.m2_profile(),
        anchor: m.anchor().map(|a| s.label(a).to_string()),
    };
    serde_json::to_string_pretty(&fx).expect("fixture serializes")
}

pub const B2_JSON: &str = include_str!("../fixtures/B2.json");
pub const Z3_JSON: &str = include_str!("../fixtures/Z3.json");
pub const B2XB2_JSON: &str = include_str!("../fixtures/B2xB2.json");

/// Bundled structure fixtures in report order.
pub const STRUCTURES: &[(&str, &str)] = &[("B2", B2_JSON), ("Z3", Z3_JSON), ("B2xB2", B2XB2_JSON)];

/// Bundled module fixtures: (name, text).
pub const MODULES: &[(&str, &str)] = &[
    ("B2-regular", include_str!("../fixtures/B2-regular.json")),
    ("B2-T2", include_str!("../fixtures/B2-T2.json")),
    ("B2-zero", include_str!("../fixtures/B2-zero.json")),
    ("Z3-regular", include_str!("../fixtures/Z3-regular.json")),
    ("Z3-zero", include_str!("../fixtures/Z3-zero.json")),
    ("B2xB2-regular", include_str!("../fixtures/B2xB2-regular.json")),
    ("B2xB2-zero", include_str!("../fixtures/B2xB2-zero.json")),
];

pub fn b2() -> Semiring {
    load_structure(B2_JSON).expect("bundled B2 parses")
}

pub fn z3() -> Semiring {
    load_structure(Z3_JSON).expect("bundled Z3 parses")
}

pub fn b2xb2() -> Semiring {
    load_structure(B2XB2_JSON).expect("bundled B2xB2 parses")
}

pub fn bundled_structure(name: &str) -> Option<Semiring> {
    STRUCTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| load_structure(text).expect("bundled structure parses"))
}

pub fn bundled_module_text(name: &str) -> Option<&'static str> {
    MODULES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Loads a bundled module together with its bundled base structure.
pub fn bundled_module(name: &str) -> Option<GammaModule> {
    let text = bundled_module_text(name)?;
    let base = Arc::new(bundled_structure(&module_base_name(text).ok()?)?);
    Some(load_module(text, &base).expect("bundled module parses"))
}

/// The one-element structure `{0}` over two parameters.
pub fn trivial() -> Semiring {
    Semiring::from_fn(
        "T1",
        vec!["0".into()],
        0,
        Some(0),
        vec!["g0".into(), "g1".into()],
        |_, _| 0,
        |_, _, _, _, _| 0,
    )
    .expect("trivial structure")
}
