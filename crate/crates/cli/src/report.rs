use serde_json::{json, Value};
use tgw_core::fixture;
use tgw_core::homology::{self, Backend};
use tgw_core::module;
use tgw_core::{Options, Result};

use crate::commands::Out;
use crate::input;
use crate::table::Table;

struct Row {
    name: &'static str,
    remark: &'static str,
}

const ROWS: [Row; 3] = [
    Row { name: "B2", remark: "Boolean" },
    Row { name: "B2xB2", remark: "Boolean product" },
    Row { name: "Z3", remark: "lenient: zero not absorbing" },
];

fn cell<T>(r: &Result<T>, f: impl Fn(&T) -> String) -> String {
    match r {
        Ok(v) => f(v),
        Err(tgw_core::Error::NoUnit(_)) => "n/a (no unit)".into(),
        Err(_) => "n/a (see note)".into(),
    }
}

fn yes_no(b: bool) -> String {
    if b { "Yes" } else { "No" }.into()
}

fn tag(p: &homology::MonoidPresentation) -> String {
    if p.is_trivial() {
        "0".into()
    } else {
        p.structure_tag.clone()
    }
}

/// The full battery over the bundled structures, rendered as three tables.
pub fn report(base: &Options) -> Result<Out> {
    let mut schur = Table::new(["|T|", "|Γ|", "#simple modules", "Density verified", "Remarks"]);
    let mut derived = Table::new(["|T|", "|Γ|", "Ext¹(M,M)", "Tor₁(M,M)", "Interpretation"]);
    let mut adjoint = Table::new(["|T|", "|Γ|", "|Hom(M⊗N,P)|", "|Hom(M,Hom(N,P))|", "Equality"]);
    let mut json_rows = Vec::new();
    let mut finding = false;
    let mut notes: Vec<String> = Vec::new();
    for row in &ROWS {
        let s = std::sync::Arc::new(fixture::bundled_structure(row.name).expect("bundled structure"));
        let lenient = !s.axiom_report().passed;
        let opts = Options { lenient: lenient || base.lenient, ..*base };
        let size = s.size().to_string();
        let gamma = s.gamma_size().to_string();
        let regular = input::regular(&s)?;

        let catalog = module::cyclic_module_catalog_from(&regular, &opts)?;
        let mut dense = true;
        for e in catalog.simples() {
            dense &= module::density_check(&e.module, &opts, false).is_ok_and(|d| d.dense);
        }
        schur.row([size.clone(), gamma.clone(), catalog.simple_count().to_string(), yes_no(dense), row.remark.into()]);

        let ext = homology::ext1(&regular, &regular, &opts);
        let tor = homology::tor1(&regular, &regular, Backend::Auto, &opts);
        let interpretation = match (&ext, &tor) {
            (Ok(e), Ok(t)) if e.ext1.is_trivial() && t.tor1.is_trivial() => {
                if row.name == "B2" {
                    "Boolean (semisimple)".to_string()
                } else {
                    "semisimple".to_string()
                }
            }
            (Ok(_), Ok(_)) => "nonsplit extension present".to_string(),
            _ => "n/a (no unit)".to_string(),
        };
        derived.row([
            size.clone(),
            gamma.clone(),
            cell(&ext, |e| tag(&e.ext1)),
            cell(&tor, |t| tag(&t.tor1)),
            interpretation,
        ]);

        let adj = homology::adjunction_check(&regular, &regular, &regular, &opts);
        adjoint.row([
            size,
            gamma,
            cell(&adj, |a| a.left_size.to_string()),
            cell(&adj, |a| a.right_size.to_string()),
            cell(&adj, |a| yes_no(a.holds)),
        ]);
        if let Err(e) = &adj {
            notes.push(format!("note: {} adjunction not computable: {e}", row.name));
        }
        if !lenient {
            finding |= !dense || adj.as_ref().map_or(true, |a| !a.holds);
        }
        json_rows.push(json!({
            "structure": row.name,
            "size": s.size(),
            "gamma": s.gamma_size(),
            "lenient": lenient,
            "simple_modules": catalog.simple_count(),
            "density": dense,
            "ext1": ext.as_ref().ok().map(|e| tag(&e.ext1)),
            "tor1": tor.as_ref().ok().map(|t| tag(&t.tor1)),
            "adjunction": adj.as_ref().ok().map(|a| json!({"left": a.left_size, "right": a.right_size, "holds": a.holds})),
        }));
    }
    let mut text = String::new();
    text += "Schur and density\n";
    text += &schur.render();
    text += "note: |Γ| counts declared parameters; B2 declares two, though its product ignores them.\n\n";
    text += "Ext and Tor of the regular module\n";
    text += &derived.render();
    text += "\nTensor-Hom adjunction with M = N = P regular\n";
    text += &adjoint.render();
    for n in &notes {
        text += n;
        text.push('\n');
    }
    let json: Value = json!({ "rows": json_rows });
    Ok(Out { text, json, finding })
}
