//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde_json::Value;
use tgw_core::axioms::{check_axioms, evaluate_law};
use tgw_core::fixture::{self, MODULES, STRUCTURES};
use tgw_core::geometry::{embed, ValuationTable, WeightScheme};
use tgw_core::homology::{adjunction_check, free_resolution, tensor, Backend};
use tgw_core::ideals::enumerate_ideals;
use tgw_core::module::axioms::{check_module_axioms, evaluate_module_law};
use tgw_core::module::iso::first_isomorphism;
use tgw_core::module::{
    bourne_quotient, cyclic_module_catalog, end_semiring, enumerate_submodules, hom_set, GammaModule,
    ModuleHom,
};
use tgw_core::spectrum::{spectrum, zariski_report};
use tgw_core::{Options, Semiring};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn tgw(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_tgw"))
        .args(args)
        .env_remove("TGW_BUDGET")
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn tgw_json(args: &[&str]) -> Result<Value, String> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, stdout) = tgw(&full)?;
    if code == 2 {
        return Err(format!("tgw {} exited 2", args.join(" ")));
    }
    serde_json::from_slice(&stdout).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))
}

fn modules() -> Vec<GammaModule> {
    MODULES.iter().map(|(n, _)| fixture::bundled_module(n).unwrap()).collect()
}

fn structures() -> Vec<Semiring> {
    STRUCTURES.iter().map(|(n, _)| fixture::bundled_structure(n).unwrap()).collect()
}

fn boolean_simples() -> Outcome {
    let start = Instant::now();
    let simples = tgw_json(&["simples", "B2"])?;
    let density = tgw_json(&["density", "B2"])?;
    within(Duration::from_secs(1), start)?;
    let list = simples["simples"].as_array().ok_or("no simples array")?;
    ensure(list.len() == 1, format!("{} simple modules", list.len()))?;
    ensure(density["density"]["dense"] == true, "density failed")?;
    Ok(format!("1 simple, dense, {:?}", start.elapsed()))
}

fn boolean_derived() -> Outcome {
    let start = Instant::now();
    let ext = tgw_json(&["ext", "B2"])?;
    let tor = tgw_json(&["tor", "B2"])?;
    within(Duration::from_secs(1), start)?;
    let e = &ext["ext"]["ext1"]["structure_tag"];
    let t = &tor["tor"]["tor1"]["structure_tag"];
    ensure(e == "trivial" && t == "trivial", format!("Ext¹ {e}, Tor₁ {t}"))?;
    Ok(format!("Ext¹ = Tor₁ = 0, {:?}", start.elapsed()))
}

fn boolean_adjunction() -> Outcome {
    let reg = fixture::bundled_module("B2-regular").unwrap();
    let r = adjunction_check(&reg, &reg, &reg, &Options::strict()).map_err(|e| e.to_string())?;
    ensure(r.left_size == 2 && r.right_size == 2, format!("{} vs {}", r.left_size, r.right_size))?;
    ensure(r.phi_bijective && r.round_trips && r.holds, "Φ is not a verified bijection")?;
    let cli = tgw_json(&["adjunction", "B2"])?;
    ensure(cli["adjunction"]["holds"] == true, "cli disagrees")?;
    Ok("|Hom(M⊗N,P)| = |Hom(M,Hom(N,P))| = 2".into())
}

fn projection() -> Outcome {
    let t2 = fixture::bundled_module("B2-T2").unwrap();
    let reg = fixture::bundled_module("B2-regular").unwrap();
    // (x, y) ↦ x; first coordinate is the most significant digit
    let map: Vec<usize> = (0..t2.size()).map(|i| i / 2).collect();
    let f = ModuleHom { map, verified: false };
    let r = first_isomorphism(&t2, &reg, &f).map_err(|e| e.to_string())?;
    let kernel: Vec<&str> = r.kernel.iter().map(|&i| t2.label(i)).collect();
    ensure(kernel == ["(0,0)", "(0,1)"], format!("kernel {kernel:?}"))?;
    ensure(r.image == [0, 1], format!("image {:?}", r.image))?;
    ensure(r.holds, "induced map is not an isomorphism")?;
    Ok(format!("ker = {{{}}}, im = T", kernel.join(",")))
}

fn z3_lenient() -> Outcome {
    let simples = tgw_json(&["simples", "Z3", "--lenient"])?;
    let list = simples["simples"].as_array().ok_or("no simples array")?;
    let regular = list
        .iter()
        .find(|s| s["module"] == "Z3-regular")
        .ok_or("regular module is not simple")?;
    let end = regular["end"]["maps"].as_array().map(Vec::len).ok_or("no End census")?;
    let radical = tgw_json(&["radical", "Z3", "--lenient"])?;
    let ann = &radical["annihilators"][0]["annihilator"]["members"];
    ensure(*ann == serde_json::json!([0]), format!("Ann = {ann}"))?;
    ensure(radical["radical"]["members"] == serde_json::json!([0]), "J ≠ {0}")?;
    let (code, _) = tgw(&["check", "Z3"])?;
    ensure(code == 1, format!("strict check exited {code}"))?;
    let s = fixture::z3();
    let report = check_axioms(&s);
    let w = report.first("zero-absorbing").ok_or("zero absorption not flagged")?;
    let (l, r) = evaluate_law(&s, &w.law, &w.witness).ok_or("witness does not evaluate")?;
    ensure(l != r && (l, r) == (w.left, w.right), "witness does not reproduce")?;
    Ok(format!("simple, Ann = J = {{0}}, |End| = {end}, witness {:?}", w.witness))
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |bits| (0..n).filter(|i| bits >> i & 1 == 1).collect())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let opts = Options::lenient();
    for s in structures() {
        let (n, g) = (s.size(), s.gamma_size());
        let mut want: Vec<Vec<usize>> = subsets(n)
            .filter(|set| {
                let inside = |x: usize| set.contains(&x);
                inside(s.zero())
                    && set.iter().all(|&x| set.iter().all(|&y| inside(s.add(x, y))))
                    && (0..n).all(|a| {
                        (0..n).all(|b| {
                            (0..n).all(|c| {
                                !(inside(a) || inside(b) || inside(c))
                                    || (0..g).all(|al| (0..g).all(|be| inside(s.tri(a, al, b, be, c))))
                            })
                        })
                    })
            })
            .collect();
        want.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let got: Vec<Vec<usize>> = enumerate_ideals(&s, &opts)
            .map_err(|e| e.to_string())?
            .ideals
            .into_iter()
            .map(|i| i.members)
            .collect();
        ensure(got == want, format!("ideals of {}", s.name()))?;
    }
    let all = modules();
    for m in &all {
        let mut want: Vec<Vec<usize>> = subsets(m.size())
            .filter(|set| {
                let inside = |x: usize| set.contains(&x);
                inside(m.zero())
                    && set.iter().all(|&x| {
                        set.iter().all(|&y| inside(m.add(x, y)))
                            && m.contexts().all(|(a, al, be, b)| inside(m.act(a, al, x, be, b)))
                    })
            })
            .collect();
        want.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let got = enumerate_submodules(m, &opts).map_err(|e| e.to_string())?;
        ensure(got == want, format!("submodules of {}", m.name()))?;
        for t in all.iter().filter(|t| t.base() == m.base()) {
            let (k, l) = (m.size(), t.size());
            let mut want = Vec::new();
            for code in 0..l.pow(k as u32) {
                let f: Vec<usize> = (0..k).map(|i| code / l.pow(i as u32) % l).collect();
                let ok = f[m.zero()] == t.zero()
                    && (0..k).all(|x| (0..k).all(|y| f[m.add(x, y)] == t.add(f[x], f[y])))
                    && (0..k).all(|x| m.contexts().all(|(a, al, be, b)| f[m.act(a, al, x, be, b)] == t.act(a, al, f[x], be, b)));
                if ok {
                    want.push(f);
                }
            }
            want.sort();
            let got: Vec<Vec<usize>> = hom_set(m, t, &opts)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|h| h.map)
                .collect();
            ensure(got == want, format!("Hom({}, {})", m.name(), t.name()))?;
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("{} structures, {} modules, {:?}", STRUCTURES.len(), all.len(), start.elapsed()))
}

fn invariant_suites() -> Outcome {
    let opts = Options::lenient();
    let all = modules();
    for s in structures() {
        for v in &check_axioms(&s).violations {
            ensure(evaluate_law(&s, &v.law, &v.witness) == Some((v.left, v.right)), "semiring witness")?;
        }
        let space = spectrum(&s, &opts).map_err(|e| e.to_string())?;
        ensure(zariski_report(&s, &space).passed, format!("V(I)∩V(J) on {}", s.name()))?;
        let catalog = cyclic_module_catalog(&Arc::new(s.clone()), &opts).map_err(|e| e.to_string())?;
        for entry in catalog.simples() {
            let end = end_semiring(&entry.module, &opts).map_err(|e| e.to_string())?;
            ensure(end.schur == Some(true), format!("Schur on {}", entry.module.name()))?;
        }
    }
    for m in &all {
        for v in &check_module_axioms(m).violations {
            ensure(evaluate_module_law(m, &v.law, &v.witness) == Some((v.left, v.right)), "module witness")?;
        }
        if m.base().unit().is_some() {
            let res = free_resolution(m, &Options::strict()).map_err(|e| e.to_string())?;
            ensure(res.exactness.holds(), format!("resolution of {}", m.name()))?;
        }
        for sub in enumerate_submodules(m, &opts).map_err(|e| e.to_string())? {
            let (_, info) = bourne_quotient(m, &sub).map_err(|e| e.to_string())?;
            let c = &info.congruence.class_of;
            for x in 0..m.size() {
                for y in (0..m.size()).filter(|&y| c[x] == c[y]) {
                    ensure((0..m.size()).all(|z| c[m.add(x, z)] == c[m.add(y, z)]), "Bourne quotient addition")?;
                    ensure(
                        m.contexts().all(|(a, al, be, b)| c[m.act(a, al, x, be, b)] == c[m.act(a, al, y, be, b)]),
                        "Bourne quotient action",
                    )?;
                }
            }
        }
        for n in all.iter().filter(|n| n.base() == m.base()) {
            let sat = match tensor(m, n, Backend::Saturation, &opts) {
                Ok(t) => t,
                Err(tgw_core::Error::Budget { .. }) => continue,
                Err(e) => return Err(e.to_string()),
            };
            for backend in [Backend::Auto, Backend::Idempotent, Backend::Group] {
                if let Ok(t) = tensor(m, n, backend, &opts) {
                    ensure(
                        t.presentation.isomorphism(&sat.presentation).is_some(),
                        format!("{} backend on {} ⊗ {}", backend.name(), m.name(), n.name()),
                    )?;
                }
            }
        }
    }
    Ok("witnesses, exactness, Schur, Zariski, Bourne, backends".into())
}

fn product_embedding() -> Outcome {
    let s = fixture::b2xb2();
    let g = embed(&s, 2, &ValuationTable::index(&s), &WeightScheme::Default, &Options::strict())
        .map_err(|e| e.to_string())?;
    ensure(g.reconstruction_error <= 1e-9, format!("reconstruction {}", g.reconstruction_error))?;
    ensure(g.orthonormality_error <= 1e-9, format!("orthonormality {}", g.orthonormality_error))?;
    let mut values = g.eigenvalues.clone();
    values.sort_by(|a, b| b.total_cmp(a));
    ensure(
        values.len() == 2 && (values[0] - 0.5).abs() <= 1e-12 && values[1].abs() <= 1e-12,
        format!("eigenvalues {values:?}"),
    )?;
    Ok(format!("eigenvalues {:?}", g.eigenvalues))
}

fn deterministic_report() -> Outcome {
    let (c1, a) = tgw(&["report"])?;
    let (c2, b) = tgw(&["report"])?;
    ensure(c1 == c2, "exit codes differ")?;
    ensure(!a.is_empty() && a == b, "report output differs between runs")?;
    Ok(format!("{} bytes, exit {c1}", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("B2 has one simple cyclic module and is dense", boolean_simples),
        ("B2 Ext¹ and Tor₁ of the regular module vanish", boolean_derived),
        ("B2 tensor-Hom adjunction", boolean_adjunction),
        ("projection on T² satisfies the first isomorphism theorem", projection),
        ("Z3 lenient regular module", z3_lenient),
        ("oracle equivalence on bundled fixtures", oracle_equivalence),
        ("invariant suites", invariant_suites),
        ("B2xB2 spectral embedding", product_embedding),
        ("report is byte-identical across runs", deterministic_report),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
