//! Brute-force oracles: every subset, every map. Slow but obviously right.

use std::sync::Arc;
use std::time::Instant;

use tgw_core::fixture::{self, MODULES, STRUCTURES};
use tgw_core::ideals::enumerate_ideals;
use tgw_core::module::{enumerate_submodules, hom_set, GammaModule};
use tgw_core::{Options, Semiring};

fn structures() -> Vec<Semiring> {
    STRUCTURES
        .iter()
        .map(|(name, _)| fixture::bundled_structure(name).unwrap())
        .collect()
}

fn modules() -> Vec<GammaModule> {
    MODULES
        .iter()
        .map(|(name, _)| fixture::bundled_module(name).unwrap())
        .collect()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |bits| (0..n).filter(|i| bits >> i & 1 == 1).collect())
}

fn oracle_ideals(s: &Semiring) -> Vec<Vec<usize>> {
    let (n, g) = (s.size(), s.gamma_size());
    let mut out: Vec<Vec<usize>> = subsets(n)
        .filter(|set| {
            let inside = |x: usize| set.contains(&x);
            if !inside(s.zero()) {
                return false;
            }
            for &x in set {
                for &y in set {
                    if !inside(s.add(x, y)) {
                        return false;
                    }
                }
            }
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !(inside(a) || inside(b) || inside(c)) {
                            continue;
                        }
                        for al in 0..g {
                            for be in 0..g {
                                if !inside(s.tri(a, al, b, be, c)) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
            true
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn oracle_submodules(m: &GammaModule) -> Vec<Vec<usize>> {
    let s = m.base();
    let (n, g) = (s.size(), s.gamma_size());
    let mut out: Vec<Vec<usize>> = subsets(m.size())
        .filter(|set| {
            let inside = |x: usize| set.contains(&x);
            inside(m.zero())
                && set.iter().all(|&x| {
                    set.iter().all(|&y| inside(m.add(x, y)))
                        && (0..n).all(|a| {
                            (0..n).all(|b| {
                                (0..g).all(|al| (0..g).all(|be| inside(m.act(a, al, x, be, b))))
                            })
                        })
                })
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn oracle_homs(src: &GammaModule, tgt: &GammaModule) -> Vec<Vec<usize>> {
    let s = src.base();
    let (n, g) = (s.size(), s.gamma_size());
    let (k, l) = (src.size(), tgt.size());
    let total = l.pow(k as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut f = vec![0; k];
        let mut c = code;
        for slot in f.iter_mut() {
            *slot = c % l;
            c /= l;
        }
        let ok = f[src.zero()] == tgt.zero()
            && (0..k).all(|x| (0..k).all(|y| f[src.add(x, y)] == tgt.add(f[x], f[y])))
            && (0..k).all(|x| {
                (0..n).all(|a| {
                    (0..n).all(|b| {
                        (0..g).all(|al| {
                            (0..g).all(|be| f[src.act(a, al, x, be, b)] == tgt.act(a, al, f[x], be, b))
                        })
                    })
                })
            });
        if ok {
            out.push(f);
        }
    }
    out.sort();
    out
}

#[test]
fn ideals_match_brute_force_on_every_fixture() {
    for s in structures() {
        let got: Vec<Vec<usize>> = enumerate_ideals(&s, &Options::lenient())
            .unwrap()
            .ideals
            .into_iter()
            .map(|i| i.members)
            .collect();
        assert_eq!(got, oracle_ideals(&s), "{}", s.name());
    }
}

#[test]
fn submodules_match_brute_force_on_every_fixture() {
    for m in modules() {
        let got = enumerate_submodules(&m, &Options::lenient()).unwrap();
        assert_eq!(got, oracle_submodules(&m), "{}", m.name());
    }
}

#[test]
fn submodules_of_a_product_module() {
    let s = Arc::new(fixture::b2());
    let reg = GammaModule::regular(&s);
    let t3 = reg.direct_sum(&fixture::bundled_module("B2-T2").unwrap()).unwrap();
    assert_eq!(t3.size(), 8);
    assert_eq!(enumerate_submodules(&t3, &Options::strict()).unwrap(), oracle_submodules(&t3));
}

#[test]
fn hom_sets_match_brute_force_on_every_fixture_pair() {
    let all = modules();
    let mut pairs = 0;
    for src in &all {
        for tgt in &all {
            if src.base() != tgt.base() {
                continue;
            }
            pairs += 1;
            let got: Vec<Vec<usize>> = hom_set(src, tgt, &Options::lenient())
                .unwrap()
                .into_iter()
                .map(|h| h.map)
                .collect();
            assert_eq!(got, oracle_homs(src, tgt), "{} -> {}", src.name(), tgt.name());
        }
    }
    assert_eq!(pairs, 3 * 3 + 2 * 2 + 2 * 2);
}

#[test]
fn oracle_sweep_fits_time_budget() {
    let start = Instant::now();
    for s in structures() {
        enumerate_ideals(&s, &Options::lenient()).unwrap();
    }
    for m in modules() {
        enumerate_submodules(&m, &Options::lenient()).unwrap();
        hom_set(&m, &m, &Options::lenient()).unwrap();
    }
    assert!(start.elapsed().as_secs() < 30);
}

#[test]
fn known_counts_against_oracles() {
    let t2 = fixture::bundled_module("B2-T2").unwrap();
    assert_eq!(oracle_submodules(&t2).len(), 7);
    assert_eq!(oracle_ideals(&fixture::b2()), vec![vec![0], vec![0, 1]]);
    assert_eq!(oracle_ideals(&fixture::b2xb2()).len(), 4);
    assert_eq!(oracle_ideals(&fixture::z3()), vec![vec![0, 1, 2]]);
}
