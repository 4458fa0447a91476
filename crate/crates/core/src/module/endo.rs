//! Endomorphism semirings (Schur census, locality) and the density search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::hom::hom_set;
use crate::module::submodule::is_simple;
use crate::module::GammaModule;
use crate::Options;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndSemiring {
    pub maps: Vec<Vec<usize>>,
    /// Pointwise sum table; `None` when the sum is not an endomorphism.
    pub add: Vec<Option<usize>>,
    /// `compose[f * k + g] = f ∘ g`.
    pub compose: Vec<usize>,
    pub zero: Option<usize>,
    pub identity: Option<usize>,
    pub bijective_count: usize,
    pub simple: bool,
    /// Nonzero endomorphisms that are not bijective (empty when Schur holds).
    pub non_bijective_nonzero: Vec<usize>,
    /// `None` when the module is not simple and the Schur check is skipped.
    pub schur: Option<bool>,
    /// Every nonzero endomorphism has a two-sided inverse; skipped unless simple.
    pub locality: Option<bool>,
}

impl EndSemiring {
    pub fn size(&self) -> usize {
        self.maps.len()
    }
}

pub fn end_semiring(m: &GammaModule, opts: &Options) -> Result<EndSemiring> {
    let homs = hom_set(m, m, opts)?;
    let maps: Vec<Vec<usize>> = homs.into_iter().map(|h| h.map).collect();
    let k = maps.len();
    let index = |f: &[usize]| maps.iter().position(|g| g.as_slice() == f);
    let mut add = Vec::with_capacity(k * k);
    let mut compose = Vec::with_capacity(k * k);
    for f in &maps {
        for g in &maps {
            let sum: Vec<usize> = (0..m.size()).map(|x| m.add(f[x], g[x])).collect();
            add.push(index(&sum));
            let comp: Vec<usize> = (0..m.size()).map(|x| f[g[x]]).collect();
            compose.push(index(&comp).expect("composition of endomorphisms is an endomorphism"));
        }
    }
    let zero_map = vec![m.zero(); m.size()];
    let id_map: Vec<usize> = (0..m.size()).collect();
    let zero = index(&zero_map);
    let identity = index(&id_map);
    let bijective = |f: &Vec<usize>| {
        let mut seen = vec![false; m.size()];
        f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    };
    let bijective_count = maps.iter().filter(|f| bijective(f)).count();
    let simple = is_simple(m, opts)?;
    let non_bijective_nonzero: Vec<usize> = (0..k)
        .filter(|&i| Some(i) != zero && !bijective(&maps[i]))
        .collect();
    let (schur, locality) = if simple {
        let locality = identity.is_some_and(|id| {
            (0..k).filter(|&f| Some(f) != zero).all(|f| {
                (0..k).any(|g| compose[f * k + g] == id && compose[g * k + f] == id)
            })
        });
        (Some(non_bijective_nonzero.is_empty()), Some(locality))
    } else {
        (None, None)
    };
    Ok(EndSemiring {
        maps,
        add,
        compose,
        zero,
        identity,
        bijective_count,
        simple,
        non_bijective_nonzero,
        schur,
        locality,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityWitness {
    pub source: usize,
    pub target: usize,
    pub a: usize,
    pub alpha: usize,
    pub beta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub anchor: usize,
    pub dense: bool,
    pub witnesses: Vec<DensityWitness>,
    /// Pairs `(m, n)` with no solution.
    pub failures: Vec<(usize, usize)>,
    /// Simultaneous solvability for pairs of distinct nonzero elements, when requested.
    pub rank2: Option<bool>,
    pub lenient: bool,
}

/// For every nonzero `m` and every `n`, searches `(α, β)` then `a` with
/// `act(a, α, m, β, e) = n`, where `e` is the module's anchor or the unit.
pub fn density_check(m: &GammaModule, opts: &Options, rank2: bool) -> Result<DensityReport> {
    let lenient = m.gate(opts)?;
    if !is_simple(m, opts)? {
        return Err(Error::Precondition(format!("{} is not simple", m.name())));
    }
    let s = m.base();
    let anchor = m
        .anchor()
        .or(s.unit())
        .ok_or_else(|| Error::Precondition(format!("no density anchor for {}", m.name())))?;
    let g = s.gamma_size();
    let solve = |x: usize, y: usize| -> Option<(usize, usize, usize)> {
        for al in 0..g {
            for be in 0..g {
                for a in 0..s.size() {
                    if m.act(a, al, x, be, anchor) == y {
                        return Some((a, al, be));
                    }
                }
            }
        }
        None
    };
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    for x in (0..m.size()).filter(|&x| x != m.zero()) {
        for y in 0..m.size() {
            match solve(x, y) {
                Some((a, alpha, beta)) => witnesses.push(DensityWitness {
                    source: x,
                    target: y,
                    a,
                    alpha,
                    beta,
                }),
                None => failures.push((x, y)),
            }
        }
    }
    let rank2 = rank2.then(|| {
        let nonzero: Vec<usize> = (0..m.size()).filter(|&x| x != m.zero()).collect();
        nonzero.iter().all(|&x1| {
            nonzero.iter().filter(|&&x2| x2 != x1).all(|&x2| {
                (0..m.size()).all(|y1| {
                    (0..m.size()).all(|y2| {
                        (0..g).any(|al| {
                            (0..g).any(|be| {
                                (0..s.size()).any(|a| {
                                    m.act(a, al, x1, be, anchor) == y1
                                        && m.act(a, al, x2, be, anchor) == y2
                                })
                            })
                        })
                    })
                })
            })
        })
    });
    Ok(DensityReport {
        anchor,
        dense: failures.is_empty(),
        witnesses,
        failures,
        rank2,
        lenient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn boolean_schur() {
        let m = fixture::bundled_module("B2-regular").unwrap();
        let e = end_semiring(&m, &Options::strict()).unwrap();
        assert_eq!(e.size(), 2);
        assert_eq!(e.schur, Some(true));
        assert_eq!(e.locality, Some(true));
        assert_eq!(e.bijective_count, 1);
    }

    #[test]
    fn schur_skipped_for_non_simple() {
        let m = fixture::bundled_module("B2-T2").unwrap();
        let e = end_semiring(&m, &Options::strict()).unwrap();
        assert!(!e.simple);
        assert_eq!(e.schur, None);
    }

    #[test]
    fn z3_regular_census() {
        // x ↦ x + c is additive only for c = 0, so the identity is the only endomorphism
        let m = fixture::bundled_module("Z3-regular").unwrap();
        let e = end_semiring(&m, &Options::lenient()).unwrap();
        assert_eq!(e.maps, vec![vec![0, 1, 2]]);
        assert_eq!(e.schur, Some(true));
    }

    #[test]
    fn boolean_density() {
        let m = fixture::bundled_module("B2-regular").unwrap();
        let r = density_check(&m, &Options::strict(), true).unwrap();
        assert!(r.dense);
        assert_eq!(r.anchor, 1);
        let w: Vec<_> = r.witnesses.iter().map(|w| (w.source, w.target, w.a)).collect();
        assert_eq!(w, vec![(1, 0, 0), (1, 1, 1)]);
        assert_eq!(r.rank2, Some(true));
    }

    #[test]
    fn z3_density_with_anchor_zero() {
        let m = fixture::bundled_module("Z3-regular").unwrap();
        let r = density_check(&m, &Options::lenient(), false).unwrap();
        assert!(r.dense);
        assert_eq!(r.anchor, 0);
        let w = r.witnesses.iter().find(|w| w.source == 1 && w.target == 0).unwrap();
        // (2 + 1 + 0 + 0 + 0) mod 3 = 0
        assert_eq!((w.a, w.alpha, w.beta), (2, 0, 0));
        for w in &r.witnesses {
            assert_eq!(m.act(w.a, w.alpha, w.source, w.beta, r.anchor), w.target);
        }
    }

    #[test]
    fn zero_module_is_rejected() {
        let m = fixture::bundled_module("B2-zero").unwrap();
        assert!(matches!(
            density_check(&m, &Options::strict(), false),
            Err(Error::Precondition(_))
        ));
    }
}
