//! Ext⁰/Ext¹ and Tor₀/Tor₁ from a depth-two free resolution.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::presentation::MonoidPresentation;
use crate::homology::resolution::{basis_vector, free_resolution, FreeResolution};
use crate::homology::tensor::{induced_map, tensor, Backend, TensorProduct};
use crate::module::annihilator::jacobson_radical;
use crate::module::catalog::Catalog;
use crate::module::hom::{hom_set, hom_set_with_generators};
use crate::module::submodule::submodule_closure;
use crate::module::GammaModule;
use crate::semiring::Semiring;
use crate::Options;

/// Homs from a free module, using the basis as generators when it generates.
fn free_homs(free: &GammaModule, rank: usize, target: &GammaModule, opts: &Options) -> Result<Vec<Vec<usize>>> {
    let s = free.base();
    let basis = (0..rank)
        .map(|i| basis_vector(s, rank, i))
        .collect::<Result<Vec<_>>>()?;
    let homs = if submodule_closure(free, &basis).len() == free.size() {
        hom_set_with_generators(free, target, &basis, opts)?
    } else {
        hom_set(free, target, opts)?
    };
    Ok(homs.into_iter().map(|h| h.map).collect())
}

fn render_map(map: &[usize], target: &GammaModule) -> String {
    let parts: Vec<&str> = map.iter().map(|&y| target.label(y)).collect();
    format!("[{}]", parts.join(","))
}

/// Pointwise-sum monoid on a set of maps into `target`.
fn map_monoid(maps: &[Vec<usize>], target: &GammaModule, backend: &str) -> Result<MonoidPresentation> {
    let k = maps.len();
    let index = |f: &[usize]| maps.binary_search_by(|g| g.as_slice().cmp(f)).ok();
    let mut add = Vec::with_capacity(k * k);
    for f in maps {
        for g in maps {
            let sum: Vec<usize> = f.iter().zip(g).map(|(&x, &y)| target.add(x, y)).collect();
            add.push(index(&sum).ok_or_else(|| {
                Error::Precondition("hom set is not closed under pointwise addition".into())
            })?);
        }
    }
    let zero_map = vec![target.zero(); maps.first().map_or(0, Vec::len)];
    let zero = index(&zero_map).ok_or_else(|| Error::Precondition("zero map missing".into()))?;
    let labels = maps.iter().map(|f| render_map(f, target)).collect();
    Ok(MonoidPresentation::new(labels, add, zero, backend))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtReport {
    pub ext1: MonoidPresentation,
    pub ext0_size: usize,
    pub hom_size: usize,
    /// `|Ext⁰(M,N)| = |Hom(M,N)|`.
    pub ext0_matches_hom: bool,
    pub cycles: usize,
    pub boundaries: usize,
    /// `B¹` generated a congruence without further closure.
    pub bourne_relation_was_congruence: bool,
    pub ranks: [usize; 3],
    pub exact: bool,
}

/// `Ext¹(M,N) = Z¹ / B¹` under the Bourne congruence of pointwise addition.
pub fn ext1(m: &GammaModule, n: &GammaModule, opts: &Options) -> Result<ExtReport> {
    m.gate(opts)?;
    n.gate(opts)?;
    let res = free_resolution(m, opts)?;
    ext1_with(&res, m, n, opts)
}

pub fn ext1_with(res: &FreeResolution, m: &GammaModule, n: &GammaModule, opts: &Options) -> Result<ExtReport> {
    let [p0, p1, _] = &res.modules;
    let h0 = free_homs(p0, res.ranks[0], n, opts)?;
    let h1 = free_homs(p1, res.ranks[1], n, opts)?;
    let compose = |g: &[usize], d: &[usize]| -> Vec<usize> { d.iter().map(|&x| g[x]).collect() };
    let is_zero = |f: &[usize]| f.iter().all(|&y| y == n.zero());
    let cycles: Vec<Vec<usize>> = h1
        .iter()
        .filter(|g| is_zero(&compose(g, &res.d2.map)))
        .cloned()
        .collect();
    let z1 = map_monoid(&cycles, n, "hom")?;
    let mut boundary_idx: Vec<usize> = h0
        .iter()
        .map(|f| {
            let b = compose(f, &res.d1.map);
            cycles
                .binary_search(&b)
                .map_err(|_| Error::Precondition("boundary is not a cycle".into()))
        })
        .collect::<Result<_>>()?;
    boundary_idx.sort_unstable();
    boundary_idx.dedup();
    let q = z1.bourne_quotient(&boundary_idx, "hom");
    let ext0_size = h0.iter().filter(|f| is_zero(&compose(f, &res.d1.map))).count();
    let hom_size = hom_set(m, n, opts)?.len();
    Ok(ExtReport {
        ext1: q.presentation,
        ext0_size,
        hom_size,
        ext0_matches_hom: ext0_size == hom_size,
        cycles: cycles.len(),
        boundaries: boundary_idx.len(),
        bourne_relation_was_congruence: q.relation_was_congruence,
        ranks: res.ranks,
        exact: res.exactness.holds(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorReport {
    pub tor1: MonoidPresentation,
    pub tor0: MonoidPresentation,
    /// `Tor₀(M,N) ≅ M ⊗ N` as monoids.
    pub tor0_matches_tensor: bool,
    pub kernel_size: usize,
    pub image_size: usize,
    pub ranks: [usize; 3],
    pub exact: bool,
}

fn complex_map(a: &TensorProduct, b: &TensorProduct, d: &crate::module::hom::ModuleHom) -> Result<Vec<usize>> {
    induced_map(a, b, d).ok_or_else(|| Error::Precondition("d ⊗ id is not well defined".into()))
}

/// `Tor₁(M,N) = ker(d1⊗id) / im(d2⊗id)`, the quotient taken in the Bourne sense.
pub fn tor1(m: &GammaModule, n: &GammaModule, backend: Backend, opts: &Options) -> Result<TorReport> {
    m.gate(opts)?;
    n.gate(opts)?;
    let res = free_resolution(m, opts)?;
    let [p0, p1, p2] = &res.modules;
    let t0 = tensor(p0, n, backend, opts)?;
    let t1 = tensor(p1, n, backend, opts)?;
    let t2 = tensor(p2, n, backend, opts)?;
    let delta1 = complex_map(&t1, &t0, &res.d1)?;
    let delta2 = complex_map(&t2, &t1, &res.d2)?;
    let kernel: Vec<usize> = (0..delta1.len())
        .filter(|&c| delta1[c] == t0.presentation.zero)
        .collect();
    let mut img: Vec<usize> = delta2.clone();
    img.sort_unstable();
    img.dedup();
    let ker_monoid = t1.presentation.restrict(&kernel, &t1.presentation.backend)?;
    let img_in_kernel: Vec<usize> = img
        .iter()
        .map(|c| {
            kernel
                .binary_search(c)
                .map_err(|_| Error::Precondition("d1⊗id ∘ d2⊗id is not zero".into()))
        })
        .collect::<Result<_>>()?;
    let tor1 = ker_monoid.bourne_quotient(&img_in_kernel, &t1.presentation.backend).presentation;
    let mut img0 = delta1.clone();
    img0.sort_unstable();
    img0.dedup();
    let tor0 = t0.presentation.bourne_quotient(&img0, &t0.presentation.backend).presentation;
    let direct = tensor(m, n, backend, opts)?;
    Ok(TorReport {
        tor0_matches_tensor: tor0.isomorphism(&direct.presentation).is_some(),
        tor1,
        tor0,
        kernel_size: kernel.len(),
        image_size: img.len(),
        ranks: res.ranks,
        exact: res.exactness.holds(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologicalSemisimplicity {
    pub semisimple: bool,
    pub pairs_checked: usize,
    /// First catalog pair with nontrivial Ext¹.
    pub witness: Option<(String, String)>,
    pub radical_trivial: bool,
    /// Agreement between vanishing Ext¹ and a trivial radical.
    pub consistent: bool,
}

/// Ext¹ vanishes on every pair of catalog modules; cross-checked with `J(T)`.
pub fn homological_semisimplicity(s: &Semiring, catalog: &Catalog, opts: &Options) -> Result<HomologicalSemisimplicity> {
    let mut witness = None;
    let mut pairs_checked = 0;
    'outer: for a in &catalog.entries {
        for b in &catalog.entries {
            pairs_checked += 1;
            if !ext1(&a.module, &b.module, opts)?.ext1.is_trivial() {
                witness = Some((a.module.name().to_string(), b.module.name().to_string()));
                break 'outer;
            }
        }
    }
    let radical_trivial = jacobson_radical(s, catalog, opts)?.semiprimitive;
    let semisimple = witness.is_none();
    Ok(HomologicalSemisimplicity {
        semisimple,
        pairs_checked,
        witness,
        radical_trivial,
        consistent: semisimple == radical_trivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;
    use crate::module::catalog::cyclic_module_catalog;
    use std::sync::Arc;

    #[test]
    fn boolean_ext_and_tor_vanish() {
        let reg = fixture::bundled_module("B2-regular").unwrap();
        let opts = Options::strict();
        let e = ext1(&reg, &reg, &opts).unwrap();
        assert!(e.ext1.is_trivial());
        assert_eq!((e.ext0_size, e.hom_size), (2, 2));
        let t = tor1(&reg, &reg, Backend::Auto, &opts).unwrap();
        assert!(t.tor1.is_trivial());
        assert_eq!(t.tor0.size(), 2);
        assert!(t.tor0_matches_tensor);
    }

    #[test]
    fn zero_module_has_trivial_derived_functors() {
        let z = fixture::bundled_module("B2-zero").unwrap();
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        let opts = Options::strict();
        assert!(ext1(&z, &t2, &opts).unwrap().ext1.is_trivial());
        assert!(tor1(&z, &t2, Backend::Auto, &opts).unwrap().tor1.is_trivial());
    }

    #[test]
    fn ext0_matches_hom_on_fixture_pairs() {
        let opts = Options::strict();
        for a in ["B2-regular", "B2-T2", "B2-zero"] {
            for b in ["B2-regular", "B2-T2", "B2-zero"] {
                let (m, n) = (fixture::bundled_module(a).unwrap(), fixture::bundled_module(b).unwrap());
                let e = ext1(&m, &n, &opts).unwrap();
                assert!(e.ext0_matches_hom, "{a} {b}");
                assert!(e.exact);
            }
        }
    }

    #[test]
    fn z3_needs_a_unit() {
        let m = fixture::bundled_module("Z3-regular").unwrap();
        assert!(matches!(ext1(&m, &m, &Options::lenient()), Err(Error::NoUnit(_))));
    }

    #[test]
    fn boolean_structures_are_homologically_semisimple() {
        for s in [fixture::b2(), fixture::b2xb2()] {
            let s = Arc::new(s);
            let c = cyclic_module_catalog(&s, &Options::strict()).unwrap();
            let h = homological_semisimplicity(&s, &c, &Options::strict()).unwrap();
            assert!(h.semisimple && h.radical_trivial && h.consistent);
        }
    }
}
