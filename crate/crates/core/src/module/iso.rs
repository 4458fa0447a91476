//! Instance checks of the three isomorphism theorems on concrete modules.
//!
//! These verify particular inputs; a failure is reported as a finding.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::congruence::bourne_quotient;
use crate::module::hom::{find_isomorphism, is_hom, ModuleHom};
use crate::module::submodule::{is_submodule, submodule_closure};
use crate::module::GammaModule;
use crate::subset::{self, Subset};
use crate::Options;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstIsoReport {
    pub kernel: Subset,
    pub image: Subset,
    pub quotient_size: usize,
    /// `[m] ↦ f(m)` does not depend on the representative.
    pub induced_well_defined: bool,
    pub induced_bijective: bool,
    pub induced_hom: bool,
    pub holds: bool,
}

/// `M / ker f ≅ im f` for the given hom.
pub fn first_isomorphism(src: &GammaModule, tgt: &GammaModule, f: &ModuleHom) -> Result<FirstIsoReport> {
    if !is_hom(src, tgt, &f.map) {
        return Err(Error::Precondition("map is not a hom".into()));
    }
    let kernel = f.kernel(tgt);
    let image = f.image();
    let (q, info) = bourne_quotient(src, &kernel)?;
    let classes = info.congruence.classes();
    let induced_well_defined = classes
        .iter()
        .all(|c| c.iter().all(|&x| f.map[x] == f.map[c[0]]));
    let induced: Vec<usize> = classes.iter().map(|c| f.map[c[0]]).collect();
    let im_module = tgt.restrict(&image, "im f")?;
    let induced_in_image: Vec<usize> = induced
        .iter()
        .map(|y| image.binary_search(y).expect("values lie in the image"))
        .collect();
    let induced_bijective = ModuleHom {
        map: induced_in_image.clone(),
        verified: false,
    }
    .is_bijective(&im_module);
    let induced_hom = is_hom(&q, &im_module, &induced_in_image);
    Ok(FirstIsoReport {
        holds: induced_well_defined && induced_bijective && induced_hom,
        quotient_size: q.size(),
        kernel,
        image,
        induced_well_defined,
        induced_bijective,
        induced_hom,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientComparison {
    pub left_size: usize,
    pub right_size: usize,
    pub isomorphism: Option<Vec<usize>>,
    pub holds: bool,
}

fn compare(left: &GammaModule, right: &GammaModule, opts: &Options) -> Result<QuotientComparison> {
    let iso = find_isomorphism(left, right, opts)?;
    Ok(QuotientComparison {
        left_size: left.size(),
        right_size: right.size(),
        holds: iso.is_some(),
        isomorphism: iso.map(|h| h.map),
    })
}

fn require_submodule(m: &GammaModule, set: &[usize], what: &str) -> Result<()> {
    if !is_submodule(m, set) {
        return Err(Error::Precondition(format!("{what} is not a submodule")));
    }
    Ok(())
}

/// `(N + P) / P ≅ N / (N ∩ P)`.
pub fn second_isomorphism(m: &GammaModule, n: &[usize], p: &[usize], opts: &Options) -> Result<QuotientComparison> {
    require_submodule(m, n, "N")?;
    require_submodule(m, p, "P")?;
    let sum = submodule_closure(m, &subset::union(n, p));
    let sum_module = m.restrict(&sum, "N+P")?;
    let p_in_sum: Vec<usize> = p.iter().map(|x| sum.binary_search(x).unwrap()).collect();
    let (left, _) = bourne_quotient(&sum_module, &p_in_sum)?;
    let n_module = m.restrict(n, "N")?;
    let meet: Vec<usize> = subset::intersection(n, p)
        .iter()
        .map(|x| n.binary_search(x).unwrap())
        .collect();
    let (right, _) = bourne_quotient(&n_module, &meet)?;
    compare(&left, &right, opts)
}

/// `(M / P) / (N / P) ≅ M / N` for `P ⊆ N`.
pub fn third_isomorphism(m: &GammaModule, n: &[usize], p: &[usize], opts: &Options) -> Result<QuotientComparison> {
    require_submodule(m, n, "N")?;
    require_submodule(m, p, "P")?;
    if !subset::is_subset(p, n) {
        return Err(Error::Precondition("P is not contained in N".into()));
    }
    let (m_over_p, info) = bourne_quotient(m, p)?;
    let mut n_over_p: Vec<usize> = n.iter().map(|&x| info.congruence.class_of[x]).collect();
    n_over_p.sort_unstable();
    n_over_p.dedup();
    let (left, _) = bourne_quotient(&m_over_p, &n_over_p)?;
    let (right, _) = bourne_quotient(m, n)?;
    compare(&left, &right, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn projection_first_theorem() {
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        let reg = fixture::bundled_module("B2-regular").unwrap();
        let f = ModuleHom {
            map: vec![0, 0, 1, 1],
            verified: true,
        };
        let r = first_isomorphism(&t2, &reg, &f).unwrap();
        assert_eq!(r.kernel, vec![0, 1]);
        assert_eq!(r.image, vec![0, 1]);
        assert_eq!(r.quotient_size, 2);
        assert!(r.holds);
    }

    #[test]
    fn second_and_third_theorems_on_t_squared() {
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        let opts = Options::strict();
        let r = second_isomorphism(&t2, &[0, 2], &[0, 1], &opts).unwrap();
        assert_eq!((r.left_size, r.right_size), (2, 2));
        assert!(r.holds);
        let r = third_isomorphism(&t2, &[0, 1], &[0], &opts).unwrap();
        assert_eq!((r.left_size, r.right_size), (2, 2));
        assert!(r.holds);
        assert!(third_isomorphism(&t2, &[0], &[0, 1], &opts).is_err());
    }
}
