//! Free modules `T^r` and depth-two free resolutions.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::hom::{is_hom, ModuleHom};
use crate::module::GammaModule;
use crate::semiring::Semiring;
use crate::Options;

/// `T^r` with componentwise operations. Element `(a₁,…,a_r)` has index
/// `Σ aᵢ·|T|^(r-i)`; rank one reuses the element labels of `T`.
pub fn free_module(s: &Arc<Semiring>, r: usize, opts: &Options) -> Result<GammaModule> {
    s.require_unit()?;
    let n = s.size();
    let size = (n as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if size > opts.budget.max_free_carrier as u128 {
        return Err(Error::Budget {
            what: "free module carrier",
            size: usize::try_from(size).unwrap_or(usize::MAX),
            limit: opts.budget.max_free_carrier,
        });
    }
    let size = size as usize;
    let coords = |x: usize| -> Vec<usize> {
        let mut v = vec![0; r];
        let mut x = x;
        for slot in v.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        v
    };
    let index = |v: &[usize]| v.iter().fold(0, |acc, &c| acc * n + c);
    let carrier = (0..size)
        .map(|x| {
            let labels: Vec<&str> = coords(x).iter().map(|&c| s.label(c)).collect();
            if r == 1 {
                labels[0].to_string()
            } else {
                format!("({})", labels.join(","))
            }
        })
        .collect();
    let zero = index(&vec![s.zero(); r]);
    GammaModule::from_fn(
        format!("{}^{}", s.name(), r),
        Arc::clone(s),
        carrier,
        zero,
        |x, y| {
            let v: Vec<usize> = coords(x).iter().zip(coords(y)).map(|(&a, b)| s.add(a, b)).collect();
            index(&v)
        },
        |a, al, x, be, b| {
            let v: Vec<usize> = coords(x).iter().map(|&c| s.tri(a, al, c, be, b)).collect();
            index(&v)
        },
    )
}

/// Basis vector `eᵢ` of `T^r`.
pub fn basis_vector(s: &Semiring, r: usize, i: usize) -> Result<usize> {
    let unit = s.require_unit()?;
    let n = s.size();
    Ok((0..r).fold(0, |acc, j| acc * n + if j == i { unit } else { s.zero() }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exactness {
    pub augmentation_surjective: bool,
    /// `im d1 = ker π`.
    pub at_p0: bool,
    /// `im d2 = ker d1`.
    pub at_p1: bool,
    /// Every map in the complex passed the pointwise hom check.
    pub maps_are_homs: bool,
}

impl Exactness {
    pub fn holds(&self) -> bool {
        self.augmentation_surjective && self.at_p0 && self.at_p1 && self.maps_are_homs
    }
}

#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub ranks: [usize; 3],
    pub modules: [GammaModule; 3],
    pub augmentation: ModuleHom,
    pub d1: ModuleHom,
    pub d2: ModuleHom,
    /// Elements of `M`, `ker π` and `ker d1` the bases are sent to.
    pub generators: [Vec<usize>; 3],
    pub exactness: Exactness,
}

/// `x ↦ Σ act(xᵢ, α₀, gᵢ, β₀, 1)` from `T^r` into `target`.
fn free_map(s: &Semiring, free: &GammaModule, target: &GammaModule, gens: &[usize]) -> Vec<usize> {
    let unit = s.unit().expect("free modules need a unit");
    let n = s.size();
    let r = gens.len();
    (0..free.size())
        .map(|mut x| {
            let mut coords = vec![0; r];
            for slot in coords.iter_mut().rev() {
                *slot = x % n;
                x /= n;
            }
            target.sum(coords.iter().zip(gens).map(|(&a, &g)| target.act(a, 0, g, 0, unit)))
        })
        .collect()
}

/// Greedy generators of `wanted` (a submodule of `target`): repeatedly the
/// least element not yet reached by the span.
fn cover(s: &Semiring, target: &GammaModule, wanted: &[usize]) -> Vec<usize> {
    let unit = s.unit().expect("free modules need a unit");
    let mut reached = vec![false; target.size()];
    reached[target.zero()] = true;
    let mut gens = Vec::new();
    while let Some(&x) = wanted.iter().find(|&&x| !reached[x]) {
        if gens.len() > wanted.len() {
            break;
        }
        gens.push(x);
        let span: Vec<usize> = (0..target.size()).filter(|&y| reached[y]).collect();
        for y in span {
            for a in 0..s.size() {
                reached[target.add(y, target.act(a, 0, x, 0, unit))] = true;
            }
        }
    }
    gens
}

fn kernel(map: &[usize], target: &GammaModule) -> Vec<usize> {
    (0..map.len()).filter(|&x| map[x] == target.zero()).collect()
}

fn image(map: &[usize]) -> Vec<usize> {
    let mut v = map.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// `P₂ → P₁ → P₀ → M → 0` with exactness verified elementwise.
pub fn free_resolution(m: &GammaModule, opts: &Options) -> Result<FreeResolution> {
    let s = m.base_arc();
    s.require_unit()?;
    let all: Vec<usize> = (0..m.size()).collect();
    let g0 = cover(s, m, &all);
    let p0 = free_module(s, g0.len(), opts)?;
    let pi = free_map(s, &p0, m, &g0);
    let k0 = kernel(&pi, m);
    let g1 = cover(s, &p0, &k0);
    let p1 = free_module(s, g1.len(), opts)?;
    let d1 = free_map(s, &p1, &p0, &g1);
    let k1 = kernel(&d1, &p0);
    let g2 = cover(s, &p1, &k1);
    let p2 = free_module(s, g2.len(), opts)?;
    let d2 = free_map(s, &p2, &p1, &g2);
    let exactness = Exactness {
        augmentation_surjective: image(&pi) == all,
        at_p0: image(&d1) == k0,
        at_p1: image(&d2) == k1,
        maps_are_homs: is_hom(&p0, m, &pi) && is_hom(&p1, &p0, &d1) && is_hom(&p2, &p1, &d2),
    };
    let hom = |map: Vec<usize>| ModuleHom { map, verified: exactness.maps_are_homs };
    Ok(FreeResolution {
        ranks: [g0.len(), g1.len(), g2.len()],
        modules: [p0, p1, p2],
        augmentation: hom(pi),
        d1: hom(d1),
        d2: hom(d2),
        generators: [g0, g1, g2],
        exactness,
    })
}
