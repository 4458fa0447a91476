use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::submodule::generating_set;
use crate::module::GammaModule;
use crate::Options;

/// A carrier map between two modules; `verified` records a full pointwise check.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleHom {
    pub map: Vec<usize>,
    pub verified: bool,
}

impl ModuleHom {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_zero(&self, target: &GammaModule) -> bool {
        self.map.iter().all(|&y| y == target.zero())
    }

    pub fn is_bijective(&self, target: &GammaModule) -> bool {
        if self.map.len() != target.size() {
            return false;
        }
        let mut hit = vec![false; target.size()];
        for &y in &self.map {
            if hit[y] {
                return false;
            }
            hit[y] = true;
        }
        true
    }

    /// Kernel `{x : f(x) = 0}`.
    pub fn kernel(&self, target: &GammaModule) -> Vec<usize> {
        (0..self.map.len()).filter(|&x| self.map[x] == target.zero()).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut out = self.map.clone();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        inv
    }
}

/// Pointwise check: zero, additivity and action-equivariance.
pub fn is_hom(src: &GammaModule, tgt: &GammaModule, map: &[usize]) -> bool {
    if map.len() != src.size() || map.iter().any(|&y| y >= tgt.size()) {
        return false;
    }
    if map[src.zero()] != tgt.zero() {
        return false;
    }
    for x in 0..src.size() {
        for y in 0..src.size() {
            if map[src.add(x, y)] != tgt.add(map[x], map[y]) {
                return false;
            }
        }
        for (a, al, be, b) in src.contexts() {
            if map[src.act(a, al, x, be, b)] != tgt.act(a, al, map[x], be, b) {
                return false;
            }
        }
    }
    true
}

/// Extends generator images through addition and the action; `None` on conflict.
fn propagate(
    src: &GammaModule,
    tgt: &GammaModule,
    gens: &[usize],
    images: &[usize],
    contexts: &[(usize, usize, usize, usize)],
) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut f = vec![UNSET; src.size()];
    let mut assigned: Vec<usize> = Vec::new();
    let mut stack: Vec<(usize, usize)> = vec![(src.zero(), tgt.zero())];
    stack.extend(gens.iter().copied().zip(images.iter().copied()));
    while let Some((x, y)) = stack.pop() {
        if f[x] != UNSET {
            if f[x] != y {
                return None;
            }
            continue;
        }
        f[x] = y;
        assigned.push(x);
        for &z in &assigned {
            stack.push((src.add(x, z), tgt.add(y, f[z])));
        }
        for &(a, al, be, b) in contexts {
            stack.push((src.act(a, al, x, be, b), tgt.act(a, al, y, be, b)));
        }
    }
    if f.contains(&UNSET) {
        return None;
    }
    Some(f)
}

/// Every hom `src → tgt`, found by assigning images to a generating set of
/// `src` and propagating. Results are sorted by their carrier maps.
pub fn hom_set(src: &GammaModule, tgt: &GammaModule, opts: &Options) -> Result<Vec<ModuleHom>> {
    let gens = generating_set(src);
    hom_set_with_generators(src, tgt, &gens, opts)
}

/// As [`hom_set`], with caller-provided generators (e.g. a free basis).
pub fn hom_set_with_generators(
    src: &GammaModule,
    tgt: &GammaModule,
    gens: &[usize],
    opts: &Options,
) -> Result<Vec<ModuleHom>> {
    if *src.base() != *tgt.base() {
        return Err(Error::Precondition("hom between modules over different bases".into()));
    }
    let k = tgt.size();
    let candidates = (k as u128).checked_pow(gens.len() as u32).unwrap_or(u128::MAX);
    if candidates > opts.budget.max_hom_candidates as u128 {
        return Err(Error::Budget {
            what: "hom candidates",
            size: usize::try_from(candidates).unwrap_or(usize::MAX),
            limit: opts.budget.max_hom_candidates,
        });
    }
    let contexts: Vec<_> = src.contexts().collect();
    let mut images = vec![0usize; gens.len()];
    let mut out = Vec::new();
    loop {
        if let Some(map) = propagate(src, tgt, gens, &images, &contexts) {
            let verified = is_hom(src, tgt, &map);
            if verified {
                out.push(ModuleHom { map, verified });
            }
        }
        // odometer over target images
        let mut i = 0;
        loop {
            if i == images.len() {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            images[i] += 1;
            if images[i] < k {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

/// A bijective hom `a → b` whose inverse is also a hom, if one exists.
pub fn find_isomorphism(a: &GammaModule, b: &GammaModule, opts: &Options) -> Result<Option<ModuleHom>> {
    if a.size() != b.size() || *a.base() != *b.base() {
        return Ok(None);
    }
    Ok(hom_set(a, b, opts)?
        .into_iter()
        .find(|f| f.is_bijective(b) && is_hom(b, a, &f.inverse())))
}
