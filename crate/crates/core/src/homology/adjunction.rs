//! Tensor–Hom adjunction and the ternary structure on `[N, T]_Γ`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::tensor::{tensor, Backend};
use crate::module::hom::{hom_set, is_hom};
use crate::module::GammaModule;
use crate::Options;

/// `Hom(N, P)` as a module: pointwise sum and `(a·f·b)(n) = f(act(a,α,n,β,b))`.
pub fn hom_module(n: &GammaModule, p: &GammaModule, opts: &Options) -> Result<GammaModule> {
    let maps: Vec<Vec<usize>> = hom_set(n, p, opts)?.into_iter().map(|h| h.map).collect();
    let index = |f: &[usize]| {
        maps.binary_search_by(|g| g.as_slice().cmp(f))
            .unwrap_or(usize::MAX)
    };
    let labels = maps
        .iter()
        .map(|f| {
            let parts: Vec<&str> = f.iter().map(|&y| p.label(y)).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    let zero = index(&vec![p.zero(); n.size()]);
    GammaModule::from_fn(
        format!("Hom({},{})", n.name(), p.name()),
        Arc::clone(n.base_arc()),
        labels,
        zero,
        |f, g| {
            let sum: Vec<usize> = maps[f].iter().zip(&maps[g]).map(|(&x, &y)| p.add(x, y)).collect();
            index(&sum)
        },
        |a, al, f, be, b| {
            let moved: Vec<usize> = (0..n.size()).map(|x| maps[f][n.act(a, al, x, be, b)]).collect();
            index(&moved)
        },
    )
    .map_err(|_| Error::Precondition(format!("Hom({},{}) is not closed under the action", n.name(), p.name())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    /// `|Hom(M⊗N, P)|`.
    pub left_size: usize,
    /// `|Hom(M, Hom(N, P))|`.
    pub right_size: usize,
    /// `Φ(f)` as an index into the right side, when it lands there.
    pub phi: Vec<Option<usize>>,
    pub psi: Vec<Option<usize>>,
    pub phi_bijective: bool,
    /// `Ψ∘Φ = id` and `Φ∘Ψ = id` elementwise.
    pub round_trips: bool,
    pub holds: bool,
}

/// Builds `Φ(f)(m)(n) = f(m⊗n)` and its inverse `Ψ` explicitly.
pub fn adjunction_check(m: &GammaModule, n: &GammaModule, p: &GammaModule, opts: &Options) -> Result<AdjunctionReport> {
    let t = tensor(m, n, Backend::Auto, opts)?;
    let mn = t
        .module
        .as_ref()
        .ok_or_else(|| Error::Precondition("induced action on M⊗N is not well defined".into()))?;
    let hnp = hom_module(n, p, opts)?;
    let hnp_maps: Vec<Vec<usize>> = hom_set(n, p, opts)?.into_iter().map(|h| h.map).collect();
    let left: Vec<Vec<usize>> = hom_set(mn, p, opts)?.into_iter().map(|h| h.map).collect();
    let right: Vec<Vec<usize>> = hom_set(m, &hnp, opts)?.into_iter().map(|h| h.map).collect();
    let phi: Vec<Option<usize>> = left
        .iter()
        .map(|f| {
            let curried: Option<Vec<usize>> = (0..m.size())
                .map(|x| {
                    let row: Vec<usize> = (0..n.size()).map(|y| f[t.gen_class[t.generator(x, y)]]).collect();
                    hnp_maps.binary_search(&row).ok()
                })
                .collect();
            curried.and_then(|g| right.binary_search(&g).ok())
        })
        .collect();
    let psi: Vec<Option<usize>> = right
        .iter()
        .map(|g| {
            let f: Vec<usize> = t
                .representatives
                .iter()
                .map(|sum| {
                    let kn = t.right_size;
                    p.sum(sum.iter().map(|&gen| hnp_maps[g[gen / kn]][gen % kn]))
                })
                .collect();
            if is_hom(mn, p, &f) {
                left.binary_search(&f).ok()
            } else {
                None
            }
        })
        .collect();
    let mut hit = vec![false; right.len()];
    let phi_bijective = left.len() == right.len()
        && phi.iter().all(|&i| i.is_some_and(|i| !std::mem::replace(&mut hit[i], true)));
    let round_trips = (0..left.len()).all(|i| phi[i].and_then(|j| psi[j]) == Some(i))
        && (0..right.len()).all(|j| psi[j].and_then(|i| phi[i]) == Some(j));
    Ok(AdjunctionReport {
        left_size: left.len(),
        right_size: right.len(),
        holds: phi_bijective && round_trips,
        phi,
        psi,
        phi_bijective,
        round_trips,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InternalHom {
    pub maps: Vec<Vec<usize>>,
    /// `table[((α·g + β)·k + f)·k² + g'·k + h]` is `{f,g',h}` at `(α,β)`, when it is a hom.
    pub table: Vec<Option<usize>>,
    pub closed: bool,
}

impl InternalHom {
    pub fn bracket(&self, gamma: usize, alpha: usize, beta: usize, f: usize, g: usize, h: usize) -> Option<usize> {
        let k = self.maps.len();
        self.table[(((alpha * gamma + beta) * k + f) * k + g) * k + h]
    }
}

/// `[N, T]_Γ` with `{f,g,h}(m) = tri(f(m), α, g(m), β, h(m))`.
pub fn internal_hom_ternary(n: &GammaModule, opts: &Options) -> Result<InternalHom> {
    let s = n.base_arc();
    let regular = GammaModule::regular(s);
    let maps: Vec<Vec<usize>> = hom_set(n, &regular, opts)?.into_iter().map(|h| h.map).collect();
    let k = maps.len();
    let g = s.gamma_size();
    let mut table = Vec::with_capacity(g * g * k * k * k);
    for al in 0..g {
        for be in 0..g {
            for f in &maps {
                for g2 in &maps {
                    for h in &maps {
                        let v: Vec<usize> = (0..n.size()).map(|x| s.tri(f[x], al, g2[x], be, h[x])).collect();
                        table.push(maps.binary_search(&v).ok());
                    }
                }
            }
        }
    }
    Ok(InternalHom {
        closed: table.iter().all(Option::is_some),
        maps,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn boolean_adjunction() {
        let reg = fixture::bundled_module("B2-regular").unwrap();
        let r = adjunction_check(&reg, &reg, &reg, &Options::strict()).unwrap();
        assert_eq!((r.left_size, r.right_size), (2, 2));
        assert!(r.phi_bijective && r.round_trips && r.holds);
    }

    #[test]
    fn zero_middle_factor() {
        let reg = fixture::bundled_module("B2-regular").unwrap();
        let z = fixture::bundled_module("B2-zero").unwrap();
        let r = adjunction_check(&reg, &z, &reg, &Options::strict()).unwrap();
        assert_eq!((r.left_size, r.right_size), (1, 1));
        assert!(r.holds);
    }

    #[test]
    fn product_adjunction() {
        let reg = fixture::bundled_module("B2xB2-regular").unwrap();
        let r = adjunction_check(&reg, &reg, &reg, &Options::strict()).unwrap();
        assert_eq!(r.left_size, r.right_size);
        assert!(r.holds);
    }

    #[test]
    fn boolean_internal_hom() {
        let reg = fixture::bundled_module("B2-regular").unwrap();
        let ih = internal_hom_ternary(&reg, &Options::strict()).unwrap();
        assert_eq!(ih.maps, vec![vec![0, 0], vec![0, 1]]);
        assert!(ih.closed);
        assert_eq!(ih.bracket(1, 0, 0, 1, 1, 1), Some(1));
        for g in 0..2 {
            for h in 0..2 {
                assert_eq!(ih.bracket(1, 0, 0, 0, g, h), Some(0));
            }
        }
    }
}
