//! Localization at a prime and the Gelfand-type map into the product of
//! localizations at maximal ideals.
//!
//! Fractions `a/s` with `s ∉ P` are identified when some `u ∉ P` and some
//! pair of parameters give `tri(u,α,a,β,t) = tri(u,α,b,β,s)`. The relation is
//! closed transitively and the induced operations are then checked for
//! representative independence instead of being assumed well defined.
//!
//! Induced operations, using the designated parameters `(g0, g0)` for sums:
//!
//! * `a/s + b/t = (tri(a,g0,t,g0,s) + tri(b,g0,s,g0,s)) / tri(s,g0,t,g0,s)`
//! * `{a/s, b/t, c/r}_(α,β) = tri(a,α,b,β,c) / tri(s,α,t,β,r)`

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{is_prime, IdealSet};
use crate::semiring::Semiring;
use crate::spectrum::SpectrumSpace;
use crate::subset::Subset;
use crate::unionfind::UnionFind;
use crate::Options;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizedSemiring {
    pub prime: Subset,
    /// Fractions `(numerator, denominator)` in lexicographic order.
    pub fractions: Vec<(usize, usize)>,
    pub class_of: Vec<usize>,
    /// Fraction indices of each class; the first is the representative.
    pub classes: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    /// `add[x * k + y]`; `None` when the denominator fell into `P`.
    pub add: Vec<Option<usize>>,
    /// Row-major `k × g × k × g × k`.
    pub tri: Vec<Option<usize>>,
    pub maximal_ideal: Vec<usize>,
    pub well_defined: bool,
    pub witness: Option<String>,
    /// Non-invertible classes coincide with `maximal_ideal`; `None` without a unit.
    pub local: Option<bool>,
    pub lenient: bool,
}

impl LocalizedSemiring {
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of_fraction(&self, a: usize, s: usize) -> Option<usize> {
        self.fractions
            .binary_search(&(a, s))
            .ok()
            .map(|i| self.class_of[i])
    }
}

fn fraction_add(s: &Semiring, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
    let (a, d1) = x;
    let (b, d2) = y;
    let num = s.add(s.tri(a, 0, d2, 0, d1), s.tri(b, 0, d1, 0, d1));
    (num, s.tri(d1, 0, d2, 0, d1))
}

fn fraction_tri(
    s: &Semiring,
    x: (usize, usize),
    al: usize,
    y: (usize, usize),
    be: usize,
    z: (usize, usize),
) -> (usize, usize) {
    (s.tri(x.0, al, y.0, be, z.0), s.tri(x.1, al, y.1, be, z.1))
}

/// Localizes `s` at the prime `p`.
pub fn localize(s: &Semiring, p: &IdealSet, opts: &Options) -> Result<LocalizedSemiring> {
    let lenient = s.gate(opts)?;
    if !is_prime(s, p)? {
        return Err(Error::Precondition(format!("{} is not prime", p.render(s))));
    }
    let n = s.size();
    let g = s.gamma_size();
    let outside: Vec<usize> = (0..n).filter(|x| !p.contains(*x)).collect();
    let mut fractions: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| outside.iter().map(move |&d| (a, d)))
        .collect();
    fractions.sort_unstable();

    let mut uf = UnionFind::new(fractions.len());
    for (i, &(a, d1)) in fractions.iter().enumerate() {
        for (j, &(b, d2)) in fractions.iter().enumerate().skip(i + 1) {
            let related = outside.iter().any(|&u| {
                (0..g).any(|al| (0..g).any(|be| s.tri(u, al, a, be, d2) == s.tri(u, al, b, be, d1)))
            });
            if related {
                uf.union(i, j);
            }
        }
    }
    let (class_of, k) = uf.classes();
    let mut classes = vec![Vec::new(); k];
    for (i, &c) in class_of.iter().enumerate() {
        classes[c].push(i);
    }
    let labels: Vec<String> = classes
        .iter()
        .map(|members| {
            let (a, d) = fractions[members[0]];
            format!("{}/{}", s.label(a), s.label(d))
        })
        .collect();
    let lookup = |f: (usize, usize)| -> Option<usize> {
        fractions.binary_search(&f).ok().map(|i| class_of[i])
    };

    let mut witness: Option<String> = None;
    let mut note = |msg: String| {
        if witness.is_none() {
            witness = Some(msg);
        }
    };
    let render = |f: (usize, usize)| format!("{}/{}", s.label(f.0), s.label(f.1));

    let mut add = vec![None; k * k];
    let mut add_seen = vec![false; k * k];
    for &x in &fractions {
        for &y in &fractions {
            let cell = lookup(x).unwrap() * k + lookup(y).unwrap();
            let r = fraction_add(s, x, y);
            let value = lookup(r);
            if value.is_none() {
                note(format!(
                    "{} + {} has denominator {} inside P",
                    render(x),
                    render(y),
                    s.label(r.1)
                ));
            }
            if !add_seen[cell] {
                add_seen[cell] = true;
                add[cell] = value;
            } else if add[cell] != value {
                note(format!(
                    "sum depends on representatives at {} + {}",
                    render(x),
                    render(y)
                ));
            }
        }
    }

    let mut tri = vec![None; k * g * k * g * k];
    let mut tri_seen = vec![false; tri.len()];
    for &x in &fractions {
        for al in 0..g {
            for &y in &fractions {
                for be in 0..g {
                    for &z in &fractions {
                        let (cx, cy, cz) = (lookup(x).unwrap(), lookup(y).unwrap(), lookup(z).unwrap());
                        let cell = (((cx * g + al) * k + cy) * g + be) * k + cz;
                        let r = fraction_tri(s, x, al, y, be, z);
                        let value = lookup(r);
                        if value.is_none() {
                            note(format!(
                                "{{{}, {}, {}}}_({},{}) has denominator {} inside P",
                                render(x),
                                render(y),
                                render(z),
                                s.gamma()[al],
                                s.gamma()[be],
                                s.label(r.1)
                            ));
                        }
                        if !tri_seen[cell] {
                            tri_seen[cell] = true;
                            tri[cell] = value;
                        } else if tri[cell] != value {
                            note(format!(
                                "ternary product depends on representatives at {}, {}, {}",
                                render(x),
                                render(y),
                                render(z)
                            ));
                        }
                    }
                }
            }
        }
    }

    let maximal_ideal: Vec<usize> = (0..k)
        .filter(|&c| classes[c].iter().any(|&f| p.contains(fractions[f].0)))
        .collect();

    let local = s.unit().and_then(|u| {
        let one = lookup((u, u))?;
        let invertible = |x: usize| {
            (0..k).any(|y| {
                (0..g).any(|al| {
                    (0..g).any(|be| tri[(((x * g + al) * k + y) * g + be) * k + one] == Some(one))
                })
            })
        };
        let non_invertible: Vec<usize> = (0..k).filter(|&x| !invertible(x)).collect();
        Some(non_invertible == maximal_ideal)
    });

    Ok(LocalizedSemiring {
        prime: p.members.clone(),
        fractions,
        class_of,
        classes,
        labels,
        add,
        tri,
        maximal_ideal,
        well_defined: witness.is_none(),
        witness,
        local,
        lenient,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GelfandReport {
    pub injective: bool,
    pub maximal_points: Vec<Subset>,
    /// Per element: class of `a/1` in each localization.
    pub images: Vec<Vec<usize>>,
    pub witness: Option<(usize, usize)>,
}

/// Checks that `a ↦ (a/1)_P` over the maximal points of the spectrum is injective.
pub fn gelfand_injectivity(s: &Semiring, space: &SpectrumSpace, opts: &Options) -> Result<GelfandReport> {
    let unit = s.require_unit()?;
    let n = s.size();
    if n == 1 {
        return Ok(GelfandReport {
            injective: true,
            maximal_points: Vec::new(),
            images: vec![Vec::new()],
            witness: None,
        });
    }
    let maximal: Vec<&IdealSet> = space
        .points
        .iter()
        .filter(|p| p.is_maximal == crate::ideals::Flag::Yes)
        .collect();
    if maximal.is_empty() {
        return Err(Error::Precondition("no maximal ideals among the primes".into()));
    }
    let locals = maximal
        .iter()
        .map(|p| localize(s, p, opts))
        .collect::<Result<Vec<_>>>()?;
    let images: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            locals
                .iter()
                .map(|l| l.class_of_fraction(a, unit).expect("unit lies outside every proper ideal"))
                .collect()
        })
        .collect();
    let mut witness = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            if images[a] == images[b] {
                witness = Some((a, b));
                break 'outer;
            }
        }
    }
    Ok(GelfandReport {
        injective: witness.is_none(),
        maximal_points: maximal.iter().map(|p| p.members.clone()).collect(),
        images,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;
    use crate::spectrum::spectrum;

    #[test]
    fn boolean_localization_is_boolean() {
        let b2 = fixture::b2();
        let l = localize(&b2, &IdealSet::unchecked(vec![0]), &Options::strict()).unwrap();
        assert_eq!(l.size(), 2);
        assert_eq!(l.labels, vec!["0/1", "1/1"]);
        assert!(l.well_defined);
        assert_eq!(l.maximal_ideal, vec![0]);
        assert_eq!(l.local, Some(true));
        // induced addition is OR
        assert_eq!(l.add, vec![Some(0), Some(1), Some(1), Some(1)]);
    }

    #[test]
    fn product_localization_collapses_a_component() {
        let bb = fixture::b2xb2();
        let p = IdealSet::unchecked(vec![0, 2]);
        let l = localize(&bb, &p, &Options::strict()).unwrap();
        assert_eq!(l.size(), 2);
        assert!(l.well_defined);
        assert_eq!(l.local, Some(true));
        // fractions a/s are classified by the second coordinate of a
        let c = |a: &str| l.class_of_fraction(bb.index_of(a).unwrap(), 3).unwrap();
        assert_eq!(c("(0,0)"), c("(1,0)"));
        assert_eq!(c("(0,1)"), c("(1,1)"));
        assert_ne!(c("(0,0)"), c("(0,1)"));
        // zero numerators lie in the maximal ideal
        for d in [1, 3] {
            assert!(l.maximal_ideal.contains(&l.class_of_fraction(0, d).unwrap()));
        }
    }

    #[test]
    fn non_prime_is_rejected() {
        let bb = fixture::b2xb2();
        assert!(localize(&bb, &IdealSet::unchecked(vec![0]), &Options::strict()).is_err());
    }

    #[test]
    fn gelfand_examples() {
        let b2 = fixture::b2();
        let sp = spectrum(&b2, &Options::strict()).unwrap();
        assert!(gelfand_injectivity(&b2, &sp, &Options::strict()).unwrap().injective);
        let bb = fixture::b2xb2();
        let sp = spectrum(&bb, &Options::strict()).unwrap();
        let r = gelfand_injectivity(&bb, &sp, &Options::strict()).unwrap();
        assert!(r.injective);
        assert_eq!(r.maximal_points.len(), 2);
        let t1 = fixture::trivial();
        let sp = spectrum(&t1, &Options::strict()).unwrap();
        assert!(gelfand_injectivity(&t1, &sp, &Options::strict()).unwrap().injective);
    }

    #[test]
    fn gelfand_requires_unit() {
        let z3 = fixture::z3();
        let sp = spectrum(&z3, &Options::lenient()).unwrap();
        assert!(matches!(
            gelfand_injectivity(&z3, &sp, &Options::lenient()),
            Err(Error::NoUnit(_))
        ));
    }
}
