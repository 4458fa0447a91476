//! Module congruences, quotients and the subtraction-free Bourne quotient.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::GammaModule;
use crate::unionfind::UnionFind;
use crate::Options;

/// A partition of a module carrier, with classes numbered by least member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleCongruence {
    pub class_of: Vec<usize>,
    pub class_count: usize,
    /// Addition and action respect the partition.
    pub compatible: bool,
    pub witness: Option<String>,
}

impl ModuleCongruence {
    pub fn from_union_find(m: &GammaModule, uf: &mut UnionFind) -> Self {
        let (class_of, class_count) = uf.classes();
        let witness = incompatibility(m, &class_of);
        ModuleCongruence {
            class_of,
            class_count,
            compatible: witness.is_none(),
            witness,
        }
    }

    pub fn identity(m: &GammaModule) -> Self {
        Self::from_union_find(m, &mut UnionFind::new(m.size()))
    }

    /// Least member of each class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.class_count];
        for (x, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        reps
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }
}

/// First pair of related elements whose sums or actions land in different classes.
fn incompatibility(m: &GammaModule, class_of: &[usize]) -> Option<String> {
    let k = m.size();
    let contexts: Vec<_> = m.contexts().collect();
    let s = m.base();
    for x in 0..k {
        for y in x + 1..k {
            if class_of[x] != class_of[y] {
                continue;
            }
            for z in 0..k {
                if class_of[m.add(x, z)] != class_of[m.add(y, z)] {
                    return Some(format!(
                        "{} ~ {} but {0} + {2} ≁ {1} + {2}",
                        m.label(x),
                        m.label(y),
                        m.label(z)
                    ));
                }
            }
            for &(a, al, be, b) in &contexts {
                if class_of[m.act(a, al, x, be, b)] != class_of[m.act(a, al, y, be, b)] {
                    return Some(format!(
                        "{} ~ {} but the action at ({}, {}, {}, {}) separates them",
                        m.label(x),
                        m.label(y),
                        s.label(a),
                        s.gamma()[al],
                        s.gamma()[be],
                        s.label(b)
                    ));
                }
            }
        }
    }
    None
}

/// Closes `uf` into the least congruence containing it.
pub fn close_congruence(m: &GammaModule, uf: &mut UnionFind) {
    let k = m.size();
    let contexts: Vec<_> = m.contexts().collect();
    loop {
        let mut changed = false;
        for x in 0..k {
            let r = uf.find(x);
            if r == x {
                continue;
            }
            for z in 0..k {
                changed |= uf.union(m.add(x, z), m.add(r, z));
            }
            for &(a, al, be, b) in &contexts {
                changed |= uf.union(m.act(a, al, x, be, b), m.act(a, al, r, be, b));
            }
        }
        if !changed {
            break;
        }
    }
}

/// Least congruence identifying each given pair.
pub fn generated_congruence(m: &GammaModule, pairs: &[(usize, usize)]) -> ModuleCongruence {
    let mut uf = UnionFind::new(m.size());
    for &(x, y) in pairs {
        uf.union(x, y);
    }
    close_congruence(m, &mut uf);
    ModuleCongruence::from_union_find(m, &mut uf)
}

/// Quotient module by a compatible partition; classes are labelled `[x]`.
pub fn quotient(m: &GammaModule, cong: &ModuleCongruence, name: impl Into<String>) -> Result<GammaModule> {
    if !cong.compatible {
        return Err(Error::Precondition(format!(
            "partition is not a congruence: {}",
            cong.witness.as_deref().unwrap_or("")
        )));
    }
    let reps = cong.representatives();
    let labels = reps.iter().map(|&r| format!("[{}]", m.label(r))).collect();
    let mut q = GammaModule::from_fn(
        name,
        Arc::clone(m.base_arc()),
        labels,
        cong.class_of[m.zero()],
        |x, y| cong.class_of[m.add(reps[x], reps[y])],
        |a, al, x, be, b| cong.class_of[m.act(a, al, reps[x], be, b)],
    )?;
    q.set_m2_profile(m.m2_profile());
    q.set_anchor(m.anchor());
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BourneQuotient {
    pub congruence: ModuleCongruence,
    /// The raw relation `m + k = m' + k'` was already a congruence.
    pub relation_was_congruence: bool,
    pub witness: Option<String>,
}

/// `M / N` under `m ~ m'` iff `m + k = m' + k'` for some `k, k' ∈ N`.
///
/// The relation is the equivalence generated by `m ~ m + k`; when it is not
/// compatible with the action it is closed to the generated congruence and
/// the incompatibility is reported.
pub fn bourne_quotient(m: &GammaModule, sub: &[usize]) -> Result<(GammaModule, BourneQuotient)> {
    if !crate::module::submodule::is_submodule(m, sub) {
        return Err(Error::Precondition("quotient by a non-submodule".into()));
    }
    let mut uf = UnionFind::new(m.size());
    for x in 0..m.size() {
        for &k in sub {
            uf.union(x, m.add(x, k));
        }
    }
    let raw = ModuleCongruence::from_union_find(m, &mut uf);
    let relation_was_congruence = raw.compatible;
    let witness = raw.witness.clone();
    let congruence = if raw.compatible {
        raw
    } else {
        close_congruence(m, &mut uf);
        ModuleCongruence::from_union_find(m, &mut uf)
    };
    let name = format!(
        "{}/{}",
        m.name(),
        crate::subset::render(sub, m.carrier())
    );
    let q = quotient(m, &congruence, name)?;
    Ok((
        q,
        BourneQuotient {
            congruence,
            relation_was_congruence,
            witness,
        },
    ))
}

/// Every congruence of `m`, coarsening from the identity one pair at a time.
pub fn enumerate_congruences(m: &GammaModule, opts: &Options) -> Result<Vec<ModuleCongruence>> {
    let k = m.size();
    if k > opts.budget.max_enumeration {
        return Err(Error::Budget {
            what: "congruence enumeration carrier",
            size: k,
            limit: opts.budget.max_enumeration,
        });
    }
    let identity = generated_congruence(m, &[]);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([identity.class_of.clone()]);
    let mut found = vec![identity];
    let mut i = 0;
    while i < found.len() {
        let current = found[i].class_of.clone();
        for x in 0..k {
            for y in x + 1..k {
                if current[x] == current[y] {
                    continue;
                }
                let mut uf = UnionFind::new(k);
                for z in 0..k {
                    uf.union(z, current.iter().position(|&c| c == current[z]).unwrap());
                }
                uf.union(x, y);
                close_congruence(m, &mut uf);
                let next = ModuleCongruence::from_union_find(m, &mut uf);
                if seen.insert(next.class_of.clone()) {
                    found.push(next);
                }
            }
        }
        i += 1;
    }
    // finest first, then lexicographic on the partition
    found.sort_by(|a, b| b.class_count.cmp(&a.class_count).then_with(|| a.class_of.cmp(&b.class_of)));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn t_squared_by_first_axis_has_two_classes() {
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        // N = {(0,y)}
        let (q, info) = bourne_quotient(&t2, &[0, 1]).unwrap();
        assert_eq!(q.size(), 2);
        assert!(info.relation_was_congruence);
        assert!(info.congruence.compatible);
        let reg = fixture::bundled_module("B2-regular").unwrap();
        assert!(crate::module::find_isomorphism(&q, &reg, &Options::strict())
            .unwrap()
            .is_some());
    }

    #[test]
    fn trivial_quotients() {
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        let (q, _) = bourne_quotient(&t2, &[0]).unwrap();
        assert_eq!(q.size(), 4);
        assert_eq!(q.madd_table(), t2.madd_table());
        let (q, _) = bourne_quotient(&t2, &[0, 1, 2, 3]).unwrap();
        assert_eq!(q.size(), 1);
        assert!(bourne_quotient(&t2, &[0, 1, 2]).is_err());
    }

    #[test]
    fn boolean_regular_congruences() {
        let reg = fixture::bundled_module("B2-regular").unwrap();
        let all = enumerate_congruences(&reg, &Options::strict()).unwrap();
        let parts: Vec<_> = all.iter().map(|c| c.class_of.clone()).collect();
        assert_eq!(parts, vec![vec![0, 1], vec![0, 0]]);
        assert!(all.iter().all(|c| c.compatible));
    }

    #[test]
    fn incompatible_partition_is_reported() {
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        // {(0,0),(1,1)} | {(0,1)} | {(1,0)}: (0,0)+(0,1) ≁ (1,1)+(0,1)? (0,1) vs (1,1)
        let mut uf = UnionFind::new(4);
        uf.union(0, 3);
        let c = ModuleCongruence::from_union_find(&t2, &mut uf);
        assert!(!c.compatible);
        assert!(c.witness.is_some());
        assert!(quotient(&t2, &c, "bad").is_err());
    }
}
