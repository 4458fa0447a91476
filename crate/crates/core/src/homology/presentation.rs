//! Finite commutative monoids given by explicit addition tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// A finite commutative monoid together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidPresentation {
    /// One label per class, describing a representative.
    pub labels: Vec<String>,
    /// `add[x * k + y]`.
    pub add: Vec<usize>,
    pub zero: usize,
    pub structure_tag: String,
    /// A truncation cap was reached, so the table may be a proper quotient.
    pub approximate: bool,
    pub backend: String,
    /// Relation schemas imposed, recorded verbatim.
    pub relations: Vec<String>,
}

impl MonoidPresentation {
    pub fn new(labels: Vec<String>, add: Vec<usize>, zero: usize, backend: impl Into<String>) -> Self {
        let structure_tag = structure_tag(labels.len(), &add, zero);
        MonoidPresentation {
            labels,
            add,
            zero,
            structure_tag,
            approximate: false,
            backend: backend.into(),
            relations: Vec::new(),
        }
    }

    pub fn trivial(backend: impl Into<String>) -> Self {
        Self::new(vec!["0".into()], vec![0], 0, backend)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    pub fn sum(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size() + y]
    }

    /// Checks identity, commutativity and associativity exhaustively.
    pub fn is_commutative_monoid(&self) -> bool {
        let k = self.size();
        (0..k).all(|x| self.sum(self.zero, x) == x)
            && (0..k).all(|x| (0..k).all(|y| self.sum(x, y) == self.sum(y, x)))
            && (0..k).all(|x| {
                (0..k).all(|y| (0..k).all(|z| self.sum(self.sum(x, y), z) == self.sum(x, self.sum(y, z))))
            })
    }

    /// Multiples `0, x, 2x, …` until they repeat.
    fn multiples(&self, x: usize) -> Vec<usize> {
        multiples(self.size(), &self.add, self.zero, x)
    }

    /// The sub-monoid on a sum-closed subset containing zero, relabelled.
    pub fn restrict(&self, members: &[usize], backend: impl Into<String>) -> Result<MonoidPresentation> {
        let index = |x: usize| members.binary_search(&x).ok();
        let zero = index(self.zero).ok_or_else(|| Error::Precondition("subset misses zero".into()))?;
        let mut add = Vec::with_capacity(members.len() * members.len());
        for &x in members {
            for &y in members {
                add.push(
                    index(self.sum(x, y))
                        .ok_or_else(|| Error::Precondition("subset is not closed under addition".into()))?,
                );
            }
        }
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        Ok(MonoidPresentation::new(labels, add, zero, backend))
    }

    /// Bourne quotient by a sub-monoid: the congruence generated by `x ~ x + b`.
    pub fn bourne_quotient(&self, sub: &[usize], backend: impl Into<String>) -> MonoidQuotient {
        let k = self.size();
        let mut uf = UnionFind::new(k);
        for x in 0..k {
            for &b in sub {
                uf.union(x, self.sum(x, b));
            }
        }
        let raw = uf.classes().0;
        let relation_was_congruence = (0..k).all(|x| {
            (0..k).all(|y| raw[x] != raw[y] || (0..k).all(|z| raw[self.sum(x, z)] == raw[self.sum(y, z)]))
        });
        loop {
            let mut changed = false;
            for x in 0..k {
                let r = uf.find(x);
                if r != x {
                    for z in 0..k {
                        changed |= uf.union(self.sum(x, z), self.sum(r, z));
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let (class_of, count) = uf.classes();
        let mut reps = vec![usize::MAX; count];
        for (x, &c) in class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r])).collect();
        let add = (0..count * count)
            .map(|i| class_of[self.sum(reps[i / count], reps[i % count])])
            .collect();
        MonoidQuotient {
            presentation: MonoidPresentation::new(labels, add, class_of[self.zero], backend),
            class_of,
            relation_was_congruence,
        }
    }

    /// An addition-preserving bijection onto `other`, if one exists.
    pub fn isomorphism(&self, other: &MonoidPresentation) -> Option<Vec<usize>> {
        let k = self.size();
        if k != other.size() {
            return None;
        }
        let sig = |p: &MonoidPresentation, x: usize| (p.multiples(x).len(), p.sum(x, x) == x);
        let mut map = vec![usize::MAX; k];
        let mut used = vec![false; k];
        map[self.zero] = other.zero;
        used[other.zero] = true;
        let order: Vec<usize> = (0..k).filter(|&x| x != self.zero).collect();
        fn go(
            a: &MonoidPresentation,
            b: &MonoidPresentation,
            order: &[usize],
            i: usize,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            sig: &dyn Fn(&MonoidPresentation, usize) -> (usize, bool),
        ) -> bool {
            if i == order.len() {
                return true;
            }
            let x = order[i];
            for y in 0..b.size() {
                if used[y] || sig(a, x) != sig(b, y) {
                    continue;
                }
                map[x] = y;
                let consistent = (0..a.size()).filter(|&z| map[z] != usize::MAX).all(|z| {
                    let s = a.sum(x, z);
                    map[s] == usize::MAX || map[s] == b.sum(y, map[z])
                });
                if consistent {
                    used[y] = true;
                    if go(a, b, order, i + 1, map, used, sig) {
                        return true;
                    }
                    used[y] = false;
                }
                map[x] = usize::MAX;
            }
            false
        }
        if !go(self, other, &order, 0, &mut map, &mut used, &sig) {
            return None;
        }
        let full = (0..k).all(|x| (0..k).all(|y| map[self.sum(x, y)] == other.sum(map[x], map[y])));
        full.then_some(map)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidQuotient {
    pub presentation: MonoidPresentation,
    pub class_of: Vec<usize>,
    /// The raw relation `x ~ x + b` was already compatible with addition.
    pub relation_was_congruence: bool,
}

fn multiples(k: usize, add: &[usize], zero: usize, x: usize) -> Vec<usize> {
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    let mut cur = zero;
    while !seen[cur] {
        seen[cur] = true;
        out.push(cur);
        cur = add[cur * k + x];
    }
    out
}

/// `"trivial"`, `"cyclic-k"` when one element's multiples exhaust the
/// monoid, otherwise `"monoid-k"`.
pub fn structure_tag(k: usize, add: &[usize], zero: usize) -> String {
    if k == 1 {
        "trivial".into()
    } else if (0..k).any(|x| multiples(k, add, zero, x).len() == k) {
        format!("cyclic-{k}")
    } else {
        format!("monoid-{k}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: usize) -> MonoidPresentation {
        let labels = (0..k).map(|i| i.to_string()).collect();
        let add = (0..k * k).map(|i| (i / k + i % k) % k).collect();
        MonoidPresentation::new(labels, add, 0, "test")
    }

    fn boolean() -> MonoidPresentation {
        MonoidPresentation::new(vec!["0".into(), "1".into()], vec![0, 1, 1, 1], 0, "test")
    }

    #[test]
    fn tags() {
        assert_eq!(MonoidPresentation::trivial("t").structure_tag, "trivial");
        assert_eq!(z(3).structure_tag, "cyclic-3");
        assert_eq!(boolean().structure_tag, "cyclic-2");
        let klein = MonoidPresentation::new(
            (0..4).map(|i| i.to_string()).collect(),
            (0..16).map(|i| (i / 4) ^ (i % 4)).collect(),
            0,
            "t",
        );
        assert_eq!(klein.structure_tag, "monoid-4");
        assert!(klein.is_commutative_monoid());
    }

    #[test]
    fn isomorphism_respects_addition() {
        assert!(z(2).isomorphism(&boolean()).is_none());
        assert!(z(3).isomorphism(&z(3)).is_some());
        let relabelled = MonoidPresentation::new(vec!["a".into(), "0".into()], vec![1, 0, 0, 1], 1, "t");
        assert_eq!(z(2).isomorphism(&relabelled), Some(vec![1, 0]));
    }

    #[test]
    fn bourne_quotients() {
        let q = z(3).bourne_quotient(&[0], "t");
        assert_eq!(q.presentation.size(), 3);
        let q = z(3).bourne_quotient(&[0, 1, 2], "t");
        assert!(q.presentation.is_trivial());
        // in {0,1} with 1+1=1 the quotient by {0,1} collapses everything
        let q = boolean().bourne_quotient(&[0, 1], "t");
        assert!(q.presentation.is_trivial());
        assert!(q.relation_was_congruence);
    }

    #[test]
    fn restriction() {
        let z4 = z(4);
        let sub = z4.restrict(&[0, 2], "t").unwrap();
        assert_eq!(sub.structure_tag, "cyclic-2");
        assert!(z4.restrict(&[0, 1], "t").is_err());
    }
}
