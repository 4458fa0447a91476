//! Tensor products `M ⊗ N` as quotients of the free commutative monoid on
//! the symbols `m ⊗ n`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::presentation::MonoidPresentation;
use crate::homology::snf::smith_normal_form;
use crate::module::hom::ModuleHom;
use crate::module::GammaModule;
use crate::unionfind::UnionFind;
use crate::Options;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Auto,
    Idempotent,
    Group,
    Saturation,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Auto => "auto",
            Backend::Idempotent => "idempotent",
            Backend::Group => "group",
            Backend::Saturation => "saturation",
        }
    }
}

/// Multiplicity cap of the saturation backend.
pub const SATURATION_CAP: usize = 4;

pub const RELATION_SCHEMAS: [&str; 4] = [
    "(m+m')⊗n = m⊗n + m'⊗n",
    "m⊗(n+n') = m⊗n + m⊗n'",
    "act(a,α,m,β,b)⊗n = m⊗act(a,α,n,β,b)",
    "0⊗n = 0 = m⊗0",
];

/// A relation between two formal sums of generator indices (sorted multisets).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Relation {
    lhs: Vec<usize>,
    rhs: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct TensorProduct {
    pub presentation: MonoidPresentation,
    /// Class of the generator `m ⊗ n`, indexed `m * |N| + n`.
    pub gen_class: Vec<usize>,
    /// A formal sum of generators hitting each class, found breadth-first.
    pub representatives: Vec<Vec<usize>>,
    pub left_size: usize,
    pub right_size: usize,
    /// `M ⊗ N` with `a·(m⊗n)·b = act(a,α,m,β,b) ⊗ n`, when well defined.
    pub module: Option<GammaModule>,
    pub relation_count: usize,
}

impl TensorProduct {
    pub fn class_of_sum(&self, gens: impl IntoIterator<Item = usize>) -> usize {
        gens.into_iter()
            .fold(self.presentation.zero, |c, g| self.presentation.sum(c, self.gen_class[g]))
    }

    pub fn generator(&self, m: usize, n: usize) -> usize {
        m * self.right_size + n
    }
}

fn relations(m: &GammaModule, n: &GammaModule) -> (Vec<Relation>, UnionFind) {
    let (km, kn) = (m.size(), n.size());
    let gen = |x: usize, y: usize| x * kn + y;
    // single-generator identifications are handled by union-find up front
    let mut uf = UnionFind::new(km * kn + 1);
    let zero_slot = km * kn;
    for y in 0..kn {
        uf.union(gen(m.zero(), y), zero_slot);
    }
    for x in 0..km {
        uf.union(gen(x, n.zero()), zero_slot);
    }
    for x in 0..km {
        for y in 0..kn {
            for (a, al, be, b) in m.contexts() {
                uf.union(gen(m.act(a, al, x, be, b), y), gen(x, n.act(a, al, y, be, b)));
            }
        }
    }
    let canon = |uf: &mut UnionFind, items: &[usize]| -> Vec<usize> {
        let z = uf.find(zero_slot);
        let mut v: Vec<usize> = items.iter().map(|&g| uf.find(g)).filter(|&r| r != z).collect();
        v.sort_unstable();
        v
    };
    let mut set = BTreeSet::new();
    for x in 0..km {
        for x2 in 0..km {
            for y in 0..kn {
                let l = canon(&mut uf, &[gen(m.add(x, x2), y)]);
                let r = canon(&mut uf, &[gen(x, y), gen(x2, y)]);
                if l != r {
                    set.insert(Relation { lhs: l, rhs: r });
                }
            }
        }
    }
    for x in 0..km {
        for y in 0..kn {
            for y2 in 0..kn {
                let l = canon(&mut uf, &[gen(x, n.add(y, y2))]);
                let r = canon(&mut uf, &[gen(x, y), gen(x, y2)]);
                if l != r {
                    set.insert(Relation { lhs: l, rhs: r });
                }
            }
        }
    }
    (set.into_iter().collect(), uf)
}

/// Result of a backend: a class table and the class of each root generator.
struct Quotient {
    add: Vec<usize>,
    zero: usize,
    class_of_root: BTreeMap<usize, usize>,
    approximate: bool,
}

type Bits = u128;

fn idempotent_backend(roots: &[usize], rels: &[Relation], opts: &Options) -> Result<Quotient> {
    if roots.len() > Bits::BITS as usize {
        return Err(Error::Budget {
            what: "idempotent tensor generators",
            size: roots.len(),
            limit: Bits::BITS as usize,
        });
    }
    let bit = |g: usize| -> Bits { 1 << roots.binary_search(&g).unwrap() };
    let mask = |v: &[usize]| v.iter().fold(0, |acc, &g| acc | bit(g));
    let implications: Vec<(Bits, Bits)> = rels
        .iter()
        .flat_map(|r| {
            let (l, rr) = (mask(&r.lhs), mask(&r.rhs));
            [(l, rr), (rr, l)]
        })
        .collect();
    let close = |mut x: Bits| loop {
        let before = x;
        for &(p, q) in &implications {
            if x & p == p {
                x |= q;
            }
        }
        if x == before {
            return x;
        }
    };
    let start = close(0);
    let mut index: BTreeMap<Bits, usize> = BTreeMap::from([(start, 0)]);
    let mut states = vec![start];
    let mut i = 0;
    while i < states.len() {
        for &g in roots {
            let next = close(states[i] | bit(g));
            if let std::collections::btree_map::Entry::Vacant(slot) = index.entry(next) {
                if states.len() >= opts.budget.max_saturation_states {
                    return Err(Error::Budget {
                        what: "idempotent tensor classes",
                        size: states.len() + 1,
                        limit: opts.budget.max_saturation_states,
                    });
                }
                slot.insert(states.len());
                states.push(next);
            }
        }
        i += 1;
    }
    let k = states.len();
    let add = (0..k * k)
        .map(|j| index[&close(states[j / k] | states[j % k])])
        .collect();
    let class_of_root = roots.iter().map(|&g| (g, index[&close(bit(g))])).collect();
    Ok(Quotient {
        add,
        zero: 0,
        class_of_root,
        approximate: false,
    })
}

fn group_backend(roots: &[usize], rels: &[Relation], opts: &Options) -> Result<Quotient> {
    let col = |g: usize| roots.binary_search(&g).unwrap();
    let matrix: Vec<Vec<i128>> = rels
        .iter()
        .map(|r| {
            let mut row = vec![0i128; roots.len()];
            r.lhs.iter().for_each(|&g| row[col(g)] += 1);
            r.rhs.iter().for_each(|&g| row[col(g)] -= 1);
            row
        })
        .collect();
    let snf = smith_normal_form(&matrix, roots.len());
    if snf.rank() < roots.len() {
        return Err(Error::NoBackend("group quotient has a free part".into()));
    }
    let factors: Vec<(usize, i128)> = snf
        .diagonal
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 1)
        .map(|(i, &d)| (i, d))
        .collect();
    let size = factors.iter().try_fold(1usize, |acc, &(_, d)| {
        acc.checked_mul(d as usize).filter(|&s| s <= opts.budget.max_saturation_states)
    });
    let size = size.ok_or(Error::Budget {
        what: "group tensor classes",
        size: usize::MAX,
        limit: opts.budget.max_saturation_states,
    })?;
    // classes are mixed-radix tuples over the nontrivial invariant factors
    let encode = |coords: &[i128]| {
        factors
            .iter()
            .zip(coords)
            .fold(0usize, |acc, (&(_, d), &c)| acc * d as usize + c.rem_euclid(d) as usize)
    };
    let decode = |mut x: usize| {
        let mut coords = vec![0i128; factors.len()];
        for (slot, &(_, d)) in coords.iter_mut().zip(&factors).rev() {
            *slot = (x % d as usize) as i128;
            x /= d as usize;
        }
        coords
    };
    let add = (0..size * size)
        .map(|j| {
            let (x, y) = (decode(j / size), decode(j % size));
            let s: Vec<i128> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            encode(&s)
        })
        .collect();
    let class_of_root = roots
        .iter()
        .map(|&g| {
            let coords: Vec<i128> = factors.iter().map(|&(i, _)| snf.v[col(g)][i]).collect();
            (g, encode(&coords))
        })
        .collect();
    Ok(Quotient {
        add,
        zero: 0,
        class_of_root,
        approximate: false,
    })
}

fn saturation_backend(roots: &[usize], rels: &[Relation], opts: &Options) -> Result<Quotient> {
    let base = SATURATION_CAP + 1;
    let states = (base as u128).checked_pow(roots.len() as u32).unwrap_or(u128::MAX);
    if states > opts.budget.max_saturation_states as u128 {
        return Err(Error::Budget {
            what: "saturation states",
            size: usize::try_from(states).unwrap_or(usize::MAX),
            limit: opts.budget.max_saturation_states,
        });
    }
    let states = states as usize;
    let col = |g: usize| roots.binary_search(&g).unwrap();
    let decode = |mut x: usize| {
        let mut v = vec![0usize; roots.len()];
        for slot in v.iter_mut() {
            *slot = x % base;
            x /= base;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().rev().fold(0usize, |acc, &c| acc * base + c.min(SATURATION_CAP));
    let plus = |x: usize, y: &[usize]| {
        let v: Vec<usize> = decode(x).iter().zip(y).map(|(a, b)| a + b).collect();
        encode(&v)
    };
    let vector = |sum: &[usize]| {
        let mut v = vec![0usize; roots.len()];
        sum.iter().for_each(|&g| v[col(g)] += 1);
        v
    };
    let mut uf = UnionFind::new(states);
    for r in rels {
        let (l, rr) = (vector(&r.lhs), vector(&r.rhs));
        for s in 0..states {
            uf.union(plus(s, &l), plus(s, &rr));
        }
    }
    let (class_of, k) = uf.classes();
    let mut reps = vec![usize::MAX; k];
    for (x, &c) in class_of.iter().enumerate() {
        if reps[c] == usize::MAX {
            reps[c] = x;
        }
    }
    let add = (0..k * k)
        .map(|j| class_of[plus(reps[j / k], &decode(reps[j % k]))])
        .collect();
    let unit = |g: usize, times: usize| {
        let mut v = vec![0usize; roots.len()];
        v[col(g)] = times;
        encode(&v)
    };
    let approximate = roots
        .iter()
        .any(|&g| class_of[unit(g, SATURATION_CAP - 1)] != class_of[unit(g, SATURATION_CAP)]);
    let class_of_root = roots.iter().map(|&g| (g, class_of[unit(g, 1)])).collect();
    Ok(Quotient {
        add,
        zero: class_of[0],
        class_of_root,
        approximate,
    })
}

/// `M ⊗ N` under the relation schemas in [`RELATION_SCHEMAS`].
pub fn tensor(m: &GammaModule, n: &GammaModule, backend: Backend, opts: &Options) -> Result<TensorProduct> {
    if *m.base() != *n.base() {
        return Err(Error::Precondition("tensor of modules over different bases".into()));
    }
    let (rels, mut uf) = relations(m, n);
    let gens = m.size() * n.size();
    let zero_root = uf.find(gens);
    let root_of: Vec<usize> = (0..gens).map(|g| uf.find(g)).collect();
    let roots: Vec<usize> = root_of
        .iter()
        .copied()
        .filter(|&r| r != zero_root)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let idempotent = m.is_idempotent() && n.is_idempotent();
    let group = m.is_group() && n.is_group();
    let (q, used) = match backend {
        Backend::Idempotent if idempotent => (idempotent_backend(&roots, &rels, opts)?, Backend::Idempotent),
        Backend::Group if group => (group_backend(&roots, &rels, opts)?, Backend::Group),
        Backend::Saturation => (saturation_backend(&roots, &rels, opts)?, Backend::Saturation),
        Backend::Auto if idempotent => (idempotent_backend(&roots, &rels, opts)?, Backend::Idempotent),
        Backend::Auto if group => (group_backend(&roots, &rels, opts)?, Backend::Group),
        Backend::Auto => (saturation_backend(&roots, &rels, opts)?, Backend::Saturation),
        other => {
            return Err(Error::NoBackend(format!(
                "{} backend does not apply to {} ⊗ {}",
                other.name(),
                m.name(),
                n.name()
            )))
        }
    };
    let k = q.add.len().isqrt();
    let gen_class: Vec<usize> = root_of
        .iter()
        .map(|r| if *r == zero_root { q.zero } else { q.class_of_root[r] })
        .collect();
    // breadth-first representatives over generator additions
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; k];
    let mut reached = vec![false; k];
    reached[q.zero] = true;
    let mut queue = VecDeque::from([q.zero]);
    while let Some(c) = queue.pop_front() {
        for g in 0..gens {
            let next = q.add[c * k + gen_class[g]];
            if !reached[next] {
                reached[next] = true;
                parent[next] = Some((c, g));
                queue.push_back(next);
            }
        }
    }
    if reached.contains(&false) {
        return Err(Error::Precondition("tensor classes not generated by m⊗n".into()));
    }
    let representatives: Vec<Vec<usize>> = (0..k)
        .map(|mut c| {
            let mut sum = Vec::new();
            while let Some((p, g)) = parent[c] {
                sum.push(g);
                c = p;
            }
            sum.reverse();
            sum
        })
        .collect();
    let kn = n.size();
    let labels = representatives
        .iter()
        .map(|sum| {
            if sum.is_empty() {
                "0".to_string()
            } else {
                sum.iter()
                    .map(|&g| format!("{}⊗{}", m.label(g / kn), n.label(g % kn)))
                    .collect::<Vec<_>>()
                    .join("+")
            }
        })
        .collect();
    let mut presentation = MonoidPresentation::new(labels, q.add, q.zero, used.name());
    presentation.approximate = q.approximate;
    presentation.relations = RELATION_SCHEMAS.iter().map(|s| s.to_string()).collect();
    let mut product = TensorProduct {
        presentation,
        gen_class,
        representatives,
        left_size: m.size(),
        right_size: kn,
        module: None,
        relation_count: rels.len(),
    };
    product.module = induced_module(&product, m, n.name());
    Ok(product)
}

/// The action on the left factor, checked along every breadth-first edge.
fn induced_module(t: &TensorProduct, m: &GammaModule, right_name: &str) -> Option<GammaModule> {
    let k = t.presentation.size();
    let kn = t.right_size;
    let p = &t.presentation;
    let act = |a: usize, al: usize, c: usize, be: usize, b: usize| {
        t.class_of_sum(
            t.representatives[c]
                .iter()
                .map(|&g| m.act(a, al, g / kn, be, b) * kn + g % kn),
        )
    };
    for (a, al, be, b) in m.contexts() {
        if act(a, al, p.zero, be, b) != p.zero {
            return None;
        }
        for c in 0..k {
            for g in 0..t.gen_class.len() {
                let moved = m.act(a, al, g / kn, be, b) * kn + g % kn;
                let lhs = act(a, al, p.sum(c, t.gen_class[g]), be, b);
                if lhs != p.sum(act(a, al, c, be, b), t.gen_class[moved]) {
                    return None;
                }
            }
        }
    }
    let mut module = GammaModule::from_fn(
        format!("{}⊗{}", m.name(), right_name),
        Arc::clone(m.base_arc()),
        p.labels.clone(),
        p.zero,
        |x, y| p.sum(x, y),
        act,
    )
    .ok()?;
    module.set_m2_profile(m.m2_profile());
    Some(module)
}

/// `f ⊗ id : A ⊗ N → B ⊗ N` on classes; `None` when not well defined.
pub fn induced_map(source: &TensorProduct, target: &TensorProduct, f: &ModuleHom) -> Option<Vec<usize>> {
    let kn = source.right_size;
    if target.right_size != kn {
        return None;
    }
    let image = |g: usize| target.gen_class[f.map[g / kn] * kn + g % kn];
    let p = &source.presentation;
    let q = &target.presentation;
    let map: Vec<usize> = source
        .representatives
        .iter()
        .map(|sum| sum.iter().fold(q.zero, |c, &g| q.sum(c, image(g))))
        .collect();
    let consistent = (0..p.size()).all(|c| {
        (0..source.gen_class.len()).all(|g| map[p.sum(c, source.gen_class[g])] == q.sum(map[c], image(g)))
    });
    consistent.then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn boolean_regular_square() {
        let reg = fixture::bundled_module("B2-regular").unwrap();
        let t = tensor(&reg, &reg, Backend::Auto, &Options::strict()).unwrap();
        assert_eq!(t.presentation.backend, "idempotent");
        assert_eq!(t.presentation.size(), 2);
        assert_eq!(t.presentation.structure_tag, "cyclic-2");
        let module = t.module.expect("induced action is well defined");
        assert!(crate::module::find_isomorphism(&module, &reg, &Options::strict())
            .unwrap()
            .is_some());
    }

    #[test]
    fn zero_factor_collapses() {
        let z = fixture::bundled_module("B2-zero").unwrap();
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        let t = tensor(&z, &t2, Backend::Auto, &Options::strict()).unwrap();
        assert_eq!(t.presentation.structure_tag, "trivial");
    }

    #[test]
    fn backends_agree_on_boolean_inputs() {
        let reg = fixture::bundled_module("B2-regular").unwrap();
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        for (a, b) in [(&reg, &reg), (&reg, &t2), (&t2, &reg)] {
            let i = tensor(a, b, Backend::Idempotent, &Options::strict()).unwrap();
            let s = tensor(a, b, Backend::Saturation, &Options::strict()).unwrap();
            assert!(!s.presentation.approximate);
            assert!(i.presentation.isomorphism(&s.presentation).is_some());
        }
    }

    #[test]
    fn group_backend_on_z3() {
        let z3 = fixture::bundled_module("Z3-regular").unwrap();
        assert!(matches!(
            tensor(&z3, &z3, Backend::Idempotent, &Options::lenient()),
            Err(Error::NoBackend(_))
        ));
        let t = tensor(&z3, &z3, Backend::Auto, &Options::lenient()).unwrap();
        assert_eq!(t.presentation.backend, "group");
        assert!(t.presentation.is_commutative_monoid());
    }

    #[test]
    fn induced_identity_is_identity() {
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        let reg = fixture::bundled_module("B2-regular").unwrap();
        let t = tensor(&t2, &reg, Backend::Auto, &Options::strict()).unwrap();
        let id = ModuleHom {
            map: (0..4).collect(),
            verified: true,
        };
        let map = induced_map(&t, &t, &id).unwrap();
        assert_eq!(map, (0..t.presentation.size()).collect::<Vec<_>>());
    }
}
