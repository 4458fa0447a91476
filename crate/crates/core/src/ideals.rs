//! Ideals of a finite ternary Γ-semiring: closure, lattice enumeration,
//! primality and maximality.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::subset::{self, Subset};
use crate::Options;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Yes,
    No,
    Unchecked,
}

impl From<bool> for Flag {
    fn from(b: bool) -> Self {
        if b {
            Flag::Yes
        } else {
            Flag::No
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSet {
    pub members: Subset,
    pub is_ideal: Flag,
    pub is_prime: Flag,
    pub is_maximal: Flag,
}

impl IdealSet {
    pub fn unchecked(members: Subset) -> Self {
        IdealSet {
            members,
            is_ideal: Flag::Unchecked,
            is_prime: Flag::Unchecked,
            is_maximal: Flag::Unchecked,
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_proper(&self, s: &Semiring) -> bool {
        self.members.len() < s.size()
    }

    pub fn render(&self, s: &Semiring) -> String {
        subset::render(&self.members, s.elements())
    }
}

/// Least ideal containing `seed ∪ {0}`: closed under `+` and absorbing in every slot.
pub fn ideal_closure(s: &Semiring, seed: &[usize]) -> IdealSet {
    let n = s.size();
    let g = s.gamma_size();
    let mut mask = vec![false; n];
    let mut stack = vec![s.zero()];
    stack.extend_from_slice(seed);
    let mut members: Vec<usize> = Vec::new();
    let push = |x: usize, mask: &mut Vec<bool>, stack: &mut Vec<usize>| {
        if !mask[x] {
            stack.push(x);
        }
    };
    while let Some(x) = stack.pop() {
        if mask[x] {
            continue;
        }
        mask[x] = true;
        members.push(x);
        for &y in &members.clone() {
            push(s.add(x, y), &mut mask, &mut stack);
            push(s.add(y, x), &mut mask, &mut stack);
        }
        for al in 0..g {
            for be in 0..g {
                for y in 0..n {
                    for z in 0..n {
                        push(s.tri(x, al, y, be, z), &mut mask, &mut stack);
                        push(s.tri(y, al, x, be, z), &mut mask, &mut stack);
                        push(s.tri(y, al, z, be, x), &mut mask, &mut stack);
                    }
                }
            }
        }
    }
    let mut set = IdealSet::unchecked(subset::from_mask(&mask));
    set.is_ideal = Flag::Yes;
    set
}

/// Direct membership test of the ideal conditions.
pub fn is_ideal(s: &Semiring, members: &[usize]) -> bool {
    let n = s.size();
    let g = s.gamma_size();
    let mask = subset::to_mask(members, n);
    if !mask[s.zero()] {
        return false;
    }
    for &x in members {
        for &y in members {
            if !mask[s.add(x, y)] {
                return false;
            }
        }
        for al in 0..g {
            for be in 0..g {
                for y in 0..n {
                    for z in 0..n {
                        if !mask[s.tri(x, al, y, be, z)]
                            || !mask[s.tri(y, al, x, be, z)]
                            || !mask[s.tri(y, al, z, be, x)]
                        {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Primality of a proper ideal: whenever `tri(a,α,b,β,c) ∈ I` for all `(α, β)`,
/// one of `a, b, c` lies in `I`.
pub fn is_prime(s: &Semiring, ideal: &IdealSet) -> Result<bool> {
    if !is_ideal(s, &ideal.members) {
        return Err(Error::Precondition(format!(
            "{} is not an ideal",
            ideal.render(s)
        )));
    }
    if !ideal.is_proper(s) {
        return Err(Error::Precondition(format!(
            "{} is not a proper ideal",
            ideal.render(s)
        )));
    }
    Ok(prime_witness(s, &ideal.members).is_none())
}

/// A triple `(a, b, c)` outside `I` whose products all land in `I`, if any.
pub fn prime_witness(s: &Semiring, members: &[usize]) -> Option<(usize, usize, usize)> {
    let n = s.size();
    let g = s.gamma_size();
    let mask = subset::to_mask(members, n);
    let outside: Vec<usize> = (0..n).filter(|&x| !mask[x]).collect();
    for &a in &outside {
        for &b in &outside {
            for &c in &outside {
                let all_in = (0..g).all(|al| (0..g).all(|be| mask[s.tri(a, al, b, be, c)]));
                if all_in {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealLattice {
    pub structure: String,
    pub ideals: Vec<IdealSet>,
    pub lenient: bool,
}

impl IdealLattice {
    pub fn primes(&self) -> impl Iterator<Item = &IdealSet> {
        self.ideals.iter().filter(|i| i.is_prime == Flag::Yes)
    }

    pub fn maximals(&self) -> impl Iterator<Item = &IdealSet> {
        self.ideals.iter().filter(|i| i.is_maximal == Flag::Yes)
    }

    pub fn position(&self, members: &[usize]) -> Option<usize> {
        self.ideals.iter().position(|i| i.members == members)
    }
}

/// All ideals, ascending by cardinality then lexicographically, with prime
/// and maximal flags filled in.
///
/// Every ideal is reached from the zero ideal by repeatedly adjoining one
/// element and closing, so the search only visits ideals.
pub fn enumerate_ideals(s: &Semiring, opts: &Options) -> Result<IdealLattice> {
    let lenient = s.gate(opts)?;
    let n = s.size();
    if n > opts.budget.max_enumeration {
        return Err(Error::Budget {
            what: "ideal enumeration carrier",
            size: n,
            limit: opts.budget.max_enumeration,
        });
    }
    let mut found: Vec<Subset> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let start = ideal_closure(s, &[]).members;
    seen.insert(start.clone());
    let mut queue = vec![start];
    while let Some(current) = queue.pop() {
        for x in 0..n {
            if current.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = current.clone();
            seed.push(x);
            let next = ideal_closure(s, &seed).members;
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
        found.push(current);
    }
    subset::sort_canonical(&mut found);

    let proper: Vec<&Subset> = found.iter().filter(|m| m.len() < n).collect();
    let ideals = found
        .iter()
        .map(|members| {
            let is_proper = members.len() < n;
            let is_prime = is_proper && prime_witness(s, members).is_none();
            let is_maximal = is_proper
                && !proper
                    .iter()
                    .any(|other| other.len() > members.len() && subset::is_subset(members, other));
            IdealSet {
                members: members.clone(),
                is_ideal: Flag::Yes,
                is_prime: is_prime.into(),
                is_maximal: is_maximal.into(),
            }
        })
        .collect();
    Ok(IdealLattice {
        structure: s.name().to_string(),
        ideals,
        lenient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    fn members(l: &IdealLattice) -> Vec<Subset> {
        l.ideals.iter().map(|i| i.members.clone()).collect()
    }

    #[test]
    fn closure_examples() {
        let b2 = fixture::b2();
        assert_eq!(ideal_closure(&b2, &[1]).members, vec![0, 1]);
        assert_eq!(ideal_closure(&b2, &[]).members, vec![0]);
        let bb = fixture::b2xb2();
        let e1 = bb.index_of("(1,0)").unwrap();
        assert_eq!(ideal_closure(&bb, &[e1]).members, vec![0, e1]);
    }

    #[test]
    fn lattice_examples() {
        let b2 = fixture::b2();
        let l = enumerate_ideals(&b2, &Options::strict()).unwrap();
        assert_eq!(members(&l), vec![vec![0], vec![0, 1]]);
        assert!(!l.lenient);

        let bb = fixture::b2xb2();
        let l = enumerate_ideals(&bb, &Options::strict()).unwrap();
        assert_eq!(members(&l), vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn z3_requires_lenient_and_has_only_the_whole_ideal() {
        let z3 = fixture::z3();
        assert!(matches!(
            enumerate_ideals(&z3, &Options::strict()),
            Err(Error::AxiomsFailed(_))
        ));
        let l = enumerate_ideals(&z3, &Options::lenient()).unwrap();
        assert!(l.lenient);
        assert_eq!(members(&l), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn primality_examples() {
        let b2 = fixture::b2();
        assert!(is_prime(&b2, &IdealSet::unchecked(vec![0])).unwrap());
        let bb = fixture::b2xb2();
        assert!(!is_prime(&bb, &IdealSet::unchecked(vec![0])).unwrap());
        let e1 = bb.index_of("(1,0)").unwrap();
        assert!(is_prime(&bb, &IdealSet::unchecked(vec![0, e1])).unwrap());
        // (1,0)·(1,0)·(0,1) = 0 with no factor zero
        let (a, b, c) = prime_witness(&bb, &[0]).unwrap();
        assert!(a != 0 && b != 0 && c != 0);
    }

    #[test]
    fn primality_errors() {
        let b2 = fixture::b2();
        assert!(is_prime(&b2, &IdealSet::unchecked(vec![0, 1])).is_err());
        let bb = fixture::b2xb2();
        assert!(is_prime(&bb, &IdealSet::unchecked(vec![0, 1, 2])).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let bb = fixture::b2xb2();
        let mut opts = Options::strict();
        opts.budget.max_enumeration = 3;
        assert!(matches!(
            enumerate_ideals(&bb, &opts),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn maximal_flags() {
        let bb = fixture::b2xb2();
        let l = enumerate_ideals(&bb, &Options::strict()).unwrap();
        let max: Vec<Subset> = l.maximals().map(|i| i.members.clone()).collect();
        assert_eq!(max, vec![vec![0, 1], vec![0, 2]]);
        let t1 = fixture::trivial();
        let l = enumerate_ideals(&t1, &Options::strict()).unwrap();
        assert_eq!(l.maximals().count(), 0);
        assert_eq!(l.primes().count(), 0);
    }
}
