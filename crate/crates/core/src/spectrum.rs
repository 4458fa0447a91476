//! Prime spectrum with its closed sets `V(I)` and the Zariski identity checks.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideals::{enumerate_ideals, ideal_closure, IdealLattice, IdealSet};
use crate::semiring::Semiring;
use crate::subset::{self, Subset};
use crate::Options;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedSet {
    /// Index into `SpectrumSpace::lattice.ideals`.
    pub ideal: usize,
    /// Indices into `SpectrumSpace::points`.
    pub points: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSpace {
    pub points: Vec<IdealSet>,
    pub closed_sets: Vec<ClosedSet>,
    pub lattice: IdealLattice,
}

impl SpectrumSpace {
    /// `V(I)` for an arbitrary subset `I`: the points containing it.
    pub fn vanishing(&self, members: &[usize]) -> Vec<usize> {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, p)| subset::is_subset(members, &p.members))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn closed_set_of(&self, ideal: usize) -> &[usize] {
        &self.closed_sets[ideal].points
    }

    pub fn point_labels(&self, s: &Semiring) -> Vec<String> {
        self.points.iter().map(|p| p.render(s)).collect()
    }
}

/// Proper prime ideals together with `V(I)` for every ideal `I`.
pub fn spectrum(s: &Semiring, opts: &Options) -> Result<SpectrumSpace> {
    let lattice = enumerate_ideals(s, opts)?;
    let points: Vec<IdealSet> = lattice.primes().cloned().collect();
    let mut space = SpectrumSpace {
        points,
        closed_sets: Vec::new(),
        lattice,
    };
    space.closed_sets = (0..space.lattice.ideals.len())
        .map(|i| ClosedSet {
            ideal: i,
            points: space.vanishing(&space.lattice.ideals[i].members),
        })
        .collect();
    Ok(space)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionFailure {
    pub left_ideal: Subset,
    pub right_ideal: Subset,
    pub sum_ideal: Subset,
    pub intersection: Vec<usize>,
    pub vanishing_of_sum: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZariskiReport {
    pub pairs_checked: usize,
    pub intersection_failures: Vec<IntersectionFailure>,
    pub inclusion_failures: Vec<(Subset, Subset)>,
    pub t0: bool,
    pub t0_failures: Vec<(usize, usize)>,
    pub passed: bool,
}

/// Checks `V(I) ∩ V(J) = V(I + J)` over all ideal pairs, that `V` reverses
/// inclusion, and that distinct points have distinct closures.
pub fn zariski_report(s: &Semiring, space: &SpectrumSpace) -> ZariskiReport {
    let ideals = &space.lattice.ideals;
    let mut intersection_failures = Vec::new();
    let mut inclusion_failures = Vec::new();
    let mut pairs_checked = 0;
    for (i, left) in ideals.iter().enumerate() {
        for (j, right) in ideals.iter().enumerate() {
            pairs_checked += 1;
            let sum = ideal_closure(s, &subset::union(&left.members, &right.members)).members;
            let v_sum = space.vanishing(&sum);
            let meet = subset::intersection(space.closed_set_of(i), space.closed_set_of(j));
            if meet != v_sum {
                intersection_failures.push(IntersectionFailure {
                    left_ideal: left.members.clone(),
                    right_ideal: right.members.clone(),
                    sum_ideal: sum,
                    intersection: meet,
                    vanishing_of_sum: v_sum,
                });
            }
            if subset::is_subset(&left.members, &right.members)
                && !subset::is_subset(space.closed_set_of(j), space.closed_set_of(i))
            {
                inclusion_failures.push((left.members.clone(), right.members.clone()));
            }
        }
    }
    // The closure of a point P is V(P).
    let closures: Vec<Vec<usize>> = space.points.iter().map(|p| space.vanishing(&p.members)).collect();
    let mut t0_failures = Vec::new();
    for p in 0..closures.len() {
        for q in p + 1..closures.len() {
            if closures[p] == closures[q] {
                t0_failures.push((p, q));
            }
        }
    }
    let t0 = t0_failures.is_empty();
    ZariskiReport {
        pairs_checked,
        passed: intersection_failures.is_empty() && inclusion_failures.is_empty() && t0,
        intersection_failures,
        inclusion_failures,
        t0,
        t0_failures,
    }
}
