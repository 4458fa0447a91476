use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideals;
use crate::module::catalog::Catalog;
use crate::module::GammaModule;
use crate::semiring::Semiring;
use crate::subset::{self, Subset};
use crate::Options;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annihilator {
    /// `{0_T} ∪ {a : act(a,α,m,β,b) = 0 for all m, b, α, β}`.
    pub members: Subset,
    pub is_ideal: bool,
    /// Per-element annihilators `Ann(m)`, same convention for `0_T`.
    pub per_element: Vec<Subset>,
    /// `Ann(M) = ⋂ Ann(m)`.
    pub intersection_matches: bool,
    /// `0_T` was included although it does not act as zero.
    pub zero_by_convention: bool,
    pub lenient: bool,
}

fn annihilates(m: &GammaModule, a: usize, x: usize) -> bool {
    let s = m.base();
    (0..s.gamma_size()).all(|al| {
        (0..s.gamma_size()).all(|be| (0..s.size()).all(|b| m.act(a, al, x, be, b) == m.zero()))
    })
}

/// `Ann(m)`: elements sending `m` to zero in every context, plus `0_T`.
pub fn element_annihilator(m: &GammaModule, x: usize) -> Subset {
    let s = m.base();
    (0..s.size())
        .filter(|&a| a == s.zero() || annihilates(m, a, x))
        .collect()
}

/// The annihilator ideal of `m`.
///
/// `0_T` always belongs to it; for structures whose zero is not absorbing
/// this is recorded in `zero_by_convention`.
pub fn annihilator(m: &GammaModule, opts: &Options) -> Result<Annihilator> {
    let lenient = m.gate(opts)?;
    let s = m.base();
    let members: Subset = (0..s.size())
        .filter(|&a| a == s.zero() || (0..m.size()).all(|x| annihilates(m, a, x)))
        .collect();
    let per_element: Vec<Subset> = (0..m.size()).map(|x| element_annihilator(m, x)).collect();
    let meet = per_element
        .iter()
        .fold((0..s.size()).collect::<Subset>(), |acc, a| subset::intersection(&acc, a));
    let zero_by_convention = !(0..m.size()).all(|x| annihilates(m, s.zero(), x));
    Ok(Annihilator {
        is_ideal: ideals::is_ideal(s, &members),
        intersection_matches: meet == members,
        members,
        per_element,
        zero_by_convention,
        lenient,
    })
}

/// Faithful iff no nonzero element annihilates; the witness is the least such element.
pub fn is_faithful(m: &GammaModule, opts: &Options) -> Result<(bool, Option<usize>)> {
    let ann = annihilator(m, opts)?;
    let zero = m.base().zero();
    let witness = ann.members.iter().copied().find(|&a| a != zero);
    Ok((witness.is_none(), witness))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobsonRadical {
    pub members: Subset,
    pub simple_count: usize,
    /// Computed over a catalog that need not contain every simple module.
    pub catalog_relative: bool,
    pub semiprimitive: bool,
}

/// Intersection of the annihilators of the simple modules in `catalog`.
pub fn jacobson_radical(s: &Semiring, catalog: &Catalog, opts: &Options) -> Result<JacobsonRadical> {
    let mut members: Subset = (0..s.size()).collect();
    let mut simple_count = 0;
    for entry in catalog.entries.iter().filter(|e| e.simple) {
        simple_count += 1;
        members = subset::intersection(&members, &annihilator(&entry.module, opts)?.members);
    }
    Ok(JacobsonRadical {
        semiprimitive: members.as_slice() == [s.zero()],
        members,
        simple_count,
        catalog_relative: true,
    })
}
