//! Catalogs of cyclic modules (quotients of the regular module) and
//! semisimplicity of a single module.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::congruence::{enumerate_congruences, quotient};
use crate::module::hom::find_isomorphism;
use crate::module::submodule::{enumerate_submodules, is_simple};
use crate::module::GammaModule;
use crate::semiring::Semiring;
use crate::subset::{self, Subset};
use crate::Options;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub module: GammaModule,
    /// Partition of the regular module this entry is the quotient by.
    pub congruence: Vec<usize>,
    pub simple: bool,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub structure: String,
    pub entries: Vec<CatalogEntry>,
    pub lenient: bool,
}

impl Catalog {
    pub fn simples(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.simple)
    }

    pub fn simple_count(&self) -> usize {
        self.simples().count()
    }
}

/// The regular module and its quotients by every module congruence,
/// deduplicated up to isomorphism and ordered by (cardinality, carrier).
pub fn cyclic_module_catalog(s: &Arc<Semiring>, opts: &Options) -> Result<Catalog> {
    cyclic_module_catalog_from(&GammaModule::regular(s), opts)
}

/// As [`cyclic_module_catalog`], starting from a given copy of the regular
/// module (for instance one carrying a density anchor).
pub fn cyclic_module_catalog_from(regular: &GammaModule, opts: &Options) -> Result<Catalog> {
    let regular = regular.clone();
    let s = regular.base_arc();
    if !regular.same_tables(&GammaModule::regular(s)) {
        return Err(Error::Precondition(format!("{} is not the regular module", regular.name())));
    }
    let lenient = regular.gate(opts)?;
    let congruences = enumerate_congruences(&regular, opts)?;
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for (i, cong) in congruences.iter().enumerate() {
        let module = if cong.class_count == regular.size() {
            regular.clone()
        } else {
            quotient(&regular, cong, format!("{}/θ{}", regular.name(), i))?
        };
        let mut duplicate = false;
        for e in &entries {
            if find_isomorphism(&module, &e.module, opts)?.is_some() {
                duplicate = true;
                break;
            }
        }
        if duplicate {
            continue;
        }
        let simple = is_simple(&module, opts)?;
        entries.push(CatalogEntry {
            module,
            congruence: cong.class_of.clone(),
            simple,
        });
    }
    entries.sort_by(|a, b| {
        a.module
            .size()
            .cmp(&b.module.size())
            .then_with(|| a.module.carrier().cmp(b.module.carrier()))
            .then_with(|| a.congruence.cmp(&b.congruence))
    });
    Ok(Catalog {
        structure: s.name().to_string(),
        entries,
        lenient,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Semisimplicity {
    pub semisimple: bool,
    /// Simple submodules whose internal sum map is a bijection onto the module.
    pub decomposition: Option<Vec<Subset>>,
}

fn sum_map_bijective(m: &GammaModule, family: &[&Subset]) -> bool {
    let total: usize = family.iter().map(|s| s.len()).product();
    if total != m.size() {
        return false;
    }
    let mut hit = vec![false; m.size()];
    let mut idx = vec![0usize; family.len()];
    loop {
        let x = m.sum(family.iter().zip(&idx).map(|(s, &i)| s[i]));
        if std::mem::replace(&mut hit[x], true) {
            return false;
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return true;
            }
            idx[k] += 1;
            if idx[k] < family[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Searches for simple submodules with pairwise zero intersections whose
/// sum map is bijective. The zero module is the empty sum.
pub fn is_semisimple(m: &GammaModule, opts: &Options) -> Result<Semisimplicity> {
    let subs = enumerate_submodules(m, opts)?;
    let mut simples: Vec<Subset> = Vec::new();
    for sub in subs {
        let as_module = m.restrict(&sub, "S")?;
        if is_simple(&as_module, opts)? {
            simples.push(sub);
        }
    }
    let zero = [m.zero()];
    fn search<'a>(
        m: &GammaModule,
        simples: &'a [Subset],
        start: usize,
        family: &mut Vec<&'a Subset>,
        zero: &[usize],
    ) -> Option<Vec<Subset>> {
        if sum_map_bijective(m, family) {
            return Some(family.iter().map(|s| (*s).clone()).collect());
        }
        for i in start..simples.len() {
            let candidate = &simples[i];
            if family
                .iter()
                .all(|f| subset::intersection(f, candidate).as_slice() == zero)
            {
                family.push(candidate);
                if let Some(found) = search(m, simples, i + 1, family, zero) {
                    return Some(found);
                }
                family.pop();
            }
        }
        None
    }
    let decomposition = search(m, &simples, 0, &mut Vec::new(), &zero);
    Ok(Semisimplicity {
        semisimple: decomposition.is_some(),
        decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn boolean_catalog() {
        let s = Arc::new(fixture::b2());
        let c = cyclic_module_catalog(&s, &Options::strict()).unwrap();
        assert_eq!(c.entries.len(), 2);
        assert_eq!(c.entries[0].module.size(), 1);
        assert_eq!(c.entries[1].module.size(), 2);
        assert_eq!(c.simple_count(), 1);
    }

    #[test]
    fn product_catalog_has_two_distinct_simples() {
        let s = Arc::new(fixture::b2xb2());
        let c = cyclic_module_catalog(&s, &Options::strict()).unwrap();
        let simples: Vec<_> = c.simples().collect();
        assert_eq!(simples.len(), 2);
        assert!(find_isomorphism(&simples[0].module, &simples[1].module, &Options::strict())
            .unwrap()
            .is_none());
        for (i, a) in c.entries.iter().enumerate() {
            for b in &c.entries[i + 1..] {
                assert!(find_isomorphism(&a.module, &b.module, &Options::strict())
                    .unwrap()
                    .is_none());
            }
        }
    }

    #[test]
    fn z3_catalog_flags_regular_simple() {
        let s = Arc::new(fixture::z3());
        let c = cyclic_module_catalog(&s, &Options::lenient()).unwrap();
        assert!(c.lenient);
        let regular = c.entries.iter().find(|e| e.module.size() == 3).unwrap();
        assert!(regular.simple);
    }

    #[test]
    fn semisimplicity_examples() {
        let reg = fixture::bundled_module("B2-regular").unwrap();
        assert!(is_semisimple(&reg, &Options::strict()).unwrap().semisimple);
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        let r = is_semisimple(&t2, &Options::strict()).unwrap();
        assert!(r.semisimple);
        assert_eq!(r.decomposition.unwrap().len(), 2);
        let z = fixture::bundled_module("B2-zero").unwrap();
        let r = is_semisimple(&z, &Options::strict()).unwrap();
        assert!(r.semisimple);
        assert_eq!(r.decomposition, Some(vec![]));
    }
}
