//! Finite ternary Γ-modules over a [`Semiring`].

pub mod annihilator;
pub mod axioms;
pub mod catalog;
pub mod congruence;
pub mod endo;
pub mod hom;
pub mod iso;
pub mod submodule;

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::axioms::AxiomReport;
use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::Options;

pub use annihilator::{annihilator, element_annihilator, is_faithful, jacobson_radical, Annihilator};
pub use catalog::{cyclic_module_catalog, cyclic_module_catalog_from, is_semisimple, Catalog, CatalogEntry, Semisimplicity};
pub use congruence::{bourne_quotient, ModuleCongruence};
pub use endo::{density_check, end_semiring, DensityReport, EndSemiring};
pub use hom::{find_isomorphism, hom_set, is_hom, ModuleHom};
pub use submodule::{enumerate_submodules, is_simple, submodule_closure};

/// Which compatibility law between the action and the ternary product is checked.
///
/// `Nested` requires
/// `act(tri(a,α,b,β,c), γ, m, δ, d) = act(a, α, act(b, β, m, γ, c), δ, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum M2Profile {
    #[default]
    None,
    Nested,
}

#[derive(Debug)]
pub struct GammaModule {
    name: String,
    base: Arc<Semiring>,
    carrier: Vec<String>,
    zero: usize,
    madd: Vec<usize>,
    act: Vec<usize>,
    m2_profile: M2Profile,
    anchor: Option<usize>,
    report: OnceLock<AxiomReport>,
}

impl Clone for GammaModule {
    fn clone(&self) -> Self {
        GammaModule {
            name: self.name.clone(),
            base: Arc::clone(&self.base),
            carrier: self.carrier.clone(),
            zero: self.zero,
            madd: self.madd.clone(),
            act: self.act.clone(),
            m2_profile: self.m2_profile,
            anchor: self.anchor,
            report: OnceLock::new(),
        }
    }
}

impl GammaModule {
    /// `madd` is row-major `m × m`; `act` is row-major `n × g × m × g × n`.
    pub fn from_tables(
        name: impl Into<String>,
        base: Arc<Semiring>,
        carrier: Vec<String>,
        zero: usize,
        madd: Vec<usize>,
        act: Vec<usize>,
        m2_profile: M2Profile,
    ) -> Result<Self> {
        let m = carrier.len();
        let n = base.size();
        let g = base.gamma_size();
        if m == 0 {
            return Err(Error::Shape("module carrier is empty".into()));
        }
        if zero >= m {
            return Err(Error::OutOfRange {
                what: "module zero",
                index: zero,
                size: m,
            });
        }
        if madd.len() != m * m {
            return Err(Error::Shape(format!(
                "madd table has {} entries, expected {}",
                madd.len(),
                m * m
            )));
        }
        if act.len() != n * g * m * g * n {
            return Err(Error::Shape(format!(
                "act table has {} entries, expected {}",
                act.len(),
                n * g * m * g * n
            )));
        }
        if let Some(&bad) = madd.iter().chain(&act).find(|&&v| v >= m) {
            return Err(Error::OutOfRange {
                what: "module table entry",
                index: bad,
                size: m,
            });
        }
        Ok(GammaModule {
            name: name.into(),
            base,
            carrier,
            zero,
            madd,
            act,
            m2_profile,
            anchor: None,
            report: OnceLock::new(),
        })
    }

    pub fn from_fn(
        name: impl Into<String>,
        base: Arc<Semiring>,
        carrier: Vec<String>,
        zero: usize,
        madd: impl Fn(usize, usize) -> usize,
        act: impl Fn(usize, usize, usize, usize, usize) -> usize,
    ) -> Result<Self> {
        let m = carrier.len();
        let n = base.size();
        let g = base.gamma_size();
        let madd_table = (0..m * m).map(|k| madd(k / m, k % m)).collect();
        let mut act_table = Vec::with_capacity(n * g * m * g * n);
        for a in 0..n {
            for al in 0..g {
                for x in 0..m {
                    for be in 0..g {
                        for b in 0..n {
                            act_table.push(act(a, al, x, be, b));
                        }
                    }
                }
            }
        }
        Self::from_tables(name, base, carrier, zero, madd_table, act_table, M2Profile::None)
    }

    /// `T` acting on itself through `tri`.
    pub fn regular(base: &Arc<Semiring>) -> Self {
        let s = Arc::clone(base);
        let mut m = Self::from_fn(
            format!("{}-regular", base.name()),
            Arc::clone(base),
            base.elements().to_vec(),
            base.zero(),
            |x, y| s.add(x, y),
            |a, al, x, be, b| s.tri(a, al, x, be, b),
        )
        .expect("regular module tables are well-formed");
        m.anchor = base.unit();
        m
    }

    /// The one-element module `{0}`.
    pub fn zero_module(base: &Arc<Semiring>) -> Self {
        Self::from_fn(
            format!("{}-zero", base.name()),
            Arc::clone(base),
            vec!["0".into()],
            0,
            |_, _| 0,
            |_, _, _, _, _| 0,
        )
        .expect("zero module tables are well-formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn base(&self) -> &Semiring {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<Semiring> {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn label(&self, i: usize) -> &str {
        &self.carrier[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.carrier.iter().position(|c| c == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn m2_profile(&self) -> M2Profile {
        self.m2_profile
    }

    pub fn set_m2_profile(&mut self, profile: M2Profile) {
        self.m2_profile = profile;
        self.report = OnceLock::new();
    }

    /// Element `e` used by the density search in place of the unit.
    pub fn anchor(&self) -> Option<usize> {
        self.anchor
    }

    pub fn set_anchor(&mut self, anchor: Option<usize>) {
        self.anchor = anchor;
    }

    pub fn madd_table(&self) -> &[usize] {
        &self.madd
    }

    pub fn act_table(&self) -> &[usize] {
        &self.act
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.madd[x * self.carrier.len() + y]
    }

    #[inline]
    pub fn act(&self, a: usize, alpha: usize, x: usize, beta: usize, b: usize) -> usize {
        let n = self.base.size();
        let g = self.base.gamma_size();
        let m = self.carrier.len();
        self.act[(((a * g + alpha) * m + x) * g + beta) * n + b]
    }

    pub fn sum(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    /// Iterates over every `(a, α, β, b)` action context.
    pub fn contexts(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> {
        let n = self.base.size();
        let g = self.base.gamma_size();
        (0..n).flat_map(move |a| {
            (0..g).flat_map(move |al| (0..g).flat_map(move |be| (0..n).map(move |b| (a, al, be, b))))
        })
    }

    /// True when both modules have the same base, carrier order and tables.
    pub fn same_tables(&self, other: &GammaModule) -> bool {
        *self.base == *other.base
            && self.carrier == other.carrier
            && self.zero == other.zero
            && self.madd == other.madd
            && self.act == other.act
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.size()).all(|x| self.add(x, x) == x)
    }

    /// Every element has an additive inverse.
    pub fn is_group(&self) -> bool {
        (0..self.size()).all(|x| (0..self.size()).any(|y| self.add(x, y) == self.zero))
    }

    pub fn axiom_report(&self) -> &AxiomReport {
        self.report.get_or_init(|| axioms::check_module_axioms(self))
    }

    /// Like [`Semiring::gate`], covering both the module and its base.
    pub fn gate(&self, opts: &Options) -> Result<bool> {
        let base_lenient = self.base.gate(opts)?;
        if self.axiom_report().passed {
            Ok(base_lenient)
        } else if opts.lenient {
            Ok(true)
        } else {
            Err(Error::AxiomsFailed(self.name.clone()))
        }
    }

    /// The submodule on `members` (sorted, closed) as a module in its own right.
    pub fn restrict(&self, members: &[usize], name: impl Into<String>) -> Result<GammaModule> {
        let index = |x: usize| members.binary_search(&x).ok();
        if index(self.zero).is_none() {
            return Err(Error::Precondition("subset does not contain zero".into()));
        }
        let restricted = Self::from_fn(
            name,
            Arc::clone(&self.base),
            members.iter().map(|&i| self.carrier[i].clone()).collect(),
            index(self.zero).unwrap(),
            |x, y| index(self.add(members[x], members[y])).unwrap_or(usize::MAX),
            |a, al, x, be, b| index(self.act(a, al, members[x], be, b)).unwrap_or(usize::MAX),
        );
        match restricted {
            Ok(mut m) => {
                m.m2_profile = self.m2_profile;
                m.anchor = self.anchor;
                Ok(m)
            }
            Err(_) => Err(Error::Precondition("subset is not a submodule".into())),
        }
    }

    /// External direct sum with componentwise operations; labels `(x,y)`.
    pub fn direct_sum(&self, other: &GammaModule) -> Result<GammaModule> {
        if *self.base != *other.base {
            return Err(Error::Precondition(
                "direct sum of modules over different bases".into(),
            ));
        }
        let k = other.size();
        let carrier = self
            .carrier
            .iter()
            .flat_map(|x| other.carrier.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let mut m = Self::from_fn(
            format!("{}+{}", self.name, other.name),
            Arc::clone(&self.base),
            carrier,
            self.zero * k + other.zero,
            |x, y| self.add(x / k, y / k) * k + other.add(x % k, y % k),
            |a, al, x, be, b| self.act(a, al, x / k, be, b) * k + other.act(a, al, x % k, be, b),
        )?;
        m.m2_profile = self.m2_profile;
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn regular_matches_bundled_fixture() {
        for name in ["B2", "Z3", "B2xB2"] {
            let s = Arc::new(fixture::bundled_structure(name).unwrap());
            let reg = GammaModule::regular(&s);
            let bundled = fixture::bundled_module(&format!("{name}-regular")).unwrap();
            assert!(reg.same_tables(&bundled), "{name}");
            let zero = GammaModule::zero_module(&s);
            let bundled = fixture::bundled_module(&format!("{name}-zero")).unwrap();
            assert!(zero.same_tables(&bundled), "{name}");
        }
    }

    #[test]
    fn direct_sum_of_regulars_is_t_squared() {
        let b2 = Arc::new(fixture::b2());
        let reg = GammaModule::regular(&b2);
        let sum = reg.direct_sum(&reg).unwrap();
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        assert!(sum.same_tables(&t2));
    }

    #[test]
    fn restrict_rejects_non_submodule() {
        let t2 = fixture::bundled_module("B2-T2").unwrap();
        let sub = t2.restrict(&[0, 1], "P").unwrap();
        assert_eq!(sub.size(), 2);
        assert!(t2.restrict(&[0, 1, 2], "bad").is_err());
        assert!(t2.restrict(&[1], "bad").is_err());
    }
}
