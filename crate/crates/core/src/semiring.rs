//! Finite commutative ternary Γ-semirings stored as explicit tables.

use std::sync::OnceLock;

use crate::axioms::{self, AxiomReport};
use crate::error::{Error, Result};
use crate::Options;

/// A finite ternary Γ-semiring `T` with parameter set `Γ`.
///
/// Elements and parameters are addressed by index. The ternary product is
/// the two-parameter form `tri(a, α, b, β, c)`; one-parameter notations are
/// encoded by making the table depend on a function of `(α, β)`.
#[derive(Debug)]
pub struct Semiring {
    name: String,
    elements: Vec<String>,
    zero: usize,
    unit: Option<usize>,
    gamma: Vec<String>,
    add: Vec<usize>,
    tri: Vec<usize>,
    commutative: bool,
    report: OnceLock<AxiomReport>,
}

impl Clone for Semiring {
    fn clone(&self) -> Self {
        Semiring {
            name: self.name.clone(),
            elements: self.elements.clone(),
            zero: self.zero,
            unit: self.unit,
            gamma: self.gamma.clone(),
            add: self.add.clone(),
            tri: self.tri.clone(),
            commutative: self.commutative,
            report: OnceLock::new(),
        }
    }
}

impl PartialEq for Semiring {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.elements == other.elements
            && self.zero == other.zero
            && self.unit == other.unit
            && self.gamma == other.gamma
            && self.add == other.add
            && self.tri == other.tri
            && self.commutative == other.commutative
    }
}

impl Eq for Semiring {}

impl Semiring {
    /// Builds a structure from flat tables, checking shapes and index ranges.
    ///
    /// `add` is row-major `n × n`; `tri` is row-major `n × g × n × g × n`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        name: impl Into<String>,
        elements: Vec<String>,
        zero: usize,
        unit: Option<usize>,
        gamma: Vec<String>,
        add: Vec<usize>,
        tri: Vec<usize>,
        commutative: bool,
    ) -> Result<Self> {
        let n = elements.len();
        let g = gamma.len();
        if n == 0 {
            return Err(Error::Shape("structure has no elements".into()));
        }
        if g == 0 {
            return Err(Error::Shape("parameter set Γ is empty".into()));
        }
        if add.len() != n * n {
            return Err(Error::Shape(format!(
                "add table has {} entries, expected {}",
                add.len(),
                n * n
            )));
        }
        if tri.len() != n * g * n * g * n {
            return Err(Error::Shape(format!(
                "tri table has {} entries, expected {}",
                tri.len(),
                n * g * n * g * n
            )));
        }
        for (what, idx) in [("zero", Some(zero)), ("unit", unit)] {
            if let Some(i) = idx {
                if i >= n {
                    return Err(Error::OutOfRange {
                        what,
                        index: i,
                        size: n,
                    });
                }
            }
        }
        if let Some(&bad) = add.iter().chain(&tri).find(|&&v| v >= n) {
            return Err(Error::OutOfRange {
                what: "table entry",
                index: bad,
                size: n,
            });
        }
        Ok(Semiring {
            name: name.into(),
            elements,
            zero,
            unit,
            gamma,
            add,
            tri,
            commutative,
            report: OnceLock::new(),
        })
    }

    /// Builds a structure by tabulating closures over indices.
    pub fn from_fn(
        name: impl Into<String>,
        elements: Vec<String>,
        zero: usize,
        unit: Option<usize>,
        gamma: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        tri: impl Fn(usize, usize, usize, usize, usize) -> usize,
    ) -> Result<Self> {
        let n = elements.len();
        let g = gamma.len();
        let add_table = (0..n * n).map(|k| add(k / n, k % n)).collect();
        let mut tri_table = Vec::with_capacity(n * g * n * g * n);
        for a in 0..n {
            for al in 0..g {
                for b in 0..n {
                    for be in 0..g {
                        for c in 0..n {
                            tri_table.push(tri(a, al, b, be, c));
                        }
                    }
                }
            }
        }
        Self::from_tables(name, elements, zero, unit, gamma, add_table, tri_table, true)
    }

    /// Componentwise product `S × R` over the parameter set of `self`.
    ///
    /// Both factors must declare the same number of parameters. Element
    /// labels are `(x,y)` and the unit exists when both units exist.
    pub fn product(&self, other: &Semiring, name: impl Into<String>) -> Result<Semiring> {
        if self.gamma.len() != other.gamma.len() {
            return Err(Error::Shape(
                "product factors declare different parameter counts".into(),
            ));
        }
        let m = other.size();
        let elements = self
            .elements
            .iter()
            .flat_map(|x| other.elements.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let pair = |i: usize, j: usize| i * m + j;
        let zero = pair(self.zero, other.zero);
        let unit = match (self.unit, other.unit) {
            (Some(u), Some(v)) => Some(pair(u, v)),
            _ => None,
        };
        let mut s = Semiring::from_fn(
            name,
            elements,
            zero,
            unit,
            self.gamma.clone(),
            |x, y| pair(self.add(x / m, y / m), other.add(x % m, y % m)),
            |a, al, b, be, c| {
                pair(
                    self.tri(a / m, al, b / m, be, c / m),
                    other.tri(a % m, al, b % m, be, c % m),
                )
            },
        )?;
        s.commutative = self.commutative && other.commutative;
        Ok(s)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn gamma_size(&self) -> usize {
        self.gamma.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn gamma(&self) -> &[String] {
        &self.gamma
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn gamma_index_of(&self, label: &str) -> Option<usize> {
        self.gamma.iter().position(|e| e == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    /// The unit, or [`Error::NoUnit`] for unit-requiring operations.
    pub fn require_unit(&self) -> Result<usize> {
        self.unit.ok_or_else(|| Error::NoUnit(self.name.clone()))
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn tri_table(&self) -> &[usize] {
        &self.tri
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.elements.len() + b]
    }

    #[inline]
    pub fn tri(&self, a: usize, alpha: usize, b: usize, beta: usize, c: usize) -> usize {
        let n = self.elements.len();
        let g = self.gamma.len();
        self.tri[(((a * g + alpha) * n + b) * g + beta) * n + c]
    }

    /// Checked table lookup of `tri(a, α, b, β, c)`.
    pub fn tri_eval(&self, a: usize, alpha: usize, b: usize, beta: usize, c: usize) -> Result<usize> {
        let n = self.size();
        let g = self.gamma_size();
        for (what, i, size) in [
            ("element", a, n),
            ("parameter", alpha, g),
            ("element", b, n),
            ("parameter", beta, g),
            ("element", c, n),
        ] {
            if i >= size {
                return Err(Error::OutOfRange {
                    what,
                    index: i,
                    size,
                });
            }
        }
        Ok(self.tri(a, alpha, b, beta, c))
    }

    /// Sum of a list of elements (`zero` for the empty list).
    pub fn sum(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    /// Exhaustive axiom report, computed once and cached.
    pub fn axiom_report(&self) -> &AxiomReport {
        self.report.get_or_init(|| axioms::check_axioms(self))
    }

    /// Gate for operations that assume a lawful structure.
    ///
    /// Returns `Ok(true)` when the structure fails its axioms but the caller
    /// allowed lenient evaluation; the result should then be tagged lenient.
    pub fn gate(&self, opts: &Options) -> Result<bool> {
        if self.axiom_report().passed {
            Ok(false)
        } else if opts.lenient {
            Ok(true)
        } else {
            Err(Error::AxiomsFailed(self.name.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn tri_eval_examples() {
        let b2 = fixture::b2();
        assert_eq!(b2.tri_eval(1, 0, 1, 0, 1).unwrap(), 1);
        assert_eq!(b2.tri_eval(0, 0, 1, 1, 1).unwrap(), 0);
        let z3 = fixture::z3();
        // (1 + 2 + 0 + 0 + 1) mod 3
        assert_eq!(z3.tri_eval(1, 0, 2, 1, 0).unwrap(), 1);
    }

    #[test]
    fn tri_eval_rejects_out_of_range() {
        let b2 = fixture::b2();
        assert!(matches!(
            b2.tri_eval(2, 0, 0, 0, 0),
            Err(Error::OutOfRange { what: "element", .. })
        ));
        assert!(matches!(
            b2.tri_eval(0, 0, 0, 5, 0),
            Err(Error::OutOfRange { what: "parameter", .. })
        ));
    }

    #[test]
    fn product_of_booleans_matches_bundled_fixture() {
        let b2 = fixture::b2();
        let p = b2.product(&b2, "B2xB2").unwrap();
        assert_eq!(p, fixture::b2xb2());
        assert_eq!(p.unit(), p.index_of("(1,1)"));
    }

    #[test]
    fn shape_errors() {
        let e = Semiring::from_tables(
            "bad",
            vec!["0".into()],
            0,
            None,
            vec!["g".into()],
            vec![0, 0],
            vec![0],
            true,
        );
        assert!(matches!(e, Err(Error::Shape(_))));
        let e = Semiring::from_tables(
            "bad",
            vec!["0".into()],
            0,
            None,
            vec!["g".into()],
            vec![0],
            vec![1],
            true,
        );
        assert!(matches!(e, Err(Error::OutOfRange { .. })));
    }
}
