//! Exhaustive, witness-producing axiom checking for ternary Γ-semirings.
//!
//! Every law is identified by a stable string id and evaluated on a witness
//! tuple of indices. Violations are data: the checker never stops at the
//! first failure and orders its output by law id, then witness.

use serde::{Deserialize, Serialize};

use crate::semiring::Semiring;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<usize>,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Violations inherited from an underlying structure (module checks only).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<Violation>,
}

impl AxiomReport {
    pub fn from_violations(mut violations: Vec<Violation>, warnings: Vec<Violation>) -> Self {
        violations.sort();
        AxiomReport {
            passed: violations.is_empty(),
            violations,
            warnings,
        }
    }

    /// Distinct law ids that failed, in order.
    pub fn failed_laws(&self) -> Vec<&str> {
        let mut laws: Vec<&str> = self.violations.iter().map(|v| v.law.as_str()).collect();
        laws.dedup();
        laws
    }

    pub fn first(&self, law: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

/// Semiring law ids, sorted.
pub const LAWS: &[&str] = &[
    "add-associative",
    "add-commutative",
    "add-identity-left",
    "add-identity-right",
    "tri-associative-middle",
    "tri-associative-right",
    "tri-commutative-12",
    "tri-commutative-23",
    "tri-distributive-1",
    "tri-distributive-2",
    "tri-distributive-3",
    "unit",
    "zero-absorbing",
];

/// Evaluates `law` on `w`, returning `(left, right)`.
///
/// Witness layouts:
/// * `add-associative`: `[a, b, c]`; `add-commutative`: `[a, b]`; identities: `[a]`
/// * `tri-associative-*`: `[a, α, b, β, c, γ, d, δ, e]`
/// * `tri-commutative-*`, `zero-absorbing`: `[a, α, b, β, c]`
/// * `tri-distributive-k`: `[x, x', a, α, b, β, c]` with `x + x'` substituted into slot k
/// * `unit`: `[α, β, a]`
pub fn evaluate_law(s: &Semiring, law: &str, w: &[usize]) -> Option<(usize, usize)> {
    let z = s.zero();
    Some(match law {
        "add-associative" => (s.add(s.add(w[0], w[1]), w[2]), s.add(w[0], s.add(w[1], w[2]))),
        "add-commutative" => (s.add(w[0], w[1]), s.add(w[1], w[0])),
        "add-identity-left" => (s.add(z, w[0]), w[0]),
        "add-identity-right" => (s.add(w[0], z), w[0]),
        "tri-associative-middle" => (
            s.tri(s.tri(w[0], w[1], w[2], w[3], w[4]), w[5], w[6], w[7], w[8]),
            s.tri(w[0], w[1], s.tri(w[2], w[3], w[4], w[5], w[6]), w[7], w[8]),
        ),
        "tri-associative-right" => (
            s.tri(s.tri(w[0], w[1], w[2], w[3], w[4]), w[5], w[6], w[7], w[8]),
            s.tri(w[0], w[1], w[2], w[3], s.tri(w[4], w[5], w[6], w[7], w[8])),
        ),
        "tri-commutative-12" => (
            s.tri(w[0], w[1], w[2], w[3], w[4]),
            s.tri(w[2], w[1], w[0], w[3], w[4]),
        ),
        "tri-commutative-23" => (
            s.tri(w[0], w[1], w[2], w[3], w[4]),
            s.tri(w[0], w[1], w[4], w[3], w[2]),
        ),
        "tri-distributive-1" | "tri-distributive-2" | "tri-distributive-3" => {
            let (x, y, rest) = (w[0], w[1], &w[2..7]);
            let slot = match law {
                "tri-distributive-1" => 0,
                "tri-distributive-2" => 2,
                _ => 4,
            };
            let with = |v: usize| {
                let mut t = [rest[0], rest[1], rest[2], rest[3], rest[4]];
                t[slot] = v;
                s.tri(t[0], t[1], t[2], t[3], t[4])
            };
            (with(s.add(x, y)), s.add(with(x), with(y)))
        }
        "unit" => {
            let u = s.unit()?;
            (s.tri(u, w[0], u, w[1], w[2]), w[2])
        }
        "zero-absorbing" => (s.tri(w[0], w[1], w[2], w[3], w[4]), z),
        _ => return None,
    })
}

struct Collector<'a> {
    s: &'a Semiring,
    out: Vec<Violation>,
}

impl Collector<'_> {
    fn test(&mut self, law: &'static str, w: &[usize]) {
        if let Some((left, right)) = evaluate_law(self.s, law, w) {
            if left != right {
                self.out.push(Violation {
                    law: law.to_string(),
                    witness: w.to_vec(),
                    left,
                    right,
                });
            }
        }
    }
}

/// Exhaustively tests every structural law over all index tuples.
pub fn check_axioms(s: &Semiring) -> AxiomReport {
    let n = s.size();
    let g = s.gamma_size();
    let z = s.zero();
    let mut c = Collector { s, out: Vec::new() };

    for a in 0..n {
        c.test("add-identity-left", &[a]);
        c.test("add-identity-right", &[a]);
        for b in 0..n {
            if a < b {
                c.test("add-commutative", &[a, b]);
            }
            for d in 0..n {
                c.test("add-associative", &[a, b, d]);
            }
        }
    }

    for a in 0..n {
        for al in 0..g {
            for b in 0..n {
                for be in 0..g {
                    for cc in 0..n {
                        let t = [a, al, b, be, cc];
                        if a == z || b == z || cc == z {
                            c.test("zero-absorbing", &t);
                        }
                        if s.is_commutative() {
                            c.test("tri-commutative-12", &t);
                            c.test("tri-commutative-23", &t);
                        }
                        for x in 0..n {
                            for y in 0..n {
                                let w = [x, y, a, al, b, be, cc];
                                c.test("tri-distributive-1", &w);
                                c.test("tri-distributive-2", &w);
                                c.test("tri-distributive-3", &w);
                            }
                        }
                        for ga in 0..g {
                            for d in 0..n {
                                for de in 0..g {
                                    for e in 0..n {
                                        let w = [a, al, b, be, cc, ga, d, de, e];
                                        c.test("tri-associative-middle", &w);
                                        c.test("tri-associative-right", &w);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    if s.unit().is_some() {
        for al in 0..g {
            for be in 0..g {
                for a in 0..n {
                    c.test("unit", &[al, be, a]);
                }
            }
        }
    }

    AxiomReport::from_violations(c.out, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn boolean_passes() {
        let r = check_axioms(&fixture::b2());
        assert!(r.passed);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn z3_fails_zero_absorption_with_expected_witness() {
        let r = check_axioms(&fixture::z3());
        assert!(!r.passed);
        // a = b = c = 0, α = g0, β = g1: 0+0+0+0+1 = 1 ≠ 0
        let expected = Violation {
            law: "zero-absorbing".into(),
            witness: vec![0, 0, 0, 1, 0],
            left: 1,
            right: 0,
        };
        assert!(r.violations.contains(&expected));
        assert!(r.failed_laws().contains(&"tri-distributive-1"));
        assert!(!r.failed_laws().contains(&"tri-associative-middle"));
        assert!(!r.failed_laws().contains(&"tri-commutative-12"));
    }

    #[test]
    fn violations_are_sorted_by_law_then_witness() {
        let r = check_axioms(&fixture::z3());
        let mut sorted = r.violations.clone();
        sorted.sort();
        assert_eq!(sorted, r.violations);
        for pair in r.violations.windows(2) {
            assert!(pair[0].law <= pair[1].law);
        }
    }

    #[test]
    fn patched_boolean_addition() {
        let b2 = fixture::b2();
        let patched = |add: Vec<usize>| {
            Semiring::from_tables(
                "B2-patched",
                b2.elements().to_vec(),
                0,
                b2.unit(),
                b2.gamma().to_vec(),
                add,
                b2.tri_table().to_vec(),
                true,
            )
            .unwrap()
        };
        // 1 + 1 = 0 turns B2 into GF(2), which is still lawful
        let mut add = b2.add_table().to_vec();
        add[3] = 0;
        assert!(check_axioms(&patched(add)).passed);
        // 0 + 1 = 0 breaks the additive identity
        let mut add = b2.add_table().to_vec();
        add[1] = 0;
        let r = check_axioms(&patched(add));
        assert!(!r.passed);
        assert!(r.failed_laws().iter().any(|l| l.starts_with("add-identity")));
        for v in &r.violations {
            assert_ne!(v.left, v.right);
        }
    }

    #[test]
    fn idempotent_and_pure() {
        let z3 = fixture::z3();
        assert_eq!(check_axioms(&z3), check_axioms(&z3));
    }

    #[test]
    fn law_ids_are_sorted() {
        let mut sorted = LAWS.to_vec();
        sorted.sort();
        assert_eq!(sorted, LAWS);
    }
}
