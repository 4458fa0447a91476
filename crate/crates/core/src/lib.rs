//! Computational workbench for finite commutative ternary Γ-semirings given
//! as explicit operation tables.
//!
//! The crate is organised bottom-up:
//!
//! * [`semiring`] and [`axioms`]: the base structure and its exhaustive law checker.
//! * [`fixture`]: the JSON table format and the bundled fixtures.
//! * [`ideals`], [`spectrum`], [`localize`]: ideal lattice, prime spectrum,
//!   Zariski identities, localization and the Gelfand-type map.
//! * [`module`]: Γ-modules, submodules, homs, quotients, simplicity, density.
//! * [`homology`]: tensor products, free resolutions, Ext¹/Tor₁, adjunction.
//! * [`geometry`]: spectral pseudometric, fuzzy weights and the embedding.

// Index loops read better than iterator chains in the matrix code.
#![allow(clippy::needless_range_loop)]

pub mod axioms;
pub mod error;
pub mod fixture;
pub mod geometry;
pub mod homology;
pub mod ideals;
pub mod localize;
pub mod module;
pub mod semiring;
pub mod spectrum;
pub mod subset;
pub mod unionfind;

pub use axioms::{AxiomReport, Violation};
pub use error::{Error, Result};
pub use semiring::Semiring;

/// Enumeration caps and the lenient override shared by most operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub lenient: bool,
    pub budget: Budget,
}

impl Options {
    pub fn strict() -> Self {
        Options {
            lenient: false,
            budget: Budget::default(),
        }
    }

    pub fn lenient() -> Self {
        Options {
            lenient: true,
            budget: Budget::default(),
        }
    }
}

impl Default for Options {
    fn default() -> Self {
        Options::strict()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest carrier for which subset lattices (ideals, submodules) are enumerated.
    pub max_enumeration: usize,
    /// Largest carrier of a free module T^r.
    pub max_free_carrier: usize,
    /// Largest number of candidate generator assignments tried by `hom_set`.
    pub max_hom_candidates: usize,
    /// Largest state space for the saturation tensor backend.
    pub max_saturation_states: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_enumeration: 12,
            max_free_carrier: 4096,
            max_hom_candidates: 1 << 20,
            max_saturation_states: 1 << 18,
        }
    }
}
