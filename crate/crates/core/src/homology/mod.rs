//! Tensor products, free resolutions, Ext/Tor in degrees zero and one, and
//! the tensor–Hom adjunction.

pub mod adjunction;
pub mod derived;
pub mod presentation;
pub mod resolution;
pub mod snf;
pub mod tensor;

pub use adjunction::{adjunction_check, hom_module, internal_hom_ternary, AdjunctionReport, InternalHom};
pub use derived::{ext1, homological_semisimplicity, tor1, ExtReport, HomologicalSemisimplicity, TorReport};
pub use presentation::MonoidPresentation;
pub use resolution::{free_module, free_resolution, FreeResolution};
pub use tensor::{tensor, Backend, TensorProduct};
