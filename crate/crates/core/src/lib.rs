//! Homology groups, intersection forms, linking matrices and spin
//! obstructions of 4-manifolds presented by relative trisection diagrams,
//! computed with exact integer arithmetic.

pub mod charclass;
pub mod error;
pub mod exactalg;
pub mod homology;
pub mod samples;
pub mod surface;

pub use charclass::{DiagramMatrices, SpinVerdict, W2Basis, W2Representative};
pub use error::{Error, Result};
pub use exactalg::{AbelianGroup, IntMatrix, Lattice, SmithDecomposition};
pub use homology::{ChainComplex, HomologyResult, HomologySource, IntersectionForm};
pub use surface::{Diagram, Family, SurfaceSignature, ValidationReport};
