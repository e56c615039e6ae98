//! Exact integer linear algebra: Smith normal form, canonical lattices,
//! quotient groups and 𝔽₂ solving.

mod gf2;
mod group;
mod lattice;
mod matrix;
mod smith;

pub use gf2::{apply_mod2, mod2, solve_mod2};
pub use group::AbelianGroup;
pub(crate) use lattice::relative_coordinates;
pub use lattice::{
    kernel_basis, lattice_intersect, lattice_sum, orthogonal_complement, quotient_presentation,
    solve_integer, Lattice,
};
pub use matrix::{dot, int_vec, IntMatrix};
pub use smith::{snf, SmithDecomposition};
