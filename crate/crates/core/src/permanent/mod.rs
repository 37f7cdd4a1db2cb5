//! Exact permanents, the permanental polynomial, and Sachs subgraphs.
//!
//! The polynomial is computed by two independent routes (interpolating
//! Ryser permanents, and counting Sachs subgraphs) so each can check the
//! other.

mod polynomial;
mod ryser;
mod sachs;

pub use polynomial::{
    perm_polynomial_interpolation, perm_polynomial_interpolation_with, shifted_adjacency,
    PermPolynomial, INTERPOLATION_MAX_N,
};
pub use ryser::{permanent, permanent_with, IntMatrix, RYSER_MAX_SIDE};
pub use sachs::{
    max_sachs_subgraph, max_sachs_subgraph_with, per_nullity_oracle, per_nullity_oracle_with,
    perm_polynomial_sachs, perm_polynomial_sachs_with, SachsSubgraph, SACHS_MAX_N,
};
