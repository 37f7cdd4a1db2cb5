//! Permanental nullity of graphs.
//!
//! The nullity of `per(xI - A(G))` at zero is computed two ways: structurally,
//! from maximum matchings and the Gallai–Edmonds decomposition, and exactly,
//! from the coefficients of the permanental polynomial. The [`verify`] module
//! cross-checks the two on exhaustive and seeded random corpora.

pub mod bitset;
pub mod error;
pub mod format;
pub mod graph;
pub mod matching;
pub mod nullity;
pub mod permanent;
pub mod rng;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Guard, Result};
pub use format::{parse_edge_list, parse_graph6, to_graph6};
pub use graph::{CycleInfo, Graph, InducedSubgraph, LineGraph, Parity};
pub use matching::{
    gallai_edmonds, has_near_perfect_matching, has_perfect_matching, is_factor_critical,
    m_statistic, m_statistic_oracle, matching_number, maximum_matching, GallaiEdmonds, MStatistic,
    Matching,
};
pub use nullity::{
    line_graph_matching_check, line_graph_nullity_check, per_nullity_structural, unicyclic_nullity,
    unicyclic_zero_check, zero_nullity_characterization, ComponentReport, LineGraphMatching,
    NullityCase, NullityRecord, NullityReport, ZeroCase, ZeroNullity,
};
pub use permanent::{
    max_sachs_subgraph, per_nullity_oracle, perm_polynomial_interpolation, perm_polynomial_sachs,
    permanent, IntMatrix, PermPolynomial, SachsSubgraph,
};
pub use rng::PortableRng;
pub use verify::{run_verification, Check, CorpusKind, CorpusSpec, Stage, VerifyResult};
