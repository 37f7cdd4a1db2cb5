//! Fixed inputs shared by the benchmarks.

use pernull_core::verify::random_tree_plus;
use pernull_core::{Graph, PortableRng};

/// A seeded random connected graph on `n` vertices with extra-edge
/// probability `p`.
pub fn connected(n: usize, p: f64, seed: u64) -> Graph {
    random_tree_plus(n, p, &mut PortableRng::new(seed))
}

/// The same graph for every run: a sparse connected graph per order.
pub fn fixture(n: usize) -> Graph {
    connected(n, 3.0 / n as f64, n as u64)
}
