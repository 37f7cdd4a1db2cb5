//! Connected graphs up to isomorphism, for corpora too large to enumerate
//! labeled.
//!
//! Representatives on `n` vertices come from extending every representative
//! on `n - 1` vertices by a new vertex with a nonempty neighborhood. Each
//! connected graph has a vertex whose removal keeps it connected, so this
//! reaches every class. Duplicates are merged by a canonical form: color
//! refinement by degree, then the lexicographically least adjacency string
//! over all vertex orders that respect the color classes.

use rayon::prelude::*;

use crate::bitset::bits;
use crate::error::{Guard, Result};
use crate::graph::Graph;

/// Largest order [`connected_representatives`] accepts by default.
pub const ISO_MAX_N: usize = 9;

/// Canonical key of a graph with at most 11 vertices. Pair `(i, j)` with
/// `i < j` occupies bit `63 - (j(j-1)/2 + i)`, so comparing keys compares
/// adjacency strings in pair order.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical keys need at most 11 vertices");
    if n <= 1 {
        return 0;
    }
    let nbr: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let color = refine(&nbr);

    // Positions in ascending color order; position j must hold a vertex of
    // color cell_at[j].
    let mut cell_at: Vec<usize> = color.clone();
    cell_at.sort_unstable();
    let mut search = Search {
        nbr: &nbr,
        color: &color,
        cell_at: &cell_at,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0);
    search.best.expect("some ordering exists")
}

/// Stable coloring by iterated neighbor-color multisets, starting from
/// degrees. Colors are ranks of sorted signatures, so the result does not
/// depend on the labeling.
fn refine(nbr: &[u64]) -> Vec<usize> {
    let n = nbr.len();
    let mut color: Vec<usize> = nbr.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = bits(nbr[v]).map(|w| color[w]).collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort_unstable();
        distinct.dedup();
        color = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    nbr: &'a [u64],
    color: &'a [usize],
    cell_at: &'a [usize],
    order: Vec<usize>,
    best: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, used: u64, key: u64) {
        let j = self.order.len();
        if j == self.nbr.len() {
            if self.best.is_none_or(|b| key < b) {
                self.best = Some(key);
            }
            return;
        }
        let base = j * j.saturating_sub(1) / 2;
        let fixed = base + j;
        for v in 0..self.nbr.len() {
            if used >> v & 1 == 1 || self.color[v] != self.cell_at[j] {
                continue;
            }
            let mut next = key;
            for (i, &u) in self.order.iter().enumerate() {
                if self.nbr[v] >> u & 1 == 1 {
                    next |= 1u64 << (63 - (base + i));
                }
            }
            if let Some(best) = self.best {
                if fixed > 0 && next >> (64 - fixed) > best >> (64 - fixed) {
                    continue;
                }
            }
            self.order.push(v);
            self.run(used | 1 << v, next);
            self.order.pop();
        }
    }
}

/// The graph a canonical key describes.
pub fn graph_from_key(n: usize, key: u64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mask = (0..pairs)
        .filter(|&p| key >> (63 - p) & 1 == 1)
        .fold(0u64, |acc, p| acc | 1 << p);
    Graph::from_pair_mask(n, mask)
}

fn extension_keys(parent: &Graph) -> Vec<u64> {
    let m = parent.n();
    (1u64..1 << m)
        .map(|neighbors| {
            let mut g = Graph::empty(m + 1);
            for (u, v) in parent.edges() {
                g.set_edge(u, v);
            }
            for u in bits(neighbors) {
                g.set_edge(u, m);
            }
            canonical_key(&g)
        })
        .collect()
}

/// One graph per isomorphism class of connected graphs on `n` vertices,
/// each in canonical labeling, ordered by canonical key.
pub fn connected_representatives(n: usize, guard: Guard) -> Result<Vec<Graph>> {
    guard.check("isomorphism-class enumeration", n, ISO_MAX_N)?;
    if n > 11 {
        return Err(crate::error::Error::UnsupportedSize(format!(
            "isomorphism classes on {n} vertices"
        )));
    }
    let mut level = vec![Graph::empty(usize::min(n, 1))];
    for order in 2..=n {
        let mut keys: Vec<u64> = level.par_iter().flat_map_iter(extension_keys).collect();
        keys.par_sort_unstable();
        keys.dedup();
        level = keys.into_iter().map(|k| graph_from_key(order, k)).collect();
    }
    Ok(level)
}
