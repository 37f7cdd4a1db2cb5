//! Exponential reference computations by enumerating every maximum matching.
//! Nothing here uses the blossom search.

use crate::bitset::{bits, VertexSet};
use crate::error::{Error, Guard, Result};
use crate::graph::Graph;

/// Largest graph the matching-enumeration oracles accept by default.
pub const ORACLE_MAX_N: usize = 14;

/// The covered-vertex masks of all maximum matchings of a graph.
#[derive(Debug, Clone)]
pub struct MaximumMatchings {
    pub n: usize,
    pub matching_number: usize,
    /// One entry per maximum matching (not deduplicated).
    pub covers: Vec<u64>,
}

impl MaximumMatchings {
    /// Vertices missed by at least one maximum matching.
    pub fn d(&self) -> VertexSet {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let exposed = self.covers.iter().fold(0u64, |acc, &c| acc | (full & !c));
        VertexSet::from_mask(self.n, exposed)
    }
}

fn max_matching_size(nbr: &[u64], remaining: u64, size: usize, best: &mut usize) {
    if size + remaining.count_ones() as usize / 2 <= *best {
        return;
    }
    if remaining == 0 {
        *best = size;
        return;
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << v);
    for u in bits(nbr[v] & rest) {
        max_matching_size(nbr, rest & !(1 << u), size + 1, best);
    }
    max_matching_size(nbr, rest, size, best);
}

fn collect_maximum(
    nbr: &[u64],
    remaining: u64,
    covered: u64,
    size: usize,
    target: usize,
    out: &mut Vec<u64>,
) {
    if size + (remaining.count_ones() as usize) / 2 < target {
        return;
    }
    if size == target {
        out.push(covered);
        return;
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << v);
    for u in bits(nbr[v] & rest) {
        collect_maximum(
            nbr,
            rest & !(1 << u),
            covered | 1 << v | 1 << u,
            size + 1,
            target,
            out,
        );
    }
    collect_maximum(nbr, rest, covered, size, target, out);
}

/// Enumerates every maximum matching of `g` (as covered-vertex masks).
pub fn maximum_matchings(g: &Graph, guard: Guard) -> Result<MaximumMatchings> {
    let n = g.n();
    guard.check("maximum-matching enumeration", n, ORACLE_MAX_N)?;
    if n > 64 {
        return Err(Error::UnsupportedSize(format!(
            "matching enumeration needs at most 64 vertices, got {n}"
        )));
    }
    let nbr: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    max_matching_size(&nbr, all, 0, &mut best);
    let mut covers = Vec::new();
    collect_maximum(&nbr, all, 0, 0, best, &mut covers);
    Ok(MaximumMatchings {
        n,
        matching_number: best,
        covers,
    })
}

/// Result of the enumeration oracle for M(G).
#[derive(Debug, Clone)]
pub struct MOracle {
    pub value: usize,
    pub matching_number: usize,
    pub d: VertexSet,
    /// Most singleton components of `G[D]` covered by one maximum matching.
    pub saturated_singletons: usize,
    /// Number of maximum matchings attaining that optimum.
    pub qualifying: usize,
}

/// M(G) by brute force: among all maximum matchings, keep those covering
/// the most singleton components of `G[D]` and count the components of
/// order at least 3 that keep exactly one uncovered vertex. Fails with
/// [`Error::WellDefinedness`] if that count differs between two kept
/// matchings.
pub fn m_statistic_oracle_detailed(g: &Graph, guard: Guard) -> Result<MOracle> {
    let all = maximum_matchings(g, guard)?;
    let n = g.n();
    let d = all.d();
    let sub = g.induced_subgraph(&d)?;
    let mut singleton_mask = 0u64;
    let mut big: Vec<u64> = Vec::new();
    for comp in sub.graph.connected_components() {
        let mask = comp.iter().fold(0u64, |acc, i| acc | 1 << sub.labels[i]);
        match comp.len() {
            1 => singleton_mask |= mask,
            2 => {
                return Err(Error::Invariant(format!(
                    "G[D] has a component of order 2: {:?}",
                    comp.iter().map(|i| sub.labels[i]).collect::<Vec<_>>()
                )))
            }
            _ => big.push(mask),
        }
    }

    let saturated = all
        .covers
        .iter()
        .map(|&c| (c & singleton_mask).count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut value: Option<usize> = None;
    let mut qualifying = 0;
    for &c in &all.covers {
        if (c & singleton_mask).count_ones() as usize != saturated {
            continue;
        }
        qualifying += 1;
        let count = big
            .iter()
            .filter(|&&comp| (comp & !c).count_ones() == 1)
            .count();
        match value {
            None => value = Some(count),
            Some(prev) if prev != count => {
                return Err(Error::WellDefinedness(format!(
                    "qualifying maximum matchings disagree ({prev} vs {count}) on a graph with {n} vertices"
                )));
            }
            _ => {}
        }
    }
    Ok(MOracle {
        value: value.unwrap_or(0),
        matching_number: all.matching_number,
        d,
        saturated_singletons: saturated,
        qualifying,
    })
}

/// M(G) by enumeration of all maximum matchings; see
/// [`m_statistic_oracle_detailed`].
pub fn m_statistic_oracle(g: &Graph) -> Result<usize> {
    m_statistic_oracle_detailed(g, Guard::Enforce).map(|o| o.value)
}
