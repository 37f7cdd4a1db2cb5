//! Sachs subgraphs: subgraphs whose components are single
//! edges or cycles. The permanental polynomial satisfies
//! `b_k = (-1)^k Σ_H 2^{c(H)}` over Sachs subgraphs `H` on `k` vertices,
//! where `c(H)` counts the cycles of `H`.
//!
//! Both routines here branch on the lowest undecided vertex `v`: leave it
//! uncovered, match it to a higher neighbor, or open a cycle whose minimum
//! vertex is `v`. Cycles are counted once by requiring the second vertex to
//! be smaller than the last.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::bitset::{bits, VertexSet};
use crate::error::{Error, Guard, Result};
use crate::graph::{CycleInfo, Graph};

use super::polynomial::PermPolynomial;

/// Largest graph the Sachs enumerations accept by default.
pub const SACHS_MAX_N: usize = 20;

fn neighbor_masks(g: &Graph, what: &str) -> Result<Vec<u64>> {
    if g.n() > 64 {
        return Err(Error::UnsupportedSize(format!(
            "{what} needs at most 64 vertices, got {}",
            g.n()
        )));
    }
    Ok((0..g.n()).map(|v| g.neighbor_mask(v)).collect())
}

struct Counter<'a> {
    nbr: &'a [u64],
    memo: HashMap<u64, Vec<u128>>,
    overflow: bool,
}

impl Counter<'_> {
    /// `out[k]` = Σ 2^{c(H)} over Sachs subgraphs `H` of `G[remaining]` on
    /// `k` vertices.
    fn count(&mut self, remaining: u64) -> Vec<u128> {
        if remaining == 0 {
            return vec![1];
        }
        if let Some(hit) = self.memo.get(&remaining) {
            return hit.clone();
        }
        let size = remaining.count_ones() as usize;
        let mut out = vec![0u128; size + 1];
        let v = remaining.trailing_zeros() as usize;
        let rest = remaining & !(1 << v);

        let skip = self.count(rest);
        self.add_shifted(&mut out, &skip, 0, 1);
        for u in bits(self.nbr[v] & rest) {
            let sub = self.count(rest & !(1 << u));
            self.add_shifted(&mut out, &sub, 2, 1);
        }
        // Cycles with minimum vertex v: walk simple paths v, x1, ..., x and
        // close when x is adjacent to v.
        for first in bits(self.nbr[v] & rest) {
            self.extend_cycle(v, first, first, 1 << first, rest, &mut out);
        }
        self.memo.insert(remaining, out.clone());
        out
    }

    fn extend_cycle(
        &mut self,
        v: usize,
        first: usize,
        end: usize,
        path: u64,
        rest: u64,
        out: &mut [u128],
    ) {
        let len = path.count_ones() as usize + 1;
        if len >= 3 && end > first && self.nbr[end] >> v & 1 == 1 {
            let sub = self.count(rest & !path);
            self.add_shifted(out, &sub, len, 2);
        }
        for next in bits(self.nbr[end] & rest & !path) {
            self.extend_cycle(v, first, next, path | 1 << next, rest, out);
        }
    }

    fn add_shifted(&mut self, out: &mut [u128], sub: &[u128], shift: usize, weight: u128) {
        for (k, &c) in sub.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = c.checked_mul(weight);
            match term.and_then(|t| out[k + shift].checked_add(t)) {
                Some(sum) => out[k + shift] = sum,
                None => self.overflow = true,
            }
        }
    }
}

/// The permanental polynomial by enumerating Sachs subgraphs.
pub fn perm_polynomial_sachs(g: &Graph) -> Result<PermPolynomial> {
    perm_polynomial_sachs_with(g, Guard::Enforce)
}

pub fn perm_polynomial_sachs_with(g: &Graph, guard: Guard) -> Result<PermPolynomial> {
    let n = g.n();
    guard.check("Sachs subgraph enumeration", n, SACHS_MAX_N)?;
    let nbr = neighbor_masks(g, "Sachs subgraph enumeration")?;
    let mut counter = Counter {
        nbr: &nbr,
        memo: HashMap::new(),
        overflow: false,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let weighted = counter.count(all);
    if counter.overflow {
        return Err(Error::UnsupportedSize(format!(
            "Sachs subgraph counts overflow 128 bits on {n} vertices"
        )));
    }
    let coeffs = weighted
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let c = BigInt::from(c);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    PermPolynomial::from_coeffs(coeffs)
}

/// η_per(G), the multiplicity of 0 as a root of `per(xI - A(G))`, read off
/// the Sachs-enumerated coefficients.
pub fn per_nullity_oracle(g: &Graph) -> Result<usize> {
    per_nullity_oracle_with(g, Guard::Enforce)
}

pub fn per_nullity_oracle_with(g: &Graph, guard: Guard) -> Result<usize> {
    Ok(perm_polynomial_sachs_with(g, guard)?.zero_multiplicity())
}

/// A subgraph whose components are single edges and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SachsSubgraph {
    pub covered: VertexSet,
    pub edges: Vec<(usize, usize)>,
    pub cycles: Vec<CycleInfo>,
}

impl SachsSubgraph {
    pub fn order(&self) -> usize {
        self.covered.len()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Disjoint components, all edges and cycles present in `g`, and the
    /// covered set matching the components.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::empty(g.n());
        let claim = |v: usize, seen: &mut VertexSet| {
            if v >= g.n() || seen.contains(v) {
                false
            } else {
                seen.insert(v);
                true
            }
        };
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || !claim(u, &mut seen) || !claim(v, &mut seen) {
                return false;
            }
        }
        for cycle in &self.cycles {
            if !cycle.is_valid_in(g) {
                return false;
            }
            for &v in &cycle.vertices {
                if !claim(v, &mut seen) {
                    return false;
                }
            }
        }
        seen == self.covered
            && self.covered.len()
                == 2 * self.edges.len() + self.cycles.iter().map(|c| c.len()).sum::<usize>()
    }
}

struct Search<'a> {
    nbr: &'a [u64],
    n: usize,
    best: usize,
    best_parts: Vec<Part>,
    parts: Vec<Part>,
}

#[derive(Debug, Clone)]
enum Part {
    Edge(usize, usize),
    Cycle(Vec<usize>),
}

impl Search<'_> {
    fn run(&mut self, remaining: u64, covered: usize) {
        if self.best == self.n {
            return;
        }
        if covered + remaining.count_ones() as usize <= self.best {
            return;
        }
        if remaining == 0 {
            self.best = covered;
            self.best_parts = self.parts.clone();
            return;
        }
        let v = remaining.trailing_zeros() as usize;
        let rest = remaining & !(1 << v);
        for first in bits(self.nbr[v] & rest) {
            let mut path = vec![v, first];
            self.cycles(rest, 1 << first, &mut path, covered);
        }
        for u in bits(self.nbr[v] & rest) {
            self.parts.push(Part::Edge(v, u));
            self.run(rest & !(1 << u), covered + 2);
            self.parts.pop();
        }
        self.run(rest, covered);
    }

    fn cycles(&mut self, rest: u64, path_mask: u64, path: &mut Vec<usize>, covered: usize) {
        let v = path[0];
        let first = path[1];
        let end = *path.last().unwrap();
        if path.len() >= 3 && end > first && self.nbr[end] >> v & 1 == 1 {
            self.parts.push(Part::Cycle(path.clone()));
            self.run(rest & !path_mask, covered + path.len());
            self.parts.pop();
        }
        for next in bits(self.nbr[end] & rest & !path_mask) {
            path.push(next);
            self.cycles(rest, path_mask | 1 << next, path, covered);
            path.pop();
        }
    }
}

/// A Sachs subgraph covering as many vertices as possible, found by
/// branch and bound over the same branching as the polynomial count.
pub fn max_sachs_subgraph(g: &Graph) -> Result<SachsSubgraph> {
    max_sachs_subgraph_with(g, Guard::Enforce)
}

pub fn max_sachs_subgraph_with(g: &Graph, guard: Guard) -> Result<SachsSubgraph> {
    let n = g.n();
    guard.check("maximum Sachs subgraph search", n, SACHS_MAX_N)?;
    let nbr = neighbor_masks(g, "maximum Sachs subgraph search")?;
    let mut search = Search {
        nbr: &nbr,
        n,
        best: 0,
        best_parts: Vec::new(),
        parts: Vec::new(),
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    search.run(all, 0);

    let mut covered = VertexSet::empty(n);
    let mut edges = Vec::new();
    let mut cycles = Vec::new();
    for part in search.best_parts {
        match part {
            Part::Edge(u, v) => {
                covered.insert(u);
                covered.insert(v);
                edges.push((u, v));
            }
            Part::Cycle(vertices) => {
                for &v in &vertices {
                    covered.insert(v);
                }
                cycles.push(CycleInfo { vertices });
            }
        }
    }
    edges.sort_unstable();
    Ok(SachsSubgraph {
        covered,
        edges,
        cycles,
    })
}
