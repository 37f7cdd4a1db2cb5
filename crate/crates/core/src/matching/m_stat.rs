//! The statistic M(G): under a maximum matching that covers as many
//! single-vertex components of `G[D]` as possible, the number of components
//! of order at least 3 left with an uncovered vertex.
//!
//! Every maximum matching matches `B` into distinct components of `G[D]`, so
//! the choice reduces to a bipartite assignment of `B` to components. We
//! first take a maximum assignment of `B` to singleton components, then
//! augment it until `B` is saturated. Augmenting paths never unmatch a
//! component, so the singleton count stays at its maximum.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::blossom::{maximum_matching, Matching};
use super::gallai_edmonds::GallaiEdmonds;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MStatistic {
    pub value: usize,
    /// Most singleton components any maximum matching can cover.
    pub saturated_singletons: usize,
    /// `(b, k)`: vertex `b` of `B` is matched into component `k` of `G[D]`.
    pub witness: Vec<(usize, usize)>,
}

struct Assignment<'a> {
    /// Components adjacent to each B vertex, ascending.
    options: &'a [Vec<usize>],
    owner: Vec<Option<usize>>,
    assigned: Vec<Option<usize>>,
    visited: Vec<bool>,
}

impl Assignment<'_> {
    fn try_assign(&mut self, left: usize, allowed: &dyn Fn(usize) -> bool) -> bool {
        for idx in 0..self.options[left].len() {
            let k = self.options[left][idx];
            if !allowed(k) || self.visited[k] {
                continue;
            }
            self.visited[k] = true;
            let free = match self.owner[k] {
                None => true,
                Some(other) => self.try_assign(other, allowed),
            };
            if free {
                self.owner[k] = Some(left);
                self.assigned[left] = Some(k);
                return true;
            }
        }
        false
    }

    fn augment(&mut self, left: usize, allowed: &dyn Fn(usize) -> bool) -> bool {
        self.visited.iter_mut().for_each(|v| *v = false);
        self.try_assign(left, allowed)
    }
}

/// Computes M(G) from a decomposition of `g`.
///
/// Returns 0 when `g` has a perfect matching. Disconnected graphs are
/// accepted; the value is then the sum over components.
pub fn m_statistic(g: &Graph, dec: &GallaiEdmonds) -> Result<MStatistic> {
    let n = g.n();
    if dec.n() != n {
        return Err(Error::Argument(format!(
            "decomposition is over {} vertices, graph has {n}",
            dec.n()
        )));
    }
    let comp_of = dec.component_index();
    let b_vertices: Vec<usize> = dec.b.iter().collect();
    let options: Vec<Vec<usize>> = b_vertices
        .iter()
        .map(|&v| {
            let mut ks: Vec<usize> = g.neighbors(v).filter_map(|w| comp_of[w]).collect();
            ks.sort_unstable();
            ks.dedup();
            ks
        })
        .collect();

    let comps = dec.component_count();
    let mut is_singleton = vec![false; comps];
    for &k in &dec.singletons {
        is_singleton[k] = true;
    }
    let mut state = Assignment {
        options: &options,
        owner: vec![None; comps],
        assigned: vec![None; b_vertices.len()],
        visited: vec![false; comps],
    };
    for left in 0..b_vertices.len() {
        state.augment(left, &|k| is_singleton[k]);
    }
    let saturated_singletons = state.owner.iter().flatten().count();
    for (left, &b) in b_vertices.iter().enumerate() {
        if state.assigned[left].is_none() && !state.augment(left, &|_| true) {
            return Err(Error::Argument(format!(
                "decomposition inconsistent with graph: B vertex {b} cannot be matched into D"
            )));
        }
    }

    let matched_f = dec
        .factor_critical
        .iter()
        .filter(|&&k| state.owner[k].is_some())
        .count();
    let witness = b_vertices
        .iter()
        .zip(&state.assigned)
        .map(|(&b, k)| (b, k.expect("B is saturated")))
        .collect();
    Ok(MStatistic {
        value: dec.factor_critical.len() - matched_f,
        saturated_singletons,
        witness,
    })
}

impl MStatistic {
    /// A maximum matching of `g` realizing this statistic: `B` matched as in
    /// the witness, near-perfect matchings inside every `G[D]` component,
    /// and a perfect matching of `G[C]`.
    pub fn realize(&self, g: &Graph, dec: &GallaiEdmonds) -> Result<Matching> {
        let mut pairs = Vec::new();
        let mut taken = vec![None; dec.component_count()];
        for &(b, k) in &self.witness {
            let w = g
                .neighbors(b)
                .find(|&w| dec.d_components[k].contains(w))
                .ok_or_else(|| {
                    Error::Argument(format!("witness pairs {b} with non-neighbor component {k}"))
                })?;
            pairs.push((b.min(w), b.max(w)));
            taken[k] = Some(w);
        }
        let mut inner = |set: &crate::bitset::VertexSet| -> Result<()> {
            let sub = g.induced_subgraph(set)?;
            for (u, v) in maximum_matching(&sub.graph).edges() {
                pairs.push((sub.labels[u], sub.labels[v]));
            }
            Ok(())
        };
        for (k, comp) in dec.d_components.iter().enumerate() {
            let mut rest = comp.clone();
            if let Some(w) = taken[k] {
                rest.remove(w);
            }
            inner(&rest)?;
        }
        inner(&dec.c)?;
        Matching::from_pairs(g, &pairs)
    }
}
