//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, BFS formulation with explicit base tracking).

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A matching stored as a mate map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![NONE; n],
        }
    }

    /// Builds a matching from explicit pairs, checking it against `g`.
    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = Matching::empty(g.n());
        for &(u, v) in pairs {
            if !g.has_edge(u, v) {
                return Err(Error::Argument(format!("{{{u},{v}}} is not an edge")));
            }
            if m.mate[u] != NONE || m.mate[v] != NONE {
                return Err(Error::Argument(format!(
                    "pair {{{u},{v}}} shares a vertex with another pair"
                )));
            }
            m.mate[u] = v;
            m.mate[v] = u;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        match self.mate[v] {
            NONE => None,
            u => Some(u),
        }
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.mate[v] != NONE
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    /// Matched pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .filter_map(|u| self.mate(u).filter(|&v| v > u).map(|v| (u, v)))
            .collect()
    }

    pub fn covered(&self) -> VertexSet {
        VertexSet::from_iter_in(self.n(), (0..self.n()).filter(|&v| self.is_covered(v)))
    }

    pub fn exposed(&self) -> VertexSet {
        VertexSet::from_iter_in(self.n(), (0..self.n()).filter(|&v| !self.is_covered(v)))
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(|&m| m != NONE)
    }

    pub fn is_near_perfect(&self) -> bool {
        self.mate.iter().filter(|&&m| m == NONE).count() == 1
    }

    /// Mate symmetry, pairs are edges of `g`, no vertex used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.n() == g.n()
            && (0..self.n()).all(|v| match self.mate(v) {
                None => true,
                Some(u) => u < self.n() && self.mate[u] == v && g.has_edge(u, v),
            })
    }
}

/// Search state for augmenting-path discovery. Holds a working mate array
/// and per-search scratch space so repeated searches do not reallocate.
pub(crate) struct BlossomSearch<'a> {
    adj: &'a [Vec<usize>],
    pub(crate) mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
    alive: Vec<bool>,
}

impl<'a> BlossomSearch<'a> {
    pub(crate) fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        BlossomSearch {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::with_capacity(n),
            alive: vec![true; n],
        }
    }

    pub(crate) fn set_alive(&mut self, v: usize, alive: bool) {
        self.alive[v] = alive;
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.lca_mark.iter_mut().for_each(|m| *m = false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from the exposed vertex `root`; returns the
    /// exposed endpoint of an augmenting path if one exists.
    pub(crate) fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.in_tree.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if !self.alive[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle: contract the blossom onto its base.
                    let cur_base = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    /// Flips the augmenting path ending at `end` found by the last search.
    pub(crate) fn augment(&mut self, mut end: usize) {
        while end != NONE {
            let pv = self.parent[end];
            let ppv = self.mate[pv];
            self.mate[end] = pv;
            self.mate[pv] = end;
            end = ppv;
        }
    }

    /// Runs augmentations from every exposed live vertex in ascending order.
    pub(crate) fn maximize(&mut self) {
        let n = self.adj.len();
        // Greedy start; deterministic because adjacency lists are sorted.
        for v in 0..n {
            if !self.alive[v] || self.mate[v] != NONE {
                continue;
            }
            if let Some(&u) = self.adj[v]
                .iter()
                .find(|&&u| self.alive[u] && self.mate[u] == NONE)
            {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
        for v in 0..n {
            if self.alive[v] && self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
    }
}

/// A maximum matching of `g`. Vertices and neighbor lists are scanned in
/// ascending label order, so the result is deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    let adj = g.adjacency_lists();
    let mut search = BlossomSearch::new(&adj);
    search.maximize();
    Matching { mate: search.mate }
}

/// The matching number of `g`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).size()
}

/// Whether `g` has a matching covering every vertex. The null graph does.
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n().is_multiple_of(2) && 2 * matching_number(g) == g.n()
}

/// Whether `g` has a matching missing exactly one vertex.
pub fn has_near_perfect_matching(g: &Graph) -> bool {
    g.n() % 2 == 1 && 2 * matching_number(g) + 1 == g.n()
}

/// Whether `g - v` has a perfect matching for every vertex `v`.
/// False for the null graph; true for `K1`.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 || n.is_multiple_of(2) {
        return false;
    }
    let adj = g.adjacency_lists();
    let target = (n - 1) / 2;
    (0..n).all(|v| {
        let mut search = BlossomSearch::new(&adj);
        search.set_alive(v, false);
        search.maximize();
        search.mate.iter().filter(|&&m| m != NONE).count() / 2 == target
    })
}
