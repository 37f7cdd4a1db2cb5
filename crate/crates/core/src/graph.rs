//! Simple undirected graphs on vertices `0..n` and the structural utilities
//! the nullity computations are built on.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::{bits, VertexSet};
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`, stored as adjacency bit rows.
///
/// Graphs are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!(
                    "edge {{{u},{v}}} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Argument(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds the graph whose upper triangle is `mask`, one bit per pair in
    /// column order `(0,1), (0,2), (1,2), (0,3), ...`. Requires `n <= 11`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 11, "pair masks cover at most 11 vertices");
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.set_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    /// Inverse of [`Graph::from_pair_mask`].
    pub fn pair_mask(&self) -> u64 {
        assert!(self.n <= 11, "pair masks cover at most 11 vertices");
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| bits(w).map(move |b| i * 64 + b))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_iter_in(self.n, self.neighbors(v))
    }

    /// Neighbor bitmask of `v`; only meaningful for graphs with `n <= 64`.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v * self.stride]
    }

    /// Sorted adjacency lists.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            seen.insert(start);
            comp.insert(start);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// True when the graph has at most one component (the null graph counts).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.connected_components().len() == 1
    }

    /// The subgraph induced by `vertices`, relabeled `0..|vertices|` in
    /// ascending order of the original labels.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> Result<InducedSubgraph> {
        if vertices.universe() > self.n {
            if let Some(bad) = vertices.iter().find(|&v| v >= self.n) {
                return Err(Error::Argument(format!(
                    "vertex {bad} outside graph on {} vertices",
                    self.n
                )));
            }
        }
        let labels: Vec<usize> = vertices.iter().collect();
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            new_label[v] = i;
        }
        let mut g = Graph::empty(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = new_label[w];
                if j != usize::MAX && j > i {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(InducedSubgraph {
            graph: g,
            labels,
            new_label,
        })
    }

    /// The graph with `removed` deleted (induced on the complement).
    pub fn without(&self, removed: &VertexSet) -> InducedSubgraph {
        let mut keep = VertexSet::full(self.n);
        for v in removed {
            keep.remove(v);
        }
        self.induced_subgraph(&keep)
            .expect("complement lies inside the vertex range")
    }

    pub fn without_vertex(&self, v: usize) -> InducedSubgraph {
        self.without(&VertexSet::from_iter_in(self.n, [v]))
    }

    /// The line graph, one vertex per edge in lexicographic edge order.
    pub fn line_graph(&self) -> LineGraph {
        let edges = self.edges();
        let m = edges.len();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut g = Graph::empty(m);
        for list in &incident {
            for (a, &i) in list.iter().enumerate() {
                for &j in &list[a + 1..] {
                    g.set_edge(i, j);
                }
            }
        }
        LineGraph { graph: g, edges }
    }

    /// Connected with exactly as many edges as vertices.
    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.edge_count() == self.n && self.is_connected()
    }

    /// The unique cycle of a unicyclic graph, found by peeling degree-1
    /// vertices until only the 2-core remains.
    pub fn find_unique_cycle(&self) -> Result<CycleInfo> {
        if !self.is_unicyclic() {
            return Err(Error::Precondition("graph is not unicyclic".into()));
        }
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut alive = VertexSet::full(self.n);
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| degree[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if !alive.contains(v) {
                continue;
            }
            alive.remove(v);
            for w in self.neighbors(v) {
                if alive.contains(w) {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        // Walk the core from its smallest vertex towards its smaller neighbor.
        let start = alive.first().expect("unicyclic graph has a cycle");
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = self
            .neighbors(start)
            .find(|&w| alive.contains(w))
            .expect("core vertices have two core neighbors");
        while cur != start {
            order.push(cur);
            let next = self
                .neighbors(cur)
                .find(|&w| alive.contains(w) && w != prev)
                .expect("core vertices have two core neighbors");
            prev = cur;
            cur = next;
        }
        Ok(CycleInfo { vertices: order })
    }

    /// Bridges as `(u, v)` pairs with `u < v`, sorted.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut out = Vec::new();
        let adj = self.adjacency_lists();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Iterative DFS: (vertex, parent, next neighbor index).
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (v, parent) = (top.0, top.1);
                if top.2 < adj[v].len() {
                    let w = adj[v][top.2];
                    top.2 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected, at least two vertices, and no bridge.
    pub fn is_two_edge_connected(&self) -> bool {
        self.n >= 2 && self.is_connected() && self.bridges().is_empty()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Standard small families, used throughout the tests and benches.
impl Graph {
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    /// K_{1,k} with center 0.
    pub fn star(k: usize) -> Self {
        Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self.edges().into_iter().chain(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + shift, v + shift)),
        );
        Graph::from_edges(self.n + other.n, edges).unwrap()
    }
}

/// An induced subgraph together with its relabeling.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[new] = old`.
    pub labels: Vec<usize>,
    new_label: Vec<usize>,
}

impl InducedSubgraph {
    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.new_label
            .get(old)
            .copied()
            .filter(|&l| l != usize::MAX)
    }
}

/// A line graph with the original edge behind each vertex.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the edge of the host graph represented by vertex `i`.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A cycle given by its vertices in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInfo {
    pub vertices: Vec<usize>,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn parity(&self) -> Parity {
        if self.vertices.len() % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == Parity::Odd
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_iter_in(universe, self.vertices.iter().copied())
    }

    /// Checks the cycle invariants against a host graph.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        if k < 3 {
            return false;
        }
        let distinct = self.vertex_set(g.n()).len() == k;
        distinct && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}
