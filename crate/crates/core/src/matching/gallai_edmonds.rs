use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::blossom::{is_factor_critical, BlossomSearch, Matching};

/// The Gallai–Edmonds partition `V = D ∪ B ∪ C`.
///
/// `D` holds the vertices missed by at least one maximum matching, `B` the
/// vertices outside `D` with a neighbor in `D`, and `C` the rest.
#[derive(Debug, Clone, Serialize)]
pub struct GallaiEdmonds {
    pub d: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    /// Components of `G[D]`, ordered by smallest vertex.
    pub d_components: Vec<VertexSet>,
    /// Indices into `d_components` of the single-vertex components.
    pub singletons: Vec<usize>,
    /// Indices into `d_components` of the components of order at least 3.
    pub factor_critical: Vec<usize>,
    pub matching_number: usize,
    /// The maximum matching the decomposition was derived from.
    #[serde(skip)]
    pub matching: Matching,
}

impl GallaiEdmonds {
    pub fn n(&self) -> usize {
        self.d.universe()
    }

    /// Number of components of `G[D]`.
    pub fn component_count(&self) -> usize {
        self.d_components.len()
    }

    /// `(|V| - c(D) + |B|) / 2`, which equals the matching number.
    pub fn tutte_berge_size(&self) -> usize {
        (self.n() + self.b.len() - self.component_count()) / 2
    }

    pub fn has_perfect_matching(&self) -> bool {
        self.d.is_empty()
    }

    /// Index of the `G[D]` component containing each vertex (`None` outside D).
    pub fn component_index(&self) -> Vec<Option<usize>> {
        let mut index = vec![None; self.n()];
        for (i, comp) in self.d_components.iter().enumerate() {
            for v in comp {
                index[v] = Some(i);
            }
        }
        index
    }

    /// Checks the structural guarantees of the decomposition against `g`
    /// and a maximum matching `m`: partition and component invariants, the
    /// four structure-theorem clauses, and the matching-number formula.
    pub fn verify(&self, g: &Graph, m: &Matching) -> Result<()> {
        let fail = |msg: String| Err(Error::Invariant(msg));
        let n = g.n();
        if self.n() != n || self.b.universe() != n || self.c.universe() != n {
            return fail("decomposition universe differs from graph".into());
        }
        if !m.is_valid_in(g) {
            return fail("matching is not valid in the graph".into());
        }
        let mut all = self.d.clone();
        all.union_with(&self.b);
        all.union_with(&self.c);
        if all.len() != n || self.d.len() + self.b.len() + self.c.len() != n {
            return fail("D, B, C do not partition V".into());
        }
        for v in &self.b {
            if g.neighbors(v).all(|w| !self.d.contains(w)) {
                return fail(format!("B vertex {v} has no neighbor in D"));
            }
        }
        for v in &self.c {
            if g.neighbors(v).any(|w| self.d.contains(w)) {
                return fail(format!("C vertex {v} has a neighbor in D"));
            }
        }
        let mut classified: Vec<usize> = self
            .singletons
            .iter()
            .chain(&self.factor_critical)
            .copied()
            .collect();
        classified.sort_unstable();
        if classified != (0..self.component_count()).collect::<Vec<_>>() {
            return fail("singleton and order-3+ components do not cover G[D]".into());
        }
        for &i in &self.singletons {
            if self.d_components[i].len() != 1 {
                return fail(format!("component {i} listed as singleton"));
            }
        }

        // (i) components of G[D] are factor-critical (hence odd).
        for (i, comp) in self.d_components.iter().enumerate() {
            if comp.len() % 2 == 0 {
                return fail(format!("component {i} of G[D] has even order"));
            }
            let h = g.induced_subgraph(comp)?.graph;
            if !is_factor_critical(&h) {
                return fail(format!("component {i} of G[D] is not factor-critical"));
            }
        }
        // (ii) G[C] has a perfect matching.
        let gc = g.induced_subgraph(&self.c)?.graph;
        if !super::blossom::has_perfect_matching(&gc) {
            return fail("G[C] has no perfect matching".into());
        }
        // (iii) m is near-perfect on each D component, perfect on C, and
        // matches B into distinct D components.
        let comp_of = self.component_index();
        for (i, comp) in self.d_components.iter().enumerate() {
            let inside = comp
                .iter()
                .filter(|&v| m.mate(v).is_some_and(|u| comp.contains(u)))
                .count();
            if inside + 1 != comp.len() {
                return fail(format!(
                    "matching is not near-perfect on component {i} of G[D]"
                ));
            }
        }
        for v in &self.c {
            if !m.mate(v).is_some_and(|u| self.c.contains(u)) {
                return fail(format!("C vertex {v} is not matched inside C"));
            }
        }
        let mut used = vec![false; self.component_count()];
        for v in &self.b {
            match m.mate(v).and_then(|u| comp_of[u]) {
                Some(k) if !used[k] => used[k] = true,
                Some(k) => return fail(format!("two B vertices matched into component {k}")),
                None => return fail(format!("B vertex {v} is not matched into D")),
            }
        }
        // (iv) matching number formula.
        if self.tutte_berge_size() != m.size() || self.n() + self.b.len() < self.component_count() {
            return fail(format!(
                "(|V| - c(D) + |B|)/2 = {} but the maximum matching has size {}",
                self.tutte_berge_size(),
                m.size()
            ));
        }
        Ok(())
    }
}

/// Computes the Gallai–Edmonds decomposition.
///
/// A vertex `v` is in `D` exactly when `ν(G - v) = ν(G)`. Starting from one
/// maximum matching `M`, an exposed vertex is in `D` trivially; a vertex `v`
/// matched to `u` is in `D` iff `M - uv` admits an augmenting path from `u`
/// in `G - v`.
pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let n = g.n();
    let adj = g.adjacency_lists();
    let mut search = BlossomSearch::new(&adj);
    search.maximize();
    let mate = search.mate.clone();

    let mut d = VertexSet::empty(n);
    for v in 0..n {
        let u = mate[v];
        if u == usize::MAX {
            d.insert(v);
            continue;
        }
        search.mate.copy_from_slice(&mate);
        search.mate[u] = usize::MAX;
        search.mate[v] = usize::MAX;
        search.set_alive(v, false);
        if search.find_path(u).is_some() {
            d.insert(v);
        }
        search.set_alive(v, true);
    }

    let mut b = VertexSet::empty(n);
    for v in &d {
        for w in g.neighbors(v) {
            if !d.contains(w) {
                b.insert(w);
            }
        }
    }
    let mut c = VertexSet::full(n);
    c.difference_with(&d);
    c.difference_with(&b);

    let sub = g
        .induced_subgraph(&d)
        .expect("D lies inside the vertex range");
    let d_components: Vec<VertexSet> = sub
        .graph
        .connected_components()
        .into_iter()
        .map(|comp| VertexSet::from_iter_in(n, comp.iter().map(|i| sub.labels[i])))
        .collect();
    let (singletons, factor_critical) =
        (0..d_components.len()).partition(|&i| d_components[i].len() == 1);

    let matching = Matching::from_pairs(
        g,
        &(0..n)
            .filter(|&v| mate[v] != usize::MAX && mate[v] > v)
            .map(|v| (v, mate[v]))
            .collect::<Vec<_>>(),
    )
    .expect("blossom output is a matching of g");

    GallaiEdmonds {
        d,
        b,
        c,
        d_components,
        singletons,
        factor_critical,
        matching_number: matching.size(),
        matching,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::blossom::matching_number;

    fn set(n: usize, items: &[usize]) -> VertexSet {
        VertexSet::from_iter_in(n, items.iter().copied())
    }

    fn d_by_deletion(g: &Graph) -> VertexSet {
        let nu = matching_number(g);
        VertexSet::from_iter_in(
            g.n(),
            (0..g.n()).filter(|&v| matching_number(&g.without_vertex(v).graph) == nu),
        )
    }

    #[test]
    fn path_three() {
        let g = Graph::path(3);
        let ge = gallai_edmonds(&g);
        assert_eq!(ge.d, set(3, &[0, 2]));
        assert_eq!(ge.b, set(3, &[1]));
        assert!(ge.c.is_empty());
        assert_eq!(ge.singletons.len(), 2);
        assert!(ge.factor_critical.is_empty());
        ge.verify(&g, &ge.matching).unwrap();
    }

    #[test]
    fn perfect_matching_graph_has_empty_d() {
        for g in [Graph::cycle(4), Graph::petersen(), Graph::complete(6)] {
            let ge = gallai_edmonds(&g);
            assert!(ge.d.is_empty() && ge.b.is_empty());
            assert_eq!(ge.c, g.vertex_set());
            ge.verify(&g, &ge.matching).unwrap();
        }
    }

    #[test]
    fn triangle_with_two_pendants_on_one_vertex() {
        // a,b,c = 0,1,2; d,e = 3,4 pendant to a.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]).unwrap();
        let ge = gallai_edmonds(&g);
        assert_eq!(ge.d, d_by_deletion(&g));
        assert_eq!(ge.d, set(5, &[3, 4]));
        assert_eq!(ge.b, set(5, &[0]));
        assert_eq!(ge.c, set(5, &[1, 2]));
        ge.verify(&g, &ge.matching).unwrap();
    }

    #[test]
    fn odd_cycle_is_one_component() {
        let g = Graph::cycle(5);
        let ge = gallai_edmonds(&g);
        assert_eq!(ge.d, g.vertex_set());
        assert_eq!(ge.factor_critical, vec![0]);
        assert_eq!(ge.tutte_berge_size(), 2);
        ge.verify(&g, &ge.matching).unwrap();
    }

    #[test]
    fn disconnected_input() {
        let g = Graph::cycle(3).disjoint_union(&Graph::path(3));
        let ge = gallai_edmonds(&g);
        assert_eq!(ge.d, d_by_deletion(&g));
        assert_eq!(ge.d, set(6, &[0, 1, 2, 3, 5]));
        ge.verify(&g, &ge.matching).unwrap();
    }

    #[test]
    fn verify_rejects_tampering() {
        let g = Graph::path(3);
        let mut ge = gallai_edmonds(&g);
        ge.b = VertexSet::empty(3);
        assert!(ge.verify(&g, &ge.matching.clone()).is_err());
    }
}
