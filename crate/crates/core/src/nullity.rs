//! Permanental nullity from matching structure.
//!
//! For a connected graph `H` on `n` vertices with matching number `ν`:
//!
//! * if `H` has a perfect matching, or `G[D]` has no component of order at
//!   least 3, then `η_per(H) = n - 2ν`;
//! * otherwise `η_per(H) = n - 2ν - M(H)`.
//!
//! Nullity is additive over components, so general graphs are handled one
//! component at a time.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::matching::{
    gallai_edmonds, has_perfect_matching, m_statistic, matching_number, GallaiEdmonds,
};

/// Which branch of the structural formula produced a component's nullity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NullityCase {
    PerfectMatching,
    FEmpty,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    /// Vertices of the component in the host graph.
    pub vertices: Vec<usize>,
    pub n: usize,
    pub nu: usize,
    pub m_stat: usize,
    pub eta: usize,
    pub case_fired: NullityCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullityReport {
    pub n: usize,
    pub nu: usize,
    /// Sum of M over the components.
    pub m_stat: usize,
    pub eta_structural: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta_oracle: Option<usize>,
    pub components: Vec<ComponentReport>,
}

/// One line of the JSONL output.
#[derive(Debug, Serialize)]
pub struct NullityRecord<'a> {
    pub graph6: String,
    pub n: usize,
    pub nu: usize,
    pub m_stat: usize,
    pub eta_structural: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta_oracle: Option<usize>,
    /// Case per component, in component order.
    pub case_fired: Vec<NullityCase>,
    pub components: &'a [ComponentReport],
}

impl NullityReport {
    pub fn record(&self, g: &Graph) -> Result<NullityRecord<'_>> {
        Ok(NullityRecord {
            graph6: to_graph6(g)?,
            n: self.n,
            nu: self.nu,
            m_stat: self.m_stat,
            eta_structural: self.eta_structural,
            eta_oracle: self.eta_oracle,
            case_fired: self.components.iter().map(|c| c.case_fired).collect(),
            components: &self.components,
        })
    }
}

/// Nullity of one connected graph together with its decomposition.
pub(crate) fn connected_nullity(h: &Graph) -> Result<(ComponentReport, GallaiEdmonds)> {
    let dec = gallai_edmonds(h);
    let n = h.n();
    let nu = dec.matching_number;
    let (case_fired, m_stat) = if dec.has_perfect_matching() {
        (NullityCase::PerfectMatching, 0)
    } else if dec.factor_critical.is_empty() {
        (NullityCase::FEmpty, 0)
    } else {
        (NullityCase::General, m_statistic(h, &dec)?.value)
    };
    let eta = n - 2 * nu - m_stat;
    Ok((
        ComponentReport {
            vertices: (0..n).collect(),
            n,
            nu,
            m_stat,
            eta,
            case_fired,
        },
        dec,
    ))
}

/// η_per(G) from matchings and the Gallai–Edmonds decomposition, summed
/// over connected components. The null graph has nullity 0.
pub fn per_nullity_structural(g: &Graph) -> Result<NullityReport> {
    let mut components = Vec::new();
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(&comp)?;
        let (mut report, _) = connected_nullity(&sub.graph)?;
        report.vertices = sub.labels;
        components.push(report);
    }
    Ok(NullityReport {
        n: g.n(),
        nu: components.iter().map(|c| c.nu).sum(),
        m_stat: components.iter().map(|c| c.m_stat).sum(),
        eta_structural: components.iter().map(|c| c.eta).sum(),
        eta_oracle: None,
        components,
    })
}

/// Which condition certifies zero nullity for a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ZeroCase {
    /// The graph has a perfect matching.
    PerfectMatching,
    /// `G[D]` is nonempty and has no isolated vertex.
    NoIsolatedInD,
    /// Some maximum matching covers every isolated vertex of `G[D]`.
    IsolatedCoverable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroNullity {
    pub zero: bool,
    pub case: Option<ZeroCase>,
}

/// Decides η_per(G) = 0 for a connected graph on at least two vertices by
/// the matching characterization, without computing the nullity.
pub fn zero_nullity_characterization(g: &Graph) -> Result<ZeroNullity> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Precondition(
            "zero-nullity characterization needs a connected graph on at least 2 vertices".into(),
        ));
    }
    let dec = gallai_edmonds(g);
    let case = if dec.has_perfect_matching() {
        Some(ZeroCase::PerfectMatching)
    } else if dec.singletons.is_empty() {
        Some(ZeroCase::NoIsolatedInD)
    } else {
        // Whether B can be saturated while covering every singleton.
        let m = m_statistic(g, &dec)?;
        (m.saturated_singletons == dec.singletons.len()).then_some(ZeroCase::IsolatedCoverable)
    };
    Ok(ZeroNullity {
        zero: case.is_some(),
        case,
    })
}

fn unicyclic_parts(g: &Graph) -> Result<(crate::graph::CycleInfo, Graph)> {
    if !g.is_unicyclic() {
        return Err(Error::Precondition("graph is not unicyclic".into()));
    }
    let cycle = g.find_unique_cycle()?;
    let rest = g.without(&cycle.vertex_set(g.n())).graph;
    Ok((cycle, rest))
}

/// Nullity of a unicyclic graph with unique cycle `C` of length `ℓ`:
/// `n - 2ν - 1` when `ℓ` is odd and `ν(G) = (ℓ - 1)/2 + ν(G - V(C))`,
/// and `n - 2ν` otherwise.
pub fn unicyclic_nullity(g: &Graph) -> Result<usize> {
    let (cycle, rest) = unicyclic_parts(g)?;
    let nu = matching_number(g);
    let base = g.n() - 2 * nu;
    let len = cycle.len();
    if cycle.is_odd() && nu == (len - 1) / 2 + matching_number(&rest) {
        Ok(base - 1)
    } else {
        Ok(base)
    }
}

/// A unicyclic graph has zero nullity iff it is an odd cycle, has a perfect
/// matching, or loses only a perfect-matchable forest when the cycle is
/// removed.
pub fn unicyclic_zero_check(g: &Graph) -> Result<bool> {
    let (cycle, rest) = unicyclic_parts(g)?;
    let odd_cycle = cycle.len() == g.n() && cycle.is_odd();
    Ok(odd_cycle || has_perfect_matching(g) || has_perfect_matching(&rest))
}

/// Measured matching properties of the line graph `L(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LineGraphMatching {
    pub lg_perfect: bool,
    pub lg_near_perfect: bool,
    pub lg_factor_critical: bool,
}

fn require_nontrivial_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Precondition(
            "line-graph checks need a connected graph on at least 2 vertices".into(),
        ));
    }
    Ok(())
}

pub fn line_graph_matching_check(g: &Graph) -> Result<LineGraphMatching> {
    require_nontrivial_connected(g)?;
    let lg = g.line_graph().graph;
    Ok(LineGraphMatching {
        lg_perfect: has_perfect_matching(&lg),
        lg_near_perfect: crate::matching::has_near_perfect_matching(&lg),
        lg_factor_critical: crate::matching::is_factor_critical(&lg),
    })
}

/// Structural nullity of `L(G)`. For connected `G` the value must be 0 or 1;
/// anything else is reported as a theorem violation.
pub fn line_graph_nullity_check(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::Precondition(
            "line-graph nullity needs at least 2 vertices".into(),
        ));
    }
    let lg = g.line_graph().graph;
    let eta = per_nullity_structural(&lg)?.eta_structural;
    if g.is_connected() && eta > 1 {
        return Err(Error::TheoremViolation(format!(
            "line graph of a connected graph has nullity {eta}"
        )));
    }
    Ok(eta)
}

/// Edges of `G[D]` exist.
pub(crate) fn d_has_edges(g: &Graph, d: &VertexSet) -> bool {
    d.iter().any(|v| g.neighbors(v).any(|w| d.contains(w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eta(g: &Graph) -> usize {
        per_nullity_structural(g).unwrap().eta_structural
    }

    fn triangle_pendant_path() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)]).unwrap()
    }

    fn triangle_two_pendants() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn structural_examples() {
        let r = per_nullity_structural(&Graph::path(3)).unwrap();
        assert_eq!(r.eta_structural, 1);
        assert_eq!(r.components[0].case_fired, NullityCase::FEmpty);

        let r = per_nullity_structural(&Graph::cycle(5)).unwrap();
        assert_eq!(r.eta_structural, 0);
        assert_eq!(r.m_stat, 1);
        assert_eq!(r.components[0].case_fired, NullityCase::General);

        assert_eq!(eta(&Graph::empty(3)), 3);
        assert_eq!(eta(&Graph::star(3)), 2);
        assert_eq!(eta(&Graph::empty(0)), 0);
        assert_eq!(
            per_nullity_structural(&Graph::petersen())
                .unwrap()
                .components[0]
                .case_fired,
            NullityCase::PerfectMatching
        );
    }

    #[test]
    fn components_are_summed_and_labeled() {
        let g = Graph::path(3).disjoint_union(&Graph::empty(2));
        let r = per_nullity_structural(&g).unwrap();
        assert_eq!(r.components.len(), 3);
        assert_eq!(r.components[0].vertices, vec![0, 1, 2]);
        assert_eq!(r.components[2].vertices, vec![4]);
        assert_eq!(r.eta_structural, 3);
    }

    #[test]
    fn record_field_order() {
        let g = Graph::complete(3);
        let r = per_nullity_structural(&g).unwrap();
        let json = serde_json::to_string(&r.record(&g).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"graph6":"Bw","n":3,"nu":1,"m_stat":1,"eta_structural":0,"case_fired":["GENERAL"],"components":[{"vertices":[0,1,2],"n":3,"nu":1,"m_stat":1,"eta":0,"case_fired":"GENERAL"}]}"#
        );
    }

    #[test]
    fn zero_characterization_examples() {
        assert_eq!(
            zero_nullity_characterization(&Graph::cycle(4))
                .unwrap()
                .case,
            Some(ZeroCase::PerfectMatching)
        );
        assert_eq!(
            zero_nullity_characterization(&Graph::cycle(5))
                .unwrap()
                .case,
            Some(ZeroCase::NoIsolatedInD)
        );
        let p3 = zero_nullity_characterization(&Graph::path(3)).unwrap();
        assert!(!p3.zero && p3.case.is_none());
        assert_eq!(
            zero_nullity_characterization(&triangle_pendant_path())
                .unwrap()
                .case,
            Some(ZeroCase::IsolatedCoverable)
        );
        assert!(zero_nullity_characterization(&Graph::empty(1)).is_err());
        assert!(zero_nullity_characterization(&Graph::empty(2)).is_err());
    }

    #[test]
    fn unicyclic_examples() {
        assert_eq!(unicyclic_nullity(&triangle_two_pendants()).unwrap(), 1);
        assert_eq!(unicyclic_nullity(&triangle_pendant_path()).unwrap(), 0);
        assert_eq!(unicyclic_nullity(&Graph::cycle(4)).unwrap(), 0);
        assert!(unicyclic_nullity(&Graph::path(4)).is_err());

        assert!(unicyclic_zero_check(&Graph::cycle(5)).unwrap());
        let paw = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert!(unicyclic_zero_check(&paw).unwrap());
        assert!(!unicyclic_zero_check(&triangle_two_pendants()).unwrap());
        assert!(unicyclic_zero_check(&Graph::star(3)).is_err());
    }

    #[test]
    fn line_graph_examples() {
        let p3 = line_graph_matching_check(&Graph::path(3)).unwrap();
        assert!(p3.lg_perfect);
        let k3 = line_graph_matching_check(&Graph::complete(3)).unwrap();
        assert!(k3.lg_factor_critical);
        let p4 = line_graph_matching_check(&Graph::path(4)).unwrap();
        assert!(p4.lg_near_perfect && !p4.lg_perfect);
        assert!(line_graph_matching_check(&Graph::empty(1)).is_err());
        assert!(line_graph_matching_check(&Graph::empty(3)).is_err());

        assert_eq!(line_graph_nullity_check(&Graph::path(3)).unwrap(), 0);
        assert_eq!(line_graph_nullity_check(&Graph::path(4)).unwrap(), 1);
        assert_eq!(line_graph_nullity_check(&Graph::complete(3)).unwrap(), 0);
        assert!(line_graph_nullity_check(&Graph::empty(1)).is_err());
    }

    #[test]
    fn edges_inside_d() {
        let g = Graph::cycle(5);
        assert!(d_has_edges(&g, &g.vertex_set()));
        let p3 = Graph::path(3);
        assert!(!d_has_edges(&p3, &VertexSet::from_iter_in(3, [0, 2])));
    }
}
