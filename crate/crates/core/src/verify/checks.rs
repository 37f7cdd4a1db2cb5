use std::cell::OnceCell;

use crate::error::{Error, Guard, Result};
use crate::graph::Graph;
use crate::matching::oracle::{m_statistic_oracle_detailed, ORACLE_MAX_N};
use crate::matching::{
    gallai_edmonds, has_perfect_matching, is_factor_critical, m_statistic, matching_number,
    GallaiEdmonds,
};
use crate::nullity::{
    d_has_edges, line_graph_matching_check, line_graph_nullity_check, per_nullity_structural,
    unicyclic_nullity, unicyclic_zero_check, zero_nullity_characterization, NullityReport,
};
use crate::permanent::{
    max_sachs_subgraph_with, perm_polynomial_interpolation_with, perm_polynomial_sachs_with,
    PermPolynomial, INTERPOLATION_MAX_N, SACHS_MAX_N,
};

/// A named property checked graph by graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Structural nullity equals the nullity read off the Sachs coefficients.
    OracleEquivalence,
    /// Sachs-enumerated and interpolated permanental polynomials agree.
    SachsVsInterpolation,
    /// `(-1)^k b_k >= 0` for every coefficient.
    CoefficientSigns,
    /// A maximum Sachs subgraph covers `n - η` vertices.
    MaxSachsOrder,
    /// The polynomial of a disconnected graph is the product over its
    /// components and the nullity is the sum.
    Additivity,
    /// The decomposition passes every structural clause and the
    /// matching-number formula.
    GeSoundness,
    /// `D` is exactly the set of vertices whose deletion keeps `ν`.
    GeDeletion,
    /// M(G) from the bipartite assignment equals the enumeration oracle,
    /// and the oracle finds the count constant.
    MStatisticOracle,
    /// `F ≠ ∅` without a perfect matching forces `M(G) >= 1`.
    MPositive,
    /// Per component: `η = n - 2ν` iff there is a perfect matching or
    /// `G[D]` has no edges, and `F = ∅` iff `G[D]` has no edges.
    LinearCase,
    /// The zero-nullity verdict agrees with the oracle.
    ZeroCharacterization,
    /// `0 <= η <= n`, and `η <= n - 2` once there is an edge.
    NullityBounds,
    /// `n - 2ν - 1 <= η <= n - 2ν` on unicyclic graphs.
    UnicyclicSandwich,
    /// The unicyclic nullity formula and zero test agree with the structural
    /// value and the oracle.
    UnicyclicThm,
    /// The line graph of a connected graph has nullity 0 or 1.
    LineGraphNullity,
    /// Perfect, near-perfect and factor-critical line graphs as predicted by
    /// the edge count and 2-edge-connectivity.
    LineGraphMatching,
    /// Factor-critical graphs on at least 3 vertices have zero nullity,
    /// `M = 1`, and a spanning Sachs subgraph.
    FactorCritical,
}

impl Check {
    pub const ALL: [Check; 17] = [
        Check::OracleEquivalence,
        Check::SachsVsInterpolation,
        Check::CoefficientSigns,
        Check::MaxSachsOrder,
        Check::Additivity,
        Check::GeSoundness,
        Check::GeDeletion,
        Check::MStatisticOracle,
        Check::MPositive,
        Check::LinearCase,
        Check::ZeroCharacterization,
        Check::NullityBounds,
        Check::UnicyclicSandwich,
        Check::UnicyclicThm,
        Check::LineGraphNullity,
        Check::LineGraphMatching,
        Check::FactorCritical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::OracleEquivalence => "oracle_equivalence",
            Check::SachsVsInterpolation => "sachs_vs_interpolation",
            Check::CoefficientSigns => "coefficient_signs",
            Check::MaxSachsOrder => "max_sachs_order",
            Check::Additivity => "additivity",
            Check::GeSoundness => "ge_soundness",
            Check::GeDeletion => "ge_deletion",
            Check::MStatisticOracle => "m_statistic_oracle",
            Check::MPositive => "m_positive",
            Check::LinearCase => "linear_case",
            Check::ZeroCharacterization => "zero_characterization",
            Check::NullityBounds => "nullity_bounds",
            Check::UnicyclicSandwich => "unicyclic_sandwich",
            Check::UnicyclicThm => "unicyclic_thm",
            Check::LineGraphNullity => "line_graph_nullity",
            Check::LineGraphMatching => "line_graph_matching",
            Check::FactorCritical => "factor_critical",
        }
    }

    pub fn from_name(name: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| Error::UnknownCheck(name.to_string()))
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(list: &str) -> Result<Vec<Check>> {
        let mut checks = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if name == "all" {
                checks.extend(Check::ALL);
            } else {
                checks.push(Check::from_name(name)?);
            }
        }
        checks.sort_unstable();
        checks.dedup();
        Ok(checks)
    }

    /// The exponential routine this check runs and its default size limit.
    pub(crate) fn size_limit(self) -> Option<(&'static str, usize)> {
        match self {
            Check::SachsVsInterpolation | Check::Additivity => Some((
                "permanental polynomial by interpolation",
                INTERPOLATION_MAX_N,
            )),
            Check::MStatisticOracle => Some(("maximum matching enumeration", ORACLE_MAX_N)),
            Check::OracleEquivalence
            | Check::CoefficientSigns
            | Check::MaxSachsOrder
            | Check::LinearCase
            | Check::ZeroCharacterization
            | Check::UnicyclicSandwich
            | Check::UnicyclicThm
            | Check::FactorCritical => Some(("Sachs subgraph enumeration", SACHS_MAX_N)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    Pass,
    Skip,
    Fail { expected: String, got: String },
}

fn expect<T: PartialEq + std::fmt::Debug>(expected: T, got: T) -> Outcome {
    if expected == got {
        Outcome::Pass
    } else {
        Outcome::Fail {
            expected: format!("{expected:?}"),
            got: format!("{got:?}"),
        }
    }
}

fn fail(expected: impl Into<String>, got: impl Into<String>) -> Outcome {
    Outcome::Fail {
        expected: expected.into(),
        got: got.into(),
    }
}

/// One graph with its expensive results computed at most once.
pub(crate) struct Subject<'a> {
    g: &'a Graph,
    guard: Guard,
    structural: OnceCell<Result<NullityReport>>,
    sachs: OnceCell<Result<PermPolynomial>>,
    decomposition: OnceCell<GallaiEdmonds>,
}

impl<'a> Subject<'a> {
    pub(crate) fn new(g: &'a Graph, guard: Guard) -> Self {
        Subject {
            g,
            guard,
            structural: OnceCell::new(),
            sachs: OnceCell::new(),
            decomposition: OnceCell::new(),
        }
    }

    fn structural(&self) -> Result<&NullityReport> {
        self.structural
            .get_or_init(|| per_nullity_structural(self.g))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn sachs(&self) -> Result<&PermPolynomial> {
        self.sachs
            .get_or_init(|| perm_polynomial_sachs_with(self.g, self.guard))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn oracle(&self) -> Result<usize> {
        Ok(self.sachs()?.zero_multiplicity())
    }

    fn decomposition(&self) -> &GallaiEdmonds {
        self.decomposition.get_or_init(|| gallai_edmonds(self.g))
    }

    fn eta(&self) -> Result<usize> {
        Ok(self.structural()?.eta_structural)
    }

    /// Runs a check. Scale errors abort the run; any other error is a
    /// failure of the check.
    pub(crate) fn run(&self, check: Check) -> Result<Outcome> {
        match self.evaluate(check) {
            Ok(outcome) => Ok(outcome),
            Err(e @ Error::Scale { .. }) => Err(e),
            Err(e) => Ok(fail("no error", e.to_string())),
        }
    }

    fn connected_nontrivial(&self) -> bool {
        self.g.n() >= 2 && self.g.is_connected()
    }

    fn evaluate(&self, check: Check) -> Result<Outcome> {
        let g = self.g;
        let n = g.n();
        Ok(match check {
            Check::OracleEquivalence => expect(self.oracle()?, self.eta()?),
            Check::SachsVsInterpolation => expect(
                perm_polynomial_interpolation_with(g, self.guard)?,
                self.sachs()?.clone(),
            ),
            Check::CoefficientSigns => {
                let p = self.sachs()?;
                if p.has_alternating_signs() {
                    Outcome::Pass
                } else {
                    fail("(-1)^k b_k >= 0", p.to_string())
                }
            }
            Check::MaxSachsOrder => {
                let s = max_sachs_subgraph_with(g, self.guard)?;
                if !s.is_valid_in(g) {
                    fail("a Sachs subgraph of the graph", format!("{s:?}"))
                } else {
                    expect(n - self.oracle()?, s.order())
                }
            }
            Check::Additivity => self.additivity()?,
            Check::GeSoundness => {
                let dec = self.decomposition();
                match dec.verify(g, &dec.matching) {
                    Ok(()) => Outcome::Pass,
                    Err(e) => fail("a sound decomposition", e.to_string()),
                }
            }
            Check::GeDeletion => {
                let nu = matching_number(g);
                let by_deletion: Vec<usize> = (0..n)
                    .filter(|&v| matching_number(&g.without_vertex(v).graph) == nu)
                    .collect();
                expect(by_deletion, self.decomposition().d.to_vec())
            }
            Check::MStatisticOracle => {
                let oracle = m_statistic_oracle_detailed(g, self.guard)?;
                let fast = m_statistic(g, self.decomposition())?;
                expect(
                    (oracle.value, oracle.saturated_singletons),
                    (fast.value, fast.saturated_singletons),
                )
            }
            Check::MPositive => {
                let dec = self.decomposition();
                if dec.factor_critical.is_empty() || dec.has_perfect_matching() {
                    Outcome::Skip
                } else {
                    let m = m_statistic(g, dec)?.value;
                    if m >= 1 {
                        Outcome::Pass
                    } else {
                        fail("M(G) >= 1", m.to_string())
                    }
                }
            }
            Check::LinearCase => self.linear_case()?,
            Check::ZeroCharacterization => {
                if !self.connected_nontrivial() {
                    Outcome::Skip
                } else {
                    let verdict = zero_nullity_characterization(g)?.zero;
                    expect(self.oracle()? == 0, verdict)
                }
            }
            Check::NullityBounds => {
                let eta = self.eta()?;
                let upper = if g.edge_count() > 0 { n - 2 } else { n };
                if eta <= upper {
                    Outcome::Pass
                } else {
                    fail(format!("eta <= {upper}"), eta.to_string())
                }
            }
            Check::UnicyclicSandwich => {
                if !g.is_unicyclic() {
                    Outcome::Skip
                } else {
                    let top = n - 2 * matching_number(g);
                    let eta = self.oracle()?;
                    if eta + 1 >= top && eta <= top {
                        Outcome::Pass
                    } else {
                        fail(format!("{} <= eta <= {top}", top - 1), eta.to_string())
                    }
                }
            }
            Check::UnicyclicThm => {
                if !g.is_unicyclic() {
                    Outcome::Skip
                } else {
                    let eta = self.oracle()?;
                    expect(
                        (eta, eta, eta == 0),
                        (unicyclic_nullity(g)?, self.eta()?, unicyclic_zero_check(g)?),
                    )
                }
            }
            Check::LineGraphNullity => {
                if !self.connected_nontrivial() {
                    Outcome::Skip
                } else {
                    let eta = line_graph_nullity_check(g)?;
                    if eta <= 1 {
                        Outcome::Pass
                    } else {
                        fail("0 or 1", eta.to_string())
                    }
                }
            }
            Check::LineGraphMatching => {
                if !self.connected_nontrivial() {
                    Outcome::Skip
                } else {
                    let measured = line_graph_matching_check(g)?;
                    let m = g.edge_count();
                    let odd = m % 2 == 1 && m >= 3;
                    let mut problems = Vec::new();
                    if measured.lg_perfect != m.is_multiple_of(2) {
                        problems.push("perfect matching iff |E| even");
                    }
                    if odd && !measured.lg_near_perfect {
                        problems.push("near-perfect matching for odd |E| >= 3");
                    }
                    if odd && g.is_two_edge_connected() && !measured.lg_factor_critical {
                        problems.push("factor-critical for 2-edge-connected odd |E| >= 3");
                    }
                    if problems.is_empty() {
                        Outcome::Pass
                    } else {
                        fail(problems.join("; "), format!("{measured:?}"))
                    }
                }
            }
            Check::FactorCritical => {
                // K1 is factor-critical but has nullity 1.
                if n < 3 || !is_factor_critical(g) {
                    Outcome::Skip
                } else {
                    let report = self.structural()?;
                    let cover = max_sachs_subgraph_with(g, self.guard)?.order();
                    expect(
                        (0, 0, 1, n),
                        (report.eta_structural, self.oracle()?, report.m_stat, cover),
                    )
                }
            }
        })
    }

    fn additivity(&self) -> Result<Outcome> {
        let g = self.g;
        let components = g.connected_components();
        if components.len() <= 1 {
            return Ok(Outcome::Skip);
        }
        let mut product = PermPolynomial::from_coeffs(vec![1.into()])?;
        let mut eta_sum = 0;
        for comp in &components {
            let h = g.induced_subgraph(comp)?.graph;
            let p = perm_polynomial_interpolation_with(&h, self.guard)?;
            eta_sum += p.zero_multiplicity();
            product = product.multiply(&p);
        }
        let whole = self.sachs()?;
        Ok(expect(
            (product.to_string(), eta_sum),
            (whole.to_string(), whole.zero_multiplicity()),
        ))
    }

    fn linear_case(&self) -> Result<Outcome> {
        let g = self.g;
        for comp in g.connected_components() {
            let h = g.induced_subgraph(&comp)?.graph;
            let dec = gallai_edmonds(&h);
            let eta = perm_polynomial_sachs_with(&h, self.guard)?.zero_multiplicity();
            let linear = eta == h.n() - 2 * dec.matching_number;
            let d_edgeless = !d_has_edges(&h, &dec.d);
            let predicted = has_perfect_matching(&h) || d_edgeless;
            if linear != predicted {
                return Ok(fail(
                    format!("eta = n - 2nu is {predicted}"),
                    format!("{linear} on component {comp}"),
                ));
            }
            if dec.factor_critical.is_empty() != d_edgeless {
                return Ok(fail(
                    "F empty iff G[D] edgeless",
                    format!(
                        "F empty = {}, on component {comp}",
                        dec.factor_critical.is_empty()
                    ),
                ));
            }
        }
        Ok(Outcome::Pass)
    }
}
