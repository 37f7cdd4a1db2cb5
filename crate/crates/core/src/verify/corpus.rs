use serde::Serialize;

use crate::error::{Error, Guard, Result};
use crate::graph::Graph;
use crate::matching::is_factor_critical;
use crate::rng::PortableRng;

use super::iso::{connected_representatives, ISO_MAX_N};

/// Largest order [`enumerate_labeled_graphs`] accepts by default.
pub const ENUMERATION_MAX_N: usize = 7;

/// Largest order a pair mask can describe.
const PAIR_MASK_MAX_N: usize = 11;

/// Every labeled graph on `n` vertices, in ascending pair-mask order (the
/// bit for pair `(i, j)`, `i < j`, is `j(j-1)/2 + i`).
pub fn enumerate_labeled_graphs(
    n: usize,
    guard: Guard,
) -> Result<impl Iterator<Item = Graph> + Send> {
    guard.check("labeled graph enumeration", n, ENUMERATION_MAX_N)?;
    if n > PAIR_MASK_MAX_N {
        return Err(Error::UnsupportedSize(format!(
            "cannot enumerate labeled graphs on {n} vertices"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs).map(move |mask| Graph::from_pair_mask(n, mask)))
}

/// A uniformly random labeled tree, decoded from a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut PortableRng) -> Graph {
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.index(n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    for &x in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        g.set_edge(leaf, x);
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    g.set_edge(u, v);
    g
}

fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.has_edge(i, j))
        .collect()
}

/// A random tree plus one uniformly chosen non-edge (pairs in
/// lexicographic order), which closes exactly one cycle.
pub fn random_unicyclic(n: usize, rng: &mut PortableRng) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Argument(format!(
            "unicyclic graphs need at least 3 vertices, got {n}"
        )));
    }
    let mut g = random_tree(n, rng);
    let candidates = non_edges(&g);
    let (u, v) = candidates[rng.index(candidates.len())];
    g.set_edge(u, v);
    Ok(g)
}

/// Erdős–Rényi `G(n, p)`, deciding pairs in lexicographic order.
pub fn random_gnp(n: usize, p: f64, rng: &mut PortableRng) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(p) {
                g.set_edge(i, j);
            }
        }
    }
    g
}

/// A random connected graph: a random tree plus each remaining pair
/// independently with probability `p`, in lexicographic order.
pub fn random_tree_plus(n: usize, p: f64, rng: &mut PortableRng) -> Graph {
    let mut g = random_tree(n, rng);
    for (u, v) in non_edges(&g) {
        if rng.chance(p) {
            g.set_edge(u, v);
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CorpusKind {
    AllLabeled,
    AllConnectedLabeled,
    /// One graph per isomorphism class of connected graphs.
    ConnectedUpToIso,
    RandomGnp,
    RandomUnicyclic,
    RandomTreePlus,
}

/// A transformation applied to every graph of the source stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Stage {
    /// Replace each nontrivial graph by its line graph; drop the rest.
    LineGraphsOf,
    /// Keep only factor-critical graphs.
    FactorCriticalFilter,
}

/// A reproducible graph stream.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusSpec {
    pub kind: CorpusKind,
    pub n_min: usize,
    pub n_max: usize,
    /// Graphs drawn by the random kinds; ignored by exhaustive kinds.
    pub count: usize,
    pub seed: u64,
    /// Edge probability for the random kinds that use one.
    pub p: f64,
    pub stages: Vec<Stage>,
    #[serde(skip)]
    pub guard: Guard,
}

impl CorpusSpec {
    fn new(kind: CorpusKind, n_min: usize, n_max: usize) -> Self {
        CorpusSpec {
            kind,
            n_min,
            n_max,
            count: 0,
            seed: 0,
            p: 0.0,
            stages: Vec::new(),
            guard: Guard::Enforce,
        }
    }

    pub fn all_labeled(n_min: usize, n_max: usize) -> Self {
        Self::new(CorpusKind::AllLabeled, n_min, n_max)
    }

    pub fn all_connected_labeled(n_min: usize, n_max: usize) -> Self {
        Self::new(CorpusKind::AllConnectedLabeled, n_min, n_max)
    }

    pub fn connected_up_to_iso(n_min: usize, n_max: usize) -> Self {
        Self::new(CorpusKind::ConnectedUpToIso, n_min, n_max)
    }

    pub fn random_gnp(n_min: usize, n_max: usize, count: usize, p: f64, seed: u64) -> Self {
        CorpusSpec {
            count,
            p,
            seed,
            ..Self::new(CorpusKind::RandomGnp, n_min, n_max)
        }
    }

    pub fn random_unicyclic(n_min: usize, n_max: usize, count: usize, seed: u64) -> Self {
        CorpusSpec {
            count,
            seed,
            ..Self::new(CorpusKind::RandomUnicyclic, n_min, n_max)
        }
    }

    pub fn random_tree_plus(n_min: usize, n_max: usize, count: usize, p: f64, seed: u64) -> Self {
        CorpusSpec {
            count,
            p,
            seed,
            ..Self::new(CorpusKind::RandomTreePlus, n_min, n_max)
        }
    }

    pub fn then(mut self, stage: Stage) -> Self {
        self.stages.push(stage);
        self
    }

    pub fn with_guard(mut self, guard: Guard) -> Self {
        self.guard = guard;
        self
    }

    /// Rejects ranges outside the generators' guards.
    pub fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max {
            return Err(Error::Argument(format!(
                "empty order range {}..={}",
                self.n_min, self.n_max
            )));
        }
        match self.kind {
            CorpusKind::AllLabeled | CorpusKind::AllConnectedLabeled => {
                self.guard
                    .check("labeled graph enumeration", self.n_max, ENUMERATION_MAX_N)?;
                if self.n_max > PAIR_MASK_MAX_N {
                    return Err(Error::UnsupportedSize(format!(
                        "cannot enumerate labeled graphs on {} vertices",
                        self.n_max
                    )));
                }
            }
            CorpusKind::ConnectedUpToIso => {
                self.guard
                    .check("isomorphism-class enumeration", self.n_max, ISO_MAX_N)?;
            }
            CorpusKind::RandomUnicyclic if self.n_min < 3 => {
                return Err(Error::Argument(
                    "unicyclic graphs need at least 3 vertices".into(),
                ));
            }
            CorpusKind::RandomGnp | CorpusKind::RandomTreePlus
                if !(0.0..=1.0).contains(&self.p) =>
            {
                return Err(Error::Argument(format!(
                    "edge probability {} outside [0, 1]",
                    self.p
                )));
            }
            _ => {}
        }
        Ok(())
    }

    /// Upper bound on the order of any graph in the stream.
    pub fn max_order(&self) -> usize {
        self.stages.iter().fold(self.n_max, |n, stage| match stage {
            Stage::LineGraphsOf => n * n.saturating_sub(1) / 2,
            Stage::FactorCriticalFilter => n,
        })
    }

    fn source(&self) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
        self.validate()?;
        let (lo, hi, guard) = (self.n_min, self.n_max, self.guard);
        Ok(match self.kind {
            CorpusKind::AllLabeled | CorpusKind::AllConnectedLabeled => {
                let streams = (lo..=hi)
                    .map(|n| enumerate_labeled_graphs(n, guard))
                    .collect::<Result<Vec<_>>>()?;
                let all = streams.into_iter().flatten();
                if self.kind == CorpusKind::AllConnectedLabeled {
                    Box::new(all.filter(Graph::is_connected))
                } else {
                    Box::new(all)
                }
            }
            CorpusKind::ConnectedUpToIso => {
                let mut graphs = Vec::new();
                for n in lo..=hi {
                    graphs.extend(connected_representatives(n, guard)?);
                }
                Box::new(graphs.into_iter())
            }
            kind => {
                let mut rng = PortableRng::new(self.seed);
                let p = self.p;
                Box::new((0..self.count).map(move |_| {
                    let n = rng.range_inclusive(lo, hi);
                    match kind {
                        CorpusKind::RandomGnp => random_gnp(n, p, &mut rng),
                        CorpusKind::RandomTreePlus => random_tree_plus(n, p, &mut rng),
                        _ => random_unicyclic(n, &mut rng).expect("order validated"),
                    }
                }))
            }
        })
    }

    /// The graph stream; identical specs yield identical streams.
    pub fn graphs(&self) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
        let mut stream = self.source()?;
        for stage in &self.stages {
            stream = match stage {
                Stage::LineGraphsOf => Box::new(
                    stream
                        .filter(|g| g.edge_count() > 0)
                        .map(|g| g.line_graph().graph),
                ),
                Stage::FactorCriticalFilter => Box::new(stream.filter(is_factor_critical)),
            };
        }
        Ok(stream)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        for (n, count) in [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)] {
            assert_eq!(
                enumerate_labeled_graphs(n, Guard::Enforce).unwrap().count(),
                count
            );
        }
        let first: Vec<u64> = enumerate_labeled_graphs(3, Guard::Enforce)
            .unwrap()
            .map(|g| g.pair_mask())
            .collect();
        assert_eq!(first, (0..8).collect::<Vec<_>>());
        assert!(matches!(
            enumerate_labeled_graphs(8, Guard::Enforce).map(|_| ()),
            Err(Error::Scale { .. })
        ));
    }

    #[test]
    fn connected_labeled_counts() {
        // Connected labeled graphs: 1, 1, 4, 38, 728.
        let counts: Vec<usize> = (1..=5)
            .map(|n| {
                CorpusSpec::all_connected_labeled(n, n)
                    .graphs()
                    .unwrap()
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = PortableRng::new(11);
        for n in 1..30 {
            let t = random_tree(n, &mut rng);
            assert!(t.is_connected());
            assert_eq!(t.edge_count(), n - 1);
        }
    }

    #[test]
    fn unicyclic_generator() {
        let mut rng = PortableRng::new(5);
        let c3 = random_unicyclic(3, &mut rng).unwrap();
        assert_eq!(c3, Graph::complete(3));
        for n in 3..20 {
            assert!(random_unicyclic(n, &mut rng).unwrap().is_unicyclic());
        }
        assert!(random_unicyclic(2, &mut rng).is_err());
    }

    #[test]
    fn seeded_streams_repeat() {
        let spec = CorpusSpec::random_unicyclic(5, 12, 50, 9);
        let a: Vec<Graph> = spec.graphs().unwrap().collect();
        let b: Vec<Graph> = spec.graphs().unwrap().collect();
        assert_eq!(a, b);
        let other: Vec<Graph> = CorpusSpec::random_unicyclic(5, 12, 50, 10)
            .graphs()
            .unwrap()
            .collect();
        assert_ne!(a, other);
        let connected = CorpusSpec::random_tree_plus(1, 10, 50, 0.2, 1);
        assert!(connected.graphs().unwrap().all(|g| g.is_connected()));
    }

    #[test]
    fn stages_apply() {
        let fc = CorpusSpec::all_connected_labeled(1, 5).then(Stage::FactorCriticalFilter);
        assert!(fc.graphs().unwrap().all(|g| g.n() % 2 == 1));
        let lg = CorpusSpec::all_labeled(3, 3).then(Stage::LineGraphsOf);
        // Seven of the eight graphs have an edge.
        assert_eq!(lg.graphs().unwrap().count(), 7);
        assert_eq!(lg.max_order(), 3);
    }

    #[test]
    fn validation() {
        assert!(CorpusSpec::all_labeled(5, 4).validate().is_err());
        assert!(matches!(
            CorpusSpec::all_labeled(1, 8).validate(),
            Err(Error::Scale { .. })
        ));
        assert!(CorpusSpec::all_labeled(1, 8)
            .with_guard(Guard::Override)
            .validate()
            .is_ok());
        assert!(CorpusSpec::random_unicyclic(2, 5, 1, 0).validate().is_err());
        assert!(CorpusSpec::random_gnp(2, 5, 1, 1.5, 0).validate().is_err());
    }
}
