//! Corpus generation and check-by-check cross-validation.

mod checks;
mod corpus;
pub mod iso;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;

pub use checks::Check;
pub use corpus::{
    enumerate_labeled_graphs, random_gnp, random_tree, random_tree_plus, random_unicyclic,
    CorpusKind, CorpusSpec, Stage, ENUMERATION_MAX_N,
};

use checks::{Outcome, Subject};

/// Most failures kept in a [`VerifyResult`].
pub const MAX_REPORTED_FAILURES: usize = 100;

const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub passed: u64,
    pub failed: u64,
    /// Graphs outside the check's hypotheses.
    pub skipped: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub check: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyResult {
    pub corpus: CorpusSpec,
    pub graphs: u64,
    pub checks: BTreeMap<String, CheckTally>,
    pub failures_total: u64,
    /// The first failures in (graph6, check) order.
    pub failures: Vec<Failure>,
    pub failures_truncated: bool,
}

impl VerifyResult {
    pub fn passed(&self) -> bool {
        self.failures_total == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }

    /// Human-readable summary table.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graphs: {}", self.graphs);
        let width = self
            .checks
            .keys()
            .map(String::len)
            .max()
            .unwrap_or(5)
            .max(5);
        let _ = writeln!(
            out,
            "{:<width$}  {:>10}  {:>10}  {:>10}",
            "check", "passed", "failed", "skipped"
        );
        for (name, t) in &self.checks {
            let _ = writeln!(
                out,
                "{name:<width$}  {:>10}  {:>10}  {:>10}",
                t.passed, t.failed, t.skipped
            );
        }
        for f in &self.failures {
            let _ = writeln!(
                out,
                "FAIL {} {}: expected {}, got {}",
                f.check, f.graph6, f.expected, f.got
            );
        }
        if self.failures_truncated {
            let _ = writeln!(
                out,
                "... {} failures in total, first {} shown",
                self.failures_total,
                self.failures.len()
            );
        }
        out
    }
}

/// Thread count from `PERNULL_THREADS`, if set to a positive integer.
pub fn thread_limit() -> Option<usize> {
    std::env::var("PERNULL_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
}

fn check_guards(spec: &CorpusSpec, checks: &[Check]) -> Result<()> {
    spec.validate()?;
    let order = spec.max_order();
    for check in checks {
        if let Some((what, limit)) = check.size_limit() {
            spec.guard.check(what, order, limit)?;
        }
    }
    Ok(())
}

type GraphOutcome = (Graph, Vec<Outcome>);

fn evaluate(g: Graph, checks: &[Check], spec: &CorpusSpec) -> Result<GraphOutcome> {
    let subject = Subject::new(&g, spec.guard);
    let outcomes = checks
        .iter()
        .map(|&c| subject.run(c))
        .collect::<Result<Vec<_>>>()?;
    Ok((g, outcomes))
}

/// Streams the corpus through the named checks.
///
/// Graphs are evaluated in parallel (capped by `PERNULL_THREADS`) and
/// aggregated in stream order, so the result is identical for identical
/// inputs.
pub fn run_verification(spec: &CorpusSpec, check_names: &[&str]) -> Result<VerifyResult> {
    let mut checks = check_names
        .iter()
        .map(|name| Check::from_name(name))
        .collect::<Result<Vec<_>>>()?;
    checks.sort_unstable();
    checks.dedup();
    if checks.is_empty() {
        return Err(Error::Argument("no checks selected".into()));
    }
    check_guards(spec, &checks)?;

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = thread_limit() {
        pool = pool.num_threads(t);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::Argument(format!("cannot start worker threads: {e}")))?;

    let mut tallies = vec![CheckTally::default(); checks.len()];
    let mut kept: BTreeSet<Failure> = BTreeSet::new();
    let mut failures_total = 0u64;
    let mut graphs = 0u64;
    let mut stream = spec.graphs()?;
    loop {
        let chunk: Vec<Graph> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Result<GraphOutcome>> = pool.install(|| {
            chunk
                .into_par_iter()
                .map(|g| evaluate(g, &checks, spec))
                .collect()
        });
        for result in results {
            let (g, outcomes) = result?;
            graphs += 1;
            for ((check, tally), outcome) in checks.iter().zip(&mut tallies).zip(outcomes) {
                match outcome {
                    Outcome::Pass => tally.passed += 1,
                    Outcome::Skip => tally.skipped += 1,
                    Outcome::Fail { expected, got } => {
                        tally.failed += 1;
                        failures_total += 1;
                        kept.insert(Failure {
                            graph6: to_graph6(&g)?,
                            check: check.name().to_string(),
                            expected,
                            got,
                        });
                        if kept.len() > MAX_REPORTED_FAILURES {
                            kept.pop_last();
                        }
                    }
                }
            }
        }
    }

    Ok(VerifyResult {
        corpus: spec.clone(),
        graphs,
        checks: checks
            .iter()
            .zip(tallies)
            .map(|(c, t)| (c.name().to_string(), t))
            .collect(),
        failures_total,
        failures_truncated: failures_total > kept.len() as u64,
        failures: kept.into_iter().collect(),
    })
}
