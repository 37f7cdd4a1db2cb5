//! Acceptance runs. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use pernull_core::verify::{run_verification, CorpusSpec, Stage, VerifyResult};
use pernull_core::{
    per_nullity_oracle, per_nullity_structural, perm_polynomial_interpolation,
    perm_polynomial_sachs, Graph,
};

/// Coefficients and nullities are compared exactly.
const COEFFICIENT_TOLERANCE: u64 = 0;
/// Every run below must report this many failures.
const ALLOWED_FAILURES: u64 = 0;

const RANDOM_CONNECTED_COUNT: usize = 10_000;
const RANDOM_CONNECTED_MAX_N: usize = 14;
const RANDOM_LINE_COUNT: usize = 500;
const RANDOM_LINE_MAX_N: usize = 10;
const UNICYCLIC_PER_ORDER: usize = 1_000;
const EDGE_PROBABILITY: f64 = 0.25;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

/// Runs each spec with the given checks; passes when every run is clean
/// and actually exercised the checks.
fn runs(specs: &[(&str, CorpusSpec)], checks: &[&str]) -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (label, spec) in specs {
        match run_verification(spec, checks) {
            Ok(r) => {
                let exercised = r.checks.values().all(|t| t.passed > 0);
                ok &= r.failures_total == ALLOWED_FAILURES && exercised;
                parts.push(summary(label, &r));
                if r.failures_total > 0 {
                    eprint!("{}", r.table());
                }
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{label}: error {e}"));
            }
        }
    }
    Verdict {
        ok,
        detail: parts.join("; "),
    }
}

fn summary(label: &str, r: &VerifyResult) -> String {
    let passed: u64 = r.checks.values().map(|t| t.passed).sum();
    format!(
        "{label}: {} graphs, {passed} check passes, {} failures",
        r.graphs, r.failures_total
    )
}

fn exhaustive_oracle_equivalence() -> Verdict {
    runs(
        &[
            ("labeled n<=6", CorpusSpec::all_labeled(0, 6)),
            ("labeled n=7", CorpusSpec::all_labeled(7, 7)),
        ],
        &["oracle_equivalence"],
    )
}

fn polynomial_cross_check() -> Verdict {
    runs(
        &[("labeled n<=6", CorpusSpec::all_labeled(0, 6))],
        &["sachs_vs_interpolation"],
    )
}

fn golden_values() -> Verdict {
    let cases: [(&str, Graph, &[i64]); 3] = [
        ("C3", Graph::cycle(3), &[1, 0, 3, -2]),
        ("K2", Graph::complete(2), &[1, 0, 1]),
        ("P3", Graph::path(3), &[1, 0, 2, 0]),
    ];
    let mut bad = Vec::new();
    for (name, g, expected) in &cases {
        let expected: Vec<BigInt> = expected.iter().map(|&c| BigInt::from(c)).collect();
        for (method, p) in [
            ("sachs", perm_polynomial_sachs(g)),
            ("interpolation", perm_polynomial_interpolation(g)),
        ] {
            let p = p.expect("within guards");
            let distance = p
                .coeffs()
                .iter()
                .zip(&expected)
                .map(|(a, b)| (a - b).magnitude().clone())
                .max()
                .unwrap_or_default();
            if p.coeffs().len() != expected.len() || distance > COEFFICIENT_TOLERANCE.into() {
                bad.push(format!("{name} by {method}: {p}"));
            }
        }
    }
    for n in 0..=12 {
        let g = Graph::empty(n);
        let structural = per_nullity_structural(&g).unwrap().eta_structural;
        let oracle = per_nullity_oracle(&g).unwrap();
        if structural != n || oracle != n {
            bad.push(format!(
                "empty {n}: structural {structural}, oracle {oracle}"
            ));
        }
    }
    Verdict {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            "C3, K2, P3 polynomials and empty graphs n<=12 exact".into()
        } else {
            bad.join("; ")
        },
    }
}

fn gallai_edmonds_soundness() -> Verdict {
    let mut v = runs(
        &[(
            "connected labeled n<=7",
            CorpusSpec::all_connected_labeled(1, 7),
        )],
        &["ge_soundness"],
    );
    let deletion = runs(
        &[
            ("labeled n<=7", CorpusSpec::all_labeled(0, 7)),
            (
                "connected classes n=8",
                CorpusSpec::connected_up_to_iso(8, 8),
            ),
        ],
        &["ge_deletion"],
    );
    v.ok &= deletion.ok;
    v.detail = format!("{}; deletion definition, {}", v.detail, deletion.detail);
    v
}

fn m_statistic() -> Verdict {
    runs(
        &[
            (
                "connected classes n<=9",
                CorpusSpec::connected_up_to_iso(1, 9),
            ),
            (
                "random connected n<=14",
                CorpusSpec::random_tree_plus(
                    1,
                    RANDOM_CONNECTED_MAX_N,
                    RANDOM_CONNECTED_COUNT,
                    EDGE_PROBABILITY,
                    2024,
                ),
            ),
        ],
        &["m_statistic_oracle", "m_positive"],
    )
}

fn zero_characterization() -> Verdict {
    runs(
        &[(
            "connected labeled 2<=n<=7",
            CorpusSpec::all_connected_labeled(2, 7),
        )],
        &["zero_characterization"],
    )
}

fn unicyclic() -> Verdict {
    let specs: Vec<(String, CorpusSpec)> = (5..=14)
        .map(|n| {
            (
                format!("n={n}"),
                CorpusSpec::random_unicyclic(n, n, UNICYCLIC_PER_ORDER, n as u64),
            )
        })
        .collect();
    let specs: Vec<(&str, CorpusSpec)> =
        specs.iter().map(|(l, s)| (l.as_str(), s.clone())).collect();
    runs(
        &specs,
        &["unicyclic_sandwich", "unicyclic_thm", "oracle_equivalence"],
    )
}

fn line_graphs() -> Verdict {
    runs(
        &[
            (
                "connected labeled n<=6",
                CorpusSpec::all_connected_labeled(1, 6),
            ),
            (
                "random connected n<=10",
                CorpusSpec::random_tree_plus(
                    2,
                    RANDOM_LINE_MAX_N,
                    RANDOM_LINE_COUNT,
                    EDGE_PROBABILITY,
                    77,
                ),
            ),
        ],
        &["line_graph_nullity", "line_graph_matching"],
    )
}

fn factor_critical() -> Verdict {
    let specs: Vec<(&str, CorpusSpec)> = [3, 5, 7]
        .into_iter()
        .zip(["n=3", "n=5", "n=7"])
        .map(|(n, label)| {
            (
                label,
                CorpusSpec::all_connected_labeled(n, n).then(Stage::FactorCriticalFilter),
            )
        })
        .collect();
    runs(&specs, &["factor_critical"])
}

fn determinism() -> Verdict {
    let heavy = ["oracle_equivalence", "ge_soundness", "m_statistic_oracle"];
    let structural = ["ge_soundness", "nullity_bounds", "linear_case"];
    let specs: [(CorpusSpec, &[&str]); 3] = [
        (CorpusSpec::random_unicyclic(5, 12, 500, 7), &heavy),
        (CorpusSpec::random_gnp(1, 10, 500, 0.3, 99), &heavy),
        (
            CorpusSpec::random_tree_plus(2, 6, 300, 0.2, 3).then(Stage::LineGraphsOf),
            &structural,
        ),
    ];
    let mut problems = Vec::new();
    let mut bytes = 0;
    for (spec, checks) in &specs {
        let a = run_verification(spec, checks).map(|r| r.to_json());
        let b = run_verification(spec, checks).map(|r| r.to_json());
        match (a, b) {
            (Ok(a), Ok(b)) if a == b => bytes += a.len(),
            (Ok(_), Ok(_)) => problems.push(format!("{:?} differs between runs", spec.kind)),
            (Err(e), _) | (_, Err(e)) => problems.push(format!("{:?}: {e}", spec.kind)),
        }
    }
    Verdict {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("3 seeded runs repeated, {bytes} JSON bytes identical")
        } else {
            problems.join("; ")
        },
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "exhaustive oracle equivalence",
            exhaustive_oracle_equivalence,
        ),
        ("polynomial cross-check", polynomial_cross_check),
        ("golden values", golden_values),
        ("Gallai-Edmonds soundness", gallai_edmonds_soundness),
        ("M(G) well-definedness and correctness", m_statistic),
        ("zero-nullity characterization", zero_characterization),
        ("unicyclic theorems", unicyclic),
        ("line-graph theorems", line_graphs),
        ("factor-critical graphs", factor_critical),
        ("determinism", determinism),
    ];
    // Criterion numbers given as arguments restrict the run.
    let selected: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut all_ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !selected.is_empty() && !selected.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let v = run();
        all_ok &= v.ok;
        println!(
            "criterion {:>2} [{}] {name} ({:.1}s): {}",
            i + 1,
            if v.ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            v.detail
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
