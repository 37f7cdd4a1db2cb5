use pernull_core::verify::{run_verification, CorpusSpec};

#[test]
fn interpolation_matches_sachs_on_random_graphs_up_to_12() {
    let spec = CorpusSpec::random_gnp(10, 12, 150, 0.4, 12);
    let r = run_verification(&spec, &["sachs_vs_interpolation", "coefficient_signs"]).unwrap();
    assert!(r.passed(), "{}", r.table());
    assert_eq!(r.graphs, 150);
}

#[test]
fn nullity_and_matching_checks_on_random_graphs() {
    let spec = CorpusSpec::random_gnp(1, 14, 400, 0.2, 21);
    let checks = [
        "oracle_equivalence",
        "max_sachs_order",
        "additivity",
        "ge_soundness",
        "ge_deletion",
        "m_statistic_oracle",
        "m_positive",
        "linear_case",
        "nullity_bounds",
    ];
    let r = run_verification(&spec, &checks).unwrap();
    assert!(r.passed(), "{}", r.table());
}

#[test]
fn oracle_equivalence_on_line_graphs() {
    let spec = CorpusSpec::all_connected_labeled(2, 5).then(pernull_core::Stage::LineGraphsOf);
    let r = run_verification(&spec, &["oracle_equivalence", "zero_characterization"]).unwrap();
    assert!(r.passed(), "{}", r.table());
}

/// Every labeled graph on 7 vertices through both polynomial routes.
/// Takes several minutes on one core: `cargo test --test extended -- --ignored`.
#[test]
#[ignore]
fn interpolation_matches_sachs_on_all_labeled_7() {
    let r = run_verification(&CorpusSpec::all_labeled(7, 7), &["sachs_vs_interpolation"]).unwrap();
    assert!(r.passed(), "{}", r.table());
    assert_eq!(r.graphs, 1 << 21);
}
