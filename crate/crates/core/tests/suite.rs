use serde_json::Value;

use mzv_shuffle::numerics::Precision;
use mzv_shuffle::verify::{check_duality, check_ohno, render_json, render_text, run_suite, CheckKind};
use mzv_shuffle::wordalg::{admissible_up_to, compositions, Index};
use mzv_shuffle::Execution;

fn prec() -> Precision {
    Precision::new(1e-6).unwrap()
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

#[test]
fn exact_checks_up_to_six() {
    let which =
        names(&["s_map_hook_expansion", "weighted_hook_sum", "alternating_single_shuffle", "alternating_hook_shuffle"]);
    let results = run_suite(6, 6, prec(), &which, Execution::Parallel).unwrap();
    assert_eq!(results.len(), 4 * 36);
    for r in &results {
        assert_eq!(r.kind, CheckKind::Exact);
        assert!(r.passed, "{} {}: {:?}", r.name, r.params_label(), r.detail_terms);
    }
}

#[test]
fn default_suite_passes_on_four_by_four() {
    let results = run_suite(4, 4, prec(), &[], Execution::Parallel).unwrap();
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).collect();
    assert!(failed.is_empty(), "{failed:?}");
}

#[test]
fn duality_and_ohno_through_weight_nine() {
    for k in admissible_up_to(9) {
        let r = check_duality(&k, prec());
        assert!(r.passed, "{r:?}");
    }
    for k in admissible_up_to(7) {
        for l in 0..=2 {
            let r = check_ohno(&k, l, prec());
            assert!(r.passed, "{r:?}");
        }
    }
}

#[test]
fn sequential_and_parallel_reports_are_identical() {
    let a = run_suite(3, 3, prec(), &[], Execution::Sequential).unwrap();
    let b = run_suite(3, 3, prec(), &[], Execution::Parallel).unwrap();
    assert_eq!(render_json(&a), render_json(&b));
    assert_eq!(render_text(&a), render_text(&b));
}

#[test]
fn json_report_schema() {
    let results =
        run_suite(2, 2, prec(), &names(&["duality", "weighted_hook_sum", "canary"]), Execution::Parallel).unwrap();
    let v: Value = serde_json::from_str(&render_json(&results)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), results.len());
    let canary = rows.iter().find(|r| r["name"] == "canary").unwrap();
    assert_eq!(canary["passed"], false);
    assert_eq!(canary["detail_terms"], serde_json::json!(["1*(2,1)"]));
    let dual = rows.iter().find(|r| r["name"] == "duality").unwrap();
    assert_eq!(dual["params"], serde_json::json!({"k1": 2}));
    assert!(dual["residual_value"].is_number() && dual["residual_err"].is_number());
    let exact = rows.iter().find(|r| r["name"] == "weighted_hook_sum").unwrap();
    assert_eq!(exact["params"], serde_json::json!({"k": 1, "n": 1}));
    assert!(exact["residual_value"].is_null());
}

#[test]
fn index_rendering_round_trips() {
    for w in 1..=12 {
        for d in 1..=w {
            for k in compositions(w, d) {
                assert_eq!(k.to_string().parse::<Index>().unwrap(), k);
            }
        }
    }
}
