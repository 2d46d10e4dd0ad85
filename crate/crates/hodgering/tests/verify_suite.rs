//! Run the full self-verification suite — the machinery behind the CLI
//! `verify` subcommand — at the degree the continuous checks use.

use hodgering::verify::{run_all, VerifyConfig};

#[test]
fn full_suite_at_degree_six() {
    let cfg = VerifyConfig {
        max_degree: 6,
        samples: 100,
        ..VerifyConfig::default()
    };
    let outcomes = run_all(&cfg);
    for o in &outcomes {
        println!("[verify] {}: {} ({})", o.tag, if o.passed { "pass" } else { "FAIL" }, o.detail);
    }
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.tag)
        .collect();
    assert!(failed.is_empty(), "failing checks: {failed:?}");
}
