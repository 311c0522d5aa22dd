//! One PASS/FAIL line per acceptance criterion, each with its time budget.
//! Run with `cargo test -p orbits-core --test acceptance -- --nocapture`.

use std::time::Duration;

use orbits_core::exceptional::table;
use orbits_core::suites::{run_suite, SuiteBounds};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: &'static str,
    budget: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "exceptional m-values", suite: "table-m-values", budget: secs(1) },
    Criterion { id: 2, title: "exceptional classifications", suite: "table-classification", budget: secs(1) },
    Criterion { id: 3, title: "root-system cross-check", suite: "root-system", budget: secs(5) },
    Criterion { id: 4, title: "metaplectic recipe vs brute force", suite: "metaplectic-recipe", budget: secs(30) },
    Criterion { id: 5, title: "transpose duality", suite: "transpose-duality", budget: secs(30) },
    Criterion { id: 6, title: "m-formula equivalence", suite: "m-formula", budget: secs(60) },
    Criterion { id: 7, title: "raising chains reach the expansion", suite: "raise-chain", budget: secs(120) },
    Criterion { id: 8, title: "condition laws", suite: "condition-laws", budget: secs(10) },
    Criterion { id: 9, title: "sl2 character laws", suite: "sl2-laws", budget: secs(5) },
    Criterion { id: 10, title: "form tracking", suite: "form-tracking", budget: secs(5) },
];

#[test]
fn acceptance() {
    let bounds = SuiteBounds::default();
    let rows = table();
    let mut failures = Vec::new();
    for c in CRITERIA {
        let rep = run_suite(c.suite, &bounds, rows).expect("known suite");
        let in_time = rep.elapsed <= c.budget;
        let ok = rep.passed() && in_time;
        println!(
            "{} {:>2} {:<36} checked {:>7}, failed {:>3}, {:>8.3}s (budget {}s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            rep.checked,
            rep.failed,
            rep.elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for w in &rep.witnesses {
            println!("       witness: {w}");
        }
        if !ok {
            failures.push(c.id);
        }
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
