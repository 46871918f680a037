//! Acceptance harness: one pass/fail line per criterion, then a nonzero exit
//! status if any criterion failed.

use std::process::ExitCode;
use std::time::Instant;

use grothlab::shapes::part;
use grothlab::suite::{self, Check};

fn criterion(k: usize, title: &str, run: impl FnOnce() -> Vec<Check>) -> bool {
    let start = Instant::now();
    let checks = run();
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.holds).collect();
    let status = if failed.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {k} {status}: {title} ({} checks, {:.1}s)", checks.len(), start.elapsed().as_secs_f64());
    for c in failed {
        println!("    {c}");
    }
    checks.iter().all(|c| c.holds) && !checks.is_empty()
}

fn main() -> ExitCode {
    let results = [
        criterion(1, "pinned worked examples", suite::pinned),
        criterion(2, "route agreement in the 3x3 box, n=3, two t-variables", || suite::routes(3, 3, 3, 2)),
        criterion(3, "identity suite", || suite::identities(&suite::identity_suite())),
        criterion(4, "integrability", || {
            let mut v: Vec<Check> = suite::YBE_MODELS.iter().map(|m| suite::ybe(m).expect("bundled model")).collect();
            v.push(suite::ybe("perturbed").expect("control"));
            v.extend(suite::operators(5));
            v
        }),
        criterion(5, "difference operators", || suite::diffops(2)),
        criterion(6, "last-passage probabilities", || suite::probability(100_000, 42)),
        criterion(7, "bijections", || suite::bijections(&part(&[3, 2, 1]), 3)),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
