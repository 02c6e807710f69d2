//! Run a few verification suites and a counterexample search.
//!
//!     cargo run --release --example verification_sweep

use shatter_basis::verify::{counterexample_search, run_suite, SuiteParams, Theorem};

fn main() -> shatter_basis::Result<()> {
    let runs = [
        ("hr", SuiteParams::new().n(6)),
        ("unif", SuiteParams::new().n(4).q(3)),
        ("monom-blowup", SuiteParams::new().n(3).q(3)),
        ("alap", SuiteParams::new().n(4).q(3).samples(100).max_size(40).seed(1)),
        ("main2-sharpness", SuiteParams::new().n(4).d(2).s(2).q(3)),
    ];
    for (name, params) in runs {
        let r = run_suite(name, &params)?;
        println!("{:<16} {:>5} checked  {:>3} failures  {:>5} ms  {}", r.suite, r.checked, r.failures.len(), r.elapsed_ms, r.verdict);
    }
    let r = counterexample_search(Theorem::Main1, 2, 3, true, 0, 0)?;
    println!("{}", r.to_json());
    Ok(())
}
