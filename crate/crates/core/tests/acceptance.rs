//! The twelve acceptance criteria, one line of output each. Runs without the
//! libtest harness so the lines are never captured.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use shatter_basis::closedform::{bound, count_ni, BoundName, BoundParams};
use shatter_basis::tuples::{hamming_sphere, max_shattered_size};
use shatter_basis::verify::{counterexample_search, run_suite, Report, SuiteParams, Theorem};

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Result<String, String>,
}

fn suite(name: &str, params: SuiteParams) -> Result<Report, String> {
    let r = run_suite(name, &params).map_err(|e| format!("{name}: {e}"))?;
    if r.passed() {
        Ok(r)
    } else {
        Err(format!("{name}: {} failures, first {:?}", r.failures.len(), r.failures.first()))
    }
}

fn expect_checked(r: &Report, n: u64) -> Result<(), String> {
    if r.checked == n {
        Ok(())
    } else {
        Err(format!("{}: expected {n} instances, checked {}", r.suite, r.checked))
    }
}

fn c1() -> Result<String, String> {
    let a = suite("sm-cardinality", SuiteParams::new().n(2).q(3))?;
    expect_checked(&a, 511)?;
    let b = suite("sm-cardinality", SuiteParams::new().n(4).q(3).samples(500).max_size(40).seed(1))?;
    expect_checked(&b, 500)?;
    Ok(format!("{} exhaustive + {} random systems", a.checked, b.checked))
}

fn c2() -> Result<String, String> {
    let r = suite("hr", SuiteParams::new().n(6))?;
    expect_checked(&r, 28)?;
    Ok("28 (n, d) instances, both orders".into())
}

fn c3() -> Result<String, String> {
    let a = suite("unif", SuiteParams::new().n(4).q(2))?;
    let b = suite("unif", SuiteParams::new().n(4).q(3))?;
    let c = suite("unif", SuiteParams::new().n(3).q(4))?;
    Ok(format!("{} instances", a.checked + b.checked + c.checked))
}

fn c4() -> Result<String, String> {
    let a = suite("monom-blowup", SuiteParams::new().n(3).q(3))?;
    expect_checked(&a, 255)?;
    let b = suite("monom-blowup", SuiteParams::new().n(4).q(3).samples(100).seed(4))?;
    expect_checked(&b, 100)?;
    Ok("255 exhaustive + 100 random families".into())
}

fn c5() -> Result<String, String> {
    let r = suite("szam", SuiteParams::new().n(8).q(4))?;
    Ok(format!("{} (n, q, i) counts", r.checked))
}

fn c6() -> Result<String, String> {
    let r = suite("main-ballot", SuiteParams::new().n(4).q(3))?;
    Ok(format!("{} (n, d) slices", r.checked))
}

fn c7() -> Result<String, String> {
    let a = suite("alap", SuiteParams::new().n(4).q(3).samples(500).max_size(40).seed(7))?;
    expect_checked(&a, 500)?;
    let b = suite("alap-certificate", SuiteParams::new().n(4).q(3).samples(100).max_size(40).seed(7))?;
    expect_checked(&b, 100)?;
    Ok("500 systems, 100 certificates".into())
}

fn c8() -> Result<String, String> {
    let mut checked = 0;
    for th in [Theorem::Main1, Theorem::Main2] {
        let r = counterexample_search(th, 2, 3, true, 0, 0).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("{:?}: {:?}", th, r.failures.first()));
        }
        checked += r.checked;
    }
    let sharp = suite("main2-sharpness", SuiteParams::new().n(4).d(2).s(2).q(3))?;
    let b = bound(BoundName::Main2, BoundParams::new(4).d(2).s(2).q(3)).map_err(|e| e.to_string())?.value;
    let sphere = hamming_sphere(4, 2, 3).map_err(|e| e.to_string())?;
    if b != BigInt::from(24) || sphere.len() != 24 || max_shattered_size(&sphere) != Some(2) {
        return Err(format!("sharpness at (4,2,2,3): bound {b}, |V| {}", sphere.len()));
    }
    let gap = suite("main2-sharpness", SuiteParams::new().n(3).d(1).s(1).q(3))?;
    let low: BigInt = (0..=1).map(|i| count_ni(3, 1, 3, 1, i).expect("valid")).sum();
    let b = bound(BoundName::Main2, BoundParams::new(3).d(1).s(1).q(3)).map_err(|e| e.to_string())?.value;
    Ok(format!(
        "{checked} candidate systems, 0 violations; 24 = 24 ({} check); gap at (3,1,1,3): {low} < {b} ({} check)",
        sharp.checked, gap.checked
    ))
}

fn c9() -> Result<String, String> {
    let r = suite("km-sharpness", SuiteParams::new().n(4).s(2).q(3))?;
    Ok(format!("{} (n, s, q) instances", r.checked))
}

fn c10() -> Result<String, String> {
    let a = suite("alon-compress", SuiteParams::new().n(2).q(2))?;
    let b = suite("alon-compress", SuiteParams::new().n(2).q(3))?;
    let c = suite("alon-compress", SuiteParams::new().n(4).q(3).samples(200).max_size(30).seed(10))?;
    expect_checked(&a, 15)?;
    expect_checked(&b, 511)?;
    expect_checked(&c, 200)?;
    Ok("15 + 511 exhaustive, 200 random".into())
}

fn c11() -> Result<String, String> {
    let r = suite("shatter-cap", SuiteParams::new().n(3).q(3))?;
    Ok(format!("{} uniform subsystems", r.checked))
}

fn c12() -> Result<String, String> {
    let r = suite("q2-consistency", SuiteParams::new().n(12))?;
    Ok(format!("{} (n, s) pairs", r.checked))
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "|SM(I(V))| = |V|", budget: Duration::from_secs(60), run: c1 },
    Criterion { id: 2, title: "binary uniform normal set", budget: Duration::from_secs(10), run: c2 },
    Criterion { id: 3, title: "Hamming sphere normal set", budget: Duration::from_secs(60), run: c3 },
    Criterion { id: 4, title: "blow-up normal set and basis", budget: Duration::from_secs(300), run: c4 },
    Criterion { id: 5, title: "ballot counts", budget: Duration::from_secs(30), run: c5 },
    Criterion { id: 6, title: "uniform normal sets lie in the ballot class", budget: Duration::from_secs(120), run: c6 },
    Criterion { id: 7, title: "full-power monomials force shattering", budget: Duration::from_secs(120), run: c7 },
    Criterion { id: 8, title: "uniform / Hamming bounds and sharpness", budget: Duration::from_secs(120), run: c8 },
    Criterion { id: 9, title: "Karpovsky-Milman sharpness", budget: Duration::from_secs(30), run: c9 },
    Criterion { id: 10, title: "downward-closed compression", budget: Duration::from_secs(120), run: c10 },
    Criterion { id: 11, title: "uniform shatter cap", budget: Duration::from_secs(120), run: c11 },
    Criterion { id: 12, title: "q = 2 consistency", budget: Duration::from_secs(1), run: c12 },
];

fn main() {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if elapsed <= c.budget => "PASS",
            _ => "FAIL",
        };
        let detail = match &outcome {
            Ok(s) => s.clone(),
            Err(e) => e.clone(),
        };
        println!(
            "[{verdict}] {:>2} {} ({:.2?} of {:?}): {detail}",
            c.id, c.title, elapsed, c.budget
        );
        if verdict == "FAIL" {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: 12/12 criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
