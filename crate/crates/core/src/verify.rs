//! Verification sweeps: closed forms against the vanishing-ideal engine,
//! exhaustive or seeded counterexample searches for the bounds, and
//! sharpness witnesses.
//!
//! Every sweep first materializes its instance list (sequentially, so seeded
//! sampling does not depend on scheduling), then checks the instances in
//! parallel and keeps failures in instance order.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closedform::{
    binomial, bound, certificate_leading_coefficient, certified_leading_monomial, count_ballot, count_mi,
    count_ni, gb_blowup, shatter_cap, sm_blowup, sm_hamming_sphere, sm_uniform_binary,
    uniform_leading_certificate, BoundName, BoundParams,
};
use crate::compress::{alon_compress, is_downward_closed};
use crate::error::{Error, Result};
use crate::ideals::{certify_groebner, non_shatter_certificate, vanishing_basis, PointSet};
use crate::linalg;
use crate::polyring::{Monomial, Rational, TermOrder};
use crate::tuples::{
    all_tuples, ballot_member, blow_up, complete_uniform, h_family, hamming_sphere, km_extremal,
    lower_bound_slice, max_shattered_size, qslice_degree, shattered_family, shatters, support, trace_size,
    CoordSet, SetFamily, Tuple,
};

/// Upper limit on the number of candidate systems an exhaustive sweep visits.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

/// Suite parameters. Unset fields take per-suite defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<TermOrder>,
    /// Draw this many random instances instead of sweeping exhaustively.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    /// Largest random system size.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Worker threads; not part of the reported parameters.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

impl SuiteParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    pub fn s(mut self, s: usize) -> Self {
        self.s = Some(s);
        self
    }

    pub fn q(mut self, q: u32) -> Self {
        self.q = Some(q);
        self
    }

    pub fn order(mut self, ord: TermOrder) -> Self {
        self.order = Some(ord);
        self
    }

    pub fn samples(mut self, k: usize) -> Self {
        self.samples = Some(k);
        self
    }

    pub fn max_size(mut self, k: usize) -> Self {
        self.max_size = Some(k);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }

    fn orders(&self) -> Vec<TermOrder> {
        match self.order {
            Some(o) => vec![o],
            None => TermOrder::ALL.to_vec(),
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// One failed instance, with enough data to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: Value,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(params: Value, expected: impl ToString, actual: impl ToString) -> Self {
        Failure { params, expected: expected.to_string(), actual: actual.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: SuiteParams,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Equality of everything that is serialized, except the wall time.
    pub fn same_outcome(&self, other: &Report) -> bool {
        let strip = |r: &Report| Report {
            elapsed_ms: 0,
            params: SuiteParams { jobs: None, ..r.params.clone() },
            ..r.clone()
        };
        strip(self) == strip(other)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        writeln!(f, "params: {}", serde_json::to_string(&self.params).unwrap_or_default())?;
        writeln!(f, "checked: {}", self.checked)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for fl in &self.failures {
            writeln!(f, "  {} expected {} got {}", fl.params, fl.expected, fl.actual)?;
        }
        writeln!(f, "elapsed_ms: {}", self.elapsed_ms)?;
        write!(f, "verdict: {}", self.verdict)
    }
}

/// Suite catalogue: name and one-line description.
pub const SUITES: &[(&str, &str)] = &[
    ("sm-cardinality", "|SM(I(V))| = |V|, downward closure and a certified basis, for subsets of (q)^n"),
    ("hr", "binary uniform slice normal set vs the engine, all d <= n' <= n"),
    ("unif", "Hamming sphere normal set vs the engine, all d <= n' <= n"),
    ("monom-blowup", "blow-up normal set and basis vs the engine, families in 2^[n]"),
    ("szam", "ballot counts vs enumeration, n' <= n, q' <= q"),
    ("main-ballot", "SM(I(U(n',d,q))) lies in the ballot class, n' <= n"),
    ("leading-certificate", "certificate polynomials for H(t) vanish and have the claimed leading term"),
    ("kicsi", "low-degree part of a binary uniform normal set, n' <= n"),
    ("alap", "full-power standard monomials force shattering, random V"),
    ("alap-certificate", "non-shattering certificates vanish with the claimed leading monomial"),
    ("main1-search", "counterexample search for the uniform bound"),
    ("main2-search", "counterexample search for the Hamming bound"),
    ("km-search", "counterexample search for the Karpovsky-Milman bound"),
    ("becsles", "uniform systems without shattered (s+1)-sets vs |SM ∩ X_<=s|"),
    ("becsles3", "M_i / N_i counts and the per-i estimate"),
    ("main2-sharpness", "Hamming sphere attains the bound when s+d = n; strict gap otherwise"),
    ("km-sharpness", "W(n,s,q) attains the KM bound; the lower-bound slice is large enough"),
    ("alon-compress", "downward-closed compression invariants"),
    ("shatter-cap", "uniform systems shatter nothing above ceil(d/(q-1))"),
    ("q2-consistency", "uniform bounds collapse to C(n,s) at q = 2"),
];

/// Run a named suite.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<Report> {
    let start = Instant::now();
    let run = || -> Result<Outcome> {
        match name {
            "sm-cardinality" => suite_sm_cardinality(params),
            "hr" => suite_hr(params),
            "unif" => suite_unif(params),
            "monom-blowup" => suite_monom(params),
            "szam" => suite_szam(params),
            "main-ballot" => suite_main_ballot(params),
            "leading-certificate" => suite_leading_certificate(params),
            "kicsi" => suite_kicsi(params),
            "alap" => suite_alap(params),
            "alap-certificate" => suite_alap_certificate(params),
            "main1-search" => search(Theorem::Main1, params),
            "main2-search" => search(Theorem::Main2, params),
            "km-search" => search(Theorem::Km, params),
            "becsles" => suite_becsles(params),
            "becsles3" => suite_becsles3(params),
            "main2-sharpness" => suite_main2_sharpness(params),
            "km-sharpness" => suite_km_sharpness(params),
            "alon-compress" => suite_alon(params),
            "shatter-cap" => suite_shatter_cap(params),
            "q2-consistency" => suite_q2(params),
            other => Err(Error::UnknownSuite(other.to_string())),
        }
    };
    let outcome = match params.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::ParameterOutOfRange(format!("jobs: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let verdict = if outcome.failures.is_empty() { Verdict::Pass } else { Verdict::Fail };
    Ok(Report {
        suite: name.to_string(),
        params: params.clone(),
        checked: outcome.checked,
        failures: outcome.failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Main1,
    Main2,
    Km,
}

/// Look for systems violating a bound.
///
/// Candidates are the subsystems of `U(n,d,q)` (main1), `V(n,d,q)` (main2)
/// or `(q)^n` (km), every one of them when `exhaustive`, otherwise
/// `samples` seeded random ones. Each candidate is checked against every `s`
/// allowed by the theorem for which it shatters no `(s+1)`-set.
pub fn counterexample_search(
    theorem: Theorem,
    n: usize,
    q: u32,
    exhaustive: bool,
    seed: u64,
    samples: usize,
) -> Result<Report> {
    let mut params = SuiteParams::new().n(n).q(q).seed(seed);
    if !exhaustive {
        params = params.samples(samples);
    }
    let name = match theorem {
        Theorem::Main1 => "main1-search",
        Theorem::Main2 => "main2-search",
        Theorem::Km => "km-search",
    };
    run_suite(name, &params)
}

/// Run the sweep comparing a closed form with its brute-force counterpart.
pub fn oracle_diff(name: &str, params: &SuiteParams) -> Result<Report> {
    let suite = match name {
        "hr" => "hr",
        "unif" => "unif",
        "monom" | "monom-blowup" => "monom-blowup",
        "szam" => "szam",
        "kicsi" => "kicsi",
        "becsles3" | "mi" | "ni" => "becsles3",
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    run_suite(suite, params)
}

struct Outcome {
    checked: u64,
    failures: Vec<Failure>,
}

fn sweep<I, F>(items: Vec<I>, check: F) -> Outcome
where
    I: Send + Sync,
    F: Fn(&I) -> Vec<Failure> + Sync + Send,
{
    let failures: Vec<Failure> = items.par_iter().flat_map_iter(&check).collect();
    Outcome { checked: items.len() as u64, failures }
}

fn point_set_json(v: &PointSet) -> Value {
    json!({ "n": v.n(), "q": v.q(), "points": v.points() })
}

fn family_json(f: &SetFamily) -> Value {
    json!({ "n": f.n(), "members": f.members().iter().collect::<Vec<_>>() })
}

fn monomial_set_string(ms: &BTreeSet<Monomial>) -> String {
    let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn set_diff_failure(params: Value, expected: &BTreeSet<Monomial>, actual: &BTreeSet<Monomial>) -> Failure {
    let missing: BTreeSet<Monomial> = expected.difference(actual).cloned().collect();
    let extra: BTreeSet<Monomial> = actual.difference(expected).cloned().collect();
    Failure::new(
        params,
        format!("closed form {}", monomial_set_string(expected)),
        format!("engine missing {} extra {}", monomial_set_string(&missing), monomial_set_string(&extra)),
    )
}

fn require<T: Copy>(value: Option<T>, default: T) -> T {
    value.unwrap_or(default)
}

fn check_range(what: &str, value: usize, max: usize) -> Result<()> {
    if value > max {
        return Err(Error::ParameterOutOfRange(format!("{what} = {value} exceeds the suite limit {max}")));
    }
    Ok(())
}

fn check_q(q: u32, max: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    check_range("q", q as usize, max as usize)
}

/// Every nonempty subsystem of `ambient`, or seeded random ones.
fn subsystems(ambient: &PointSet, params: &SuiteParams, rng: &mut ChaCha8Rng) -> Result<Vec<PointSet>> {
    match params.samples {
        Some(k) => Ok(random_subsystems(ambient, k, params.max_size, rng)),
        None => {
            let m = ambient.len();
            if m >= 64 || (1u64 << m) > EXHAUSTIVE_LIMIT {
                return Err(Error::Infeasible(format!(
                    "{} nonempty subsystems of a {m}-point ambient exceed the exhaustive limit; pass samples",
                    if m >= 64 { "too many".to_string() } else { ((1u64 << m) - 1).to_string() }
                )));
            }
            Ok((1..(1u64 << m)).map(|mask| ambient.select(mask)).collect())
        }
    }
}

/// `count` uniform random nonempty subsystems, sizes uniform in `1..=max_size`.
fn random_subsystems(ambient: &PointSet, count: usize, max_size: Option<usize>, rng: &mut ChaCha8Rng) -> Vec<PointSet> {
    let m = ambient.len();
    let cap = max_size.unwrap_or(m).clamp(1, m.max(1));
    (0..count)
        .filter(|_| m > 0)
        .map(|_| {
            let size = rng.gen_range(1..=cap);
            let idx = sample(rng, m, size);
            let pts: Vec<Tuple> = idx.iter().map(|i| ambient.points()[i].clone()).collect();
            PointSet::from_tuples(ambient.n(), ambient.q(), pts).expect("subsystem of a valid ambient")
        })
        .collect()
}

fn suite_sm_cardinality(p: &SuiteParams) -> Result<Outcome> {
    let (n, q) = (require(p.n, 2), require(p.q, 3));
    check_range("n", n, 8)?;
    check_q(q, 8)?;
    let ambient = PointSet::full(n, q);
    let systems = subsystems(&ambient, p, &mut p.rng())?;
    let orders = p.orders();
    Ok(sweep(systems, |v| {
        let mut fails = Vec::new();
        for &ord in &orders {
            let ctx = || json!({ "order": ord, "V": point_set_json(v) });
            match vanishing_basis(v, ord) {
                Err(e) => fails.push(Failure::new(ctx(), "basis", e)),
                Ok((gb, sm)) => {
                    if sm.len() != v.len() {
                        fails.push(Failure::new(ctx(), format!("|SM| = {}", v.len()), format!("|SM| = {}", sm.len())));
                    }
                    if !sm.is_downward_closed() {
                        fails.push(Failure::new(ctx(), "downward closed SM", "not downward closed"));
                    }
                    if !certify_groebner(v, &gb.generators, ord) {
                        fails.push(Failure::new(ctx(), "certified basis", "certificate rejected"));
                    }
                }
            }
        }
        fails
    }))
}

fn suite_hr(p: &SuiteParams) -> Result<Outcome> {
    let n_max = require(p.n, 6);
    check_range("n", n_max, 12)?;
    let orders = p.orders();
    let items: Vec<(usize, usize)> = (0..=n_max).flat_map(|n| (0..=n).map(move |d| (n, d))).collect();
    Ok(sweep(items, |&(n, d)| {
        let mut fails = Vec::new();
        let closed = sm_uniform_binary(n, d).expect("d <= n");
        let u = complete_uniform(n, d as u32, 2).expect("d <= n");
        for &ord in &orders {
            let ctx = json!({ "n": n, "d": d, "order": ord });
            match vanishing_basis(&u, ord) {
                Ok((_, sm)) if sm.same_set(&closed) => {}
                Ok((_, sm)) => fails.push(set_diff_failure(ctx, &closed.monomials, &sm.monomials)),
                Err(e) => fails.push(Failure::new(ctx, "basis", e)),
            }
        }
        let expected_len = binomial(n as i64, d as i64);
        if BigInt::from(closed.len()) != expected_len {
            fails.push(Failure::new(json!({ "n": n, "d": d }), format!("|SM| = C(n,d) = {expected_len}"), closed.len()));
        }
        fails
    }))
}

fn suite_unif(p: &SuiteParams) -> Result<Outcome> {
    let (n_max, q) = (require(p.n, 4), require(p.q, 3));
    check_range("n", n_max, 8)?;
    check_q(q, 6)?;
    let orders = p.orders();
    let items: Vec<(usize, usize)> = (0..=n_max).flat_map(|n| (0..=n).map(move |d| (n, d))).collect();
    Ok(sweep(items, |&(n, d)| {
        let mut fails = Vec::new();
        let closed = sm_hamming_sphere(n, d, q).expect("valid parameters");
        let v = hamming_sphere(n, d, q).expect("valid parameters");
        let size = binomial(n as i64, d as i64) * num_traits::pow(BigInt::from(q - 1), d);
        if BigInt::from(closed.len()) != size || BigInt::from(v.len()) != size {
            fails.push(Failure::new(
                json!({ "n": n, "d": d, "q": q }),
                format!("C(n,d)(q-1)^d = {size}"),
                format!("closed form {}, sphere {}", closed.len(), v.len()),
            ));
        }
        for &ord in &orders {
            let ctx = json!({ "n": n, "d": d, "q": q, "order": ord });
            match vanishing_basis(&v, ord) {
                Ok((_, sm)) if sm.same_set(&closed) => {}
                Ok((_, sm)) => fails.push(set_diff_failure(ctx, &closed.monomials, &sm.monomials)),
                Err(e) => fails.push(Failure::new(ctx, "basis", e)),
            }
        }
        fails
    }))
}

fn suite_monom(p: &SuiteParams) -> Result<Outcome> {
    let (n, q) = (require(p.n, 3), require(p.q, 3));
    check_range("n", n, 5)?;
    check_q(q, 5)?;
    let subsets = 1usize << n;
    let families: Vec<SetFamily> = match p.samples {
        Some(k) => {
            let mut rng = p.rng();
            (0..k)
                .map(|_| {
                    let size = rng.gen_range(1..=p.max_size.unwrap_or(subsets).clamp(1, subsets));
                    let idx = sample(&mut rng, subsets, size);
                    SetFamily::new(n, idx.iter().map(|i| CoordSet::from_bits(i as u64))).expect("subsets of [n]")
                })
                .collect()
        }
        None => {
            if subsets >= 64 || (1u64 << subsets) > EXHAUSTIVE_LIMIT {
                return Err(Error::Infeasible(format!("all families in 2^[{n}]; pass samples")));
            }
            (1..(1u64 << subsets)).map(|mask| SetFamily::from_mask(n, mask)).collect()
        }
    };
    let orders = p.orders();
    Ok(sweep(families, |f| {
        let mut fails = Vec::new();
        let blown = match blow_up(f, q) {
            Ok(b) => b,
            Err(e) => return vec![Failure::new(family_json(f), "blow-up", e)],
        };
        let expected_size: usize = f.members().iter().map(|m| (q as usize - 1).pow(m.len() as u32)).sum();
        if blown.len() != expected_size {
            fails.push(Failure::new(family_json(f), format!("|F^q| = {expected_size}"), blown.len()));
        }
        for &ord in &orders {
            let ctx = || json!({ "F": family_json(f), "q": q, "order": ord });
            let brute = match vanishing_basis(&blown, ord) {
                Ok((_, sm)) => sm,
                Err(e) => {
                    fails.push(Failure::new(ctx(), "basis", e));
                    continue;
                }
            };
            match sm_blowup(f, q, ord) {
                Ok(closed) if closed.same_set(&brute) => {}
                Ok(closed) => fails.push(set_diff_failure(ctx(), &closed.monomials, &brute.monomials)),
                Err(e) => fails.push(Failure::new(ctx(), "closed form", e)),
            }
            match gb_blowup(f, q, ord) {
                Ok(gb) if certify_groebner(&blown, &gb, ord) => {}
                Ok(_) => fails.push(Failure::new(ctx(), "certified union basis", "certificate rejected")),
                Err(e) => fails.push(Failure::new(ctx(), "union basis", e)),
            }
        }
        fails
    }))
}

fn suite_szam(p: &SuiteParams) -> Result<Outcome> {
    let (n_max, q_max) = (require(p.n, 8), require(p.q, 4));
    check_range("n", n_max, 10)?;
    check_q(q_max, 6)?;
    let items: Vec<(usize, u32)> = (0..=n_max).flat_map(|n| (2..=q_max).map(move |q| (n, q))).collect();
    let per_item = sweep(items, |&(n, q)| {
        let mut counts = vec![0u64; n + 1];
        for t in all_tuples(n, q) {
            if ballot_member(&t, q).expect("in range") {
                counts[qslice_degree(&t.to_monomial(), q).expect("in range")] += 1;
            }
        }
        (0..=n / 2)
            .filter_map(|i| {
                let formula = count_ballot(n, q, i).expect("i <= n/2");
                (formula != BigInt::from(counts[i])).then(|| {
                    Failure::new(json!({ "n": n, "q": q, "i": i }), format!("formula {formula}"), counts[i])
                })
            })
            .collect()
    });
    let checked = (0..=n_max).map(|n| (n / 2 + 1) as u64).sum::<u64>() * (q_max as u64 - 1);
    Ok(Outcome { checked, failures: per_item.failures })
}

fn suite_main_ballot(p: &SuiteParams) -> Result<Outcome> {
    let (n_max, q) = (require(p.n, 4), require(p.q, 3));
    check_range("n", n_max, 5)?;
    check_q(q, 4)?;
    let orders = p.orders();
    let items: Vec<(usize, u32)> =
        (1..=n_max).flat_map(|n| (0..=(q - 1) * n as u32).map(move |d| (n, d))).collect();
    Ok(sweep(items, |&(n, d)| {
        let u = complete_uniform(n, d, q).expect("valid slice");
        let mut fails = Vec::new();
        for &ord in &orders {
            let ctx = json!({ "n": n, "d": d, "q": q, "order": ord });
            match vanishing_basis(&u, ord) {
                Ok((_, sm)) => {
                    let outside: BTreeSet<Monomial> = sm
                        .iter()
                        .filter(|m| !ballot_member(&Tuple::from_monomial(m), q).unwrap_or(false))
                        .cloned()
                        .collect();
                    if !outside.is_empty() {
                        fails.push(Failure::new(ctx, "SM inside the ballot class", monomial_set_string(&outside)));
                    }
                }
                Err(e) => fails.push(Failure::new(ctx, "basis", e)),
            }
        }
        fails
    }))
}

fn suite_leading_certificate(p: &SuiteParams) -> Result<Outcome> {
    let (n_max, q) = (require(p.n, 6), require(p.q, 3));
    check_range("n", n_max, 8)?;
    check_q(q, 4)?;
    let orders = p.orders();
    let mut items = Vec::new();
    for n in 2..=n_max {
        for t in 1..=n / 2 {
            for &h in h_family(t, n).expect("valid t").members() {
                for d in 0..=(q - 1) * n as u32 {
                    items.push((n, t, h, d));
                }
            }
        }
    }
    Ok(sweep(items, |&(n, t, h, d)| {
        let u = complete_uniform(n, d, q).expect("valid slice");
        let y = certified_leading_monomial(n, h, q);
        let coeff = Rational::from_integer(certificate_leading_coefficient(t, q));
        let mut fails = Vec::new();
        for &ord in &orders {
            let ctx = || json!({ "n": n, "d": d, "q": q, "H": h, "order": ord });
            let f = match uniform_leading_certificate(n, d, q, h, ord) {
                Ok(f) => f,
                Err(e) => {
                    fails.push(Failure::new(ctx(), "certificate", e));
                    continue;
                }
            };
            if let Some(pt) = u.iter().find(|pt| !f.evaluate(pt.coords()).is_ok_and(|x| num_traits::Zero::is_zero(&x))) {
                fails.push(Failure::new(ctx(), "vanishes on U(n,d,q)", format!("nonzero at {pt}")));
            }
            match f.leading_monomial(ord) {
                Ok(lm) if *lm == y => {}
                Ok(lm) => fails.push(Failure::new(ctx(), y.to_string(), lm.to_string())),
                Err(e) => fails.push(Failure::new(ctx(), y.to_string(), e)),
            }
            if f.coefficient(&y) != coeff {
                fails.push(Failure::new(ctx(), format!("coefficient {coeff}"), f.coefficient(&y)));
            }
        }
        fails
    }))
}

fn suite_kicsi(p: &SuiteParams) -> Result<Outcome> {
    let n_max = require(p.n, 8);
    check_range("n", n_max, 12)?;
    let mut items = Vec::new();
    for n in 0..=n_max {
        for d in 0..=n {
            for s in 0..=d.min(n - d) {
                items.push((n, d, s));
            }
        }
    }
    Ok(sweep(items, |&(n, d, s)| {
        let big = sm_uniform_binary(n, d).expect("d <= n");
        let small = sm_uniform_binary(n, s).expect("s <= n");
        let low: BTreeSet<Monomial> = big.iter().filter(|m| m.degree() as usize <= s).cloned().collect();
        let mut fails = Vec::new();
        if low != small.monomials {
            fails.push(set_diff_failure(json!({ "n": n, "d": d, "s": s }), &small.monomials, &low));
        }
        // the engine agrees at small n
        if n <= 6 {
            let v = hamming_sphere(n, d, 2).expect("valid");
            let w = hamming_sphere(n, s, 2).expect("valid");
            let (Ok(sm_v), Ok(sm_w)) = (
                vanishing_basis(&v, TermOrder::DegLex),
                vanishing_basis(&w, TermOrder::DegLex),
            ) else {
                return vec![Failure::new(json!({ "n": n, "d": d, "s": s }), "basis", "engine error")];
            };
            let low_bf: BTreeSet<Monomial> =
                sm_v.1.iter().filter(|m| m.degree() as usize <= s).cloned().collect();
            if low_bf != sm_w.1.monomials {
                fails.push(set_diff_failure(json!({ "n": n, "d": d, "s": s, "engine": true }), &sm_w.1.monomials, &low_bf));
            }
        }
        fails
    }))
}

fn suite_alap(p: &SuiteParams) -> Result<Outcome> {
    let (n, q) = (require(p.n, 4), require(p.q, 3));
    check_range("n", n, 6)?;
    check_q(q, 5)?;
    let ambient = PointSet::full(n, q);
    let params = SuiteParams { samples: Some(p.samples.unwrap_or(500)), ..p.clone() };
    let systems = subsystems(&ambient, &params, &mut p.rng())?;
    let orders = p.orders();
    Ok(sweep(systems, |v| {
        let mut fails = Vec::new();
        for &ord in &orders {
            let ctx = || json!({ "order": ord, "V": point_set_json(v) });
            let sm = match vanishing_basis(v, ord) {
                Ok((_, sm)) => sm,
                Err(e) => {
                    fails.push(Failure::new(ctx(), "basis", e));
                    continue;
                }
            };
            for s in CoordSet::all_subsets(n) {
                let full_power = Monomial::power_product(n, s.iter(), q - 1);
                if sm.contains(&full_power) && !shatters(v, s) {
                    fails.push(Failure::new(ctx(), format!("{s} shattered"), "not shattered"));
                }
            }
        }
        fails
    }))
}

fn suite_alap_certificate(p: &SuiteParams) -> Result<Outcome> {
    let (n, q) = (require(p.n, 4), require(p.q, 3));
    check_range("n", n, 6)?;
    check_q(q, 5)?;
    let count = p.samples.unwrap_or(100);
    let ambient = PointSet::full(n, q);
    let mut rng = p.rng();
    let mut items = Vec::with_capacity(count);
    while items.len() < count {
        let v = random_subsystems(&ambient, 1, p.max_size, &mut rng).pop().expect("one sample");
        let s = CoordSet::from_bits(rng.gen_range(1..(1u64 << n)));
        let w = Tuple::new((0..n).map(|_| rng.gen_range(0..q)).collect());
        // drop the points agreeing with w on S so that w witnesses non-shattering
        let v = v.filter(|pt| s.iter().any(|j| pt.get(j) != w.get(j)));
        if !v.is_empty() {
            items.push((v, s, w));
        }
    }
    let orders = p.orders();
    Ok(sweep(items, |(v, s, w)| {
        let ctx = || json!({ "V": point_set_json(v), "S": s, "w": w });
        let g = match non_shatter_certificate(v, *s, w) {
            Ok(g) => g,
            Err(e) => return vec![Failure::new(ctx(), "certificate", e)],
        };
        let mut fails = Vec::new();
        if let Some(pt) = v.iter().find(|pt| !g.evaluate(pt.coords()).is_ok_and(|x| num_traits::Zero::is_zero(&x))) {
            fails.push(Failure::new(ctx(), "vanishes on V", format!("nonzero at {pt}")));
        }
        let claimed = Monomial::power_product(n, s.iter(), q - 1);
        for &ord in &orders {
            match g.leading_monomial(ord) {
                Ok(lm) if *lm == claimed => {}
                Ok(lm) => fails.push(Failure::new(ctx(), claimed.to_string(), lm.to_string())),
                Err(e) => fails.push(Failure::new(ctx(), claimed.to_string(), e)),
            }
            match vanishing_basis(v, ord).and_then(|(gb, _)| gb.reduce(&g)) {
                Ok(r) if r.is_zero() => {}
                Ok(r) => fails.push(Failure::new(ctx(), "normal form 0", r.render(ord))),
                Err(e) => fails.push(Failure::new(ctx(), "normal form 0", e)),
            }
        }
        fails
    }))
}

fn search(theorem: Theorem, p: &SuiteParams) -> Result<Outcome> {
    let (n, q) = (require(p.n, 2), require(p.q, 3));
    check_range("n", n, 8)?;
    check_q(q, 8)?;
    let mut rng = p.rng();

    // (ambient slice, d)
    let slices: Vec<(PointSet, Option<usize>)> = match theorem {
        Theorem::Main1 => (0..=(q - 1) as usize * n)
            .map(|d| complete_uniform(n, d as u32, q).map(|u| (u, Some(d))))
            .collect::<Result<_>>()?,
        Theorem::Main2 => (0..=n).map(|d| hamming_sphere(n, d, q).map(|v| (v, Some(d)))).collect::<Result<_>>()?,
        Theorem::Km => vec![(PointSet::full(n, q), None)],
    };
    if p.samples.is_none() {
        let total: u64 = slices
            .iter()
            .map(|(a, _)| if a.len() >= 63 { u64::MAX } else { (1u64 << a.len()) - 1 })
            .fold(0u64, |acc, x| acc.saturating_add(x));
        if total > EXHAUSTIVE_LIMIT {
            return Err(Error::Infeasible(format!("{total} candidate systems exceed the exhaustive limit; pass samples")));
        }
    }
    let mut items: Vec<(PointSet, Option<usize>)> = Vec::new();
    for (ambient, d) in &slices {
        for v in subsystems(ambient, p, &mut rng)? {
            items.push((v, *d));
        }
    }
    let s_values: Vec<usize> = match theorem {
        Theorem::Main1 => (0..=n / 2).collect(),
        Theorem::Main2 | Theorem::Km => (0..n).collect(),
    };
    Ok(sweep(items, |(v, d)| {
        let Some(vc) = max_shattered_size(v) else {
            return Vec::new();
        };
        let mut fails = Vec::new();
        for &s in &s_values {
            if vc > s {
                continue;
            }
            let (name, bp) = match theorem {
                Theorem::Main1 => (BoundName::Main1, BoundParams::new(n).s(s).q(q).d(d.expect("slice"))),
                Theorem::Main2 => {
                    let d = d.expect("slice");
                    if d + s > n {
                        continue;
                    }
                    (BoundName::Main2, BoundParams::new(n).s(s).q(q).d(d))
                }
                Theorem::Km => (BoundName::Km, BoundParams::new(n).s(s).q(q)),
            };
            match bound(name, bp) {
                Ok(b) if BigInt::from(v.len()) <= b.value => {}
                Ok(b) => fails.push(Failure::new(
                    json!({ "bound": name, "s": s, "d": d, "V": point_set_json(v) }),
                    format!("|V| <= {}", b.value),
                    v.len(),
                )),
                Err(e) => fails.push(Failure::new(json!({ "bound": name, "s": s, "d": d }), "bound", e)),
            }
        }
        fails
    }))
}

fn suite_becsles(p: &SuiteParams) -> Result<Outcome> {
    let (n, q) = (require(p.n, 2), require(p.q, 3));
    check_range("n", n, 4)?;
    check_q(q, 4)?;
    let ord = p.order.unwrap_or_default();
    let mut rng = p.rng();
    let mut items = Vec::new();
    for d in 0..=(q - 1) * n as u32 {
        let u = complete_uniform(n, d, q)?;
        let sm = vanishing_basis(&u, ord)?.1;
        // |SM(I(U)) ∩ X_<=s| for every s
        let caps: Vec<usize> = (0..=n)
            .map(|s| sm.iter().filter(|m| qslice_degree(m, q).is_ok_and(|i| i <= s)).count())
            .collect();
        for v in subsystems(&u, p, &mut rng)? {
            items.push((d, v, caps.clone()));
        }
    }
    Ok(sweep(items, |(d, v, caps)| {
        let vc = max_shattered_size(v).expect("nonempty");
        (vc..=n)
            .filter(|&s| v.len() > caps[s])
            .map(|s| {
                Failure::new(
                    json!({ "d": d, "s": s, "V": point_set_json(v) }),
                    format!("|V| <= |SM ∩ X_<=s| = {}", caps[s]),
                    v.len(),
                )
            })
            .collect()
    }))
}

fn suite_becsles3(p: &SuiteParams) -> Result<Outcome> {
    let (n_max, q_max) = (require(p.n, 10), require(p.q, 4));
    check_range("n", n_max, 12)?;
    check_q(q_max, 6)?;
    let mut items = Vec::new();
    for n in 0..=n_max {
        for q in 2..=q_max {
            for d in 0..=n {
                for s in 0..=n - d {
                    items.push((n, q, d, s));
                }
            }
        }
    }
    Ok(sweep(items, |&(n, q, d, s)| {
        let mut fails = Vec::new();
        let ctx = |i: usize| json!({ "n": n, "q": q, "d": d, "s": s, "i": i });
        let (ni, si) = (n as i64, s as i64);
        let mut total = BigInt::from(0);
        for i in 0..=d {
            let nn = count_ni(n, d, q, s, i).expect("valid");
            let cap = binomial(ni, si) * binomial(ni - si, i as i64) * num_traits::pow(BigInt::from(q as i64 - 2), i);
            if q >= 3 && n >= 3 && nn > cap {
                fails.push(Failure::new(ctx(i), format!("N_i <= {cap}"), &nn));
            }
            total += nn;
        }
        // counts against the normal set itself, where enumerating (q)^n is cheap
        if n <= 5 && q <= 4 {
            let sm = sm_hamming_sphere(n, d, q).expect("valid");
            for i in 0..=d {
                let members: Vec<&Monomial> = sm
                    .iter()
                    .filter(|m| m.exponents().iter().filter(|&&e| e > 0 && e < q - 1).count() == i)
                    .collect();
                let low = members.iter().filter(|m| qslice_degree(m, q).is_ok_and(|k| k <= s)).count();
                let mi = count_mi(n, d, q, i).expect("valid");
                let ni_ = count_ni(n, d, q, s, i).expect("valid");
                if mi != BigInt::from(members.len()) {
                    fails.push(Failure::new(ctx(i), format!("|M_i| = {mi}"), members.len()));
                }
                if ni_ != BigInt::from(low) {
                    fails.push(Failure::new(ctx(i), format!("|N_i| = {ni_}"), low));
                }
            }
        }
        if q >= 3 && n >= 3 {
            if let Ok(b) = bound(BoundName::Becsles3, BoundParams::new(n).d(d).s(s).q(q)) {
                if total > b.value {
                    fails.push(Failure::new(ctx(d), format!("sum N_i <= {}", b.value), &total));
                }
            }
        }
        fails
    }))
}

fn suite_main2_sharpness(p: &SuiteParams) -> Result<Outcome> {
    let (n, d, s, q) = (require(p.n, 4), require(p.d, 2), require(p.s, 2), require(p.q, 3));
    check_range("n", n, 8)?;
    check_q(q, 6)?;
    let ord = p.order.unwrap_or_default();
    let ctx = json!({ "n": n, "d": d, "s": s, "q": q });
    let b = bound(BoundName::Main2, BoundParams::new(n).d(d).s(s).q(q))?.value;
    let sphere = hamming_sphere(n, d, q)?;
    let sm = vanishing_basis(&sphere, ord)?.1;
    let low = BigInt::from(sm.iter().filter(|m| qslice_degree(m, q).is_ok_and(|k| k <= s)).count());
    let mut failures = Vec::new();
    if low > b {
        failures.push(Failure::new(ctx.clone(), format!("|SM ∩ X_<=s| <= {b}"), &low));
    }
    if s + d == n && 2 * d <= n {
        if BigInt::from(sphere.len()) != b {
            failures.push(Failure::new(ctx.clone(), format!("|V(n,d,q)| = {b}"), sphere.len()));
        }
        if max_shattered_size(&sphere).is_some_and(|vc| vc > s) {
            failures.push(Failure::new(ctx.clone(), format!("no shattered {}-set", s + 1), "shattered"));
        }
    } else if q > 2 && s + d < n && low >= b {
        failures.push(Failure::new(ctx, format!("|SM ∩ X_<=s| < {b}"), &low));
    }
    Ok(Outcome { checked: 1, failures })
}

fn suite_km_sharpness(p: &SuiteParams) -> Result<Outcome> {
    let (n_max, s_max, q_max) = (require(p.n, 4), require(p.s, 2), require(p.q, 3));
    check_range("n", n_max, 6)?;
    check_q(q_max, 5)?;
    let mut items = Vec::new();
    for n in 1..=n_max {
        for s in 0..=s_max.min(n - 1) {
            for q in 2..=q_max {
                items.push((n, s, q));
            }
        }
    }
    Ok(sweep(items, |&(n, s, q)| {
        let ctx = json!({ "n": n, "s": s, "q": q });
        let mut fails = Vec::new();
        let w = km_extremal(n, s, q).expect("s <= n");
        let b = bound(BoundName::Km, BoundParams::new(n).s(s).q(q)).expect("s < n").value;
        if BigInt::from(w.len()) != b {
            fails.push(Failure::new(ctx.clone(), format!("|W| = {b}"), w.len()));
        }
        if max_shattered_size(&w).is_some_and(|vc| vc > s) {
            fails.push(Failure::new(ctx.clone(), format!("W shatters no {}-set", s + 1), "shattered"));
        }
        let lb = lower_bound_slice(n, s, q).expect("valid");
        let denom = (q as usize - 1) * n + 1;
        if lb.x.len() * denom < w.len() {
            fails.push(Failure::new(ctx.clone(), format!("|X| >= {}/{denom}", w.len()), lb.x.len()));
        }
        if lb.x.iter().any(|t| t.sum() != lb.d) {
            fails.push(Failure::new(ctx.clone(), format!("X is {}-uniform", lb.d), "mixed sums"));
        }
        if shattered_family(&lb.x).members().iter().any(|m| m.len() > s) {
            fails.push(Failure::new(ctx, format!("Sh(X) within sets of size <= {s}"), "larger set shattered"));
        }
        fails
    }))
}

fn suite_alon(p: &SuiteParams) -> Result<Outcome> {
    let (n, q) = (require(p.n, 2), require(p.q, 3));
    check_range("n", n, 4)?;
    check_q(q, 5)?;
    let ambient = PointSet::full(n, q);
    let systems = subsystems(&ambient, p, &mut p.rng())?;
    let orders = p.orders();
    Ok(sweep(systems, |v| {
        let mut fails = Vec::new();
        for &ord in &orders {
            let ctx = || json!({ "order": ord, "V": point_set_json(v) });
            let r = match alon_compress(v, ord) {
                Ok(r) => r,
                Err(e) => {
                    fails.push(Failure::new(ctx(), "compression", e));
                    continue;
                }
            };
            let w = &r.compressed;
            if w.len() != v.len() || !is_downward_closed(w) {
                fails.push(Failure::new(ctx(), "downward closed of equal size", format!("{} points", w.len())));
            }
            for s in CoordSet::all_subsets(n) {
                let (tv, tw) = (trace_size(v, s), trace_size(w, s));
                if tw > tv {
                    fails.push(Failure::new(ctx(), format!("trace on {s} <= {tv}"), tw));
                }
                // the monomials of W supported in S stay independent on V|_S
                let restricted: Vec<&Tuple> = w.iter().filter(|u| support(u).is_subset(&s)).collect();
                let traces: BTreeSet<Vec<u32>> =
                    v.iter().map(|pt| s.iter().map(|j| pt.get(j)).collect()).collect();
                let rows: Vec<Vec<Rational>> = restricted
                    .iter()
                    .map(|u| {
                        let coords: Vec<usize> = s.iter().collect();
                        traces
                            .iter()
                            .map(|tr| {
                                let val: u64 = coords
                                    .iter()
                                    .zip(tr)
                                    .map(|(&j, &x)| (x as u64).pow(u.get(j)))
                                    .product();
                                Rational::from_integer(BigInt::from(val))
                            })
                            .collect()
                    })
                    .collect();
                if linalg::rank(&rows) != restricted.len() {
                    fails.push(Failure::new(ctx(), format!("independent on V|_{s}"), "dependent"));
                }
                if restricted.len() != tw {
                    fails.push(Failure::new(ctx(), format!("|W|_{s}| = #{{u in W: supp u ⊆ S}}"), restricted.len()));
                }
            }
        }
        fails
    }))
}

fn suite_shatter_cap(p: &SuiteParams) -> Result<Outcome> {
    let (n, q) = (require(p.n, 3), require(p.q, 3));
    check_range("n", n, 6)?;
    check_q(q, 5)?;
    let mut rng = p.rng();
    let mut items = Vec::new();
    for d in 0..=(q - 1) * n as u32 {
        let u = complete_uniform(n, d, q)?;
        if p.samples.is_none() && u.len() > 10 {
            return Err(Error::Infeasible(format!("U({n},{d},{q}) has {} points; pass samples", u.len())));
        }
        for v in subsystems(&u, p, &mut rng)? {
            items.push((d, v));
        }
    }
    Ok(sweep(items, |(d, v)| {
        let cap = shatter_cap(*d, q).expect("q >= 2") as usize;
        match shattered_family(v).members().iter().find(|m| m.len() > cap) {
            Some(m) => vec![Failure::new(
                json!({ "d": d, "V": point_set_json(v) }),
                format!("nothing above size {cap} shattered"),
                format!("{m} shattered"),
            )],
            None => Vec::new(),
        }
    }))
}

fn suite_q2(p: &SuiteParams) -> Result<Outcome> {
    let n_max = require(p.n, 12);
    check_range("n", n_max, 40)?;
    let mut items = Vec::new();
    for n in 0..=n_max {
        for s in 0..=n / 2 {
            items.push((n, s));
        }
    }
    Ok(sweep(items, |&(n, s)| {
        let ctx = |extra: Value| json!({ "n": n, "s": s, "extra": extra });
        let c = binomial(n as i64, s as i64);
        let mut fails = Vec::new();
        match bound(BoundName::Main1, BoundParams::new(n).s(s).q(2)) {
            Ok(b) if b.value == c => {}
            Ok(b) => fails.push(Failure::new(ctx(json!("main1")), &c, b.value)),
            Err(e) => fails.push(Failure::new(ctx(json!("main1")), &c, e)),
        }
        for d in 0..=n - s {
            match bound(BoundName::Main2, BoundParams::new(n).d(d).s(s).q(2)) {
                Ok(b) if b.value == c => {}
                Ok(b) => fails.push(Failure::new(ctx(json!({ "main2": d })), &c, b.value)),
                Err(e) => fails.push(Failure::new(ctx(json!({ "main2": d })), &c, e)),
            }
        }
        if 2 * (s + 1) <= n {
            match bound(BoundName::FranklPach, BoundParams::new(n).s(s)) {
                Ok(b) if b.value == c => {}
                Ok(b) => fails.push(Failure::new(ctx(json!("frankl_pach")), &c, b.value)),
                Err(e) => fails.push(Failure::new(ctx(json!("frankl_pach")), &c, e)),
            }
        }
        fails
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(run_suite("nope", &SuiteParams::new()), Err(Error::UnknownSuite("nope".into())));
        assert!(oracle_diff("nope", &SuiteParams::new()).is_err());
    }

    #[test]
    fn infeasible_exhaustive_request() {
        let r = run_suite("sm-cardinality", &SuiteParams::new().n(3).q(3));
        assert!(matches!(r, Err(Error::Infeasible(_))));
        let r = counterexample_search(Theorem::Km, 3, 3, true, 0, 0);
        assert!(matches!(r, Err(Error::Infeasible(_))));
    }

    #[test]
    fn out_of_range_params() {
        assert!(matches!(run_suite("hr", &SuiteParams::new().n(40)), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(run_suite("unif", &SuiteParams::new().q(1)), Err(Error::AlphabetTooSmall(1))));
    }

    #[test]
    fn report_json_schema() {
        let r = run_suite("q2-consistency", &SuiteParams::new().n(4)).unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["suite", "params", "checked", "failures", "elapsed_ms", "verdict"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["verdict"], "pass");
    }
}
