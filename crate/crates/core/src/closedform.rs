//! Closed-form normal sets, counting formulas and bounds.
//!
//! Everything here is computed without the vanishing-ideal engine, except
//! [`sm_blowup`] and [`gb_blowup`], which deliberately run it on the binary
//! subfamilies `F_J` instead of assuming structure the family may not have.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{vanishing_basis, StandardMonomialSet};
use crate::polyring::{bar_lift, field_polynomials, normal_form, rat, Monomial, Polynomial, TermOrder};
use crate::tuples::{all_tuples, h_family_index, jqz, subfamily_through, CoordSet, SetFamily};

/// `C(n, k)` by Pascal's rule; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as usize;
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for i in 1..=n as usize {
        for j in (1..=k.min(i)).rev() {
            let prev = row[j - 1].clone();
            row[j] += prev;
        }
    }
    row[k].clone()
}

fn ipow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Binary uniform slice: `SM(I(U(n, d, 2)))` is the set of
/// `x_U`, `U = {u_1 < ... < u_l}`, `l <= min(d, n-d)`, `u_i >= 2i`.
pub fn sm_uniform_binary(n: usize, d: usize) -> Result<StandardMonomialSet> {
    if d > n {
        return Err(Error::ParameterOutOfRange(format!("d = {d} exceeds n = {n}")));
    }
    let k = d.min(n - d);
    let monomials = CoordSet::all_subsets(n)
        .filter(|u| u.len() <= k && u.iter().enumerate().all(|(idx, ui)| ui >= 2 * (idx + 1)))
        .map(|u| Monomial::power_product(n, u.iter(), 1))
        .collect();
    Ok(StandardMonomialSet::new(None, monomials))
}

/// Membership test for `SM(I(V(n, d, q)))` on an exponent vector in `(q)^n`.
pub fn in_sm_hamming_sphere(u: &[u32], n: usize, d: usize, q: u32) -> bool {
    let t = crate::tuples::Tuple::new(u.to_vec());
    let Ok(part) = jqz(&t, q) else {
        return false;
    };
    let c = part.j.len();
    if c > d || part.q.len() > (d - c).min(n - d) {
        return false;
    }
    // positions of Q inside the increasing enumeration of Q ∪ Z
    let rest = part.q.union(&part.z);
    rest.iter()
        .enumerate()
        .filter(|(_, j)| part.q.contains(*j))
        .enumerate()
        .all(|(i, (m, _))| m + 1 >= 2 * (i + 1))
}

/// `SM(I(V(n, d, q)))` for the Hamming sphere.
pub fn sm_hamming_sphere(n: usize, d: usize, q: u32) -> Result<StandardMonomialSet> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    if d > n {
        return Err(Error::ParameterOutOfRange(format!("d = {d} exceeds n = {n}")));
    }
    let monomials = all_tuples(n, q)
        .into_iter()
        .filter(|u| in_sm_hamming_sphere(u.coords(), n, d, q))
        .map(|u| u.to_monomial())
        .collect();
    Ok(StandardMonomialSet::new(None, monomials))
}

/// Gröbner data of every nonempty `F_J`, keyed by `J`.
type SubfamilyBases = BTreeMap<CoordSet, Option<(Vec<Polynomial>, StandardMonomialSet)>>;

fn subfamily_bases(family: &SetFamily, ord: TermOrder) -> Result<SubfamilyBases> {
    let mut out = BTreeMap::new();
    for j in CoordSet::all_subsets(family.n()) {
        let sub = subfamily_through(family, j);
        let entry = if sub.is_empty() {
            None
        } else {
            let (gb, sm) = vanishing_basis(&sub.to_point_set(), ord)?;
            Some((gb.generators, sm))
        };
        out.insert(j, entry);
    }
    Ok(out)
}

/// Standard monomials of the blow-up `F^q`, assembled from the binary
/// normal sets of the subfamilies `F_J`.
pub fn sm_blowup(family: &SetFamily, q: u32, ord: TermOrder) -> Result<StandardMonomialSet> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    let n = family.n();
    let parts = subfamily_bases(family, ord)?;
    let mut monomials = BTreeSet::new();
    for v in all_tuples(n, q) {
        let part = jqz(&v, q)?;
        if let Some(Some((_, sm))) = parts.get(&part.j) {
            if sm.contains(&Monomial::power_product(n, part.q.iter(), 1)) {
                monomials.insert(v.to_monomial());
            }
        }
    }
    Ok(StandardMonomialSet::new(Some(ord), monomials))
}

/// The (generally non-reduced) Gröbner basis of `I(F^q)`: the field
/// polynomials, `x_J * g-bar` for `g` in the basis of each nonempty `F_J`, and
/// `x_J` for every `J` with `F_J` empty.
pub fn gb_blowup(family: &SetFamily, q: u32, ord: TermOrder) -> Result<Vec<Polynomial>> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = family.n();
    let mut basis = field_polynomials(n, q)?;
    for (j, entry) in subfamily_bases(family, ord)? {
        let x_j = Polynomial::monomial(Monomial::power_product(n, j.iter(), 1));
        match entry {
            None => basis.push(x_j),
            Some((gens, _)) => {
                for g in gens {
                    basis.push(&x_j * &bar_lift(&g, q)?);
                }
            }
        }
    }
    Ok(basis)
}

/// `|B ∩ X_i| = (q-1)^(n-i) (C(n,i) - C(n,i-1))`, for `i <= n/2`.
pub fn count_ballot(n: usize, q: u32, i: usize) -> Result<BigInt> {
    if 2 * i > n {
        return Err(Error::ParameterOutOfRange(format!("ballot count needs i <= n/2, got i = {i}, n = {n}")));
    }
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    let (n, i) = (n as i64, i as i64);
    Ok(ipow(q as i64 - 1, (n - i) as u32) * (binomial(n, i) - binomial(n, i - 1)))
}

/// `|M_i| = C(n,i) (q-2)^i C(n-i, d-i)`: standard monomials of the Hamming
/// sphere with exactly `i` coordinates strictly between `0` and `q-1`.
pub fn count_mi(n: usize, d: usize, q: u32, i: usize) -> Result<BigInt> {
    check_mi_range(n, d, q, i)?;
    let (n, d, i) = (n as i64, d as i64, i as i64);
    Ok(binomial(n, i) * ipow(q as i64 - 2, i as u32) * binomial(n - i, d - i))
}

/// `|N_i| = |M_i ∩ X_{<=s}|`.
pub fn count_ni(n: usize, d: usize, q: u32, s: usize, i: usize) -> Result<BigInt> {
    check_mi_range(n, d, q, i)?;
    let low = s <= (d - i).min(n - d);
    let (n, d, s, i) = (n as i64, d as i64, s as i64, i as i64);
    let tail = if low { binomial(n - i, s) } else { binomial(n - i, d - i) };
    Ok(binomial(n, i) * tail * ipow(q as i64 - 2, i as u32))
}

fn check_mi_range(n: usize, d: usize, q: u32, i: usize) -> Result<()> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    if i > d || d > n {
        return Err(Error::ParameterOutOfRange(format!("need 0 <= i <= d <= n, got i = {i}, d = {d}, n = {n}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    /// `sum_{i<=s} C(n,i)`
    Sauer,
    /// `sum_{i<=s} (q-1)^(n-i) C(n,i)`
    Km,
    /// `C(n,s)`
    FranklPach,
    /// `sum_{i<=s} (q-1)^(n-i) (C(n,i) - C(n,i-1))`, uniform systems
    Main1,
    /// `C(n,s) sum_{i<=d} C(n-s,i) (q-2)^i`, Hamming systems
    Main2,
    /// same value as `Main2`, under the hypotheses of the normal-set estimate
    Becsles3,
}

impl BoundName {
    pub const ALL: [BoundName; 6] = [
        BoundName::Sauer,
        BoundName::Km,
        BoundName::FranklPach,
        BoundName::Main1,
        BoundName::Main2,
        BoundName::Becsles3,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundName::Sauer => "sauer",
            BoundName::Km => "km",
            BoundName::FranklPach => "frankl_pach",
            BoundName::Main1 => "main1",
            BoundName::Main2 => "main2",
            BoundName::Becsles3 => "becsles3",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl std::str::FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundName::ALL
            .into_iter()
            .find(|b| b.as_str() == s || (s == "frankl-pach" && *b == BoundName::FranklPach))
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown bound `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    pub n: usize,
    pub d: Option<usize>,
    pub s: Option<usize>,
    pub q: Option<u32>,
}

impl BoundParams {
    pub fn new(n: usize) -> Self {
        BoundParams { n, ..Default::default() }
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
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: BoundName,
    pub params: BoundParams,
    #[serde(serialize_with = "serialize_bigint")]
    pub value: BigInt,
}

fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Evaluate a named bound, refusing parameters outside its hypotheses.
pub fn bound(name: BoundName, params: BoundParams) -> Result<BoundReport> {
    let n = params.n;
    let violated = |condition: String| Error::HypothesisViolated { bound: name.to_string(), condition };
    let need = |what: &str| Error::ParameterOutOfRange(format!("bound `{name}` needs parameter {what}"));
    let get_s = || params.s.ok_or_else(|| need("s"));
    let get_d = || params.d.ok_or_else(|| need("d"));
    let get_q = || params.q.ok_or_else(|| need("q"));
    let ni = n as i64;

    let value = match name {
        BoundName::Sauer => {
            let s = get_s()?;
            if s + 1 > n {
                return Err(violated(format!("0 <= s <= n-1 (s = {s}, n = {n})")));
            }
            (0..=s as i64).map(|i| binomial(ni, i)).sum()
        }
        BoundName::Km => {
            let (s, q) = (get_s()?, get_q()?);
            if q < 2 {
                return Err(violated(format!("q >= 2 (q = {q})")));
            }
            if s + 1 > n {
                return Err(violated(format!("0 <= s <= n-1 (s = {s}, n = {n})")));
            }
            (0..=s as i64).map(|i| ipow(q as i64 - 1, (ni - i) as u32) * binomial(ni, i)).sum()
        }
        BoundName::FranklPach => {
            let s = get_s()?;
            if let Some(d) = params.d {
                if d > n {
                    return Err(violated(format!("d <= n (d = {d}, n = {n})")));
                }
            }
            if 2 * (s + 1) > n {
                return Err(violated(format!("s+1 <= n/2 (s = {s}, n = {n})")));
            }
            binomial(ni, s as i64)
        }
        BoundName::Main1 => {
            let (s, q) = (get_s()?, get_q()?);
            if q < 2 {
                return Err(violated(format!("q >= 2 (q = {q})")));
            }
            if let Some(d) = params.d {
                if d as u64 > n as u64 * (q as u64 - 1) {
                    return Err(violated(format!("0 <= d <= n(q-1) (d = {d}, n = {n}, q = {q})")));
                }
            }
            if 2 * s > n {
                return Err(violated(format!("s <= n/2 (s = {s}, n = {n})")));
            }
            (0..=s as i64)
                .map(|i| ipow(q as i64 - 1, (ni - i) as u32) * (binomial(ni, i) - binomial(ni, i - 1)))
                .sum()
        }
        BoundName::Main2 | BoundName::Becsles3 => {
            let (s, d, q) = (get_s()?, get_d()?, get_q()?);
            if q < 2 {
                return Err(violated(format!("q >= 2 (q = {q})")));
            }
            if d > n {
                return Err(violated(format!("d <= n (d = {d}, n = {n})")));
            }
            if d + s > n {
                return Err(violated(format!("d+s <= n (d = {d}, s = {s}, n = {n})")));
            }
            if name == BoundName::Becsles3 {
                if n < 3 {
                    return Err(violated(format!("n >= 3 (n = {n})")));
                }
                if q < 3 {
                    return Err(violated(format!("q >= 3 (q = {q})")));
                }
            }
            let sum: BigInt = (0..=d as i64)
                .map(|i| binomial(ni - s as i64, i) * ipow(q as i64 - 2, i as u32))
                .sum();
            binomial(ni, s as i64) * sum
        }
    };
    Ok(BoundReport { name, params, value })
}

/// `ceil(d / (q-1))`: no `d`-uniform system shatters a larger set.
pub fn shatter_cap(d: u32, q: u32) -> Result<u32> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    Ok(d.div_ceil(q - 1))
}

/// The leading coefficient `((t-1)(q-1)+1)! / ((q-1)!)^(t-1)` carried by the
/// certificate of [`uniform_leading_certificate`].
pub fn certificate_leading_coefficient(t: usize, q: u32) -> BigInt {
    let fact = |k: u64| (1..=k).fold(BigInt::one(), |acc, x| acc * BigInt::from(x));
    let top = (t as u64 - 1) * (q as u64 - 1) + 1;
    fact(top) / num_traits::pow(fact(q as u64 - 1), t - 1)
}

/// The monomial `x_{h_1}^{q-1} ... x_{h_{t-1}}^{q-1} x_{h_t}` certified to be
/// a leading monomial of `I(U(n, d, q))`.
pub fn certified_leading_monomial(n: usize, h: CoordSet, q: u32) -> Monomial {
    let elems: Vec<usize> = h.iter().collect();
    let mut e = vec![0u32; n];
    for (k, &i) in elems.iter().enumerate() {
        e[i - 1] = if k + 1 < elems.len() { q - 1 } else { 1 };
    }
    Monomial::new(e)
}

/// The element of `I(U(n, d, q))` witnessing that the monomial of
/// [`certified_leading_monomial`] is a leading monomial: the product
/// `prod_{i=0}^{(q-1)(t-1)} (sum_{h in H'} x_h - (d - i))`, with
/// `H' = H ∪ {2t, ..., n}`, reduced modulo the field polynomials.
pub fn uniform_leading_certificate(n: usize, d: u32, q: u32, h: CoordSet, ord: TermOrder) -> Result<Polynomial> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    let t = h_family_index(h, n).ok_or_else(|| Error::NotInHFamily(h.to_string()))?;
    if d as u64 > (q as u64 - 1) * n as u64 {
        return Err(Error::ParameterOutOfRange(format!("d = {d} exceeds (q-1)n")));
    }
    let h_prime = h.union(&CoordSet::from_indices(2 * t..=n));
    let linear = h_prime
        .iter()
        .fold(Polynomial::zero(n), |acc, i| &acc + &Polynomial::var(n, i));
    let field = field_polynomials(n, q)?;
    let factors = (q as usize - 1) * (t - 1) + 1;
    let mut f = Polynomial::one(n);
    for i in 0..factors {
        let shift = Polynomial::constant(n, rat(d as i64 - i as i64));
        f = &f * &(&linear - &shift);
        // reducing along the way keeps the intermediate products small and
        // leaves the final normal form unchanged
        f = normal_form(&f, &field, ord)?;
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuples::complete_uniform;

    fn monos(ms: &[&[u32]]) -> BTreeSet<Monomial> {
        ms.iter().map(|m| Monomial::new(m.to_vec())).collect()
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(30, 15), BigInt::from(155117520));
    }

    #[test]
    fn uniform_binary_examples() {
        assert_eq!(sm_uniform_binary(3, 1).unwrap().monomials, monos(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        let sm = sm_uniform_binary(4, 2).unwrap();
        assert_eq!(
            sm.monomials,
            monos(&[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, 1]])
        );
        assert_eq!(sm_uniform_binary(5, 0).unwrap().monomials, monos(&[&[0; 5]]));
        assert!(sm_uniform_binary(2, 3).is_err());
    }

    #[test]
    fn hamming_examples() {
        let sm = sm_hamming_sphere(2, 1, 3).unwrap();
        assert_eq!(sm.monomials, monos(&[&[0, 0], &[1, 0], &[0, 1], &[0, 2]]));
        assert!(!sm.contains(&Monomial::new(vec![2, 0])));
        for n in 0..=6 {
            for d in 0..=n {
                assert!(sm_hamming_sphere(n, d, 2).unwrap().same_set(&sm_uniform_binary(n, d).unwrap()));
            }
        }
    }

    #[test]
    fn blowup_examples() {
        let f = SetFamily::new(2, [CoordSet::from_indices([1])]).unwrap();
        let sm = sm_blowup(&f, 3, TermOrder::DegLex).unwrap();
        assert_eq!(sm.monomials, monos(&[&[0, 0], &[1, 0]]));
        let gb = gb_blowup(&f, 3, TermOrder::DegLex).unwrap();
        assert!(gb.contains(&Polynomial::var(2, 2)));

        let all = SetFamily::power_set(2);
        let sm = sm_blowup(&all, 3, TermOrder::Lex).unwrap();
        assert_eq!(sm.len(), 9);
        let gb = gb_blowup(&all, 3, TermOrder::Lex).unwrap();
        for fi in field_polynomials(2, 3).unwrap() {
            assert!(gb.contains(&fi));
        }
        assert_eq!(sm_blowup(&SetFamily::new(2, []).unwrap(), 3, TermOrder::Lex), Err(Error::EmptyFamily));
    }

    #[test]
    fn ballot_counts() {
        assert_eq!(count_ballot(4, 2, 2).unwrap(), BigInt::from(2));
        assert_eq!(count_ballot(5, 3, 0).unwrap(), BigInt::from(32));
        assert_eq!(count_ballot(4, 3, 1).unwrap(), BigInt::from(24));
        assert!(count_ballot(4, 3, 3).is_err());
    }

    #[test]
    fn mi_ni_examples() {
        assert_eq!(count_mi(2, 1, 3, 0).unwrap(), BigInt::from(2));
        assert_eq!(count_mi(2, 1, 3, 1).unwrap(), BigInt::from(2));
        assert_eq!(count_ni(2, 1, 3, 1, 0).unwrap(), BigInt::from(2));
        assert_eq!(count_ni(2, 1, 3, 1, 1).unwrap(), BigInt::from(2));
        for i in 1..=3 {
            assert!(count_mi(5, 3, 2, i).unwrap().is_zero());
        }
        assert!(count_mi(3, 2, 3, 3).is_err());
    }

    #[test]
    fn bound_examples() {
        let b = |name, p| bound(name, p).unwrap().value;
        assert_eq!(b(BoundName::Main1, BoundParams::new(4).s(1).q(3)), BigInt::from(40));
        assert_eq!(b(BoundName::Main2, BoundParams::new(4).d(2).s(2).q(3)), BigInt::from(24));
        assert_eq!(b(BoundName::Km, BoundParams::new(3).s(1).q(2)), BigInt::from(4));
        assert_eq!(b(BoundName::Sauer, BoundParams::new(3).s(1)), BigInt::from(4));
        assert_eq!(b(BoundName::FranklPach, BoundParams::new(6).d(3).s(2)), BigInt::from(15));
        for n in 0..=12 {
            for s in 0..=n / 2 {
                let m1 = b(BoundName::Main1, BoundParams::new(n).s(s).q(2));
                assert_eq!(m1, binomial(n as i64, s as i64));
            }
        }
        assert!(matches!(
            bound(BoundName::Main1, BoundParams::new(4).s(3).q(3)),
            Err(Error::HypothesisViolated { .. })
        ));
        assert!(matches!(
            bound(BoundName::Main2, BoundParams::new(4).d(3).s(2).q(3)),
            Err(Error::HypothesisViolated { .. })
        ));
        assert!(matches!(
            bound(BoundName::FranklPach, BoundParams::new(4).s(2)),
            Err(Error::HypothesisViolated { .. })
        ));
        assert!(matches!(
            bound(BoundName::Becsles3, BoundParams::new(4).d(1).s(1).q(2)),
            Err(Error::HypothesisViolated { .. })
        ));
        assert!(matches!(bound(BoundName::Main2, BoundParams::new(4).s(1).q(3)), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn shatter_cap_examples() {
        assert_eq!(shatter_cap(2, 3).unwrap(), 1);
        assert_eq!(shatter_cap(0, 5).unwrap(), 0);
        assert_eq!(shatter_cap(3, 3).unwrap(), 2);
    }

    #[test]
    fn leading_certificate_examples() {
        let h = CoordSet::from_indices([1]);
        let f = uniform_leading_certificate(3, 1, 2, h, TermOrder::DegLex).unwrap();
        assert_eq!(f, Polynomial::parse("x1 + x2 + x3 - 1", 3).unwrap());
        assert_eq!(f.leading_monomial(TermOrder::DegLex).unwrap(), &Monomial::var(3, 1));

        let f = uniform_leading_certificate(2, 2, 3, h, TermOrder::DegLex).unwrap();
        assert_eq!(f, Polynomial::parse("x1 + x2 - 2", 2).unwrap());
        let u = complete_uniform(2, 2, 3).unwrap();
        assert!(u.iter().all(|p| f.evaluate(p.coords()).unwrap().is_zero()));

        // t = 2, H = {2,3}, n = 4, q = 3: three factors, y = x2^2 x3, coefficient 3!/2! = 3
        let h = CoordSet::from_indices([2, 3]);
        for ord in TermOrder::ALL {
            let f = uniform_leading_certificate(4, 3, 3, h, ord).unwrap();
            let y = certified_leading_monomial(4, h, 3);
            assert_eq!(y, Monomial::new(vec![0, 2, 1, 0]));
            assert_eq!(f.leading_monomial(ord).unwrap(), &y);
            assert_eq!(f.coefficient(&y), crate::polyring::Rational::from_integer(BigInt::from(3)));
        }
        assert_eq!(certificate_leading_coefficient(2, 3), BigInt::from(3));
        assert!(matches!(
            uniform_leading_certificate(4, 1, 3, CoordSet::from_indices([1, 2]), TermOrder::DegLex),
            Err(Error::NotInHFamily(_))
        ));
    }
}
