//! Exact multivariate polynomials over the rationals.
//!
//! Variables are `x1, ..., xn` with `x1` the largest under every supported
//! term order, so `xn < ... < x2 < x1`. Exponent vectors are stored with
//! `x1` first; under that layout lexicographic comparison of the raw vectors
//! is exactly the lex order, which keeps the comparison code branch-free.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub(crate) fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// An exponent vector `x1^e1 * ... * xn^en`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "variable x{i} out of range for n = {n}");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial(e)
    }

    /// `prod_{j in indices} x_j^power`, indices 1-based.
    pub fn power_product<I: IntoIterator<Item = usize>>(n: usize, indices: I, power: u32) -> Self {
        let mut e = vec![0; n];
        for j in indices {
            e[j - 1] = power;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Coordinatewise power, `m^k`.
    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Multiply by `x_i` (1-based).
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i - 1] += 1;
        Monomial(e)
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, point: &[u32]) -> BigInt {
        let mut acc = BigInt::one();
        for (&e, &p) in self.0.iter().zip(point) {
            if e > 0 {
                if p == 0 {
                    return BigInt::zero();
                }
                acc *= num_traits::pow(BigInt::from(p), e as usize);
            }
        }
        acc
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Admissible orders with `xn < ... < x1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Lex,
    #[default]
    DegLex,
}

impl TermOrder {
    pub const ALL: [TermOrder; 2] = [TermOrder::Lex, TermOrder::DegLex];

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
        }
        Ok(self.ordering(a, b))
    }

    /// Infallible comparison; callers guarantee equal dimensions.
    pub fn ordering(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.0.cmp(&b.0),
            TermOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)),
        }
    }

    /// A key whose derived `Ord` agrees with this term order.
    pub fn key(&self, m: &Monomial) -> OrderKey {
        let deg = match self {
            TermOrder::Lex => 0,
            TermOrder::DegLex => m.degree(),
        };
        OrderKey { deg, mono: m.clone() }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::DegLex => "deglex",
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(TermOrder::Lex),
            "deglex" => Ok(TermOrder::DegLex),
            other => Err(Error::ParameterOutOfRange(format!("unknown term order `{other}`"))),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderKey {
    deg: u32,
    mono: Monomial,
}

impl OrderKey {
    pub fn monomial(&self) -> &Monomial {
        &self.mono
    }

    pub fn into_monomial(self) -> Monomial {
        self.mono
    }
}

/// A polynomial in `Q[x1, ..., xn]`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let n = m.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n, i))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(n: usize, terms: I) -> Self {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            assert_eq!(m.dim(), n, "monomial dimension mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage order (increasing lex).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Terms in decreasing order under `ord`.
    pub fn terms_desc(&self, ord: TermOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.ordering(b.0, a.0));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_monomial(&self, ord: TermOrder) -> Result<&Monomial> {
        self.terms
            .keys()
            .max_by(|a, b| ord.ordering(a, b))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coefficient(&self, ord: TermOrder) -> Result<&Rational> {
        let m = self.leading_monomial(ord)?;
        Ok(&self.terms[m])
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self, ord: TermOrder) -> Result<Polynomial> {
        let lc = self.leading_coefficient(ord)?.clone();
        Ok(self.scale(&lc.recip()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at an integer point.
    pub fn evaluate(&self, point: &[u32]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let v = m.eval_int(point);
            if !v.is_zero() {
                acc += c * Rational::from_integer(v);
            }
        }
        Ok(acc)
    }

    /// Replace every `x_i` by `images[i-1]`; all images share one dimension.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: images.len() });
        }
        let target = images.first().map_or(0, Polynomial::dim);
        if let Some(bad) = images.iter().find(|p| p.dim() != target) {
            return Err(Error::DimensionMismatch { expected: target, found: bad.dim() });
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((i, e)).or_insert_with(|| images[i].pow(e));
                prod = &prod * pw;
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    /// Re-read a univariate polynomial in `x1` as a polynomial in `x_var`
    /// inside `Q[x1..xn]`.
    pub fn embed_univariate(&self, n: usize, var: usize) -> Result<Polynomial> {
        if self.n != 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: self.n });
        }
        if !(1..=n).contains(&var) {
            return Err(Error::VariableOutOfRange { index: var, n });
        }
        Ok(Polynomial::from_terms(
            n,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; n];
                e[var - 1] = m.exponents()[0];
                (Monomial(e), c.clone())
            }),
        ))
    }

    /// Text form: terms in decreasing `ord` order, e.g. `-1/2*x1^2 + 3/2*x1`.
    pub fn render(&self, ord: TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms_desc(ord).into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{abs}*{m}"));
            }
        }
        out
    }

    /// Parse the grammar produced by [`Polynomial::render`].
    pub fn parse(text: &str, n: usize) -> Result<Polynomial> {
        let err = |message: String| Error::Parse { line: 1, message };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        let bytes = compact.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && i > 0 && bytes[i - 1] != b'^' {
                terms.push((negative, &compact[start..i]));
                negative = b == b'-';
                start = i + 1;
            } else if i == 0 && (b == b'+' || b == b'-') {
                negative = b == b'-';
                start = 1;
            }
        }
        terms.push((negative, &compact[start..]));

        let mut poly = Polynomial::zero(n);
        for (neg, body) in terms {
            if body.is_empty() {
                return Err(err("empty term".into()));
            }
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; n];
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (idx, e) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| err(format!("bad exponent in `{factor}`")))?),
                        None => (var, 1),
                    };
                    let i: usize = idx.parse().map_err(|_| err(format!("bad variable `{factor}`")))?;
                    if !(1..=n).contains(&i) {
                        return Err(Error::VariableOutOfRange { index: i, n });
                    }
                    exps[i - 1] += e;
                } else {
                    let c: Rational = factor.parse().map_err(|_| err(format!("bad coefficient `{factor}`")))?;
                    coeff *= c;
                }
            }
            if neg {
                coeff = -coeff;
            }
            poly.add_term(Monomial(exps), coeff);
        }
        Ok(poly)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(TermOrder::default()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomial dimension mismatch");
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

/// Remainder of `f` on division by `basis`.
///
/// The largest reducible monomial is always reduced first, against the first
/// basis element (in list order) whose leading monomial divides it.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: TermOrder) -> Result<Polynomial> {
    let mut leads = Vec::with_capacity(basis.len());
    for g in basis {
        if g.dim() != f.dim() {
            return Err(Error::DimensionMismatch { expected: f.dim(), found: g.dim() });
        }
        let lm = g.leading_monomial(ord)?.clone();
        let lc = g.terms[&lm].clone();
        leads.push((lm, lc));
    }

    let mut work: BTreeMap<OrderKey, Rational> =
        f.terms.iter().map(|(m, c)| (ord.key(m), c.clone())).collect();
    let mut remainder = Polynomial::zero(f.dim());

    while let Some((key, c)) = work.pop_last() {
        let m = key.into_monomial();
        let divisor = leads.iter().enumerate().find(|(_, (lm, _))| lm.divides(&m));
        match divisor {
            None => {
                remainder.terms.insert(m, c);
            }
            Some((gi, (lm, lc))) => {
                let shift = m.checked_div(lm).expect("divisor checked");
                let factor = &c / lc;
                for (gm, gc) in &basis[gi].terms {
                    if gm == lm {
                        continue;
                    }
                    let k = ord.key(&gm.mul(&shift));
                    let delta = -(&factor * gc);
                    match work.entry(k) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += delta;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(remainder)
}

/// `f_i(x_i) = prod_{j=0}^{q-1} (x_i - j)` in `Q[x1..xn]`.
pub fn field_polynomial(n: usize, i: usize, q: u32) -> Result<Polynomial> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    if !(1..=n).contains(&i) {
        return Err(Error::VariableOutOfRange { index: i, n });
    }
    let x = Polynomial::var(n, i);
    let mut acc = Polynomial::one(n);
    for j in 0..q {
        let factor = &x - &Polynomial::constant(n, rat(j as i64));
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// All field polynomials `f_1, ..., f_n`.
pub fn field_polynomials(n: usize, q: u32) -> Result<Vec<Polynomial>> {
    (1..=n).map(|i| field_polynomial(n, i, q)).collect()
}

/// The univariate `p` of degree `q - 1` with `p(0) = 0` and `p(j) = 1` for
/// `1 <= j <= q - 1`, as a polynomial in `x1` of `Q[x1]`.
pub fn indicator_polynomial(q: u32) -> Result<Polynomial> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    // p = 1 - L_0, with L_0 the Lagrange basis polynomial at node 0.
    let x = Polynomial::var(1, 1);
    let mut l0 = Polynomial::one(1);
    for k in 1..q {
        let k = rat(k as i64);
        let factor = (&x - &Polynomial::constant(1, k.clone())).scale(&(-k).recip());
        l0 = &l0 * &factor;
    }
    Ok(&Polynomial::one(1) - &l0)
}

/// `g(p(x1), ..., p(xn))` for the indicator polynomial `p` of alphabet `q`.
pub fn bar_lift(g: &Polynomial, q: u32) -> Result<Polynomial> {
    let p = indicator_polynomial(q)?;
    let n = g.dim();
    let images = (1..=n)
        .map(|i| p.embed_univariate(n, i))
        .collect::<Result<Vec<_>>>()?;
    if n == 0 {
        return Ok(g.clone());
    }
    g.substitute(&images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn compare_examples() {
        let x1 = Monomial::var(2, 1);
        let x2 = Monomial::var(2, 2);
        let x2sq = x2.pow(2);
        assert_eq!(TermOrder::DegLex.compare(&x2, &x1).unwrap(), Ordering::Less);
        assert_eq!(TermOrder::Lex.compare(&x2, &x1).unwrap(), Ordering::Less);
        assert_eq!(TermOrder::DegLex.compare(&x1, &x2sq).unwrap(), Ordering::Less);
        assert_eq!(TermOrder::Lex.compare(&x1, &x2sq).unwrap(), Ordering::Greater);
        assert!(matches!(
            TermOrder::Lex.compare(&x1, &Monomial::one(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn leading_monomial_examples() {
        let f = Polynomial::parse("x1^2 - x1", 1).unwrap();
        for ord in TermOrder::ALL {
            assert_eq!(f.leading_monomial(ord).unwrap(), &Monomial::new(vec![2]));
        }
        let f = Polynomial::parse("x1 + x2 + x3 - 1", 3).unwrap();
        assert_eq!(f.leading_monomial(TermOrder::DegLex).unwrap(), &Monomial::var(3, 1));
        assert_eq!(Polynomial::zero(2).leading_monomial(TermOrder::Lex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn normal_form_examples() {
        let g = Polynomial::parse("x1^2 - x1", 1).unwrap();
        let f = Polynomial::parse("x1^2", 1).unwrap();
        assert_eq!(normal_form(&f, &[g], TermOrder::DegLex).unwrap(), Polynomial::var(1, 1));

        let fs = field_polynomials(3, 2).unwrap();
        for fi in &fs {
            assert!(normal_form(fi, &fs, TermOrder::DegLex).unwrap().is_zero());
        }
        let lin = Polynomial::parse("x1 + x2 + x3 - 1", 3).unwrap();
        assert_eq!(normal_form(&lin, &fs, TermOrder::DegLex).unwrap(), lin);
    }

    #[test]
    fn field_polynomial_examples() {
        assert_eq!(field_polynomial(1, 1, 2).unwrap(), Polynomial::parse("x1^2 - x1", 1).unwrap());
        // x(x-1)(x-2) = x^3 - 3x^2 + 2x
        let f3 = field_polynomial(2, 2, 3).unwrap();
        assert_eq!(f3, Polynomial::parse("x2^3 - 3*x2^2 + 2*x2", 2).unwrap());
        for j in 0..3 {
            assert!(f3.evaluate(&[1, j]).unwrap().is_zero());
        }
        assert_eq!(f3.leading_monomial(TermOrder::Lex).unwrap(), &Monomial::new(vec![0, 3]));
        assert_eq!(field_polynomial(1, 1, 1), Err(Error::AlphabetTooSmall(1)));
    }

    #[test]
    fn indicator_polynomial_examples() {
        assert_eq!(indicator_polynomial(2).unwrap(), Polynomial::var(1, 1));
        // Lagrange over {0,1,2} with values 0,1,1.
        let p3 = indicator_polynomial(3).unwrap();
        assert_eq!(p3, Polynomial::from_terms(1, [
            (Monomial::new(vec![1]), q(3, 2)),
            (Monomial::new(vec![2]), q(-1, 2)),
        ]));
        for qq in 2..7u32 {
            let p = indicator_polynomial(qq).unwrap();
            assert_eq!(p.total_degree(), Some(qq - 1));
            assert!(p.evaluate(&[0]).unwrap().is_zero());
            for j in 1..qq {
                assert!(p.evaluate(&[j]).unwrap().is_one());
            }
        }
        assert!(indicator_polynomial(0).is_err());
    }

    #[test]
    fn bar_lift_examples() {
        assert_eq!(bar_lift(&Polynomial::one(2), 3).unwrap(), Polynomial::one(2));
        let g = Polynomial::var(2, 1);
        assert_eq!(bar_lift(&g, 3).unwrap(), Polynomial::parse("-1/2*x1^2 + 3/2*x1", 2).unwrap());
        let g = Polynomial::parse("x1*x2", 2).unwrap();
        assert_eq!(bar_lift(&g, 2).unwrap(), g);
        let lifted = bar_lift(&Polynomial::var(1, 1), 3).unwrap();
        assert_eq!(lifted.leading_monomial(TermOrder::DegLex).unwrap(), &Monomial::new(vec![2]));
    }

    #[test]
    fn render_and_parse() {
        let p = Polynomial::parse("-1/2*x1^2 + 3/2*x1", 1).unwrap();
        assert_eq!(p.render(TermOrder::DegLex), "-1/2*x1^2 + 3/2*x1");
        let p = Polynomial::parse("x2^2 + x1 - 1 + 2*x1*x3", 3).unwrap();
        assert_eq!(p.render(TermOrder::DegLex), "2*x1*x3 + x2^2 + x1 - 1");
        assert_eq!(p.render(TermOrder::Lex), "2*x1*x3 + x1 + x2^2 - 1");
        assert_eq!(Polynomial::zero(2).render(TermOrder::Lex), "0");
        assert!(Polynomial::parse("x4", 3).is_err());
        assert!(Polynomial::parse("x1 +", 3).is_err());
        assert!(Polynomial::parse("y1", 3).is_err());
    }
}
