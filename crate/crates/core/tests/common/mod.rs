//! Brute-force oracles written without the library's order or elimination code.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Lex with x1 largest.
pub fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

/// Total degree first, ties broken by lex.
pub fn deglex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| lex(a, b))
}

pub fn comparator(order: &str) -> fn(&[u32], &[u32]) -> Ordering {
    match order {
        "lex" => lex,
        "deglex" => deglex,
        _ => panic!("unknown order {order}"),
    }
}

/// All of `{0..q-1}^n` in lex order.
pub fn grid(n: usize, q: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..q).map(move |c| {
                    let mut p = p.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out
}

fn eval(exps: &[u32], point: &[u32]) -> BigRational {
    let mut v = BigInt::one();
    for (e, x) in exps.iter().zip(point) {
        v *= BigInt::from(*x).pow(*e);
    }
    BigRational::from_integer(v)
}

/// Rows kept in reduced form; `try_add` reports whether the rank grew.
struct Span {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Span {
    fn try_add(&mut self, mut v: Vec<BigRational>) -> bool {
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= &c * y;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = v[p].recip();
                let v: Vec<BigRational> = v.into_iter().map(|x| x * &inv).collect();
                self.rows.push((p, v));
                true
            }
        }
    }
}

/// Standard monomials of I(V): walk the box in increasing order and keep a
/// monomial when its values on V are independent of everything smaller.
pub fn standard_monomials(points: &[Vec<u32>], n: usize, q: u32, order: &str) -> BTreeSet<Vec<u32>> {
    let cmp = comparator(order);
    let mut box_ = grid(n, q);
    box_.sort_by(|a, b| cmp(a, b));
    let mut span = Span { rows: Vec::new() };
    let mut out = BTreeSet::new();
    for m in box_ {
        if out.len() == points.len() {
            break;
        }
        let row: Vec<BigRational> = points.iter().map(|p| eval(&m, p)).collect();
        if span.try_add(row) {
            out.insert(m);
        }
    }
    out
}

pub fn rank(rows: Vec<Vec<BigRational>>) -> usize {
    let mut span = Span { rows: Vec::new() };
    rows.into_iter().filter(|r| span.try_add(r.clone())).count()
}

/// Number of distinct restrictions to the 1-based coordinates in `s`.
pub fn trace(points: &[Vec<u32>], s: &[usize]) -> usize {
    points
        .iter()
        .map(|p| s.iter().map(|&j| p[j - 1]).collect::<Vec<u32>>())
        .collect::<HashSet<_>>()
        .len()
}

pub fn shattered(points: &[Vec<u32>], s: &[usize], q: u32) -> bool {
    trace(points, s) == (q as usize).pow(s.len() as u32)
}

/// 1-based index lists of all subsets of [n].
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).map(|m| (1..=n).filter(|&i| m >> (i - 1) & 1 == 1).collect()).collect()
}

/// Ballot class: for every t, at most t-1 of the first 2t-1 coordinates equal q-1.
pub fn ballot(v: &[u32], q: u32) -> bool {
    (1..=v.len() + 1).all(|t| v.iter().take(2 * t - 1).filter(|&&c| c == q - 1).count() < t)
}
