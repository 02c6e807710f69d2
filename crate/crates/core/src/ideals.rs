//! Vanishing ideals of finite point sets.
//!
//! [`vanishing_basis`] walks the monomials in increasing term order, keeps the
//! ones whose evaluation vectors on the point set are independent of the
//! earlier ones (the standard monomials) and turns every other minimal
//! candidate into a reduced Gröbner basis element via the dependence it
//! exhibits.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, IncrementalEchelon, Insertion};
use crate::polyring::{Monomial, Polynomial, Rational, TermOrder};
use crate::tuples::{CoordSet, Tuple};

pub use crate::tuples::PointSet;

/// A Gröbner basis together with the order it is taken in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    pub generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("generators are nonzero").clone())
            .collect()
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        crate::polyring::normal_form(f, &self.generators, self.order)
    }
}

/// A set of standard monomials.
///
/// `order` is `None` for closed-form descriptions that hold for every term
/// order with `xn < ... < x1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomialSet {
    pub order: Option<TermOrder>,
    pub monomials: BTreeSet<Monomial>,
}

impl StandardMonomialSet {
    pub fn new(order: Option<TermOrder>, monomials: BTreeSet<Monomial>) -> Self {
        StandardMonomialSet { order, monomials }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    /// Same monomials, regardless of the recorded order.
    pub fn same_set(&self, other: &StandardMonomialSet) -> bool {
        self.monomials == other.monomials
    }

    /// Monomials sorted increasingly under `ord`.
    pub fn sorted(&self, ord: TermOrder) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = self.monomials.iter().cloned().collect();
        v.sort_by(|a, b| ord.ordering(a, b));
        v
    }

    pub fn is_downward_closed(&self) -> bool {
        self.monomials.iter().all(|m| {
            (0..m.dim()).all(|i| {
                if m.exponents()[i] == 0 {
                    return true;
                }
                let mut e = m.exponents().to_vec();
                e[i] -= 1;
                self.monomials.contains(&Monomial::new(e))
            })
        })
    }
}

/// Standard monomials and the reduced Gröbner basis of `I(V)`.
pub fn vanishing_basis(v: &PointSet, ord: TermOrder) -> Result<(GroebnerBasis, StandardMonomialSet)> {
    if v.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let n = v.n();

    let mut echelon = IncrementalEchelon::new();
    let mut standard: Vec<Monomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut generators: Vec<Polynomial> = Vec::new();

    let mut queue: BinaryHeap<Reverse<crate::polyring::OrderKey>> = BinaryHeap::new();
    let mut queued: HashSet<Monomial> = HashSet::new();
    let one = Monomial::one(n);
    queued.insert(one.clone());
    queue.push(Reverse(ord.key(&one)));

    // integer evaluation vectors of the queued candidates
    let mut parent_eval: BTreeMap<Monomial, Vec<BigInt>> = BTreeMap::new();
    parent_eval.insert(one, vec![BigInt::one(); v.len()]);

    while let Some(Reverse(key)) = queue.pop() {
        let m = key.into_monomial();
        let eval = parent_eval.remove(&m).expect("queued monomials carry their evaluation");
        if leads.iter().any(|l| l.divides(&m)) {
            continue;
        }
        let as_rational: Vec<Rational> = eval.iter().cloned().map(Rational::from_integer).collect();
        match echelon.insert(as_rational) {
            Insertion::Independent(_) => {
                for i in 1..=n {
                    let next = m.times_var(i);
                    if queued.insert(next.clone()) {
                        let next_eval: Vec<BigInt> = eval
                            .iter()
                            .zip(v.iter())
                            .map(|(e, p)| e * BigInt::from(p.get(i)))
                            .collect();
                        parent_eval.insert(next.clone(), next_eval);
                        queue.push(Reverse(ord.key(&next)));
                    }
                }
                standard.push(m);
            }
            Insertion::Dependent(coeffs) => {
                let mut g = Polynomial::monomial(m.clone());
                for (s, c) in standard.iter().zip(coeffs) {
                    if !c.is_zero() {
                        g = &g - &Polynomial::term(s.clone(), c);
                    }
                }
                leads.push(m);
                generators.push(g);
            }
        }
    }

    if standard.len() != v.len() {
        return Err(Error::InvariantViolation(format!(
            "found {} standard monomials for {} points",
            standard.len(),
            v.len()
        )));
    }
    let sm = StandardMonomialSet::new(Some(ord), standard.into_iter().collect());
    Ok((GroebnerBasis { order: ord, generators }, sm))
}

/// Shorthand for the standard monomials alone.
pub fn standard_monomials(v: &PointSet, ord: TermOrder) -> Result<StandardMonomialSet> {
    vanishing_basis(v, ord).map(|(_, sm)| sm)
}

pub fn evaluate(f: &Polynomial, v: &Tuple) -> Result<Rational> {
    f.evaluate(v.coords())
}

/// The unique polynomial supported on `SM(I(V))` taking `values` on `V`.
pub fn interpolate(v: &PointSet, values: &BTreeMap<Tuple, Rational>, ord: TermOrder) -> Result<Polynomial> {
    if values.len() != v.len() || v.iter().any(|p| !values.contains_key(p)) {
        return Err(Error::ValuesMismatch);
    }
    let sm = standard_monomials(v, ord)?;
    let monos: Vec<Monomial> = sm.monomials.into_iter().collect();
    let matrix: Vec<Vec<Rational>> = v
        .iter()
        .map(|p| monos.iter().map(|m| Rational::from_integer(m.eval_int(p.coords()))).collect())
        .collect();
    let rhs: Vec<Rational> = v.iter().map(|p| values[p].clone()).collect();
    let coeffs = linalg::solve(&matrix, &rhs)
        .ok_or_else(|| Error::InvariantViolation("standard monomials are not independent on V".into()))?;
    Ok(Polynomial::from_terms(v.n(), monos.into_iter().zip(coeffs)))
}

/// Whether `basis` is a Gröbner basis of `I(V)`.
///
/// Checks that every element vanishes on `V`, that for each variable some
/// leading monomial is a power `x_i^e` with `e <= q` (so the staircase is
/// finite and inside `(q)^n`), and that the staircase has exactly `|V|` cells.
pub fn certify_groebner(v: &PointSet, basis: &[Polynomial], ord: TermOrder) -> bool {
    let n = v.n();
    let q = v.q();
    let mut leads = Vec::with_capacity(basis.len());
    for g in basis {
        if g.dim() != n {
            return false;
        }
        let Ok(lm) = g.leading_monomial(ord) else {
            return false;
        };
        if v.iter().any(|p| !g.evaluate(p.coords()).is_ok_and(|x| x.is_zero())) {
            return false;
        }
        leads.push(lm.clone());
    }
    for i in 1..=n {
        let bounded = leads.iter().any(|l| {
            let e = l.exponents();
            e[i - 1] <= q && e.iter().enumerate().all(|(k, &x)| k == i - 1 || x == 0)
        });
        if !bounded {
            return false;
        }
    }
    let outside = crate::tuples::all_tuples(n, q)
        .into_iter()
        .filter(|t| {
            let m = t.to_monomial();
            !leads.iter().any(|l| l.divides(&m))
        })
        .count();
    outside == v.len()
}

/// `g = prod_{j in S} prod_{i != w_j} (x_j - i)`, which vanishes on `V`
/// whenever no point of `V` agrees with `w` on `S`.
pub fn non_shatter_certificate(v: &PointSet, s: CoordSet, w: &Tuple) -> Result<Polynomial> {
    let n = v.n();
    let q = v.q();
    if w.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.dim() });
    }
    if let Some(&value) = w.coords().iter().find(|&&c| c >= q) {
        return Err(Error::CoordinateOutOfRange { value, q });
    }
    if let Some(bad) = s.iter().find(|&j| j > n) {
        return Err(Error::VariableOutOfRange { index: bad, n });
    }
    if let Some(p) = v.iter().find(|p| s.iter().all(|j| p.get(j) == w.get(j))) {
        return Err(Error::InvalidWitness { witness: w.coords().to_vec(), point: p.coords().to_vec() });
    }
    let mut g = Polynomial::one(n);
    for j in s.iter() {
        let x = Polynomial::var(n, j);
        for i in (0..q).filter(|&i| i != w.get(j)) {
            g = &g * &(&x - &Polynomial::constant(n, crate::polyring::rat(i as i64)));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{field_polynomials, indicator_polynomial, rat};
    use crate::tuples::{complete_uniform, hamming_sphere};

    fn ps(n: usize, q: u32, pts: &[&[u32]]) -> PointSet {
        PointSet::new(n, q, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn monos(ms: &[&[u32]]) -> BTreeSet<Monomial> {
        ms.iter().map(|m| Monomial::new(m.to_vec())).collect()
    }

    #[test]
    fn origin() {
        let (gb, sm) = vanishing_basis(&ps(2, 2, &[&[0, 0]]), TermOrder::DegLex).unwrap();
        assert_eq!(sm.monomials, monos(&[&[0, 0]]));
        assert_eq!(gb.generators, vec![Polynomial::var(2, 2), Polynomial::var(2, 1)]);
    }

    #[test]
    fn full_grid() {
        for ord in TermOrder::ALL {
            let (gb, sm) = vanishing_basis(&PointSet::full(2, 3), ord).unwrap();
            assert_eq!(sm.len(), 9);
            assert!(sm.iter().all(|m| m.exponents().iter().all(|&e| e < 3)));
            let mut expected = field_polynomials(2, 3).unwrap();
            expected.reverse(); // x2^3 < x1^3
            assert_eq!(gb.generators, expected);
        }
    }

    #[test]
    fn uniform_slice() {
        let v = complete_uniform(3, 1, 2).unwrap();
        let sm = standard_monomials(&v, TermOrder::DegLex).unwrap();
        assert_eq!(sm.monomials, monos(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(vanishing_basis(&PointSet::empty(2, 3), TermOrder::Lex), Err(Error::EmptyPointSet));
    }

    #[test]
    fn evaluate_examples() {
        let f = Polynomial::parse("x1^2 - x1", 2).unwrap();
        assert!(evaluate(&f, &Tuple::new(vec![1, 0])).unwrap().is_zero());
        let f1 = crate::polyring::field_polynomial(2, 1, 3).unwrap();
        assert!(evaluate(&f1, &Tuple::new(vec![2, 1])).unwrap().is_zero());
        let f = Polynomial::parse("x1 + x2", 2).unwrap();
        assert_eq!(evaluate(&f, &Tuple::new(vec![1, 2])).unwrap(), rat(3));
    }

    #[test]
    fn interpolate_examples() {
        let v = PointSet::full(1, 2);
        let vals = BTreeMap::from([(Tuple::new(vec![0]), rat(0)), (Tuple::new(vec![1]), rat(1))]);
        assert_eq!(interpolate(&v, &vals, TermOrder::DegLex).unwrap(), Polynomial::var(1, 1));

        let v = hamming_sphere(3, 2, 3).unwrap();
        let ones = v.iter().map(|p| (p.clone(), rat(1))).collect();
        assert_eq!(interpolate(&v, &ones, TermOrder::Lex).unwrap(), Polynomial::one(3));

        let v = PointSet::full(1, 3);
        let vals = BTreeMap::from([
            (Tuple::new(vec![0]), rat(0)),
            (Tuple::new(vec![1]), rat(1)),
            (Tuple::new(vec![2]), rat(1)),
        ]);
        assert_eq!(interpolate(&v, &vals, TermOrder::DegLex).unwrap(), indicator_polynomial(3).unwrap());

        let partial = BTreeMap::from([(Tuple::new(vec![0]), rat(0))]);
        assert_eq!(interpolate(&v, &partial, TermOrder::DegLex), Err(Error::ValuesMismatch));
    }

    #[test]
    fn certify_examples() {
        let full = PointSet::full(3, 3);
        assert!(certify_groebner(&full, &field_polynomials(3, 3).unwrap(), TermOrder::DegLex));
        let origin = ps(2, 2, &[&[0, 0]]);
        assert!(!certify_groebner(&origin, &[Polynomial::var(2, 1)], TermOrder::DegLex));
        // a non-vanishing element is rejected
        assert!(!certify_groebner(&origin, &[Polynomial::parse("x1 - 1", 2).unwrap(), Polynomial::var(2, 2)], TermOrder::Lex));
        let v = hamming_sphere(3, 1, 3).unwrap();
        for ord in TermOrder::ALL {
            let (gb, _) = vanishing_basis(&v, ord).unwrap();
            assert!(certify_groebner(&v, &gb.generators, ord));
            // dropping a generator breaks the count
            assert!(!certify_groebner(&v, &gb.generators[1..], ord));
        }
    }

    #[test]
    fn certificate_examples() {
        let origin = ps(2, 2, &[&[0, 0]]);
        let g = non_shatter_certificate(&origin, CoordSet::from_indices([1]), &Tuple::new(vec![1, 0])).unwrap();
        assert_eq!(g, Polynomial::var(2, 1));

        let v = hamming_sphere(2, 1, 3).unwrap();
        let g = non_shatter_certificate(&v, CoordSet::from_indices([1, 2]), &Tuple::new(vec![1, 1])).unwrap();
        assert_eq!(g.leading_monomial(TermOrder::DegLex).unwrap(), &Monomial::new(vec![2, 2]));
        assert!(v.iter().all(|p| g.evaluate(p.coords()).unwrap().is_zero()));
        let (gb, _) = vanishing_basis(&v, TermOrder::DegLex).unwrap();
        assert!(gb.reduce(&g).unwrap().is_zero());

        let bad = non_shatter_certificate(&v, CoordSet::from_indices([1]), &Tuple::new(vec![1, 0]));
        assert!(matches!(bad, Err(Error::InvalidWitness { .. })));
    }
}
