//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::polyring::Rational;

/// Incrementally maintained row-echelon basis of a growing list of vectors.
///
/// Every stored row remembers how it is written in terms of the vectors that
/// were accepted so far, so a dependent vector comes back as an explicit
/// linear combination of accepted ones. Pivots are the lowest nonzero index.
#[derive(Clone, Debug, Default)]
pub struct IncrementalEchelon {
    rows: Vec<EchelonRow>,
    accepted: usize,
}

#[derive(Clone, Debug)]
struct EchelonRow {
    pivot: usize,
    vector: Vec<Rational>,
    combination: Vec<Rational>,
}

/// Outcome of offering a vector to an [`IncrementalEchelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// The vector was independent and is now accepted vector number `.0`.
    Independent(usize),
    /// The vector equals `sum coeffs[k] * accepted[k]`.
    Dependent(Vec<Rational>),
}

impl IncrementalEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.accepted
    }

    pub fn insert(&mut self, mut v: Vec<Rational>) -> Insertion {
        let mut coeffs: Vec<Rational> = vec![Rational::zero(); self.accepted];
        for row in &self.rows {
            let c = v[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(&row.vector).skip(row.pivot) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
            for (x, r) in coeffs.iter_mut().zip(&row.combination) {
                if !r.is_zero() {
                    *x += &c * r;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => Insertion::Dependent(coeffs),
            Some(pivot) => {
                let inv = v[pivot].recip();
                let vector: Vec<Rational> = v.iter().map(|x| x * &inv).collect();
                // residual = new - sum coeffs * accepted
                let mut combination: Vec<Rational> = coeffs.iter().map(|c| -(c * &inv)).collect();
                combination.push(inv);
                for row in &mut self.rows {
                    row.combination.push(Rational::zero());
                }
                self.rows.push(EchelonRow { pivot, vector, combination });
                let idx = self.accepted;
                self.accepted += 1;
                Insertion::Independent(idx)
            }
        }
    }
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut ech = IncrementalEchelon::new();
    for r in rows {
        ech.insert(r.clone());
    }
    ech.rank()
}

/// Solve `a * x = b` for square nonsingular `a`; `None` if singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let c = m[r][col].clone();
            let (pivot_row, target) = if r < col {
                let (lo, hi) = m.split_at_mut(col);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = m.split_at_mut(r);
                (&lo[col], &mut hi[0])
            };
            for (x, p) in target.iter_mut().zip(pivot_row.iter()) {
                *x -= &c * p;
            }
        }
    }
    debug_assert!(m.iter().enumerate().all(|(i, r)| r[i].is_one()));
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn dependence_is_reported_as_combination() {
        let mut e = IncrementalEchelon::new();
        assert_eq!(e.insert(v(&[1, 1, 1])), Insertion::Independent(0));
        assert_eq!(e.insert(v(&[0, 1, 2])), Insertion::Independent(1));
        // (2,5,8) = 2*(1,1,1) + 3*(0,1,2)
        assert_eq!(e.insert(v(&[2, 5, 8])), Insertion::Dependent(v(&[2, 3])));
        assert_eq!(e.insert(v(&[0, 0, 1])), Insertion::Independent(2));
        assert_eq!(e.insert(v(&[1, 0, 0])), Insertion::Dependent(v(&[1, -1, 1])));
    }

    #[test]
    fn rank_and_solve() {
        assert_eq!(rank(&[v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(rank(&[v(&[0, 0])]), 0);
        let a = vec![v(&[0, 1]), v(&[2, 1])];
        assert_eq!(solve(&a, &v(&[3, 5])), Some(vec![rat(1), rat(3)]));
        assert_eq!(solve(&[v(&[1, 1]), v(&[1, 1])], &v(&[1, 2])), None);
    }
}
