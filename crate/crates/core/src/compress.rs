//! Downward-closed compression of a tuple system through its standard
//! monomials: `W = { u : x^u in SM(I(V)) }` has `|W| = |V|` and no trace of
//! `W` is larger than the matching trace of `V`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{standard_monomials, PointSet};
use crate::polyring::TermOrder;
use crate::tuples::{CoordSet, Tuple};

/// Largest `n` for which [`alon_compress`] tabulates every trace.
pub const FULL_TRACE_MAX_DIM: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceSizes {
    pub original: usize,
    pub compressed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressionResult {
    pub compressed: PointSet,
    pub order: TermOrder,
    pub traces: BTreeMap<CoordSet, TraceSizes>,
}

/// Compress `V`, tabulating traces on every `S` when `n <= 4` and on none
/// otherwise (use [`alon_compress_on`] to pick the sets).
pub fn alon_compress(v: &PointSet, ord: TermOrder) -> Result<CompressionResult> {
    let sets: Vec<CoordSet> = if v.n() <= FULL_TRACE_MAX_DIM {
        CoordSet::all_subsets(v.n()).collect()
    } else {
        Vec::new()
    };
    alon_compress_on(v, ord, &sets)
}

/// Compress `V` and compare traces on the given coordinate sets.
///
/// Fails with [`Error::InvariantViolation`] if the result is not downward
/// closed, has the wrong size, or some trace grew.
pub fn alon_compress_on(v: &PointSet, ord: TermOrder, sets: &[CoordSet]) -> Result<CompressionResult> {
    let sm = standard_monomials(v, ord)?;
    let points = sm.iter().map(Tuple::from_monomial).collect();
    let compressed = PointSet::from_tuples(v.n(), v.q(), points)?;

    if compressed.len() != v.len() {
        return Err(Error::InvariantViolation(format!(
            "compressed size {} differs from {}",
            compressed.len(),
            v.len()
        )));
    }
    if !is_downward_closed(&compressed) {
        return Err(Error::InvariantViolation("compressed system is not downward closed".into()));
    }
    let mut traces = BTreeMap::new();
    for &s in sets {
        let sizes = TraceSizes { original: trace_size(v, s), compressed: trace_size(&compressed, s) };
        if sizes.compressed > sizes.original {
            return Err(Error::InvariantViolation(format!(
                "trace on {s} grew from {} to {}",
                sizes.original, sizes.compressed
            )));
        }
        traces.insert(s, sizes);
    }
    Ok(CompressionResult { compressed, order: ord, traces })
}

/// Whether every tuple dominated coordinatewise by a member is a member.
pub fn is_downward_closed(w: &PointSet) -> bool {
    w.iter().all(|p| {
        (0..p.dim()).all(|i| {
            if p.coords()[i] == 0 {
                return true;
            }
            let mut c = p.coords().to_vec();
            c[i] -= 1;
            w.contains(&Tuple::new(c))
        })
    })
}

pub use crate::tuples::trace_size;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuples::hamming_sphere;

    fn ps(n: usize, q: u32, pts: &[&[u32]]) -> PointSet {
        PointSet::new(n, q, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn diagonal_compresses_to_column() {
        let v = ps(2, 2, &[&[0, 0], &[1, 1]]);
        let r = alon_compress(&v, TermOrder::DegLex).unwrap();
        assert_eq!(r.compressed, ps(2, 2, &[&[0, 0], &[0, 1]]));
        assert_eq!(r.traces.len(), 4);
    }

    #[test]
    fn downward_closed_input_keeps_its_size() {
        let v = ps(2, 2, &[&[0, 0], &[1, 0], &[0, 1]]);
        for ord in TermOrder::ALL {
            let r = alon_compress(&v, ord).unwrap();
            assert_eq!(r.compressed, v);
        }
    }

    #[test]
    fn full_grid_is_fixed() {
        let v = PointSet::full(3, 3);
        assert_eq!(alon_compress(&v, TermOrder::Lex).unwrap().compressed, v);
    }

    #[test]
    fn trace_examples() {
        let v = hamming_sphere(2, 1, 3).unwrap();
        assert_eq!(trace_size(&v, CoordSet::empty()), 1);
        assert_eq!(trace_size(&v, CoordSet::from_indices([1])), 3);
        let diag = ps(2, 2, &[&[0, 0], &[1, 1]]);
        assert_eq!(trace_size(&diag, CoordSet::from_indices([1, 2])), 2);
    }

    #[test]
    fn downward_closed_examples() {
        assert!(is_downward_closed(&ps(2, 2, &[&[0, 0]])));
        assert!(!is_downward_closed(&ps(2, 2, &[&[1, 1]])));
        assert!(is_downward_closed(&PointSet::empty(2, 2)));
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(alon_compress(&PointSet::empty(2, 2), TermOrder::Lex), Err(Error::EmptyPointSet));
    }
}
