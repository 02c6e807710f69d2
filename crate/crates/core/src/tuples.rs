//! Tuple systems, set families and the combinatorial constructions built on
//! them: shattering, supports, uniform slices, Hamming spheres, blow-ups and
//! the ballot class.
//!
//! Coordinates are 1-based everywhere a coordinate set is involved, so
//! `CoordSet::from_indices([1, 3])` is `{1, 3}` and the first coordinate of a
//! tuple is coordinate 1.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// A point of `(q)^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tuple(Vec<u32>);

impl Tuple {
    pub fn new(coords: Vec<u32>) -> Self {
        Tuple(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Coordinate `i`, 1-based.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The characteristic vector of `set` in `(2)^n`.
    pub fn characteristic(n: usize, set: CoordSet) -> Tuple {
        Tuple((1..=n).map(|i| u32::from(set.contains(i))).collect())
    }

    /// The monomial with this tuple as exponent vector.
    pub fn to_monomial(&self) -> Monomial {
        Monomial::new(self.0.clone())
    }

    pub fn from_monomial(m: &Monomial) -> Tuple {
        Tuple(m.exponents().to_vec())
    }

    fn check_range(&self, q: u32) -> Result<()> {
        match self.0.iter().find(|&&c| c >= q) {
            Some(&value) => Err(Error::CoordinateOutOfRange { value, q }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A set of coordinates drawn from `[n] = {1, ..., n}`, `n <= 64`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordSet(u64);

impl CoordSet {
    pub const MAX_DIM: usize = 64;

    pub fn empty() -> Self {
        CoordSet(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_DIM);
        if n == 64 {
            CoordSet(u64::MAX)
        } else {
            CoordSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = CoordSet(0);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Bit `i - 1` holds coordinate `i`.
    pub fn from_bits(bits: u64) -> Self {
        CoordSet(bits)
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, i: usize) {
        assert!((1..=Self::MAX_DIM).contains(&i), "coordinate {i} out of range");
        self.0 |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << (i - 1));
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=Self::MAX_DIM).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &CoordSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &CoordSet) -> CoordSet {
        CoordSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &CoordSet) -> CoordSet {
        CoordSet(self.0 & other.0)
    }

    pub fn difference(&self, other: &CoordSet) -> CoordSet {
        CoordSet(self.0 & !other.0)
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (1..=Self::MAX_DIM).filter(move |&i| bits & (1 << (i - 1)) != 0)
    }

    /// Every subset of `[n]`, in increasing bitmask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = CoordSet> {
        assert!(n < Self::MAX_DIM);
        (0..(1u64 << n)).map(CoordSet)
    }

    /// Every subset of `self`.
    pub fn subsets(&self) -> impl Iterator<Item = CoordSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(CoordSet(cur))
        })
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for CoordSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for CoordSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(bad) = v.iter().find(|&&i| !(1..=CoordSet::MAX_DIM).contains(&i)) {
            return Err(serde::de::Error::custom(format!("coordinate {bad} out of range")));
        }
        Ok(CoordSet::from_indices(v))
    }
}

/// A duplicate-free, sorted subset of `(q)^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    n: usize,
    q: u32,
    points: Vec<Tuple>,
}

impl PointSet {
    pub fn new(n: usize, q: u32, points: Vec<Vec<u32>>) -> Result<Self> {
        Self::from_tuples(n, q, points.into_iter().map(Tuple).collect())
    }

    pub fn from_tuples(n: usize, q: u32, mut points: Vec<Tuple>) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall(q));
        }
        for p in &points {
            if p.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
            }
            p.check_range(q)?;
        }
        points.sort();
        points.dedup();
        Ok(PointSet { n, q, points })
    }

    pub fn empty(n: usize, q: u32) -> Self {
        PointSet { n, q, points: Vec::new() }
    }

    /// All of `(q)^n`.
    pub fn full(n: usize, q: u32) -> Self {
        PointSet { n, q, points: all_tuples(n, q) }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, q: u32, points: Vec<Tuple>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        PointSet { n, q, points }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn points(&self) -> &[Tuple] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Tuple> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, t: &Tuple) -> bool {
        self.points.binary_search(t).is_ok()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    /// The subsystem selected by `mask` (bit `k` keeps point `k`).
    pub fn select(&self, mask: u64) -> PointSet {
        let points = self
            .points
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect();
        PointSet::from_sorted_unchecked(self.n, self.q, points)
    }

    pub fn filter<F: FnMut(&Tuple) -> bool>(&self, mut keep: F) -> PointSet {
        let points = self.points.iter().filter(|p| keep(p)).cloned().collect();
        PointSet::from_sorted_unchecked(self.n, self.q, points)
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Tuple;
    type IntoIter = std::slice::Iter<'a, Tuple>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// A family of subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: BTreeSet<CoordSet>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = CoordSet>>(n: usize, members: I) -> Result<Self> {
        let full = CoordSet::full(n);
        let members: BTreeSet<CoordSet> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| !m.is_subset(&full)) {
            return Err(Error::ParameterOutOfRange(format!("member {bad} is not a subset of [{n}]")));
        }
        Ok(SetFamily { n, members })
    }

    /// All subsets of `[n]`.
    pub fn power_set(n: usize) -> Self {
        SetFamily { n, members: CoordSet::all_subsets(n).collect() }
    }

    /// All `d`-subsets of `[n]`.
    pub fn uniform(n: usize, d: usize) -> Self {
        SetFamily { n, members: CoordSet::all_subsets(n).filter(|s| s.len() == d).collect() }
    }

    /// The family with bit `k` of `mask` selecting subset number `k` of `[n]`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let members = CoordSet::all_subsets(n).filter(|s| mask >> s.bits() & 1 == 1).collect();
        SetFamily { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &BTreeSet<CoordSet> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &CoordSet) -> bool {
        self.members.contains(s)
    }

    /// Characteristic vectors as a tuple system in `(2)^n`.
    pub fn to_point_set(&self) -> PointSet {
        let pts = self.members.iter().map(|&s| Tuple::characteristic(self.n, s)).collect();
        PointSet::from_tuples(self.n, 2, pts).expect("characteristic vectors are binary")
    }

    /// Read a binary tuple system as a set family.
    pub fn from_point_set(v: &PointSet) -> Result<Self> {
        let mut members = BTreeSet::new();
        for p in v {
            if let Some(&value) = p.coords().iter().find(|&&c| c > 1) {
                return Err(Error::CoordinateOutOfRange { value, q: 2 });
            }
            members.insert(support(p));
        }
        Ok(SetFamily { n: v.n(), members })
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// `J`, `Q`, `Z` of a tuple: coordinates strictly inside `(0, q-1)`, equal to
/// `q-1`, and equal to `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JqzPartition {
    pub j: CoordSet,
    pub q: CoordSet,
    pub z: CoordSet,
}

pub fn support(v: &Tuple) -> CoordSet {
    CoordSet::from_indices(v.coords().iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i + 1))
}

pub fn jqz(v: &Tuple, q: u32) -> Result<JqzPartition> {
    v.check_range(q)?;
    let mut part = JqzPartition { j: CoordSet::empty(), q: CoordSet::empty(), z: CoordSet::empty() };
    for (i, &c) in v.coords().iter().enumerate() {
        if c == 0 {
            part.z.insert(i + 1);
        } else if c == q - 1 {
            part.q.insert(i + 1);
        } else {
            part.j.insert(i + 1);
        }
    }
    Ok(part)
}

/// Number of distinct restrictions `v|_S` over `v` in `V`.
pub fn trace_size(v: &PointSet, s: CoordSet) -> usize {
    let coords: Vec<usize> = s.iter().collect();
    let distinct: HashSet<Vec<u32>> =
        v.iter().map(|p| coords.iter().map(|&i| p.get(i)).collect()).collect();
    distinct.len()
}

/// Whether `V` realizes all `q^|S|` functions `S -> (q)`.
pub fn shatters(v: &PointSet, s: CoordSet) -> bool {
    debug_assert!(s.is_subset(&CoordSet::full(v.n())));
    let coords: Vec<usize> = s.iter().collect();
    let Some(need) = (v.q() as u128).checked_pow(coords.len() as u32) else {
        return false;
    };
    if (v.len() as u128) < need {
        return false;
    }
    let q = v.q() as u128;
    let mut seen: HashSet<u128> = HashSet::new();
    for p in v {
        let code = coords.iter().fold(0u128, |acc, &i| acc * q + p.get(i) as u128);
        seen.insert(code);
        if seen.len() as u128 == need {
            return true;
        }
    }
    false
}

/// `Sh(V)`: every shattered coordinate set.
pub fn shattered_family(v: &PointSet) -> SetFamily {
    let n = v.n();
    let mut members: BTreeSet<CoordSet> = BTreeSet::new();
    // Shattering is inherited by subsets, so only test sets whose maximal
    // proper subsets are all shattered; visiting masks in increasing order
    // guarantees those were decided first.
    for s in CoordSet::all_subsets(n) {
        let all_below = s.iter().all(|i| {
            let mut t = s;
            t.remove(i);
            members.contains(&t)
        });
        if all_below && shatters(v, s) {
            members.insert(s);
        }
    }
    SetFamily { n, members }
}

/// Size of the largest shattered set (the VC dimension), `None` if `V` is empty.
pub fn max_shattered_size(v: &PointSet) -> Option<usize> {
    if v.is_empty() {
        return None;
    }
    shattered_family(v).members().iter().map(CoordSet::len).max()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Common coordinate sum, if constant.
    pub uniform: Option<u32>,
    /// Common support size, if constant.
    pub hamming: Option<usize>,
}

pub fn classify(v: &PointSet) -> Result<Classification> {
    let first = v.points().first().ok_or(Error::EmptyPointSet)?;
    let d_sum = first.sum();
    let d_supp = support(first).len();
    Ok(Classification {
        uniform: v.iter().all(|p| p.sum() == d_sum).then_some(d_sum),
        hamming: v.iter().all(|p| support(p).len() == d_supp).then_some(d_supp),
    })
}

/// All of `(q)^n` in lexicographic order.
pub fn all_tuples(n: usize, q: u32) -> Vec<Tuple> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        out.push(Tuple(cur.clone()));
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < q {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// `U(n, d, q)`: all tuples with coordinate sum `d`.
pub fn complete_uniform(n: usize, d: u32, q: u32) -> Result<PointSet> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    if d as u64 > (q as u64 - 1) * n as u64 {
        return Err(Error::ParameterOutOfRange(format!("d = {d} exceeds (q-1)n = {}", (q - 1) as usize * n)));
    }
    fn rec(i: usize, rem: u32, n: usize, q: u32, cur: &mut Vec<u32>, out: &mut Vec<Tuple>) {
        if i == n {
            if rem == 0 {
                out.push(Tuple(cur.clone()));
            }
            return;
        }
        let tail_cap = (q - 1) * (n - i - 1) as u32;
        let lo = rem.saturating_sub(tail_cap);
        let hi = rem.min(q - 1);
        for a in lo..=hi {
            cur.push(a);
            rec(i + 1, rem - a, n, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, n, q, &mut Vec::with_capacity(n), &mut out);
    Ok(PointSet::from_sorted_unchecked(n, q, out))
}

/// `V(n, d, q)`: the Hamming sphere of tuples with exactly `d` nonzero coordinates.
pub fn hamming_sphere(n: usize, d: usize, q: u32) -> Result<PointSet> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    if d > n {
        return Err(Error::ParameterOutOfRange(format!("d = {d} exceeds n = {n}")));
    }
    fn rec(i: usize, rem: usize, n: usize, q: u32, cur: &mut Vec<u32>, out: &mut Vec<Tuple>) {
        if i == n {
            out.push(Tuple(cur.clone()));
            return;
        }
        let free = n - i;
        if rem < free {
            cur.push(0);
            rec(i + 1, rem, n, q, cur, out);
            cur.pop();
        }
        if rem > 0 {
            for a in 1..q {
                cur.push(a);
                rec(i + 1, rem - 1, n, q, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, d, n, q, &mut Vec::with_capacity(n), &mut out);
    Ok(PointSet::from_sorted_unchecked(n, q, out))
}

/// `F^q`: all tuples whose support is a member of `F`.
pub fn blow_up(family: &SetFamily, q: u32) -> Result<PointSet> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    let n = family.n();
    let mut out = Vec::new();
    for &member in family.members() {
        let coords: Vec<usize> = member.iter().collect();
        let count = (q as u64 - 1).pow(coords.len() as u32);
        for code in 0..count {
            let mut t = vec![0u32; n];
            let mut rest = code;
            for &i in coords.iter().rev() {
                t[i - 1] = 1 + (rest % (q as u64 - 1)) as u32;
                rest /= q as u64 - 1;
            }
            out.push(Tuple(t));
        }
    }
    PointSet::from_tuples(n, q, out)
}

/// `F_J`: the members of `F` containing `J`.
pub fn subfamily_through(family: &SetFamily, j: CoordSet) -> SetFamily {
    SetFamily {
        n: family.n(),
        members: family.members().iter().filter(|m| j.is_subset(m)).copied().collect(),
    }
}

/// `W(n, s, q)`: tuples with at most `s` coordinates equal to `q - 1`.
pub fn km_extremal(n: usize, s: usize, q: u32) -> Result<PointSet> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q));
    }
    if s > n {
        return Err(Error::ParameterOutOfRange(format!("s = {s} exceeds n = {n}")));
    }
    fn rec(i: usize, budget: usize, n: usize, q: u32, cur: &mut Vec<u32>, out: &mut Vec<Tuple>) {
        if i == n {
            out.push(Tuple(cur.clone()));
            return;
        }
        for a in 0..q {
            let top = a == q - 1;
            if top && budget == 0 {
                continue;
            }
            cur.push(a);
            rec(i + 1, budget - usize::from(top), n, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, s, n, q, &mut Vec::with_capacity(n), &mut out);
    Ok(PointSet::from_sorted_unchecked(n, q, out))
}

/// Membership of `x^v` in the ballot class: every prefix of odd length
/// `2t - 1` holds at most `t - 1` coordinates equal to `q - 1`.
pub fn ballot_member(v: &Tuple, q: u32) -> Result<bool> {
    v.check_range(q)?;
    let mut tops = 0usize;
    for (idx, &c) in v.coords().iter().enumerate() {
        if c == q - 1 {
            tops += 1;
        }
        let len = idx + 1;
        if len % 2 == 1 && tops > (len - 1) / 2 {
            return Ok(false);
        }
    }
    // the whole word for even n, i.e. t = n/2 + 1
    let n = v.dim();
    if n.is_multiple_of(2) && tops > n / 2 {
        return Ok(false);
    }
    Ok(true)
}

/// The `t` with `H` in `H(t)`, if any: `H = {s_1 < ... < s_t}` with
/// `s_i >= 2i` for `i < t` and `s_t < 2t`, `0 < t <= n/2`.
pub fn h_family_index(h: CoordSet, n: usize) -> Option<usize> {
    let t = h.len();
    if t == 0 || 2 * t > n || h.last().is_some_and(|m| m > n) {
        return None;
    }
    let elems: Vec<usize> = h.iter().collect();
    let ok = elems.iter().enumerate().all(|(k, &s)| {
        let i = k + 1;
        if i < t {
            s >= 2 * i
        } else {
            s < 2 * i
        }
    });
    ok.then_some(t)
}

/// `H(t)` as a family of `t`-subsets of `[n]`.
pub fn h_family(t: usize, n: usize) -> Result<SetFamily> {
    if t == 0 || 2 * t > n {
        return Err(Error::ParameterOutOfRange(format!("need 0 < t <= n/2, got t = {t}, n = {n}")));
    }
    let members = CoordSet::all_subsets(n).filter(|&s| h_family_index(s, n) == Some(t)).collect();
    Ok(SetFamily { n, members })
}

/// The `i` with `x^m` in `X_i`: the number of exponents equal to `q - 1`.
pub fn qslice_degree(m: &Monomial, q: u32) -> Result<usize> {
    if let Some(&value) = m.exponents().iter().find(|&&e| e >= q) {
        return Err(Error::CoordinateOutOfRange { value, q });
    }
    Ok(m.exponents().iter().filter(|&&e| e == q - 1).count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundSlice {
    pub d: u32,
    pub x: PointSet,
}

/// The largest coordinate-sum slice of `W(n, s, q)`; ties go to the smallest sum.
pub fn lower_bound_slice(n: usize, s: usize, q: u32) -> Result<LowerBoundSlice> {
    let w = km_extremal(n, s, q)?;
    let mut slices: BTreeMap<u32, Vec<Tuple>> = BTreeMap::new();
    for p in w.iter() {
        slices.entry(p.sum()).or_default().push(p.clone());
    }
    let mut best: Option<(u32, Vec<Tuple>)> = None;
    for (d, pts) in slices {
        if best.as_ref().is_none_or(|(_, b)| pts.len() > b.len()) {
            best = Some((d, pts));
        }
    }
    let (d, pts) = best.expect("W(n,s,q) always contains the zero tuple");
    Ok(LowerBoundSlice { d, x: PointSet::from_sorted_unchecked(n, q, pts) })
}
