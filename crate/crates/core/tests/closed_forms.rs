mod common;

use std::collections::BTreeSet;

use shatter_basis::closedform::{
    bound, sm_blowup, sm_hamming_sphere, sm_uniform_binary, BoundName, BoundParams,
};
use shatter_basis::tuples::{complete_uniform, h_family, hamming_sphere, shattered_family, CoordSet, SetFamily};
use shatter_basis::{PointSet, StandardMonomialSet};

fn exps(sm: &StandardMonomialSet) -> BTreeSet<Vec<u32>> {
    sm.iter().map(|m| m.exponents().to_vec()).collect()
}

fn coords(v: &PointSet) -> Vec<Vec<u32>> {
    v.iter().map(|t| t.coords().to_vec()).collect()
}

#[test]
fn binary_uniform_against_oracle() {
    for n in 0..=6 {
        for d in 0..=n {
            let u = complete_uniform(n, d as u32, 2).unwrap();
            let closed = exps(&sm_uniform_binary(n, d).unwrap());
            for ord in ["lex", "deglex"] {
                assert_eq!(closed, common::standard_monomials(&coords(&u), n, 2, ord), "n={n} d={d} {ord}");
            }
        }
    }
}

#[test]
fn hamming_sphere_against_oracle() {
    for (q, max_n) in [(2, 4), (3, 4), (4, 3)] {
        for n in 0..=max_n {
            for d in 0..=n {
                let v = hamming_sphere(n, d, q).unwrap();
                let closed = exps(&sm_hamming_sphere(n, d, q).unwrap());
                for ord in ["lex", "deglex"] {
                    assert_eq!(closed, common::standard_monomials(&coords(&v), n, q, ord), "n={n} d={d} q={q}");
                }
            }
        }
    }
}

#[test]
fn blowup_against_oracle() {
    let n = 3;
    for mask in 1u64..(1 << (1 << n)) {
        let f = SetFamily::from_mask(n, mask);
        let blown = shatter_basis::tuples::blow_up(&f, 3).unwrap();
        for (ord, name) in [(shatter_basis::TermOrder::Lex, "lex"), (shatter_basis::TermOrder::DegLex, "deglex")] {
            let closed = exps(&sm_blowup(&f, 3, ord).unwrap());
            assert_eq!(closed, common::standard_monomials(&coords(&blown), n, 3, name), "mask={mask}");
        }
    }
}

#[test]
fn uniform_family_blows_up_to_the_sphere() {
    for n in 1..=4 {
        for d in 0..=n {
            let f = SetFamily::uniform(n, d);
            let blown = shatter_basis::tuples::blow_up(&f, 3).unwrap();
            assert_eq!(blown, hamming_sphere(n, d, 3).unwrap());
            let a = sm_blowup(&f, 3, shatter_basis::TermOrder::DegLex).unwrap();
            assert!(a.same_set(&sm_hamming_sphere(n, d, 3).unwrap()));
        }
    }
}

#[test]
fn h_families_are_the_minimal_non_ballot_sets() {
    for n in 2..=8 {
        let non_ballot: Vec<CoordSet> = CoordSet::all_subsets(n)
            .filter(|s| {
                let v: Vec<u32> = (1..=n).map(|i| s.contains(i) as u32).collect();
                !common::ballot(&v, 2)
            })
            .collect();
        let minimal: BTreeSet<CoordSet> = non_ballot
            .iter()
            .filter(|s| 2 * s.len() <= n && !non_ballot.iter().any(|t| t != *s && t.is_subset(s)))
            .copied()
            .collect();
        let union: BTreeSet<CoordSet> =
            (1..=n / 2).flat_map(|t| h_family(t, n).unwrap().members().clone()).collect();
        assert_eq!(union, minimal, "n={n}");
    }
}

#[test]
fn paper_h_families() {
    let members = |t, n| -> Vec<Vec<usize>> {
        h_family(t, n).unwrap().members().iter().map(|s| s.iter().collect()).collect()
    };
    assert_eq!(members(1, 5), vec![vec![1]]);
    assert_eq!(members(2, 5), vec![vec![2, 3]]);
    let mut h3 = members(3, 6);
    h3.sort();
    assert_eq!(h3, vec![vec![2, 4, 5], vec![3, 4, 5]]);
}

#[test]
fn sharp_hamming_sphere() {
    let v = hamming_sphere(4, 2, 3).unwrap();
    let b = bound(BoundName::Main2, BoundParams::new(4).d(2).s(2).q(3)).unwrap();
    assert_eq!(b.value, 24.into());
    assert_eq!(v.len(), 24);
    assert!(shattered_family(&v).members().iter().all(|s| s.len() <= 2));
}
