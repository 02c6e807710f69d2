//! Gröbner basis and standard monomials of I(V), then interpolation on V.

use std::collections::BTreeMap;

use shatter_basis::ideals::{certify_groebner, interpolate, vanishing_basis};
use shatter_basis::{PointSet, Rational, TermOrder};

fn main() -> shatter_basis::Result<()> {
    let v = PointSet::new(2, 3, vec![vec![0, 0], vec![1, 0], vec![0, 2], vec![2, 1], vec![1, 1]])?;
    for ord in TermOrder::ALL {
        let (gb, sm) = vanishing_basis(&v, ord)?;
        println!("{ord}: |V| = {}, |SM| = {}", v.len(), sm.len());
        let names: Vec<String> = sm.sorted(ord).iter().map(|m| m.to_string()).collect();
        println!("  SM = {{{}}}", names.join(", "));
        for g in &gb.generators {
            println!("  g = {}", g.render(ord));
        }
        println!("  certified: {}", certify_groebner(&v, &gb.generators, ord));
    }

    let values: BTreeMap<_, _> = v.iter().map(|t| (t.clone(), Rational::from_integer(t.sum().into()))).collect();
    let f = interpolate(&v, &values, TermOrder::DegLex)?;
    println!("interpolant of the coordinate sum: {f}");
    Ok(())
}
