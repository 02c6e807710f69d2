//! Shattered sets, the full-power standard monomials behind them, and a
//! certificate polynomial for a set that is not shattered.

use shatter_basis::ideals::{non_shatter_certificate, vanishing_basis};
use shatter_basis::tuples::{shattered_family, shatters};
use shatter_basis::{CoordSet, Monomial, PointSet, TermOrder, Tuple};

fn main() -> shatter_basis::Result<()> {
    let (n, q) = (3, 2);
    let v = PointSet::new(n, q, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]])?;
    println!("Sh(V) = {}", shattered_family(&v));

    let (_, sm) = vanishing_basis(&v, TermOrder::DegLex)?;
    for s in CoordSet::all_subsets(n) {
        let m = Monomial::power_product(n, s.iter(), q - 1);
        if sm.contains(&m) {
            println!("{m} is standard, so {s} is shattered: {}", shatters(&v, s));
        }
    }

    let s = CoordSet::from_indices([1, 3]);
    let w = Tuple::new(vec![1, 0, 1]);
    let g = non_shatter_certificate(&v, s, &w)?;
    println!("{s} is missed at {w}; certificate {g} (lm {})", g.leading_monomial(TermOrder::DegLex)?);
    Ok(())
}
