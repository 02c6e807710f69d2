//! The ballot class, the bounds, and the certificate polynomials for
//! uniform systems.

use shatter_basis::closedform::{bound, count_ballot, uniform_leading_certificate, BoundName, BoundParams};
use shatter_basis::tuples::h_family;
use shatter_basis::TermOrder;

fn main() -> shatter_basis::Result<()> {
    let (n, q) = (6, 3);
    for i in 0..=n / 2 {
        println!("|B ∩ X_{i}| = {}", count_ballot(n, q, i)?);
    }

    let p = BoundParams::new(n).d(3).s(2).q(q);
    for name in BoundName::ALL {
        match bound(name, p) {
            Ok(r) => println!("{name:>12}: {}", r.value),
            Err(e) => println!("{name:>12}: {e}"),
        }
    }

    let h = *h_family(2, n)?.members().iter().next().expect("H(2) is nonempty");
    let f = uniform_leading_certificate(n, 4, q, h, TermOrder::DegLex)?;
    println!("certificate for H = {h} on U({n},4,{q}) has lm {}", f.leading_monomial(TermOrder::DegLex)?);
    Ok(())
}
