//! Term orders, normal forms and the field polynomials.

use shatter_basis::polyring::{bar_lift, field_polynomials, indicator_polynomial, normal_form};
use shatter_basis::{Polynomial, TermOrder};

fn main() -> shatter_basis::Result<()> {
    let (n, q) = (2, 3);
    let f = Polynomial::parse("x1^4*x2 + 2*x1*x2^3 - x2", n)?;
    let fields = field_polynomials(n, q)?;
    for ord in TermOrder::ALL {
        let r = normal_form(&f, &fields, ord)?;
        println!("{ord:>6}: lm(f) = {}, NF = {}", f.leading_monomial(ord)?, r.render(ord));
    }

    let p = indicator_polynomial(q)?;
    println!("indicator p for q = {q}: {p}");

    let g = Polynomial::parse("x1 - x2", n)?;
    let lifted = bar_lift(&g, q)?;
    println!("bar lift of {g}: {lifted}");
    println!("lm = {}", lifted.leading_monomial(TermOrder::DegLex)?);
    Ok(())
}
