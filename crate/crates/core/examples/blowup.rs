//! Blow-up of a set family to a tuple system and its Gröbner basis.

use shatter_basis::closedform::{gb_blowup, sm_blowup};
use shatter_basis::ideals::certify_groebner;
use shatter_basis::tuples::blow_up;
use shatter_basis::{CoordSet, SetFamily, TermOrder};

fn main() -> shatter_basis::Result<()> {
    let f = SetFamily::new(
        3,
        [CoordSet::empty(), CoordSet::from_indices([1, 2]), CoordSet::from_indices([3])],
    )?;
    let q = 3;
    let v = blow_up(&f, q)?;
    println!("F = {f}, |F^{q}| = {}", v.len());
    let ord = TermOrder::DegLex;
    let sm = sm_blowup(&f, q, ord)?;
    let names: Vec<String> = sm.sorted(ord).iter().map(|m| m.to_string()).collect();
    println!("SM = {{{}}}", names.join(", "));
    let gb = gb_blowup(&f, q, ord)?;
    for g in &gb {
        println!("  {}", g.render(ord));
    }
    println!("certified: {}", certify_groebner(&v, &gb, ord));
    Ok(())
}
