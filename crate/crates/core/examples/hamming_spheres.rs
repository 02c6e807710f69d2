//! Standard monomials of Hamming spheres and binary uniform slices, closed
//! form against the engine.

use shatter_basis::closedform::{sm_hamming_sphere, sm_uniform_binary};
use shatter_basis::ideals::vanishing_basis;
use shatter_basis::tuples::{complete_uniform, hamming_sphere};
use shatter_basis::TermOrder;

fn main() -> shatter_basis::Result<()> {
    let (n, d, q) = (4, 2, 3);
    let v = hamming_sphere(n, d, q)?;
    let closed = sm_hamming_sphere(n, d, q)?;
    let (_, engine) = vanishing_basis(&v, TermOrder::Lex)?;
    println!("V({n},{d},{q}): {} points, closed form agrees: {}", v.len(), closed.same_set(&engine));

    for d in 0..=5 {
        let u = complete_uniform(5, d, 2)?;
        let (_, engine) = vanishing_basis(&u, TermOrder::DegLex)?;
        let closed = sm_uniform_binary(5, d as usize)?;
        println!("U(5,{d},2): |SM| = {:>2}, closed form agrees: {}", closed.len(), closed.same_set(&engine));
    }
    Ok(())
}
