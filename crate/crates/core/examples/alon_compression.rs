//! Compressing a tuple system to a downward-closed one with no larger traces.

use shatter_basis::compress::alon_compress;
use shatter_basis::{PointSet, TermOrder};

fn main() -> shatter_basis::Result<()> {
    let v = PointSet::new(3, 3, vec![vec![2, 2, 0], vec![1, 2, 1], vec![0, 1, 2], vec![2, 0, 1], vec![1, 1, 1]])?;
    for ord in TermOrder::ALL {
        let r = alon_compress(&v, ord)?;
        let pts: Vec<String> = r.compressed.iter().map(|t| t.to_string()).collect();
        println!("{ord}: W = {}", pts.join(" "));
        for (s, t) in &r.traces {
            if t.compressed < t.original {
                println!("  trace on {s} shrinks {} -> {}", t.original, t.compressed);
            }
        }
    }
    Ok(())
}
