//! The {48,32} case end to end: edge-simple solutions on each side, the
//! pairing of i and j values, and a brute-force confirmation.

use tight_polyhedra::arith::edge_simple_solutions;
use tight_polyhedra::oracle::{brute_force_orientable, DEFAULT_BUDGET};
use tight_polyhedra::classify_orientable;

fn main() -> tight_polyhedra::Result<()> {
    for p in [48u64, 32] {
        println!("edge-simple solutions for p = {p}:");
        for s in edge_simple_solutions(p) {
            println!("  k = {:>2}  q = {:>2}  i = 1 - k = {:>2}", s.k, s.q, s.lambda_i());
        }
    }
    let closed = classify_orientable(48, 32);
    println!("closed form: {} polyhedra", closed.len());
    for o in &closed {
        println!("  Λ(48,32)_{{{},{}}}", o.i, o.j);
    }
    let brute = brute_force_orientable(48, 32, DEFAULT_BUDGET)?;
    println!("brute force over 1536 candidates: {} classes", brute.len());
    assert_eq!(brute, closed);
    Ok(())
}
