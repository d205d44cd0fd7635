//! Square roots of unity by prime factorization and CRT, and the face
//! orders q they produce for edge-simple tight polyhedra.

use tight_polyhedra::arith::{edge_simple_solutions, factorize, square_roots_of_unity};

fn main() {
    for n in [8u64, 9, 24, 120] {
        println!("x² ≡ 1 mod {n} ({:?}): {:?}", factorize(n), square_roots_of_unity(n));
    }
    for p in [6u64, 10, 24] {
        let sols: Vec<(u64, u64)> = edge_simple_solutions(p).iter().map(|s| (s.k, s.q)).collect();
        println!("p = {p}: (k, q) = {sols:?}");
    }
}
