//! Coset enumeration of string Coxeter groups with both strategies, and
//! what happens when the group is too big for the bound.

use tight_polyhedra::{coxeter_presentation, enumerate_with, Error, Strategy};

fn main() -> tight_polyhedra::Result<()> {
    for (p, q) in [(2, 2), (3, 3), (3, 4), (3, 5), (2, 7)] {
        let pres = coxeter_presentation(p, q)?;
        let hlt = enumerate_with(&pres, 100_000, Strategy::Hlt)?;
        let felsch = enumerate_with(&pres, 100_000, Strategy::Felsch)?;
        println!("[{p},{q}]: order {} (HLT), {} (Felsch)", hlt.order(), felsch.order());
    }
    // [5,5] is a hyperbolic triangle group, so no bound is ever enough.
    match enumerate_with(&coxeter_presentation(5, 5)?, 100, Strategy::Hlt) {
        Err(Error::BoundExceeded { max_cosets }) => println!("[5,5]: more than {max_cosets} cosets"),
        other => println!("[5,5]: unexpected {other:?}"),
    }
    Ok(())
}
