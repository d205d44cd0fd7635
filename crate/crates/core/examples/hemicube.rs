//! The hemicube as a Δ group: enumerate it, check it is a tight string
//! C-group, and rebuild the polyhedron from cosets.

use tight_polyhedra::map::face_walk;
use tight_polyhedra::{build_map, delta_presentation, enumerate_cosets, map_invariants, validate_polyhedron, SggiReport};

fn main() -> tight_polyhedra::Result<()> {
    let pres = delta_presentation(4, 3, 2, -2, -1, 2)?;
    println!("{}", pres.family());
    let rep = enumerate_cosets(&pres, pres.default_max_cosets())?;
    let report = SggiReport::analyze(&rep);
    println!("{report:?}");

    let map = build_map(&rep);
    println!("polyhedron axioms hold: {}", validate_polyhedron(&map));
    println!("{:?}", map_invariants(&map, &rep));
    for f in 0..map.faces.len() {
        println!("face {f}: vertices {:?}", face_walk(&map, f));
    }
    Ok(())
}
