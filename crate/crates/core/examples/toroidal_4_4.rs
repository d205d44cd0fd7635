//! The toroidal map {4,4}_(2,0): multiple edges show up exactly when ⟨σ2⟩
//! has a nontrivial core.

use tight_polyhedra::group::{cyclic_subgroup, subgroup_core};
use tight_polyhedra::map::detect_multiple_edges;
use tight_polyhedra::{build_map, enumerate_cosets, lambda_presentation, map_invariants};

fn main() -> tight_polyhedra::Result<()> {
    let pres = lambda_presentation(4, 4, -1, 1)?;
    let rep = enumerate_cosets(&pres, pres.default_max_cosets())?;
    let map = build_map(&rep);
    let inv = map_invariants(&map, &rep);
    println!("order {}, χ = {}, orientable {}", rep.order(), inv.euler_characteristic, inv.orientable);

    let s2 = rep.sigma2();
    let core = subgroup_core(&rep, &cyclic_subgroup(&rep, s2));
    let s2_squared = cyclic_subgroup(&rep, rep.mul(s2, s2));
    println!("core of ⟨σ2⟩ has {} elements; equals ⟨σ2²⟩: {}", core.size(), core.elements() == s2_squared.elements());
    println!("multiple edges: {} (multiplicity {})", detect_multiple_edges(&map), inv.edge_multiplicity);
    Ok(())
}
