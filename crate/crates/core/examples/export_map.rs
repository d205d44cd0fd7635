//! Export a polyhedron as JSON and its flag graph as DOT.
//!
//! cargo run --example export_map -- dot > hemicube.dot

use std::io::Write;

use tight_polyhedra::export::{export_map, MapLabel};
use tight_polyhedra::sggi::schlafli_type;
use tight_polyhedra::{build_map, delta_presentation, enumerate_cosets, map_invariants};

fn main() -> tight_polyhedra::Result<()> {
    let format = std::env::args().nth(1).filter(|a| a == "dot").unwrap_or_else(|| "json".into());
    let pres = delta_presentation(4, 3, 2, -2, -1, 2)?;
    let rep = enumerate_cosets(&pres, pres.default_max_cosets())?;
    let map = build_map(&rep);
    let label = MapLabel::from_family(pres.family(), schlafli_type(&rep));
    let bytes = export_map(&map, &map_invariants(&map, &rep), &label, &format)?;
    std::io::stdout().write_all(&bytes).expect("stdout");
    Ok(())
}
