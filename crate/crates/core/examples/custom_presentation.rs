//! Read a presentation in the text format (one relator per line over a, b,
//! c) and analyze the group it defines.

use tight_polyhedra::{build_map, enumerate_cosets, map_invariants, Presentation, SggiReport};

const TEXT: &str = "\
# the cube group [4,3]
aa
bb
cc
acac
abababab
bcbcbc
";

fn main() -> tight_polyhedra::Result<()> {
    let pres = Presentation::parse_text(TEXT)?;
    pres.validate()?;
    let rep = enumerate_cosets(&pres, pres.default_max_cosets())?;
    let report = SggiReport::analyze(&rep);
    println!("order {}, type {}, string C-group {}, tight {}", report.order, report.schlafli, report.is_string_c_group, report.is_tight);
    let map = build_map(&rep);
    println!("{:?}", map_invariants(&map, &rep));
    Ok(())
}
