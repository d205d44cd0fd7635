//! Closed-form classification of one Schläfli type, with each record
//! verified by enumeration.
//!
//! cargo run --example classify_type -- 4 6

use tight_polyhedra::{classify_all, tight_existence};

fn main() -> tight_polyhedra::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (4, 6),
    };
    let verdict = tight_existence(p, q);
    println!("{{{p},{q}}}: exists = {}, cases {:?}", verdict.exists, verdict.matched_cases);
    for record in classify_all(p, q)? {
        let inv = record.invariants;
        println!(
            "  {:<10} {:?}  order {}  χ = {}  V/E/F = {}/{}/{}  multiplicity {}",
            record.params.family_name(),
            record.params,
            record.report.order,
            inv.euler_characteristic,
            inv.vertex_count,
            inv.edge_count,
            inv.face_count,
            inv.edge_multiplicity,
        );
    }
    Ok(())
}
