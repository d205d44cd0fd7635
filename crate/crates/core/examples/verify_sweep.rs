//! Re-derive the classification by brute force over a range of types and
//! compare with the closed form.
//!
//! cargo run --release --example verify_sweep -- 8 8

use std::time::Instant;

use tight_polyhedra::oracle::verify_range;

fn main() -> tight_polyhedra::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (max_p, max_q) = match args[..] {
        [p, q] => (p, q),
        _ => (6, 6),
    };
    let start = Instant::now();
    let reports = verify_range(max_p, max_q)?;
    for r in &reports {
        if !r.found_orientable.is_empty() || !r.found_nonorientable.is_empty() || !r.is_clean() {
            println!(
                "{:>8}  orientable {:>2}  non-orientable {:>2}  runs {:>6}  {:>8.2?}  {}",
                r.schlafli.to_string(),
                r.found_orientable.len(),
                r.found_nonorientable.len(),
                r.enumerations_run,
                r.elapsed,
                if r.skipped { "skipped".to_string() } else { r.mismatches.join("; ") },
            );
        }
    }
    let bad = reports.iter().filter(|r| !r.is_clean()).count();
    println!("{} types, {bad} with mismatches or skips, {:.1?}", reports.len(), start.elapsed());
    Ok(())
}
