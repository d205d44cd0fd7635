#![allow(dead_code)]

use tight_polyhedra::group::{cyclic_subgroup, is_normal};
use tight_polyhedra::{enumerate_cosets, Element, Presentation, RegularRepresentation};

pub fn group(pres: &Presentation) -> RegularRepresentation {
    enumerate_cosets(pres, pres.default_max_cosets()).expect("finite group")
}

/// x^e for any integer e.
pub fn power(rep: &RegularRepresentation, x: Element, e: i64) -> Element {
    let n = rep.element_order(x) as i64;
    rep.pow(x, e.rem_euclid(n) as u64)
}

pub fn cyclic_is_normal(rep: &RegularRepresentation, x: Element) -> bool {
    is_normal(rep, &cyclic_subgroup(rep, x))
}

/// Equal as cyclic sequences, up to rotation and reversal.
pub fn same_cycle(a: &[u64], b: &[u64]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let reversed: Vec<u64> = b.iter().rev().copied().collect();
    (0..n).any(|s| {
        (0..n).all(|t| a[t] == b[(s + t) % n]) || (0..n).all(|t| a[t] == reversed[(s + t) % n])
    })
}
