//! Modular arithmetic behind the edge-simple orientable classification.

use serde::Serialize;

use crate::error::{Error, Result};

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Inverse of `a` modulo `m`, for coprime a and m.
fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// Combines x ≡ r1 (mod m1) and x ≡ r2 (mod m2) for coprime moduli.
fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    if m2 == 1 {
        return r1 % m1;
    }
    let inv = mod_inverse(m1 % m2, m2) as i128;
    let diff = (r2 as i128 - r1 as i128).rem_euclid(m2 as i128);
    let t = (diff * inv).rem_euclid(m2 as i128);
    (r1 as i128 + m1 as i128 * t) as u64 % (m1 * m2)
}

/// Square roots of 1 modulo a prime power, from the closed forms: odd P
/// gives {1, P^n − 1}; powers of two give {1}, {1, 3} or
/// {1, 2^{n−1} − 1, 2^{n−1} + 1, 2^n − 1}.
pub fn prime_power_roots(prime: u64, exponent: u32) -> Vec<u64> {
    let m = prime.pow(exponent);
    let mut roots = if prime == 2 {
        match exponent {
            1 => vec![1],
            2 => vec![1, 3],
            _ => {
                let half = m / 2;
                vec![1, half - 1, half + 1, m - 1]
            }
        }
    } else {
        vec![1, m - 1]
    };
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// All x in [1, n] with x² ≡ 1 (mod n), sorted. For n = 1 the single residue
/// class is reported as {1}.
pub fn square_roots_of_unity(n: u64) -> Vec<u64> {
    assert!(n >= 1, "modulus must be positive");
    let mut acc: Vec<u64> = vec![0];
    let mut modulus = 1u64;
    for (prime, e) in factorize(n) {
        let m = prime.pow(e);
        let local = prime_power_roots(prime, e);
        acc = acc
            .iter()
            .flat_map(|&r| local.iter().map(move |&s| crt_pair(r, modulus, s, m)))
            .collect();
        modulus *= m;
    }
    let mut out: Vec<u64> = acc.into_iter().map(|r| if r == 0 { n } else { r }).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// 2σ2^m in the edge-simple labeling, by the closed case formula.
fn two_sigma2_pow(p: i64, k: i64, m: i64) -> i64 {
    let v = if m % 2 == 1 {
        (k - 2) * (m - 1) / 2
    } else {
        k + (k - 2) * (m - 2) / 2
    };
    v.rem_euclid(p)
}

fn check_k(p: u64, k: u64) -> Result<()> {
    if p < 2 || !p.is_multiple_of(2) {
        return Err(Error::InvalidK { p, k, reason: "p must be even" });
    }
    if !k.is_multiple_of(2) {
        return Err(Error::InvalidK { p, k, reason: "k must be even" });
    }
    let half = p / 2;
    let s = (k / 2) % half;
    if (s * s) % half != 1 % half {
        return Err(Error::InvalidK { p, k, reason: "(k/2)² is not 1 modulo p/2" });
    }
    Ok(())
}

/// The order of σ2 given p and k: the smallest m ≥ 1 at which 2σ2^m ≡ 2.
pub fn q_from_p_k(p: u64, k: u64) -> Result<u64> {
    check_k(p, k)?;
    let (pi, ki) = (p as i64, (k % p) as i64);
    (1..=2 * pi)
        .find(|&m| two_sigma2_pow(pi, ki, m) == 2 % pi)
        .map(|m| m as u64)
        .ok_or(Error::InvalidK { p, k, reason: "σ2 never returns vertex 2" })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeSimpleSolution {
    pub p: u64,
    pub k: u64,
    pub q: u64,
}

impl EdgeSimpleSolution {
    /// i = 1 − k (mod p), the Λ parameter of the polyhedron.
    pub fn lambda_i(&self) -> u64 {
        (1 + self.p - self.k % self.p) % self.p
    }
}

/// Every even k in [0, p) with (k/2)² ≡ 1 (mod p/2), paired with its q,
/// keeping q = 2 and 3 ≤ q < p. Sorted by k.
pub fn edge_simple_solutions(p: u64) -> Vec<EdgeSimpleSolution> {
    if p < 4 || !p.is_multiple_of(2) {
        return Vec::new();
    }
    (0..p)
        .step_by(2)
        .filter(|&k| check_k(p, k).is_ok())
        .filter_map(|k| {
            let q = q_from_p_k(p, k).ok()?;
            (q == 2 || (q >= 3 && q < p)).then_some(EdgeSimpleSolution { p, k, q })
        })
        .collect()
}
