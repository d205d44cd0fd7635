//! Coset enumeration over the trivial subgroup.
//!
//! The coset table has one column per generator. Since every generator is an
//! involution, `c·g = d` forces `d·g = c`; the table is a set of three partial
//! matchings and the relators ρ_i² never need to be traced.

use crate::error::{Error, Result};
use crate::group::RegularRepresentation;
use crate::presentation::Presentation;

const NONE: u32 = u32::MAX;

/// Coset definition order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Relator-based: trace every relator at each coset in turn, defining
    /// cosets as needed, then fill the row.
    #[default]
    Hlt,
    /// Define the first undefined table entry, then process all deductions
    /// before the next definition.
    Felsch,
}

/// Enumerates the group defined by `pres` with the default (HLT) strategy.
pub fn enumerate_cosets(pres: &Presentation, max_cosets: usize) -> Result<RegularRepresentation> {
    enumerate_with(pres, max_cosets, Strategy::Hlt)
}

pub fn enumerate_with(
    pres: &Presentation,
    max_cosets: usize,
    strategy: Strategy,
) -> Result<RegularRepresentation> {
    pres.validate()?;
    if max_cosets == 0 {
        return Err(Error::InvalidPresentation("max_cosets must be positive".into()));
    }
    let relators = traced_relators(pres);
    let mut table = CosetTable::new(max_cosets);
    match strategy {
        Strategy::Hlt => table.run_hlt(&relators, 0)?,
        Strategy::Felsch => table.run_felsch(&relators)?,
    }
    Ok(table.into_representation())
}

/// Cyclically reduced relators other than the involutions, shortest first.
fn traced_relators(pres: &Presentation) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = Vec::new();
    for r in pres.relators() {
        let r = r.cyclically_reduced();
        if r.is_empty() {
            continue;
        }
        let letters: Vec<u8> = r.letters().iter().map(|g| g.index() as u8).collect();
        // A single letter x means x = 1; it still has to be traced.
        if !out.contains(&letters) {
            out.push(letters);
        }
    }
    out.sort_by_key(|r| r.len());
    out
}

struct CosetTable {
    rows: Vec<[u32; 3]>,
    parent: Vec<u32>,
    live: usize,
    max_cosets: usize,
    queue: Vec<u32>,
    deductions: Vec<(u32, u8)>,
    record_deductions: bool,
}

impl CosetTable {
    fn new(max_cosets: usize) -> CosetTable {
        CosetTable {
            rows: vec![[NONE; 3]],
            parent: vec![0],
            live: 1,
            max_cosets,
            queue: Vec::new(),
            deductions: Vec::new(),
            record_deductions: false,
        }
    }

    #[inline]
    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    #[inline]
    fn set(&mut self, c: u32, g: u8, d: u32) {
        self.rows[c as usize][g as usize] = d;
        self.rows[d as usize][g as usize] = c;
        if self.record_deductions {
            self.deductions.push((c, g));
        }
    }

    fn define(&mut self, c: u32, g: u8) -> Result<u32> {
        if self.live >= self.max_cosets {
            return Err(Error::BoundExceeded { max_cosets: self.max_cosets });
        }
        let d = self.rows.len() as u32;
        self.rows.push([NONE; 3]);
        self.parent.push(d);
        self.live += 1;
        self.set(c, g, d);
        Ok(d)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
            self.live -= 1;
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut k = 0;
        while k < self.queue.len() {
            let dead = self.queue[k];
            k += 1;
            for x in 0..3u8 {
                let d = self.rows[dead as usize][x as usize];
                if d == NONE {
                    continue;
                }
                self.rows[d as usize][x as usize] = NONE;
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.rows[mu as usize][x as usize];
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                } else {
                    let nu_x = self.rows[nu as usize][x as usize];
                    if nu_x != NONE {
                        self.merge(mu, nu_x);
                    } else {
                        self.set(mu, x, nu);
                    }
                }
            }
        }
    }

    /// Traces `w` from `c` forwards and backwards, defining new cosets until
    /// the cycle closes.
    fn scan_and_fill(&mut self, c: u32, w: &[u8]) -> Result<()> {
        let mut f = c;
        let mut i = 0;
        let mut b = c;
        let mut j = w.len();
        loop {
            while i < j {
                let t = self.rows[f as usize][w[i] as usize];
                if t == NONE {
                    break;
                }
                f = t;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let t = self.rows[b as usize][w[j - 1] as usize];
                if t == NONE {
                    break;
                }
                b = t;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Like `scan_and_fill` but never defines cosets.
    fn scan(&mut self, c: u32, w: &[u8]) {
        let mut f = c;
        let mut i = 0;
        let mut b = c;
        let mut j = w.len();
        while i < j {
            let t = self.rows[f as usize][w[i] as usize];
            if t == NONE {
                break;
            }
            f = t;
            i += 1;
        }
        if i == j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j > i {
            let t = self.rows[b as usize][w[j - 1] as usize];
            if t == NONE {
                break;
            }
            b = t;
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
        } else if j == i + 1 {
            self.set(f, w[i], b);
        }
    }

    fn run_hlt(&mut self, relators: &[Vec<u8>], start: u32) -> Result<()> {
        let mut c = start;
        while (c as usize) < self.rows.len() {
            if self.rows.len() > 4 * self.live + 4096 {
                c = self.compact(c);
                continue;
            }
            if self.alive(c) {
                for r in relators {
                    self.scan_and_fill(c, r)?;
                    if !self.alive(c) {
                        break;
                    }
                }
                for g in 0..3u8 {
                    if !self.alive(c) {
                        break;
                    }
                    if self.rows[c as usize][g as usize] == NONE {
                        self.define(c, g)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn run_felsch(&mut self, relators: &[Vec<u8>]) -> Result<()> {
        // rotations[g]: every cyclic conjugate of a relator that starts with g
        let mut rotations: [Vec<Vec<u8>>; 3] = Default::default();
        for r in relators {
            for s in 0..r.len() {
                let mut rot = r[s..].to_vec();
                rot.extend_from_slice(&r[..s]);
                let g = rot[0] as usize;
                if !rotations[g].contains(&rot) {
                    rotations[g].push(rot);
                }
            }
        }
        self.record_deductions = true;
        // Relators are first traced at the base coset so that single-letter
        // and short relators collapse the table early.
        for r in relators {
            self.scan_and_fill(0, r)?;
        }
        self.drain_deductions(&rotations);
        let mut cursor = 0u32;
        loop {
            if self.rows.len() > 4 * self.live + 4096 {
                cursor = self.compact(cursor);
            }
            let mut next = None;
            'search: while (cursor as usize) < self.rows.len() {
                if self.alive(cursor) {
                    for g in 0..3u8 {
                        if self.rows[cursor as usize][g as usize] == NONE {
                            next = Some((cursor, g));
                            break 'search;
                        }
                    }
                }
                cursor += 1;
            }
            let Some((c, g)) = next else { break };
            self.define(c, g)?;
            self.drain_deductions(&rotations);
        }
        self.record_deductions = false;
        self.deductions.clear();
        // Closing pass: every relator is traced at every coset.
        self.run_hlt(relators, 0)
    }

    fn drain_deductions(&mut self, rotations: &[Vec<Vec<u8>>; 3]) {
        while let Some((c, g)) = self.deductions.pop() {
            if !self.alive(c) {
                continue;
            }
            let d = self.rows[c as usize][g as usize];
            if d == NONE {
                continue;
            }
            for rot in &rotations[g as usize] {
                if !self.alive(c) {
                    break;
                }
                self.scan(c, rot);
            }
            if self.alive(d) && self.rows[d as usize][g as usize] != NONE {
                for rot in &rotations[g as usize] {
                    if !self.alive(d) {
                        break;
                    }
                    self.scan(d, rot);
                }
            }
        }
    }

    /// Renumbers live cosets in order, dropping dead rows. Returns the new
    /// index of the first live coset at or after `cursor`.
    fn compact(&mut self, cursor: u32) -> u32 {
        let n = self.rows.len();
        let mut map = vec![NONE; n];
        let mut next = 0u32;
        let mut new_cursor = None;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.parent[c] == c as u32 {
                if c as u32 >= cursor && new_cursor.is_none() {
                    new_cursor = Some(next);
                }
                *slot = next;
                next += 1;
            }
        }
        let mut rows = Vec::with_capacity(next as usize);
        for c in 0..n {
            if map[c] != NONE {
                let mut row = self.rows[c];
                for e in row.iter_mut() {
                    if *e != NONE {
                        *e = map[*e as usize];
                    }
                }
                rows.push(row);
            }
        }
        self.rows = rows;
        self.parent = (0..next).collect();
        self.deductions.clear();
        new_cursor.unwrap_or(next)
    }

    /// Breadth-first renumbering from coset 0 over ρ0, ρ1, ρ2.
    fn into_representation(self) -> RegularRepresentation {
        let n = self.rows.len();
        let mut index = vec![NONE; n];
        let mut order: Vec<u32> = Vec::with_capacity(self.live);
        let mut parents: Vec<(u32, u8)> = Vec::with_capacity(self.live);
        index[0] = 0;
        order.push(0);
        parents.push((0, 0));
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            for g in 0..3u8 {
                let d = self.rows[c as usize][g as usize];
                debug_assert!(d != NONE, "incomplete coset table");
                if index[d as usize] == NONE {
                    index[d as usize] = order.len() as u32;
                    order.push(d);
                    parents.push((head as u32, g));
                }
            }
            head += 1;
        }
        let m = order.len();
        let mut gens: [Vec<u32>; 3] = [vec![0; m], vec![0; m], vec![0; m]];
        for (new, &old) in order.iter().enumerate() {
            for g in 0..3 {
                gens[g][new] = index[self.rows[old as usize][g] as usize];
            }
        }
        RegularRepresentation::from_parts(gens, parents)
    }
}
