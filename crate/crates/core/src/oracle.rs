//! Brute-force verification: enumerate every Λ and Δ candidate of a type and
//! compare the survivors with the closed-form classification.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::enumerate_cosets;
use crate::error::{Error, Result};
use crate::families::{
    classify_nonorientable, classify_orientable, delta_presentation, lambda_presentation,
    tight_existence, NonOrientableParams, OrientableParams,
};
use crate::group::RegularRepresentation;
use crate::presentation::Presentation;
use crate::sggi::{dual_presentation, polyhedra_isomorphic, SchlafliType, SggiReport};

/// Sweep budget used when none is given: at most 10⁶ enumerations per type.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    #[serde(rename = "type")]
    pub schlafli: SchlafliType,
    pub found_orientable: Vec<OrientableParams>,
    pub found_nonorientable: Vec<NonOrientableParams>,
    pub mismatches: Vec<String>,
    pub enumerations_run: u64,
    pub elapsed: Duration,
    /// The type was over budget and not swept.
    pub skipped: bool,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && !self.skipped
    }
}

/// A tight string C-group of the given type found on a grid.
#[derive(Debug, Clone)]
struct Survivor<P> {
    params: P,
    presentation: Presentation,
    group: RegularRepresentation,
    orientable: bool,
}

/// Enumerates a candidate with bound 64pq, retrying once at four times that.
/// `None` means the group is not tight of type {p, q}. The second value
/// counts enumeration attempts.
fn tight_candidate(pres: &Presentation, p: u64, q: u64) -> (Option<(RegularRepresentation, bool)>, u64) {
    let bound = 64 * (p * q) as usize;
    let (rep, attempts) = match enumerate_cosets(pres, bound) {
        Ok(rep) => (rep, 1),
        Err(Error::BoundExceeded { .. }) => match enumerate_cosets(pres, 4 * bound) {
            Ok(rep) => (rep, 2),
            Err(_) => return (None, 2),
        },
        Err(_) => return (None, 1),
    };
    if rep.order() as u64 != 2 * p * q {
        return (None, attempts);
    }
    let report = SggiReport::analyze(&rep);
    if report.is_tight_polyhedron_of_type(SchlafliType::new(p, q)) {
        (Some((rep, report.orientable)), attempts)
    } else {
        (None, attempts)
    }
}

/// Keeps the first member of each isomorphism class, in input order.
fn dedup_isomorphic<P>(survivors: Vec<Survivor<P>>) -> Vec<Survivor<P>> {
    let mut kept: Vec<Survivor<P>> = Vec::new();
    for s in survivors {
        let seen = kept.iter().any(|k| {
            polyhedra_isomorphic((&s.group, &s.presentation), (&k.group, &k.presentation))
                .unwrap_or(false)
        });
        if !seen {
            kept.push(s);
        }
    }
    kept
}

fn lambda_grid(p: u64, q: u64) -> (Vec<Survivor<OrientableParams>>, u64) {
    let grid: Vec<(u64, u64)> = (0..p).flat_map(|i| (0..q).map(move |j| (i, j))).collect();
    let results: Vec<(Option<Survivor<OrientableParams>>, u64)> = grid
        .par_iter()
        .map(|&(i, j)| {
            let pres = lambda_presentation(p as i64, q as i64, i as i64, j as i64).unwrap();
            let (found, n) = tight_candidate(&pres, p, q);
            let survivor = found.map(|(group, orientable)| Survivor {
                params: OrientableParams::new(p, q, i as i64, j as i64),
                presentation: pres,
                group,
                orientable,
            });
            (survivor, n)
        })
        .collect();
    let runs = results.iter().map(|r| r.1).sum();
    (results.into_iter().filter_map(|r| r.0).collect(), runs)
}

/// Tight string C-groups of type {p, q} on the Δ(p,q) grid, all of them,
/// orientable or not.
fn delta_grid(p: u64, q: u64) -> Grid {
    let grid: Vec<[u64; 4]> = (0..p)
        .flat_map(|i| {
            (0..q).flat_map(move |j| (0..p).flat_map(move |a| (0..q).map(move |b| [i, j, a, b])))
        })
        .collect();
    let results: Vec<(Option<Survivor<NonOrientableParams>>, u64)> = grid
        .par_iter()
        .map(|&[i, j, a, b]| {
            let pres = delta_presentation(
                p as i64, q as i64, i as i64, j as i64, a as i64, b as i64,
            )
            .unwrap();
            let (found, n) = tight_candidate(&pres, p, q);
            let survivor = found.map(|(group, orientable)| Survivor {
                params: NonOrientableParams { p, q, i, j, a, b, is_dual_form: false },
                presentation: pres,
                group,
                orientable,
            });
            (survivor, n)
        })
        .collect();
    let runs = results.iter().map(|r| r.1).sum();
    (results.into_iter().filter_map(|r| r.0).collect(), runs)
}

fn delta_budget_needed(p: u64, q: u64) -> u64 {
    2 * (p * q) * (p * q)
}

fn check_type(p: u64, q: u64) -> Result<()> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidType { p: p as i64, q: q as i64 });
    }
    Ok(())
}

/// Every Λ(p,q)_{i,j} that is a tight string C-group of type {p, q}, one
/// per isomorphism class.
pub fn brute_force_orientable(p: u64, q: u64, budget: u64) -> Result<Vec<OrientableParams>> {
    check_type(p, q)?;
    if p * q > budget {
        return Err(Error::BudgetExceeded { needed: p * q, budget });
    }
    let (survivors, _) = lambda_grid(p, q);
    Ok(dedup_isomorphic(survivors).into_iter().map(|s| s.params).collect())
}

fn dual_survivor(s: Survivor<NonOrientableParams>) -> Result<Survivor<NonOrientableParams>> {
    let presentation = dual_presentation(&s.presentation);
    let group = enumerate_cosets(&presentation, 4 * s.group.order())?;
    Ok(Survivor { params: s.params.dual(), presentation, group, orientable: s.orientable })
}

fn nonorientable_classes(
    primal: Vec<Survivor<NonOrientableParams>>,
    dual_side: Vec<Survivor<NonOrientableParams>>,
) -> Result<Vec<Survivor<NonOrientableParams>>> {
    let mut all: Vec<Survivor<NonOrientableParams>> =
        primal.into_iter().filter(|s| !s.orientable).collect();
    for s in dual_side.into_iter().filter(|s| !s.orientable) {
        all.push(dual_survivor(s)?);
    }
    Ok(dedup_isomorphic(all))
}

/// Every non-orientable tight polyhedron of type {p, q} found on the
/// Δ(p,q) grid or as the dual of a Δ(q,p) survivor, one per class.
pub fn brute_force_nonorientable(p: u64, q: u64, budget: u64) -> Result<Vec<NonOrientableParams>> {
    check_type(p, q)?;
    let needed = delta_budget_needed(p, q);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let (primal, _) = delta_grid(p, q);
    let (dual_side, _) = if p == q { (primal.clone(), 0) } else { delta_grid(q, p) };
    Ok(nonorientable_classes(primal, dual_side)?
        .into_iter()
        .map(|s| s.params)
        .collect())
}

/// Matches two lists of presentations up to polyhedron isomorphism and
/// describes whatever is left over on either side.
fn compare_classes(
    kind: &str,
    closed: &[(String, Presentation)],
    found: &[(String, Presentation, &RegularRepresentation)],
) -> Result<Vec<String>> {
    let mut mismatches = Vec::new();
    let mut matched = vec![false; found.len()];
    for (name, pres) in closed {
        let rep = enumerate_cosets(pres, pres.default_max_cosets())?;
        let hit = found.iter().enumerate().find(|(idx, (_, fpres, frep))| {
            !matched[*idx]
                && polyhedra_isomorphic((&rep, pres), (frep, fpres)).unwrap_or(false)
        });
        match hit {
            Some((idx, _)) => matched[idx] = true,
            None => mismatches.push(format!("{kind} {name}: closed form only")),
        }
    }
    for (idx, (name, _, _)) in found.iter().enumerate() {
        if !matched[idx] {
            mismatches.push(format!("{kind} {name}: brute force only"));
        }
    }
    Ok(mismatches)
}

/// Survivors of one Δ grid and the enumerations it took.
type Grid = (Vec<Survivor<NonOrientableParams>>, u64);

#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    /// Types whose Δ sweep needs more enumerations than this are skipped.
    pub budget: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { budget: DEFAULT_BUDGET }
    }
}

/// Sweeps every type with 2 ≤ p ≤ max_p and 2 ≤ q ≤ max_q under the default
/// budget.
pub fn verify_range(max_p: u64, max_q: u64) -> Result<Vec<SweepReport>> {
    verify_range_with(max_p, max_q, &SweepConfig::default())
}

pub fn verify_range_with(max_p: u64, max_q: u64, config: &SweepConfig) -> Result<Vec<SweepReport>> {
    check_type(max_p, max_q)?;
    let types: Vec<(u64, u64)> = (2..=max_p)
        .flat_map(|p| (2..=max_q).map(move |q| (p, q)))
        .collect();
    let in_budget = |&(p, q): &(u64, u64)| delta_budget_needed(p, q) <= config.budget;

    // Δ grids are shared between a type and its dual, so each is computed once.
    let mut grid_keys: Vec<(u64, u64)> = types
        .iter()
        .filter(|t| in_budget(t))
        .flat_map(|&(p, q)| [(p, q), (q, p)])
        .collect();
    grid_keys.sort_unstable();
    grid_keys.dedup();
    let mut grid_time: HashMap<(u64, u64), Duration> = HashMap::new();
    let mut grids: HashMap<(u64, u64), Grid> = HashMap::new();
    for key in grid_keys {
        let start = Instant::now();
        grids.insert(key, delta_grid(key.0, key.1));
        grid_time.insert(key, start.elapsed());
    }

    types
        .iter()
        .map(|&(p, q)| {
            let schlafli = SchlafliType::new(p, q);
            if !in_budget(&(p, q)) {
                return Ok(SweepReport {
                    schlafli,
                    found_orientable: Vec::new(),
                    found_nonorientable: Vec::new(),
                    mismatches: Vec::new(),
                    enumerations_run: 0,
                    elapsed: Duration::ZERO,
                    skipped: true,
                });
            }
            let start = Instant::now();
            let mut mismatches = Vec::new();

            let (lambda, lambda_runs) = lambda_grid(p, q);
            if let Some(s) = lambda.iter().find(|s| !s.orientable) {
                mismatches.push(format!("Λ survivor {:?} is non-orientable", s.params));
            }
            let orientable = dedup_isomorphic(lambda);

            let (primal, primal_runs) = grids[&(p, q)].clone();
            let dual_side = grids[&(q, p)].0.clone();
            let nonorientable = nonorientable_classes(primal, dual_side)?;

            let closed_o: Vec<(String, Presentation)> = classify_orientable(p, q)
                .iter()
                .map(|o| (format!("{o:?}"), o.presentation()))
                .collect();
            let found_o: Vec<(String, Presentation, &RegularRepresentation)> = orientable
                .iter()
                .map(|s| (format!("{:?}", s.params), s.presentation.clone(), &s.group))
                .collect();
            mismatches.extend(compare_classes("orientable", &closed_o, &found_o)?);

            let closed_n: Vec<(String, Presentation)> = classify_nonorientable(p, q)
                .iter()
                .map(|n| (format!("{n:?}"), n.presentation()))
                .collect();
            let found_n: Vec<(String, Presentation, &RegularRepresentation)> = nonorientable
                .iter()
                .map(|s| (format!("{:?}", s.params), s.presentation.clone(), &s.group))
                .collect();
            mismatches.extend(compare_classes("non-orientable", &closed_n, &found_n)?);

            let exists = tight_existence(p, q).exists;
            let brute_nonempty = !orientable.is_empty() || !nonorientable.is_empty();
            let closed_nonempty = !closed_o.is_empty() || !closed_n.is_empty();
            if exists != brute_nonempty || exists != closed_nonempty {
                mismatches.push(format!(
                    "existence: theorem says {exists}, closed form {closed_nonempty}, brute force {brute_nonempty}"
                ));
            }

            Ok(SweepReport {
                schlafli,
                found_orientable: orientable.into_iter().map(|s| s.params).collect(),
                found_nonorientable: nonorientable.into_iter().map(|s| s.params).collect(),
                mismatches,
                enumerations_run: lambda_runs + primal_runs,
                elapsed: start.elapsed() + grid_time[&(p, q)],
                skipped: false,
            })
        })
        .collect()
}
