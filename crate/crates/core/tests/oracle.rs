use std::collections::BTreeSet;

use tight_polyhedra::oracle::{
    brute_force_nonorientable, brute_force_orientable, verify_range, verify_range_with,
    SweepConfig, DEFAULT_BUDGET,
};
use tight_polyhedra::sggi::{check_intersection_condition, is_tight, orientability, polyhedra_isomorphic, schlafli_type};
use tight_polyhedra::{
    classify_nonorientable, classify_orientable, delta_presentation, enumerate_cosets,
    lambda_presentation, tight_existence, Error, Presentation, RegularRepresentation,
    SchlafliType,
};

#[test]
fn orientable_sweeps() {
    let found = brute_force_orientable(48, 32, DEFAULT_BUDGET).unwrap();
    assert_eq!(found.len(), 10);

    let torus: BTreeSet<(u64, u64)> =
        brute_force_orientable(4, 4, DEFAULT_BUDGET).unwrap().iter().map(|o| (o.i, o.j)).collect();
    assert!(torus.contains(&(3, 1)));

    assert!(brute_force_orientable(3, 4, DEFAULT_BUDGET).unwrap().is_empty());
}

#[test]
fn nonorientable_sweeps() {
    assert_eq!(brute_force_nonorientable(4, 3, DEFAULT_BUDGET).unwrap().len(), 1);
    assert_eq!(brute_force_nonorientable(4, 6, DEFAULT_BUDGET).unwrap().len(), 2);
    assert!(brute_force_nonorientable(8, 6, DEFAULT_BUDGET).unwrap().is_empty());
    let dual_side = brute_force_nonorientable(6, 4, DEFAULT_BUDGET).unwrap();
    assert_eq!(dual_side.len(), 2);
    assert!(dual_side.iter().all(|n| n.is_dual_form));
}

#[test]
fn budgets_are_enforced() {
    assert!(matches!(
        brute_force_orientable(10, 10, 99),
        Err(Error::BudgetExceeded { needed: 100, budget: 99 })
    ));
    assert!(matches!(
        brute_force_nonorientable(4, 3, 287),
        Err(Error::BudgetExceeded { needed: 288, budget: 287 })
    ));
    let reports = verify_range_with(6, 6, &SweepConfig { budget: 1000 }).unwrap();
    let skipped: Vec<SchlafliType> = reports.iter().filter(|r| r.skipped).map(|r| r.schlafli).collect();
    assert!(skipped.contains(&SchlafliType::new(6, 6)));
    assert!(!skipped.contains(&SchlafliType::new(4, 3)));
    assert!(reports.iter().filter(|r| r.skipped).all(|r| !r.is_clean() && r.enumerations_run == 0));
}

#[test]
fn small_range_is_clean_and_follows_the_existence_theorem() {
    let reports = verify_range(8, 6).unwrap();
    assert_eq!(reports.len(), 7 * 5);
    for r in &reports {
        assert!(r.is_clean(), "{:?}: {:?}", r.schlafli, r.mismatches);
        let v = tight_existence(r.schlafli.p, r.schlafli.q);
        assert_eq!(v.exists, !r.found_orientable.is_empty() || !r.found_nonorientable.is_empty());
        assert_eq!(v.orientable_count, r.found_orientable.len());
        assert_eq!(v.nonorientable_count, r.found_nonorientable.len());
    }
    for t in [SchlafliType::new(8, 6), SchlafliType::new(8, 3)] {
        let r = reports.iter().find(|r| r.schlafli == t).unwrap();
        assert!(r.found_nonorientable.is_empty());
    }

    let reports = verify_range(2, 2).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].is_clean());
    assert_eq!(reports[0].found_orientable.len() + reports[0].found_nonorientable.len(), 1);
}

#[test]
fn found_lists_match_closed_form_counts() {
    for (p, q) in [(4, 6), (6, 4), (12, 6), (6, 12), (3, 6), (10, 5)] {
        let o = brute_force_orientable(p, q, DEFAULT_BUDGET).unwrap();
        let n = brute_force_nonorientable(p, q, DEFAULT_BUDGET).unwrap();
        assert_eq!(o.len(), classify_orientable(p, q).len(), "{{{p},{q}}}");
        assert_eq!(n.len(), classify_nonorientable(p, q).len(), "{{{p},{q}}}");
    }
}

fn survivors(pres: impl Iterator<Item = Presentation>, p: u64, q: u64) -> Vec<(Presentation, RegularRepresentation)> {
    pres.filter_map(|pres| {
        let rep = enumerate_cosets(&pres, (256 * p * q) as usize).ok()?;
        (schlafli_type(&rep) == SchlafliType::new(p, q) && is_tight(&rep) && check_intersection_condition(&rep))
            .then_some((pres, rep))
    })
    .collect()
}

fn assert_equivalence(s: &[(Presentation, RegularRepresentation)]) {
    let n = s.len();
    let iso = |a: usize, b: usize| polyhedra_isomorphic((&s[a].1, &s[a].0), (&s[b].1, &s[b].0)).unwrap();
    let m: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| iso(a, b)).collect()).collect();
    for a in 0..n {
        assert!(m[a][a]);
        for b in 0..n {
            assert_eq!(m[a][b], m[b][a]);
            for c in 0..n {
                assert!(!(m[a][b] && m[b][c]) || m[a][c]);
            }
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_survivors() {
    let lambda = survivors(
        (0..6).flat_map(|i| (0..6).map(move |j| lambda_presentation(6, 6, i, j).unwrap())),
        6,
        6,
    );
    assert!(lambda.len() > 1);
    assert!(lambda.iter().all(|(_, rep)| orientability(rep)));
    assert_equivalence(&lambda);

    let delta = survivors(
        (0..4).flat_map(|i| {
            (0..6).flat_map(move |j| {
                (0..4).flat_map(move |a| (0..6).map(move |b| delta_presentation(4, 6, i, j, a, b).unwrap()))
            })
        }),
        4,
        6,
    );
    assert!(delta.len() >= 2);
    assert_equivalence(&delta);
    let non: Vec<_> = delta.into_iter().filter(|(_, rep)| !orientability(rep)).collect();
    let mut classes: Vec<usize> = Vec::new();
    for idx in 0..non.len() {
        if !classes
            .iter()
            .any(|&c| polyhedra_isomorphic((&non[c].1, &non[c].0), (&non[idx].1, &non[idx].0)).unwrap())
        {
            classes.push(idx);
        }
    }
    assert_eq!(classes.len(), 2);
}
