mod common;

use tight_polyhedra::group::generated_by;
use tight_polyhedra::sggi::{
    check_decisive_intersection, check_intersection_condition, check_sggi, dual_presentation,
    is_tight, orientability, polyhedra_isomorphic, schlafli_type,
};
use tight_polyhedra::{
    classify_nonorientable, classify_orientable, coxeter_presentation, delta_presentation,
    enumerate_cosets, lambda_presentation, Error, Family, Generator, Presentation,
    RegularRepresentation, SchlafliType,
};

use common::{cyclic_is_normal, group, power};

fn lambda(p: i64, q: i64, i: i64, j: i64) -> (RegularRepresentation, Presentation) {
    let pres = lambda_presentation(p, q, i, j).unwrap();
    (group(&pres), pres)
}

fn delta(p: i64, q: i64, i: i64, j: i64, a: i64, b: i64) -> (RegularRepresentation, Presentation) {
    let pres = delta_presentation(p, q, i, j, a, b).unwrap();
    (group(&pres), pres)
}

#[test]
fn sggi_checks() {
    assert!(check_sggi(&group(&coxeter_presentation(4, 3).unwrap())));
    assert!(check_sggi(&lambda(48, 32, 11, 17).0));
    // [1,3] collapses ρ0 onto ρ1 but is still an sggi, of degenerate type.
    let collapsed = Presentation::custom(vec![
        tight_polyhedra::Word::sigma1(),
        tight_polyhedra::Word::sigma2().pow(3),
    ]);
    let rep = group(&collapsed);
    assert!(check_sggi(&rep));
    assert!(schlafli_type(&rep).is_degenerate());
}

#[test]
fn intersection_condition() {
    assert!(check_intersection_condition(&group(&coxeter_presentation(4, 3).unwrap())));
    assert!(check_intersection_condition(&delta(4, 6, 2, 4, 3, 2).0));
}

#[test]
fn first_lambda_6_6_failing_the_intersection_condition() {
    let mut first = None;
    'sweep: for i in 0..6 {
        for j in 0..6 {
            let (rep, _) = lambda(6, 6, i, j);
            if check_sggi(&rep)
                && schlafli_type(&rep) == SchlafliType::new(6, 6)
                && !check_intersection_condition(&rep)
            {
                first = Some((i, j, rep.order()));
                break 'sweep;
            }
        }
    }
    assert_eq!(first, Some((0, 4, 12)));
}

#[test]
fn decisive_pair_agrees_with_all_pairs_on_nondegenerate_groups() {
    // With all three dihedral subgroups of full size, only the ⟨ρ0,ρ1⟩ ∩
    // ⟨ρ1,ρ2⟩ pair can fail.
    for i in 0..6 {
        for j in 0..6 {
            let (rep, _) = lambda(6, 6, i, j);
            let t = schlafli_type(&rep);
            let full = generated_by(&rep, &[Generator::R0, Generator::R1]).size() as u64 == 2 * t.p
                && generated_by(&rep, &[Generator::R1, Generator::R2]).size() as u64 == 2 * t.q
                && Generator::ALL.iter().all(|&g| rep.generator(g) != 0)
                && rep.generator(Generator::R0) != rep.generator(Generator::R2)
                && t.p >= 2
                && t.q >= 2;
            if full {
                assert_eq!(
                    check_intersection_condition(&rep),
                    check_decisive_intersection(&rep),
                    "Λ(6,6)_{{{i},{j}}}"
                );
            }
        }
    }
}

#[test]
fn schlafli_types() {
    assert_eq!(schlafli_type(&group(&coxeter_presentation(4, 3).unwrap())), SchlafliType::new(4, 3));
    assert_eq!(schlafli_type(&delta(12, 6, 2, 4, 7, 2).0), SchlafliType::new(12, 6));
}

#[test]
fn first_collapsing_lambda_4_6() {
    let first = (0..4)
        .flat_map(|i| (0..6).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, schlafli_type(&lambda(4, 6, i, j).0)))
        .find(|&(_, _, t)| t != SchlafliType::new(4, 6));
    let (i, j, t) = first.unwrap();
    assert_eq!((i, j), (0, 0));
    assert_eq!(t, SchlafliType::new(2, 2));
    assert!(4 % t.p == 0 && 6 % t.q == 0);
}

#[test]
fn tightness() {
    assert!(is_tight(&lambda(48, 32, -1, 29).0));
    let cube = group(&coxeter_presentation(4, 3).unwrap());
    assert_eq!(cube.order(), 48);
    assert!(!is_tight(&cube));
}

#[test]
fn orientability_examples() {
    for o in classify_orientable(6, 6).iter().chain(&classify_orientable(8, 4)) {
        assert!(orientability(&group(&o.presentation())));
    }
    assert!(!orientability(&delta(4, 3, 2, -2, -1, 2).0));
    assert!(orientability(&group(&coxeter_presentation(5, 2).unwrap())));
}

#[test]
fn duals() {
    let cox = coxeter_presentation(4, 3).unwrap();
    assert_eq!(dual_presentation(&cox).family(), Family::Coxeter { p: 3, q: 4 });

    // The {32, p'} polyhedron with i' = 15 becomes j = 17 on the {p', 32} side.
    let (_, pres) = lambda(32, 4, 15, 1);
    match dual_presentation(&pres).family() {
        Family::Lambda { p: 4, q: 32, i, j: 17 } => assert_eq!(i, 3),
        other => panic!("unexpected dual family {other:?}"),
    }

    for pres in [
        cox,
        lambda_presentation(6, 6, 5, 1).unwrap(),
        delta_presentation(4, 6, 2, 1, 3, 2).unwrap(),
    ] {
        let back = dual_presentation(&dual_presentation(&pres));
        let mut a = back.relators().to_vec();
        let mut b = pres.relators().to_vec();
        a.sort_by_key(|w| w.to_string());
        b.sort_by_key(|w| w.to_string());
        assert_eq!(a, b);
        let (ra, rb) = (group(&pres), group(&back));
        assert!(polyhedra_isomorphic((&ra, &pres), (&rb, &back)).unwrap());
    }
}

#[test]
fn dual_lambda_tag_matches_the_rewritten_group() {
    for o in classify_orientable(12, 6) {
        let pres = o.presentation();
        let dual = dual_presentation(&pres);
        let Family::Lambda { p, q, i, j } = dual.family() else { panic!() };
        let retagged = lambda_presentation(p as i64, q as i64, i as i64, j as i64).unwrap();
        let (rd, rr) = (group(&dual), group(&retagged));
        assert!(polyhedra_isomorphic((&rd, &dual), (&rr, &retagged)).unwrap());
    }
}

#[test]
fn isomorphism() {
    let (a, pa) = delta(4, 3, 2, -2, -1, 2);
    let (b, pb) = delta(4, 3, 2, 1, 3, 2);
    assert!(polyhedra_isomorphic((&a, &pa), (&a, &pa)).unwrap());
    assert!(polyhedra_isomorphic((&a, &pa), (&b, &pb)).unwrap());

    let (c, pc) = delta(4, 6, 2, 1, 3, 2);
    let (d, pd) = delta(4, 6, 2, 4, 3, 2);
    assert!(!polyhedra_isomorphic((&c, &pc), (&d, &pd)).unwrap());

    let (e, pe) = lambda(4, 4, -1, 1);
    assert!(matches!(
        polyhedra_isomorphic((&a, &pa), (&e, &pe)),
        Err(Error::TypeMismatch(4, 3, 4, 4))
    ));
}

#[test]
fn tight_iff_order_2pq() {
    for i in 0..6 {
        for j in 0..6 {
            let (rep, _) = lambda(6, 6, i, j);
            let t = schlafli_type(&rep);
            assert_eq!(is_tight(&rep), rep.order() as u64 == 2 * t.p * t.q);
        }
    }
}

/// A homomorphism A → B fixing the generators exists iff B satisfies A's relators.
fn covers(a: &Presentation, b: &RegularRepresentation) -> bool {
    a.relators().iter().all(|r| b.evaluate_word(r) == 0)
}

#[test]
fn quotient_criterion() {
    // Candidates: every Λ(12,6) sggi. Targets: tight string C-groups below it.
    let targets: Vec<RegularRepresentation> = [(12u64, 6u64), (12, 3), (4, 6), (6, 6), (6, 3), (4, 3)]
        .iter()
        .flat_map(|&(p, q)| {
            classify_orientable(p, q)
                .into_iter()
                .map(|o| o.presentation())
                .chain(classify_nonorientable(p, q).into_iter().map(|n| n.presentation()))
        })
        .map(|pres| group(&pres))
        .collect();
    let mut exercised = 0;
    for i in 0..12 {
        for j in 0..6 {
            let (rep, pres) = lambda(12, 6, i, j);
            if !check_sggi(&rep) {
                continue;
            }
            let face = generated_by(&rep, &[Generator::R0, Generator::R1]).size();
            let vertex = generated_by(&rep, &[Generator::R1, Generator::R2]).size();
            for target in &targets {
                if !covers(&pres, target) {
                    continue;
                }
                let t_face = generated_by(target, &[Generator::R0, Generator::R1]).size();
                let t_vertex = generated_by(target, &[Generator::R1, Generator::R2]).size();
                if face == t_face || vertex == t_vertex {
                    exercised += 1;
                    assert!(check_intersection_condition(&rep), "Λ(12,6)_{{{i},{j}}}");
                }
            }
        }
    }
    assert!(exercised > 0);
}

#[test]
fn normal_quotient_criterion() {
    let mut exercised = 0;
    for (p, q) in [(6u64, 6u64), (12, 6), (8, 8), (4, 6), (12, 4)] {
        let groups: Vec<Presentation> = classify_orientable(p, q)
            .into_iter()
            .map(|o| o.presentation())
            .chain(classify_nonorientable(p, q).into_iter().map(|n| n.presentation()))
            .collect();
        for pres in groups {
            let rep = group(&pres);
            assert!(check_intersection_condition(&rep));
            for (rot, order) in [(tight_polyhedra::Word::sigma1(), p), (tight_polyhedra::Word::sigma2(), q)] {
                for k in 2..order {
                    if order % k != 0 || !cyclic_is_normal(&rep, power(&rep, rep.evaluate_word(&rot), k as i64)) {
                        continue;
                    }
                    let mut rels = pres.relators().to_vec();
                    rels.push(rot.pow(k as usize));
                    let quotient = Presentation::custom(rels);
                    let qrep = enumerate_cosets(&quotient, 100_000).unwrap();
                    assert!(check_intersection_condition(&qrep), "{:?} / ⟨{rot}^{k}⟩", pres.family());
                    exercised += 1;
                }
            }
        }
    }
    assert!(exercised > 10);
}

#[test]
fn covering_rigidity() {
    // Tight groups of the same type: one covering the other forces equality.
    for (p, q) in [(6u64, 6u64), (12, 6), (4, 6), (8, 8)] {
        let pres: Vec<Presentation> = classify_orientable(p, q)
            .into_iter()
            .map(|o| o.presentation())
            .chain(classify_nonorientable(p, q).into_iter().map(|n| n.presentation()))
            .collect();
        let reps: Vec<RegularRepresentation> = pres.iter().map(group).collect();
        for a in 0..pres.len() {
            for b in 0..pres.len() {
                let a_covers_b = covers(&pres[a], &reps[b]);
                let b_covers_a = covers(&pres[b], &reps[a]);
                assert_eq!(a_covers_b, b_covers_a);
                assert_eq!(a_covers_b, a == b);
            }
        }
    }
}
