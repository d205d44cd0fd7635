//! The Coxeter, Λ and Δ presentations and the closed-form classification of
//! tight regular polyhedra of a given type.

use serde::Serialize;

use crate::arith::{divisors, edge_simple_solutions};
use crate::enumeration::enumerate_cosets;
use crate::error::{Error, Result};
use crate::group::RegularRepresentation;
use crate::map::{build_map, map_invariants, validate_polyhedron, MapInvariants};
use crate::presentation::{Family, Presentation};
use crate::sggi::{dual_presentation, SchlafliType, SggiReport};
use crate::word::{Generator, Word};

fn check_type(p: i64, q: i64) -> Result<(u64, u64)> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidType { p, q });
    }
    Ok((p as u64, q as u64))
}

fn residue(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

fn with_extras(family: Family, p: u64, q: u64, extra: Vec<Word>) -> Presentation {
    let mut relators = Presentation::string_relators();
    relators.push(Word::sigma1().pow(p as usize));
    relators.push(Word::sigma2().pow(q as usize));
    relators.extend(extra.into_iter().map(|w| w.freely_reduced()));
    Presentation::new(relators, family)
}

/// The string Coxeter group [p, q].
pub fn coxeter_presentation(p: i64, q: i64) -> Result<Presentation> {
    let (p, q) = check_type(p, q)?;
    Ok(with_extras(Family::Coxeter { p, q }, p, q, Vec::new()))
}

/// [p, q] with the extra relation σ2⁻¹σ1 = σ1^i σ2^j.
pub fn lambda_presentation(p: i64, q: i64, i: i64, j: i64) -> Result<Presentation> {
    let (pu, qu) = check_type(p, q)?;
    let (i, j) = (residue(i, pu), residue(j, qu));
    let rel = Word::sigma2_pow(-1, qu)
        .concat(&Word::sigma1())
        .concat(&Word::sigma2_pow(-(j as i64), qu))
        .concat(&Word::sigma1_pow(-(i as i64), pu));
    Ok(with_extras(Family::Lambda { p: pu, q: qu, i, j }, pu, qu, vec![rel]))
}

/// [p, q] with σ2⁻¹σ1 = σ1^i ρ1 σ2^j and σ2⁻²σ1 = σ1^a σ2^b.
pub fn delta_presentation(p: i64, q: i64, i: i64, j: i64, a: i64, b: i64) -> Result<Presentation> {
    let (pu, qu) = check_type(p, q)?;
    let (i, j, a, b) = (residue(i, pu), residue(j, qu), residue(a, pu), residue(b, qu));
    let first = Word::sigma2_pow(-1, qu)
        .concat(&Word::sigma1())
        .concat(&Word::sigma2_pow(-(j as i64), qu))
        .concat(&Word::generator(Generator::R1))
        .concat(&Word::sigma1_pow(-(i as i64), pu));
    let second = Word::sigma2_pow(-2, qu)
        .concat(&Word::sigma1())
        .concat(&Word::sigma2_pow(-(b as i64), qu))
        .concat(&Word::sigma1_pow(-(a as i64), pu));
    let family = Family::Delta { p: pu, q: qu, i, j, a, b };
    Ok(with_extras(family, pu, qu, vec![first, second]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrientableParams {
    pub p: u64,
    pub q: u64,
    pub i: u64,
    pub j: u64,
    /// k ≡ 1 − i (mod p).
    pub k: u64,
}

impl OrientableParams {
    pub fn new(p: u64, q: u64, i: i64, j: i64) -> OrientableParams {
        let i = residue(i, p);
        OrientableParams { p, q, i, j: residue(j, q), k: residue(1 - i as i64, p) }
    }

    pub fn presentation(&self) -> Presentation {
        lambda_presentation(self.p as i64, self.q as i64, self.i as i64, self.j as i64)
            .expect("stored type is valid")
    }

    /// Λ(q,p)_{−j,−i}.
    pub fn dual(&self) -> OrientableParams {
        OrientableParams::new(self.q, self.p, -(self.j as i64), -(self.i as i64))
    }
}

/// A non-orientable tight polyhedron of type {p, q}. When `is_dual_form` is
/// set it is the dual of Δ(q,p) with the stored parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NonOrientableParams {
    pub p: u64,
    pub q: u64,
    pub i: u64,
    pub j: u64,
    pub a: u64,
    pub b: u64,
    pub is_dual_form: bool,
}

impl NonOrientableParams {
    /// Type of the Δ group carrying the parameters.
    pub fn delta_type(&self) -> (u64, u64) {
        if self.is_dual_form {
            (self.q, self.p)
        } else {
            (self.p, self.q)
        }
    }

    pub fn delta(&self) -> Presentation {
        let (dp, dq) = self.delta_type();
        delta_presentation(
            dp as i64,
            dq as i64,
            self.i as i64,
            self.j as i64,
            self.a as i64,
            self.b as i64,
        )
        .expect("stored type is valid")
    }

    /// A presentation for the polyhedron of type {p, q} itself.
    pub fn presentation(&self) -> Presentation {
        if self.is_dual_form {
            dual_presentation(&self.delta())
        } else {
            self.delta()
        }
    }

    pub fn dual(&self) -> NonOrientableParams {
        NonOrientableParams { p: self.q, q: self.p, is_dual_form: !self.is_dual_form, ..*self }
    }
}

/// Cases of the existence theorem, numbered 1–5.
pub fn existence_cases(p: u64, q: u64) -> Vec<u8> {
    let mut cases = Vec::new();
    if p.is_multiple_of(2) && q.is_multiple_of(2) {
        cases.push(1);
    }
    if p % 2 == 1 && q.is_multiple_of(2) && (2 * p).is_multiple_of(q) {
        cases.push(2);
    }
    if q % 2 == 1 && p.is_multiple_of(2) && (2 * q).is_multiple_of(p) {
        cases.push(3);
    }
    if p == 4 && q % 2 == 1 && q.is_multiple_of(3) {
        cases.push(4);
    }
    if q == 4 && p % 2 == 1 && p.is_multiple_of(3) {
        cases.push(5);
    }
    cases
}

/// Residues i (mod p) of edge-simple tight orientable polyhedra of type {p, q′}.
fn edge_simple_i_values(p: u64, q_prime: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if q_prime == 2 && p >= 3 {
        out.push(p - 1);
    }
    if p >= 4 && p.is_multiple_of(2) && q_prime >= 3 {
        out.extend(
            edge_simple_solutions(p)
                .into_iter()
                .filter(|s| s.q == q_prime)
                .map(|s| s.lambda_i()),
        );
    }
    out
}

/// All (i, j) with Λ(p,q)_{i,j} the group of a tight orientably regular
/// polyhedron of type {p, q}, computed arithmetically.
pub fn classify_orientable(p: u64, q: u64) -> Vec<OrientableParams> {
    if p < 2 || q < 2 || !existence_cases(p, q).iter().any(|&c| c <= 3) {
        return Vec::new();
    }
    if p == 2 || q == 2 {
        return vec![OrientableParams::new(p, q, -1, 1)];
    }
    // Each such polyhedron is a mix of an edge-simple {p, q′} and the dual
    // of an edge-simple {q, p′}.
    let side_i: Vec<(u64, u64)> = divisors(q)
        .into_iter()
        .flat_map(|qp| edge_simple_i_values(p, qp).into_iter().map(move |i| (qp, i)))
        .collect();
    let side_j: Vec<(u64, u64)> = divisors(p)
        .into_iter()
        .flat_map(|pp| {
            edge_simple_i_values(q, pp)
                .into_iter()
                .map(move |i_dual| (pp, (q - i_dual) % q))
        })
        .collect();
    let mut out: Vec<OrientableParams> = Vec::new();
    for &(qp, i) in &side_i {
        for &(pp, j) in &side_j {
            if (i + 1) % pp == 0 && (j + q - 1).is_multiple_of(qp) {
                out.push(OrientableParams::new(p, q, i as i64, j as i64));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Δ parameters for a primal (not dual-form) non-orientable type {p, q}.
fn nonorientable_primal(p: u64, q: u64) -> Vec<NonOrientableParams> {
    let admissible = p % 8 == 4
        && q.is_multiple_of(3)
        && (p == 4 || (q.is_multiple_of(6) && (q / 6) % 2 == 1));
    if !admissible {
        return Vec::new();
    }
    let quarter = p / 4;
    let i = if quarter % 4 == 3 { quarter - 1 } else { 3 * quarter - 1 };
    let js = if p != 4 {
        vec![1 + q / 2]
    } else if q.is_multiple_of(2) {
        vec![1, 1 + q / 2]
    } else {
        vec![1]
    };
    js.into_iter()
        .map(|j| NonOrientableParams { p, q, i, j, a: 1 + p / 2, b: 2 % q, is_dual_form: false })
        .collect()
}

/// All tight non-orientably regular polyhedra of type {p, q}: Δ(p,q)
/// groups, then duals of Δ(q,p) groups.
pub fn classify_nonorientable(p: u64, q: u64) -> Vec<NonOrientableParams> {
    if p < 2 || q < 2 {
        return Vec::new();
    }
    let mut out = nonorientable_primal(p, q);
    out.extend(nonorientable_primal(q, p).iter().map(NonOrientableParams::dual));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExistenceVerdict {
    pub exists: bool,
    pub matched_cases: Vec<u8>,
    pub orientable_count: usize,
    pub nonorientable_count: usize,
}

pub fn tight_existence(p: u64, q: u64) -> ExistenceVerdict {
    let matched_cases = existence_cases(p, q);
    ExistenceVerdict {
        exists: !matched_cases.is_empty(),
        matched_cases,
        orientable_count: classify_orientable(p, q).len(),
        nonorientable_count: classify_nonorientable(p, q).len(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum ClassParams {
    Orientable(OrientableParams),
    NonOrientable(NonOrientableParams),
}

impl ClassParams {
    pub fn schlafli(&self) -> SchlafliType {
        match self {
            ClassParams::Orientable(o) => SchlafliType::new(o.p, o.q),
            ClassParams::NonOrientable(n) => SchlafliType::new(n.p, n.q),
        }
    }

    pub fn is_orientable(&self) -> bool {
        matches!(self, ClassParams::Orientable(_))
    }

    pub fn is_dual_form(&self) -> bool {
        matches!(self, ClassParams::NonOrientable(n) if n.is_dual_form)
    }

    pub fn presentation(&self) -> Presentation {
        match self {
            ClassParams::Orientable(o) => o.presentation(),
            ClassParams::NonOrientable(n) => n.presentation(),
        }
    }

    pub fn dual(&self) -> ClassParams {
        match self {
            ClassParams::Orientable(o) => ClassParams::Orientable(o.dual()),
            ClassParams::NonOrientable(n) => ClassParams::NonOrientable(n.dual()),
        }
    }

    /// Family label for reports: `lambda`, `delta` or `delta-dual`.
    pub fn family_name(&self) -> &'static str {
        match self {
            ClassParams::Orientable(_) => "lambda",
            ClassParams::NonOrientable(n) if n.is_dual_form => "delta-dual",
            ClassParams::NonOrientable(_) => "delta",
        }
    }
}

/// One classified polyhedron with the checks that confirmed it.
#[derive(Debug, Clone)]
pub struct ClassRecord {
    pub params: ClassParams,
    pub presentation: Presentation,
    pub group: RegularRepresentation,
    pub report: SggiReport,
    pub invariants: MapInvariants,
    pub dual: ClassParams,
}

/// Enumerates and checks one closed-form record.
pub fn verify_record(params: ClassParams) -> Result<ClassRecord> {
    let t = params.schlafli();
    let presentation = params.presentation();
    let group = enumerate_cosets(&presentation, 65536.max(64 * (t.p * t.q) as usize))?;
    let report = SggiReport::analyze(&group);
    let fail = |why: &str| Error::VerificationFailure(format!("{params:?}: {why}"));
    if !report.is_tight_polyhedron_of_type(t) {
        return Err(fail("not a tight string C-group of the claimed type"));
    }
    if report.orientable != params.is_orientable() {
        return Err(fail("orientability differs from the classification"));
    }
    let map = build_map(&group);
    if !validate_polyhedron(&map) {
        return Err(fail("map violates the polyhedron axioms"));
    }
    let invariants = map_invariants(&map, &group);
    Ok(ClassRecord { params, presentation, group, report, invariants, dual: params.dual() })
}

/// Orientable then non-orientable records of type {p, q}, each verified by
/// enumeration.
pub fn classify_all(p: u64, q: u64) -> Result<Vec<ClassRecord>> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidType { p: p as i64, q: q as i64 });
    }
    classify_orientable(p, q)
        .into_iter()
        .map(ClassParams::Orientable)
        .chain(classify_nonorientable(p, q).into_iter().map(ClassParams::NonOrientable))
        .map(verify_record)
        .collect()
}
