//! Properties of a group with three distinguished involutions: string
//! C-group, Schläfli type, tightness, orientability, duality, isomorphism.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{generated_by, generated_by_words, subgroup_index, RegularRepresentation};
use crate::presentation::{Family, Presentation};
use crate::word::{Generator, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SchlafliType {
    pub p: u64,
    pub q: u64,
}

impl SchlafliType {
    pub fn new(p: u64, q: u64) -> SchlafliType {
        SchlafliType { p, q }
    }

    pub fn dual(self) -> SchlafliType {
        SchlafliType { p: self.q, q: self.p }
    }

    /// p = 1 or q = 1: a generator pair has collapsed.
    pub fn is_degenerate(self) -> bool {
        self.p < 2 || self.q < 2
    }

    pub fn tight_order(self) -> u64 {
        2 * self.p * self.q
    }
}

impl std::fmt::Display for SchlafliType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SggiReport {
    pub is_sggi: bool,
    pub is_string_c_group: bool,
    #[serde(rename = "type")]
    pub schlafli: SchlafliType,
    pub order: u64,
    pub is_tight: bool,
    pub orientable: bool,
}

impl SggiReport {
    pub fn analyze(rep: &RegularRepresentation) -> SggiReport {
        let order = rep.order() as u64;
        if !check_sggi(rep) {
            return SggiReport {
                is_sggi: false,
                is_string_c_group: false,
                schlafli: SchlafliType::new(0, 0),
                order,
                is_tight: false,
                orientable: false,
            };
        }
        let schlafli = schlafli_type(rep);
        SggiReport {
            is_sggi: true,
            is_string_c_group: check_intersection_condition(rep),
            schlafli,
            order,
            is_tight: is_tight(rep),
            orientable: orientability(rep),
        }
    }

    /// A tight string C-group of exactly the given type.
    pub fn is_tight_polyhedron_of_type(&self, t: SchlafliType) -> bool {
        self.is_sggi && self.is_string_c_group && self.is_tight && self.schlafli == t
    }
}

/// All three generators are non-identity involutions and (ρ0ρ2)² = 1.
pub fn check_sggi(rep: &RegularRepresentation) -> bool {
    let involutive = Generator::ALL.iter().all(|&g| {
        let x = rep.generator(g);
        x != 0 && rep.act(x, g) == 0
    });
    involutive && rep.evaluate_word(&Word::parse("acac").unwrap()) == 0
}

const SUBSETS: [&[Generator]; 8] = [
    &[],
    &[Generator::R0],
    &[Generator::R1],
    &[Generator::R0, Generator::R1],
    &[Generator::R2],
    &[Generator::R0, Generator::R2],
    &[Generator::R1, Generator::R2],
    &[Generator::R0, Generator::R1, Generator::R2],
];

/// Γ_I ∩ Γ_J = Γ_{I∩J} for all 64 pairs of generator subsets. Subsets are
/// encoded as bitmasks over {ρ0, ρ1, ρ2}.
pub fn check_intersection_condition(rep: &RegularRepresentation) -> bool {
    let n = rep.order();
    let parabolics: Vec<Vec<bool>> = SUBSETS
        .iter()
        .map(|s| generated_by(rep, s).mask(n))
        .collect();
    let sizes: Vec<usize> = parabolics
        .iter()
        .map(|m| m.iter().filter(|&&b| b).count())
        .collect();
    for i in 0..8 {
        for j in 0..8 {
            let meet = (0..n).filter(|&x| parabolics[i][x] && parabolics[j][x]).count();
            if meet != sizes[i & j] {
                return false;
            }
        }
    }
    true
}

/// Only ⟨ρ0,ρ1⟩ ∩ ⟨ρ1,ρ2⟩ = ⟨ρ1⟩.
pub fn check_decisive_intersection(rep: &RegularRepresentation) -> bool {
    let face = generated_by(rep, &[Generator::R0, Generator::R1]);
    let vertex = generated_by(rep, &[Generator::R1, Generator::R2]);
    let r1 = generated_by(rep, &[Generator::R1]);
    face.intersection(&vertex).len() == r1.size()
}

/// (order of σ1, order of σ2).
pub fn schlafli_type(rep: &RegularRepresentation) -> SchlafliType {
    SchlafliType::new(
        rep.element_order(rep.sigma1()),
        rep.element_order(rep.sigma2()),
    )
}

pub fn is_tight(rep: &RegularRepresentation) -> bool {
    let t = schlafli_type(rep);
    rep.order() as u64 == t.tight_order()
}

/// True iff ⟨σ1, σ2⟩ has index 2.
pub fn orientability(rep: &RegularRepresentation) -> bool {
    let rotations = generated_by_words(rep, &[Word::sigma1(), Word::sigma2()]);
    subgroup_index(rep, &rotations) == 2
}

/// Rewrites relators under ρ_i ↦ ρ_{2-i}. Λ(p,q)_{i,j} is retagged as
/// Λ(q,p)_{-j,-i}; Δ presentations become custom.
pub fn dual_presentation(pres: &Presentation) -> Presentation {
    let family = match pres.family() {
        Family::Coxeter { p, q } => Family::Coxeter { p: q, q: p },
        Family::Lambda { p, q, i, j } => Family::Lambda {
            p: q,
            q: p,
            i: (q - j % q) % q,
            j: (p - i % p) % p,
        },
        Family::Delta { .. } | Family::Custom => Family::Custom,
    };
    pres.rewrite_dual(family)
}

/// Generator-respecting isomorphism of two tight string C-groups of the same
/// type: equal order and every relator of `b` holds in `a`.
pub fn polyhedra_isomorphic(
    a: (&RegularRepresentation, &Presentation),
    b: (&RegularRepresentation, &Presentation),
) -> Result<bool> {
    let ta = schlafli_type(a.0);
    let tb = schlafli_type(b.0);
    if ta != tb {
        return Err(Error::TypeMismatch(ta.p, ta.q, tb.p, tb.q));
    }
    if a.0.order() != b.0.order() {
        return Ok(false);
    }
    Ok(b.1.relators().iter().all(|r| a.0.evaluate_word(r) == 0))
}
