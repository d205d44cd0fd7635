//! Concrete finite groups as right-regular permutation representations, and
//! subgroup algebra over them.

use crate::word::{Generator, Word};

/// An element of a [`RegularRepresentation`], identified with its index.
pub type Element = usize;

/// The group acting on its own elements by right multiplication. Element 0 is
/// the identity; indices are breadth-first from the identity over ρ0, ρ1, ρ2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularRepresentation {
    gens: [Vec<u32>; 3],
    // (parent, g) with element = parent·g; parent < element except at 0.
    parents: Vec<(u32, u8)>,
}

impl RegularRepresentation {
    pub(crate) fn from_parts(gens: [Vec<u32>; 3], parents: Vec<(u32, u8)>) -> Self {
        RegularRepresentation { gens, parents }
    }

    pub fn order(&self) -> usize {
        self.parents.len()
    }

    pub fn identity(&self) -> Element {
        0
    }

    /// Right multiplication by a generator, as a permutation of the elements.
    pub fn generator_image(&self, g: Generator) -> &[u32] {
        &self.gens[g.index()]
    }

    #[inline]
    pub fn act(&self, x: Element, g: Generator) -> Element {
        self.gens[g.index()][x] as Element
    }

    pub fn generator(&self, g: Generator) -> Element {
        self.act(0, g)
    }

    pub fn sigma1(&self) -> Element {
        self.evaluate_word(&Word::sigma1())
    }

    pub fn sigma2(&self) -> Element {
        self.evaluate_word(&Word::sigma2())
    }

    pub fn apply_word(&self, x: Element, w: &Word) -> Element {
        w.letters().iter().fold(x, |acc, &g| self.act(acc, g))
    }

    /// Image of the identity under right multiplication by `w`.
    pub fn evaluate_word(&self, w: &Word) -> Element {
        self.apply_word(0, w)
    }

    /// A shortest word for `x` along the breadth-first tree.
    pub fn word_of(&self, x: Element) -> Word {
        let mut letters = Vec::new();
        let mut cur = x;
        while cur != 0 {
            let (parent, g) = self.parents[cur];
            letters.push(Generator::from_index(g as usize).unwrap());
            cur = parent as usize;
        }
        letters.reverse();
        Word::new(letters)
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        let mut path = Vec::new();
        let mut cur = b;
        while cur != 0 {
            let (parent, g) = self.parents[cur];
            path.push(g);
            cur = parent as usize;
        }
        path.iter()
            .rev()
            .fold(a, |acc, &g| self.gens[g as usize][acc] as Element)
    }

    pub fn inverse(&self, a: Element) -> Element {
        self.evaluate_word(&self.word_of(a).inverse())
    }

    pub fn pow(&self, a: Element, n: u64) -> Element {
        let mut result = 0;
        for _ in 0..n {
            result = self.mul(result, a);
        }
        result
    }

    /// The permutation x ↦ x·g.
    pub fn right_mul_perm(&self, g: Element) -> Vec<u32> {
        let w = self.word_of(g);
        (0..self.order())
            .map(|x| self.apply_word(x, &w) as u32)
            .collect()
    }

    /// The permutation x ↦ h·x.
    pub fn left_mul_perm(&self, h: Element) -> Vec<u32> {
        let mut out = vec![0u32; self.order()];
        out[0] = h as u32;
        for x in 1..self.order() {
            let (parent, g) = self.parents[x];
            out[x] = self.gens[g as usize][out[parent as usize] as usize];
        }
        out
    }

    /// Smallest m ≥ 1 with g^m = 1.
    pub fn element_order(&self, g: Element) -> u64 {
        let perm = self.right_mul_perm(g);
        let mut x = perm[0] as usize;
        let mut m = 1;
        while x != 0 {
            x = perm[x] as usize;
            m += 1;
        }
        m
    }

    pub fn conjugate(&self, x: Element, by: Element) -> Element {
        let inv = self.inverse(by);
        self.mul(self.mul(inv, x), by)
    }
}

/// An explicit subgroup: a sorted element set and the words it was generated by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<Element>,
    generating_words: Vec<Word>,
}

impl Subgroup {
    pub fn from_elements(mut elements: Vec<Element>, generating_words: Vec<Word>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { elements, generating_words }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn generating_words(&self) -> &[Word] {
        &self.generating_words
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: Element) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Vec<Element> {
        self.elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect()
    }

    pub fn mask(&self, order: usize) -> Vec<bool> {
        let mut m = vec![false; order];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }
}

fn orbit_of_identity(order: usize, perms: &[&[u32]]) -> Vec<Element> {
    let mut seen = vec![false; order];
    seen[0] = true;
    let mut out = vec![0];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        head += 1;
        for perm in perms {
            let y = perm[x] as usize;
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
    }
    out
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_closure(rep: &RegularRepresentation, gens: &[Element]) -> Subgroup {
    let perms: Vec<Vec<u32>> = gens.iter().map(|&g| rep.right_mul_perm(g)).collect();
    let refs: Vec<&[u32]> = perms.iter().map(Vec::as_slice).collect();
    let words = gens.iter().map(|&g| rep.word_of(g)).collect();
    Subgroup::from_elements(orbit_of_identity(rep.order(), &refs), words)
}

/// Γ_I = ⟨ρ_i : i ∈ I⟩, using the generator permutations directly.
pub fn generated_by(rep: &RegularRepresentation, gens: &[Generator]) -> Subgroup {
    let refs: Vec<&[u32]> = gens.iter().map(|&g| rep.generator_image(g)).collect();
    let words = gens.iter().map(|&g| Word::generator(g)).collect();
    Subgroup::from_elements(orbit_of_identity(rep.order(), &refs), words)
}

/// Subgroup generated by the elements that the given words evaluate to.
pub fn generated_by_words(rep: &RegularRepresentation, words: &[Word]) -> Subgroup {
    let elems: Vec<Element> = words.iter().map(|w| rep.evaluate_word(w)).collect();
    let mut h = subgroup_closure(rep, &elems);
    h.generating_words = words.to_vec();
    h
}

pub fn cyclic_subgroup(rep: &RegularRepresentation, g: Element) -> Subgroup {
    subgroup_closure(rep, &[g])
}

pub fn subgroup_index(rep: &RegularRepresentation, h: &Subgroup) -> usize {
    rep.order() / h.size()
}

/// Conjugation maps x ↦ ρ_i x ρ_i for the three generators.
fn generator_conjugations(rep: &RegularRepresentation) -> [Vec<u32>; 3] {
    Generator::ALL.map(|g| {
        let left = rep.left_mul_perm(rep.generator(g));
        let right = rep.generator_image(g);
        left.iter().map(|&x| right[x as usize]).collect()
    })
}

/// True iff `h` is closed under conjugation by every generator.
pub fn is_normal(rep: &RegularRepresentation, h: &Subgroup) -> bool {
    let conj = generator_conjugations(rep);
    let mask = h.mask(rep.order());
    h.elements()
        .iter()
        .all(|&x| conj.iter().all(|c| mask[c[x] as usize]))
}

/// Largest subgroup of `h` normal in the whole group.
///
/// Iterates K ← K ∩ ρ_i K ρ_i over the generators until stable; the fixed
/// point is normal and contains every normal subgroup of `h`.
pub fn subgroup_core(rep: &RegularRepresentation, h: &Subgroup) -> Subgroup {
    let conj = generator_conjugations(rep);
    let mut mask = h.mask(rep.order());
    let mut members: Vec<Element> = h.elements().to_vec();
    loop {
        let keep: Vec<Element> = members
            .iter()
            .copied()
            .filter(|&x| conj.iter().all(|c| mask[c[x] as usize]))
            .collect();
        if keep.len() == members.len() {
            break;
        }
        for &x in &members {
            mask[x] = false;
        }
        for &x in &keep {
            mask[x] = true;
        }
        members = keep;
    }
    Subgroup::from_elements(members, Vec::new())
}

/// Smallest normal subgroup containing `gens`.
pub fn normal_closure(rep: &RegularRepresentation, gens: &[Element]) -> Subgroup {
    let conj = generator_conjugations(rep);
    let mut current = subgroup_closure(rep, gens);
    loop {
        let mask = current.mask(rep.order());
        let mut extra: Vec<Element> = Vec::new();
        for &x in current.elements() {
            for c in &conj {
                let y = c[x] as usize;
                if !mask[y] && !extra.contains(&y) {
                    extra.push(y);
                }
            }
        }
        if extra.is_empty() {
            return current;
        }
        let mut gens_all: Vec<Element> = gens.to_vec();
        gens_all.extend(extra);
        current = subgroup_closure(rep, &gens_all);
    }
}
