//! Words over the three involutory generators ρ0, ρ1, ρ2.

use std::fmt;

/// One of the three distinguished involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    R0,
    R1,
    R2,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::R0, Generator::R1, Generator::R2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Generator> {
        Self::ALL.get(index).copied()
    }

    /// ρ_i ↦ ρ_{2-i}.
    pub fn dual(self) -> Generator {
        match self {
            Generator::R0 => Generator::R2,
            Generator::R1 => Generator::R1,
            Generator::R2 => Generator::R0,
        }
    }

    pub fn letter(self) -> char {
        (b'a' + self as u8) as char
    }
}

/// A word in ρ0, ρ1, ρ2. Every letter is its own inverse, so the inverse of
/// a word is its reversal.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Word {
        Word(letters)
    }

    pub fn generator(g: Generator) -> Word {
        Word(vec![g])
    }

    /// σ1 = ρ0ρ1.
    pub fn sigma1() -> Word {
        Word(vec![Generator::R0, Generator::R1])
    }

    /// σ2 = ρ1ρ2.
    pub fn sigma2() -> Word {
        Word(vec![Generator::R1, Generator::R2])
    }

    /// σ1^e, written with the fewest letters given that σ1 has order `order`.
    pub fn sigma1_pow(e: i64, order: u64) -> Word {
        Self::rotation_pow(Self::sigma1(), e, order)
    }

    /// σ2^e, written with the fewest letters given that σ2 has order `order`.
    pub fn sigma2_pow(e: i64, order: u64) -> Word {
        Self::rotation_pow(Self::sigma2(), e, order)
    }

    fn rotation_pow(base: Word, e: i64, order: u64) -> Word {
        let n = order as i64;
        let r = e.rem_euclid(n);
        if 2 * r <= n {
            base.pow(r as usize)
        } else {
            base.inverse().pow((n - r) as usize)
        }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn dual(&self) -> Word {
        Word(self.0.iter().map(|g| g.dual()).collect())
    }

    /// Cancels adjacent equal letters (xx = 1).
    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<Generator> = Vec::with_capacity(self.0.len());
        for &g in &self.0 {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word(out)
    }

    /// Free reduction followed by cancelling equal first and last letters.
    pub fn cyclically_reduced(&self) -> Word {
        let mut w = self.freely_reduced().0;
        while w.len() >= 2 && w[0] == w[w.len() - 1] {
            w.pop();
            w.remove(0);
        }
        Word(w)
    }

    /// Parses letters from {a, b, c}; whitespace is ignored.
    pub fn parse(text: &str) -> Option<Word> {
        let mut letters = Vec::new();
        for ch in text.chars() {
            match ch {
                'a' => letters.push(Generator::R0),
                'b' => letters.push(Generator::R1),
                'c' => letters.push(Generator::R2),
                c if c.is_whitespace() => {}
                _ => return None,
            }
        }
        Some(Word(letters))
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for g in &self.0 {
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}
