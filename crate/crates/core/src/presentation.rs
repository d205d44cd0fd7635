//! Finitely presented groups on ρ0, ρ1, ρ2 with a family tag.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Generator, Word};

/// Which construction produced a presentation. Parameters are canonical
/// residues: `i`, `a` modulo `p` and `j`, `b` modulo `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Coxeter { p: u64, q: u64 },
    Lambda { p: u64, q: u64, i: u64, j: u64 },
    Delta { p: u64, q: u64, i: u64, j: u64, a: u64, b: u64 },
    Custom,
}

impl Family {
    /// The Schläfli type the presentation is built for, if tagged.
    pub fn nominal_type(&self) -> Option<(u64, u64)> {
        match *self {
            Family::Coxeter { p, q } | Family::Lambda { p, q, .. } | Family::Delta { p, q, .. } => {
                Some((p, q))
            }
            Family::Custom => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Coxeter { .. } => "coxeter",
            Family::Lambda { .. } => "lambda",
            Family::Delta { .. } => "delta",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Coxeter { p, q } => write!(f, "[{p},{q}]"),
            Family::Lambda { p, q, i, j } => write!(f, "Λ({p},{q})_{{{i},{j}}}"),
            Family::Delta { p, q, i, j, a, b } => write!(f, "Δ({p},{q})_{{({i},{j},{a},{b})}}"),
            Family::Custom => write!(f, "custom"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    relators: Vec<Word>,
    family: Family,
}

const INVOLUTION_RELATORS: [&str; 4] = ["aa", "bb", "cc", "acac"];

impl Presentation {
    /// The three involution relators plus (ρ0ρ2)².
    pub fn string_relators() -> Vec<Word> {
        INVOLUTION_RELATORS
            .iter()
            .map(|s| Word::parse(s).expect("static relator"))
            .collect()
    }

    pub fn new(relators: Vec<Word>, family: Family) -> Presentation {
        Presentation { relators, family }
    }

    /// A custom presentation; the mandatory string relators are added if absent.
    pub fn custom(extra: Vec<Word>) -> Presentation {
        let mut relators = Self::string_relators();
        for r in extra {
            if !relators.contains(&r) {
                relators.push(r);
            }
        }
        Presentation { relators, family: Family::Custom }
    }

    /// Parses the text format: one relator per line over {a, b, c}. Blank
    /// lines and lines starting with `#` are skipped. The relators are taken
    /// verbatim; no mandatory relators are added.
    pub fn parse_text(text: &str) -> Result<Presentation> {
        let mut relators = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let w = Word::parse(line).ok_or_else(|| {
                Error::Parse(format!("line {}: relators use only the letters a, b, c", lineno + 1))
            })?;
            relators.push(w);
        }
        Ok(Presentation { relators, family: Family::Custom })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.relators {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Relators beyond the four string relators.
    pub fn extra_relators(&self) -> impl Iterator<Item = &Word> {
        let base = Self::string_relators();
        self.relators.iter().filter(move |r| !base.contains(r))
    }

    /// Checks that ρ0², ρ1², ρ2² and (ρ0ρ2)² are present.
    pub fn validate(&self) -> Result<()> {
        for g in Generator::ALL {
            let sq = Word::new(vec![g, g]);
            if !self.relators.contains(&sq) {
                return Err(Error::InvalidPresentation(format!(
                    "missing involution relator {sq}"
                )));
            }
        }
        let ac = Word::parse("acac").unwrap();
        let ca = Word::parse("caca").unwrap();
        if !self.relators.iter().any(|r| *r == ac || *r == ca) {
            return Err(Error::InvalidPresentation(
                "missing relator (ρ0ρ2)²".to_string(),
            ));
        }
        Ok(())
    }

    /// max(65536, 64·p·q) for tagged presentations, 65536 otherwise.
    pub fn default_max_cosets(&self) -> usize {
        match self.family.nominal_type() {
            Some((p, q)) => 65536.max((64 * p * q) as usize),
            None => 65536,
        }
    }

    /// Rewrites every relator under ρ_i ↦ ρ_{2-i}.
    pub fn rewrite_dual(&self, family: Family) -> Presentation {
        Presentation {
            relators: self.relators.iter().map(Word::dual).collect(),
            family,
        }
    }
}
