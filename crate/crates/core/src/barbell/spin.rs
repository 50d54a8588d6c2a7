//! Barbell words over `{t, u, ν_B, ν_R}` and the generator form of spin words.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::word::{Alphabet, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BarbellSymbol {
    T,
    U,
    NuB,
    NuR,
}

impl BarbellSymbol {
    pub fn name(self) -> &'static str {
        match self {
            BarbellSymbol::T => "t",
            BarbellSymbol::U => "u",
            BarbellSymbol::NuB => "ν_B",
            BarbellSymbol::NuR => "ν_R",
        }
    }
}

/// A label for a barbell diffeomorphism. Only adjacent equal symbols are
/// merged; no other relations are imposed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BarbellWord {
    factors: Vec<(BarbellSymbol, Exponent)>,
}

impl BarbellWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, symbol: BarbellSymbol, exponent: impl Into<Exponent>) {
        let exponent = exponent.into();
        if exponent.is_zero() {
            return;
        }
        match self.factors.last_mut() {
            Some((s, e)) if *s == symbol => {
                let sum = &*e + &exponent;
                if sum.is_zero() {
                    self.factors.pop();
                } else {
                    *e = sum;
                }
            }
            _ => self.factors.push((symbol, exponent)),
        }
    }

    pub fn factors(&self) -> &[(BarbellSymbol, Exponent)] {
        &self.factors
    }
}

impl fmt::Display for BarbellWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (s, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.name())?;
            if *e != Exponent::ONE {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Rewrites `t^{x_1} u^{y_1} t^{x_2} ... u^{y_n} t^{x_n}` by conjugating each
/// `u`-syllable with `ν_R ν_B`.
pub fn spin_to_barbell(s: &Word) -> Result<BarbellWord> {
    let violation = |reason| Error::ShapeViolation {
        word: s.to_string(),
        reason,
    };
    if s.alphabet() != Alphabet::Base {
        return Err(violation("word is not over {t, u}"));
    }
    let syls = s.syllables();
    match (syls.first(), syls.last()) {
        (None, _) | (_, None) => return Err(violation("word is empty")),
        (Some(first), _) if first.letter != Letter::T => {
            return Err(violation("word must begin with a power of t"))
        }
        (_, Some(last)) if last.letter != Letter::T => {
            return Err(violation("word must end with a power of t"))
        }
        _ => {}
    }
    let mut out = BarbellWord::new();
    for syl in syls {
        match syl.letter {
            Letter::T => out.push(BarbellSymbol::T, syl.exponent.clone()),
            _ => {
                out.push(BarbellSymbol::NuR, 1i64);
                out.push(BarbellSymbol::NuB, 1i64);
                out.push(BarbellSymbol::U, syl.exponent.clone());
                out.push(BarbellSymbol::NuB, -1i64);
                out.push(BarbellSymbol::NuR, -1i64);
            }
        }
    }
    Ok(out)
}
