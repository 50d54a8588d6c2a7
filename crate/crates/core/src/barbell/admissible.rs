//! Admissible pairs `(a, c)` and the generators `T_i(ā, c̄)` of the span.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::polys::{t_poly, TKind};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ring::RingElement;
use crate::word::{Alphabet, Letter, Side, Syllable, Word};

/// True iff both words are nontrivial and the last letter of `a` differs
/// from the first letter of `c` (so the pair is `(t, u)` or `(u, t)`).
pub fn is_admissible(a: &Word, c: &Word) -> bool {
    if a.alphabet() != Alphabet::Base || c.alphabet() != Alphabet::Base {
        return false;
    }
    match (a.boundary_letter(Side::Tail), c.boundary_letter(Side::Head)) {
        (Some((x, _)), Some((y, _))) => x != y,
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissiblePair {
    a: Word,
    c: Word,
}

impl AdmissiblePair {
    pub fn new(a: Word, c: Word) -> Result<Self> {
        if a.is_identity() {
            return Err(Error::TrivialArgument("a"));
        }
        if c.is_identity() {
            return Err(Error::TrivialArgument("c"));
        }
        if !is_admissible(&a, &c) {
            return Err(Error::InvalidPattern(format!("({a}, {c}) is not admissible")));
        }
        Ok(AdmissiblePair { a, c })
    }

    pub fn a(&self) -> &Word {
        &self.a
    }

    pub fn c(&self) -> &Word {
        &self.c
    }
}

/// All BASE words with exactly `syllables` syllables and exponents in
/// `[-max_exponent, max_exponent] ∖ {0}`, in increasing word order.
pub fn words_with_syllables(syllables: usize, max_exponent: u32) -> Vec<Word> {
    if syllables == 0 {
        return vec![Word::identity(Alphabet::Base)];
    }
    let e = max_exponent as i64;
    let exps: Vec<i64> = (-e..=e).filter(|&x| x != 0).collect();
    if exps.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in [Letter::T, Letter::U] {
        let mut digits = vec![0usize; syllables];
        loop {
            let mut letter = first;
            let syls = digits.iter().map(|&d| {
                let s = Syllable::new(letter, Exponent::from(exps[d]));
                letter = if letter == Letter::T { Letter::U } else { Letter::T };
                s
            });
            out.push(Word::from_syllables(Alphabet::Base, syls).expect("alternating syllables"));
            // Odometer with the first syllable most significant.
            let mut i = syllables;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < exps.len() {
                    break;
                }
                digits[i] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    out
}

/// All BASE words with at most `max_syllables` syllables (the identity
/// included) and exponents bounded by `max_exponent`, in word order.
pub fn bounded_words(max_syllables: usize, max_exponent: u32) -> Vec<Word> {
    (0..=max_syllables)
        .flat_map(|n| words_with_syllables(n, max_exponent))
        .collect()
}

/// Lazily enumerates admissible pairs ordered by total syllable count, then
/// `a`, then `c`.
pub fn admissible_pairs(
    max_syllables: usize,
    max_exponent: u32,
) -> impl Iterator<Item = AdmissiblePair> {
    let by_len: Vec<Vec<Word>> = (0..=max_syllables)
        .map(|n| words_with_syllables(n, max_exponent))
        .collect();
    let by_len = std::sync::Arc::new(by_len);
    (2..=2 * max_syllables).flat_map(move |total| {
        let lo = total.saturating_sub(max_syllables).max(1);
        let hi = (total - 1).min(max_syllables);
        let by_len = by_len.clone();
        (lo..=hi).flat_map(move |na| {
            let by_len = by_len.clone();
            let nc = total - na;
            (0..by_len[na].len()).flat_map(move |i| {
                let by_len = by_len.clone();
                (0..by_len[nc].len()).filter_map(move |j| {
                    let (a, c) = (&by_len[na][i], &by_len[nc][j]);
                    is_admissible(a, c).then(|| AdmissiblePair {
                        a: a.clone(),
                        c: c.clone(),
                    })
                })
            })
        })
    })
}

pub fn enumerate_admissible(max_syllables: usize, max_exponent: u32) -> Vec<AdmissiblePair> {
    admissible_pairs(max_syllables, max_exponent).collect()
}

/// One generator `T_i(ā, c̄)` of the span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanGenerator {
    pub kind: TKind,
    pub pair: AdmissiblePair,
    pub value: RingElement,
}

impl SpanGenerator {
    pub fn new(kind: TKind, pair: AdmissiblePair) -> Self {
        let value = t_poly(kind, &pair.a, &pair.c).expect("admissible words are nontrivial");
        SpanGenerator { kind, pair, value }
    }
}

impl Serialize for SpanGenerator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SpanGenerator", 4)?;
        s.serialize_field("i", &self.kind.number())?;
        s.serialize_field("a", &self.pair.a.to_string())?;
        s.serialize_field("c", &self.pair.c.to_string())?;
        s.serialize_field("value", &self.value)?;
        s.end()
    }
}

/// Generators for every enumerated pair, kinds varying fastest.
pub fn span_generators(
    max_syllables: usize,
    max_exponent: u32,
    kinds: &[TKind],
) -> impl Iterator<Item = SpanGenerator> + '_ {
    admissible_pairs(max_syllables, max_exponent).flat_map(move |pair| {
        kinds
            .iter()
            .map(move |&kind| SpanGenerator::new(kind, pair.clone()))
    })
}
