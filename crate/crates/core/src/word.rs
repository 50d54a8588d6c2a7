//! Reduced words in the free groups `⟨t, u⟩` and `⟨t_1, u_1, t_3, u_3⟩`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::parse;

/// The two alphabets in use: `BASE = {t, u}` and `QUAD = {t_1, u_1, t_3, u_3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Alphabet {
    Base,
    Quad,
}

impl Alphabet {
    pub fn letters(self) -> &'static [Letter] {
        match self {
            Alphabet::Base => &[Letter::T, Letter::U],
            Alphabet::Quad => &[Letter::T1, Letter::U1, Letter::T3, Letter::U3],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::Base => "BASE",
            Alphabet::Quad => "QUAD",
        }
    }

    pub fn from_name(name: &str) -> Option<Alphabet> {
        match name {
            "BASE" => Some(Alphabet::Base),
            "QUAD" => Some(Alphabet::Quad),
            _ => None,
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A generator letter. The derived order is the alphabet letter order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    T,
    U,
    T1,
    U1,
    T3,
    U3,
}

impl Letter {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Letter::T | Letter::U => Alphabet::Base,
            _ => Alphabet::Quad,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::T => "t",
            Letter::U => "u",
            Letter::T1 => "t_1",
            Letter::U1 => "u_1",
            Letter::T3 => "t_3",
            Letter::U3 => "u_3",
        }
    }

    pub fn from_name(name: &str) -> Option<Letter> {
        Some(match name {
            "t" => Letter::T,
            "u" => Letter::U,
            "t_1" => Letter::T1,
            "u_1" => Letter::U1,
            "t_3" => Letter::T3,
            "u_3" => Letter::U3,
            _ => return None,
        })
    }

    /// Subscript of a QUAD letter.
    pub fn tag(self) -> Option<Tag> {
        match self {
            Letter::T1 | Letter::U1 => Some(Tag::One),
            Letter::T3 | Letter::U3 => Some(Tag::Three),
            _ => None,
        }
    }

    /// The BASE letter a QUAD letter renames, or the letter itself.
    pub fn base(self) -> Letter {
        match self {
            Letter::T | Letter::T1 | Letter::T3 => Letter::T,
            Letter::U | Letter::U1 | Letter::U3 => Letter::U,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The subscript renaming `w ↦ w_1` or `w ↦ w_3` from BASE into QUAD.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    One,
    Three,
}

impl Tag {
    pub fn number(self) -> u8 {
        match self {
            Tag::One => 1,
            Tag::Three => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Tag> {
        match n {
            1 => Some(Tag::One),
            3 => Some(Tag::Three),
            _ => None,
        }
    }

    pub fn other(self) -> Tag {
        match self {
            Tag::One => Tag::Three,
            Tag::Three => Tag::One,
        }
    }

    /// Image of a BASE letter under this renaming.
    pub fn apply(self, letter: Letter) -> Letter {
        match (self, letter.base()) {
            (Tag::One, Letter::T) => Letter::T1,
            (Tag::One, _) => Letter::U1,
            (Tag::Three, Letter::T) => Letter::T3,
            (Tag::Three, _) => Letter::U3,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Head,
    Tail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A maximal run `letter^exponent` inside a reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub letter: Letter,
    pub exponent: Exponent,
}

impl Syllable {
    pub fn new(letter: Letter, exponent: impl Into<Exponent>) -> Self {
        Syllable {
            letter,
            exponent: exponent.into(),
        }
    }
}

impl Ord for Syllable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letter
            .cmp(&other.letter)
            .then_with(|| self.exponent.cmp(&other.exponent))
    }
}

impl PartialOrd for Syllable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == Exponent::ONE {
            write!(f, "{}", self.letter)
        } else {
            write!(f, "{}^{}", self.letter, self.exponent)
        }
    }
}

/// A freely reduced word, stored run-length encoded.
///
/// Invariants: every letter lies in `alphabet`, no exponent is zero and
/// adjacent syllables carry distinct letters. The empty syllable list is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity(alphabet: Alphabet) -> Self {
        Word {
            alphabet,
            syllables: Vec::new(),
        }
    }

    /// `letter^exponent`, the identity when the exponent is zero.
    pub fn power(letter: Letter, exponent: impl Into<Exponent>) -> Self {
        let exponent = exponent.into();
        let mut w = Word::identity(letter.alphabet());
        if !exponent.is_zero() {
            w.syllables.push(Syllable { letter, exponent });
        }
        w
    }

    pub fn generator(letter: Letter) -> Self {
        Word::power(letter, Exponent::ONE)
    }

    /// Builds the reduced word denoted by an arbitrary syllable sequence.
    pub fn from_syllables<I>(alphabet: Alphabet, syllables: I) -> Result<Self>
    where
        I: IntoIterator<Item = Syllable>,
    {
        let mut w = Word::identity(alphabet);
        for s in syllables {
            if s.letter.alphabet() != alphabet {
                return Err(Error::LetterOutsideAlphabet {
                    letter: s.letter,
                    alphabet,
                });
            }
            w.push(s.letter, s.exponent);
        }
        Ok(w)
    }

    /// Parses the word grammar over a given alphabet.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        parse::parse_word(text, Some(alphabet))
    }

    /// Parses the word grammar, inferring the alphabet from the letters used.
    /// The identity defaults to BASE.
    pub fn parse_any(text: &str) -> Result<Self> {
        parse::parse_word(text, None)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Largest absolute exponent, zero for the identity.
    pub fn max_abs_exponent(&self) -> Exponent {
        self.syllables
            .iter()
            .map(|s| s.exponent.abs())
            .max()
            .unwrap_or(Exponent::ZERO)
    }

    /// Multiplies `letter^exponent` on the right, reducing as it goes.
    pub(crate) fn push(&mut self, letter: Letter, exponent: Exponent) {
        if exponent.is_zero() {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.letter == letter => {
                let sum = &last.exponent + &exponent;
                if sum.is_zero() {
                    self.syllables.pop();
                } else {
                    last.exponent = sum;
                }
            }
            _ => self.syllables.push(Syllable { letter, exponent }),
        }
    }

    fn check_same(&self, other: &Word) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet,
                found: other.alphabet,
            });
        }
        Ok(())
    }

    /// Reduced product `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.append(other);
        Ok(out)
    }

    /// In-place right multiplication; the caller guarantees matching alphabets.
    pub(crate) fn append(&mut self, other: &Word) {
        debug_assert_eq!(self.alphabet, other.alphabet);
        for s in &other.syllables {
            self.push(s.letter, s.exponent.clone());
        }
    }

    pub fn inverse(&self) -> Word {
        Word {
            alphabet: self.alphabet,
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    letter: s.letter,
                    exponent: -&s.exponent,
                })
                .collect(),
        }
    }

    /// `w ↦ w_tag`. Fails unless the word is over BASE.
    pub fn rename(&self, tag: Tag) -> Result<Word> {
        if self.alphabet != Alphabet::Base {
            return Err(Error::AlphabetMismatch {
                expected: Alphabet::Base,
                found: self.alphabet,
            });
        }
        // Renaming is injective on letters, so the result is already reduced.
        Ok(Word {
            alphabet: Alphabet::Quad,
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable {
                    letter: tag.apply(s.letter),
                    exponent: s.exponent.clone(),
                })
                .collect(),
        })
    }

    pub fn boundary_letter(&self, side: Side) -> Option<(Letter, Sign)> {
        let s = match side {
            Side::Head => self.syllables.first(),
            Side::Tail => self.syllables.last(),
        }?;
        let sign = if s.exponent.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        };
        Some((s.letter, sign))
    }

    /// Factors a QUAD word into maximal single-subscript blocks, each pulled
    /// back to BASE. BASE words have no blocks of their own and yield `None`.
    pub fn split_blocks(&self) -> Option<Vec<(Tag, Word)>> {
        if self.alphabet != Alphabet::Quad {
            return None;
        }
        let mut blocks: Vec<(Tag, Word)> = Vec::new();
        for s in &self.syllables {
            let tag = s.letter.tag().expect("QUAD letters carry a subscript");
            let syl = Syllable {
                letter: s.letter.base(),
                exponent: s.exponent.clone(),
            };
            match blocks.last_mut() {
                Some((t, w)) if *t == tag => w.syllables.push(syl),
                _ => blocks.push((
                    tag,
                    Word {
                        alphabet: Alphabet::Base,
                        syllables: vec![syl],
                    },
                )),
            }
        }
        Some(blocks)
    }
}

/// Deterministic total order: alphabet, then syllable count, then the
/// syllables lexicographically (letter order, then exponent).
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alphabet
            .cmp(&other.alphabet)
            .then_with(|| self.syllables.len().cmp(&other.syllables.len()))
            .then_with(|| self.syllables.cmp(&other.syllables))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Panics on alphabet mismatch; use [`Word::concat`] for a checked product.
impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        assert_eq!(
            self.alphabet, rhs.alphabet,
            "multiplying words over different alphabets"
        );
        let mut out = self.clone();
        out.append(rhs);
        out
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse_any(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(s: &str) -> Word {
        Word::parse(s, Alphabet::Base).unwrap()
    }

    fn quad(s: &str) -> Word {
        Word::parse(s, Alphabet::Quad).unwrap()
    }

    #[test]
    fn concat_examples() {
        assert_eq!(base("t u").concat(&base("u^-1 t")).unwrap(), base("t^2"));
        let w = base("t^2 u^-3 t");
        assert!(w.concat(&w.inverse()).unwrap().is_identity());
        assert_eq!(
            quad("t_1").concat(&quad("t_3 u_3^-1")).unwrap().to_string(),
            "t_1 t_3 u_3^-1"
        );
    }

    #[test]
    fn concat_rejects_alphabet_mismatch() {
        let err = base("t").concat(&quad("t_1")).unwrap_err();
        assert_eq!(
            err,
            Error::AlphabetMismatch {
                expected: Alphabet::Base,
                found: Alphabet::Quad
            }
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(base("t u^-1 t^-1").inverse(), base("t u t^-1"));
        assert!(Word::identity(Alphabet::Base).inverse().is_identity());
        assert_eq!(base("t^2 u^3 t^-1").inverse(), base("t u^-3 t^-2"));
    }

    #[test]
    fn rename_examples() {
        assert_eq!(base("t u^-3").rename(Tag::One).unwrap(), quad("t_1 u_1^-3"));
        assert!(Word::identity(Alphabet::Base)
            .rename(Tag::Three)
            .unwrap()
            .is_identity());
        assert_eq!(
            base("t u^-2 t^-1").rename(Tag::Three).unwrap(),
            quad("t_3 u_3^-2 t_3^-1")
        );
        assert!(matches!(
            quad("t_1").rename(Tag::One),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(
            base("t u^2").boundary_letter(Side::Tail),
            Some((Letter::U, Sign::Plus))
        );
        assert_eq!(
            base("t^-1 u").boundary_letter(Side::Head),
            Some((Letter::T, Sign::Minus))
        );
        assert_eq!(Word::identity(Alphabet::Base).boundary_letter(Side::Head), None);
    }

    #[test]
    fn split_blocks_examples() {
        let m1 = quad("t_1^-1 t_3 u_3^-1 t_3^-2");
        assert_eq!(
            m1.split_blocks().unwrap(),
            vec![(Tag::One, base("t^-1")), (Tag::Three, base("t u^-1 t^-2"))]
        );
        assert!(Word::identity(Alphabet::Quad)
            .split_blocks()
            .unwrap()
            .is_empty());
        let m2 = quad("t_1^2 u_1 t_1^-1 t_3");
        assert_eq!(
            m2.split_blocks().unwrap(),
            vec![(Tag::One, base("t^2 u t^-1")), (Tag::Three, base("t"))]
        );
        assert!(base("t").split_blocks().is_none());
    }

    #[test]
    fn order_is_alphabet_then_length_then_lex() {
        let mut words = [base("u"), base("t u"), base("t^-1"), base("1"), base("t")];
        words.sort();
        let printed: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(printed, ["1", "t^-1", "t", "u", "t u"]);
        assert!(base("u^5 t") < quad("t_1"));
    }

    #[test]
    fn large_exponents_cancel_exactly() {
        let big = Word::parse("t^99999999999999999999 t^-99999999999999999998", Alphabet::Base)
            .unwrap();
        assert_eq!(big, base("t"));
    }
}
