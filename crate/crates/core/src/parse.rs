//! Hand-written scanners for the word grammar and for ring expressions.
//!
//! ```text
//! word     := "1" | syllable (WS syllable)*
//! syllable := LETTER ("^" INT)?
//! LETTER   := t | u | t_1 | u_1 | t_3 | u_3
//! expr     := ["+"|"-"] term (("+"|"-") term)*
//! term     := coeff ["*"] word | coeff | word
//! coeff    := DIGITS ["/" DIGITS]
//! ```
//!
//! `e` is accepted as an alias of `1` for the identity word.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::word::{Alphabet, Letter, Word};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.src.as_bytes().get(self.pos + offset).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_spaces(&mut self) -> usize {
        let start = self.pos;
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
        self.pos - start
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn letter_start(&self) -> bool {
        self.peek().is_some_and(|b| b.is_ascii_alphabetic())
    }

    /// Reads `LETTER ("^" INT)?` at the cursor.
    fn syllable(&mut self) -> Result<(Letter, Exponent, usize)> {
        let start = self.pos;
        let mut end = self.pos;
        while let Some(b) = self.src.as_bytes().get(end) {
            if b.is_ascii_alphanumeric() || *b == b'_' {
                end += 1;
            } else {
                break;
            }
        }
        let name = &self.src[start..end];
        if name.is_empty() {
            return self.syntax("expected a letter");
        }
        let letter = Letter::from_name(name).ok_or_else(|| Error::UnknownLetter {
            letter: name.to_string(),
            position: start,
            alphabet: if name.contains('_') {
                Alphabet::Quad
            } else {
                Alphabet::Base
            },
        })?;
        self.pos = end;
        let exponent = if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp_pos = self.pos;
            let negative = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            let digits = self.digits();
            if digits.is_empty() {
                return self.syntax("expected an integer exponent after `^`");
            }
            let mut e: Exponent = digits.parse().expect("decimal digits");
            if negative {
                e = -e;
            }
            if e.is_zero() {
                return Err(Error::ZeroExponent { position: exp_pos });
            }
            e
        } else {
            Exponent::ONE
        };
        Ok((letter, exponent, start))
    }
}

/// Tracks the alphabet of the letters seen so far.
struct AlphabetGuard {
    fixed: Option<Alphabet>,
    seen: Option<Alphabet>,
}

impl AlphabetGuard {
    fn new(fixed: Option<Alphabet>) -> Self {
        AlphabetGuard { fixed, seen: None }
    }

    fn admit(&mut self, letter: Letter, position: usize) -> Result<()> {
        let a = letter.alphabet();
        if let Some(seen) = self.seen {
            if seen != a {
                return Err(Error::MixedAlphabets { position });
            }
        }
        if let Some(fixed) = self.fixed {
            if fixed != a {
                return Err(Error::UnknownLetter {
                    letter: letter.name().to_string(),
                    position,
                    alphabet: fixed,
                });
            }
        }
        self.seen = Some(a);
        Ok(())
    }

    fn alphabet(&self) -> Alphabet {
        self.fixed.or(self.seen).unwrap_or(Alphabet::Base)
    }
}

/// Raw syllables of one word; `1` and `e` yield none.
fn word_body(cur: &mut Cursor<'_>, guard: &mut AlphabetGuard, in_expr: bool) -> Result<Vec<(Letter, Exponent)>> {
    if matches!(cur.peek(), Some(b'1' | b'e'))
        && !matches!(cur.peek_at(1), Some(b) if b.is_ascii_alphanumeric() || b == b'_' || b == b'^')
    {
        cur.pos += 1;
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    loop {
        let (letter, exp, at) = cur.syllable()?;
        guard.admit(letter, at)?;
        out.push((letter, exp));
        let save = cur.pos;
        let spaces = cur.skip_spaces();
        if cur.at_end() {
            cur.pos = save;
            break;
        }
        if spaces == 0 {
            if in_expr && matches!(cur.peek(), Some(b'+' | b'-')) {
                break;
            }
            return cur.syntax("expected whitespace between syllables");
        }
        if !cur.letter_start() {
            cur.pos = save;
            break;
        }
    }
    Ok(out)
}

pub(crate) fn parse_word(text: &str, alphabet: Option<Alphabet>) -> Result<Word> {
    let mut cur = Cursor::new(text.trim_end_matches(' '));
    cur.skip_spaces();
    if cur.at_end() {
        return cur.syntax("empty word; write `1` for the identity");
    }
    let mut guard = AlphabetGuard::new(alphabet);
    let body = word_body(&mut cur, &mut guard, false)?;
    if !cur.at_end() {
        return cur.syntax("unexpected trailing input");
    }
    let mut w = Word::identity(guard.alphabet());
    for (l, e) in body {
        w.push(l, e);
    }
    Ok(w)
}

/// Parses a signed sum of rational multiples of words into raw terms.
/// Repeated words are returned as written; the caller combines them.
pub(crate) fn parse_expr(text: &str, alphabet: Option<Alphabet>) -> Result<(Alphabet, Vec<(BigRational, Word)>)> {
    let mut cur = Cursor::new(text);
    let mut guard = AlphabetGuard::new(alphabet);
    let mut raw: Vec<(BigRational, Vec<(Letter, Exponent)>)> = Vec::new();
    cur.skip_spaces();
    if cur.at_end() {
        return cur.syntax("empty expression");
    }
    let mut first = true;
    loop {
        cur.skip_spaces();
        let mut sign = BigRational::one();
        match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
            }
            Some(b'-') => {
                cur.pos += 1;
                sign = -sign;
            }
            _ if !first => return cur.syntax("expected `+` or `-`"),
            _ => {}
        }
        first = false;
        cur.skip_spaces();

        let mut coeff = None;
        let mut star = false;
        if matches!(cur.peek(), Some(b'0'..=b'9')) {
            let start = cur.pos;
            let num = cur.digits();
            let num: BigInt = num.parse().expect("decimal digits");
            let mut q = BigRational::from_integer(num);
            if cur.peek() == Some(b'/') {
                cur.pos += 1;
                let den = cur.digits();
                if den.is_empty() {
                    return cur.syntax("expected a denominator after `/`");
                }
                let den: BigInt = den.parse().expect("decimal digits");
                if den.is_zero() {
                    return Err(Error::InvalidCoefficient(text[start..cur.pos].to_string()));
                }
                q /= BigRational::from_integer(den);
            }
            coeff = Some(q);
            cur.skip_spaces();
            if cur.peek() == Some(b'*') {
                star = true;
                cur.pos += 1;
                cur.skip_spaces();
                if !(cur.letter_start() || matches!(cur.peek(), Some(b'1' | b'e'))) {
                    return cur.syntax("expected a word after `*`");
                }
            }
        }

        let body = if cur.letter_start() || star {
            word_body(&mut cur, &mut guard, true)?
        } else if coeff.is_none() {
            return cur.syntax("expected a coefficient or a word");
        } else {
            Vec::new()
        };
        raw.push((sign * coeff.unwrap_or_else(BigRational::one), body));

        cur.skip_spaces();
        if cur.at_end() {
            break;
        }
    }
    let alphabet = guard.alphabet();
    let terms = raw
        .into_iter()
        .map(|(q, body)| {
            let mut w = Word::identity(alphabet);
            for (l, e) in body {
                w.push(l, e);
            }
            (q, w)
        })
        .collect();
    Ok((alphabet, terms))
}
