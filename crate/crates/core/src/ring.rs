//! Finite rational combinations of reduced words, linear functionals on
//! them, and the mod-2 reduction used for spin elements.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parse;
use crate::word::{Alphabet, Word};

pub use num_rational::BigRational as Rational;

/// An element of the free `Q`-vector space on reduced words of one alphabet.
///
/// No stored coefficient is zero, so structural equality is equality of
/// vectors. Terms iterate in the word order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    alphabet: Alphabet,
    terms: BTreeMap<Word, BigRational>,
}

impl RingElement {
    pub fn zero(alphabet: Alphabet) -> Self {
        RingElement {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(word: Word) -> Self {
        let mut x = RingElement::zero(word.alphabet());
        x.terms.insert(word, BigRational::one());
        x
    }

    /// Sums `coeff · word` over the given terms.
    pub fn from_terms<I>(alphabet: Alphabet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, BigRational)>,
    {
        let mut x = RingElement::zero(alphabet);
        for (w, q) in terms {
            if w.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch {
                    expected: alphabet,
                    found: w.alphabet(),
                });
            }
            x.add_term(w, q);
        }
        Ok(x)
    }

    /// Parses an expression such as `t_1 u_3 - 2 t_1^-1 + 1/2 u_3`.
    pub fn parse(text: &str, alphabet: Option<Alphabet>) -> Result<Self> {
        let (alphabet, terms) = parse::parse_expr(text, alphabet)?;
        RingElement::from_terms(alphabet, terms.into_iter().map(|(q, w)| (w, q)))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Adds `q · word` in place; the word must be over this element's alphabet.
    pub(crate) fn add_term(&mut self, word: Word, q: BigRational) {
        debug_assert_eq!(word.alphabet(), self.alphabet);
        if q.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &q;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet,
                found: other.alphabet,
            });
        }
        let mut out = self.clone();
        for (w, q) in &other.terms {
            out.add_term(w.clone(), q.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, q: &BigRational) -> RingElement {
        if q.is_zero() {
            return RingElement::zero(self.alphabet);
        }
        RingElement {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * q)).collect(),
        }
    }

    pub fn coeff(&self, word: &Word) -> BigRational {
        self.terms.get(word).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`RingElement::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reduction modulo 2 with the identity term dropped.
    pub fn mod2_project(&self) -> Result<Mod2Element> {
        let mut support = BTreeSet::new();
        for (w, q) in &self.terms {
            if !q.is_integer() {
                return Err(Error::NonIntegerCoefficient {
                    coeff: q.to_string(),
                });
            }
            let odd = (q.numer() % BigInt::from(2u8)) != BigInt::zero();
            if odd && !w.is_identity() {
                support.insert(w.clone());
            }
        }
        Ok(Mod2Element {
            alphabet: self.alphabet,
            support,
        })
    }
}

/// Panics on alphabet mismatch; use [`RingElement::checked_add`] otherwise.
impl Add<&RingElement> for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        self.checked_add(rhs)
            .expect("adding ring elements over different alphabets")
    }
}

impl Sub<&RingElement> for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        RingElement {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, q)| (w.clone(), -q)).collect(),
        }
    }
}

impl fmt::Display for RingElement {
    /// Prints in the expression grammar accepted by [`RingElement::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, q)) in self.terms.iter().enumerate() {
            let mag = q.abs();
            if i == 0 {
                if q.is_negative() {
                    f.write_str("-")?;
                }
            } else if q.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if mag.is_one() {
                write!(f, "{w}")?;
            } else if w.is_identity() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} {w}")?;
            }
        }
        Ok(())
    }
}

/// A finitely supported linear functional `x ↦ Σ weight(w) · coeff_w(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    weights: BTreeMap<Word, BigRational>,
}

impl Functional {
    pub fn new<I>(weights: I) -> Self
    where
        I: IntoIterator<Item = (Word, BigRational)>,
    {
        let mut map: BTreeMap<Word, BigRational> = BTreeMap::new();
        for (w, q) in weights {
            *map.entry(w).or_insert_with(BigRational::zero) += q;
        }
        map.retain(|_, q| !q.is_zero());
        Functional { weights: map }
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.weights.iter()
    }

    pub fn evaluate(&self, x: &RingElement) -> BigRational {
        self.weights
            .iter()
            .map(|(w, q)| q * x.coeff(w))
            .fold(BigRational::zero(), |acc, v| acc + v)
    }
}

/// An element of `(Z/2)[F ∖ 1]`: a finite set of non-identity words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod2Element {
    alphabet: Alphabet,
    support: BTreeSet<Word>,
}

impl Mod2Element {
    pub fn zero(alphabet: Alphabet) -> Self {
        Mod2Element {
            alphabet,
            support: BTreeSet::new(),
        }
    }

    pub fn support(&self) -> &BTreeSet<Word> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }
}

impl Add<&Mod2Element> for &Mod2Element {
    type Output = Mod2Element;

    fn add(self, rhs: &Mod2Element) -> Mod2Element {
        assert_eq!(self.alphabet, rhs.alphabet, "mod-2 alphabet mismatch");
        Mod2Element {
            alphabet: self.alphabet,
            support: self
                .support
                .symmetric_difference(&rhs.support)
                .cloned()
                .collect(),
        }
    }
}

/// Dimension of the `Q`-span of the given vectors.
pub fn rank(vectors: &[RingElement]) -> Result<usize> {
    if let Some(first) = vectors.first() {
        for v in vectors {
            if v.alphabet != first.alphabet {
                return Err(Error::AlphabetMismatch {
                    expected: first.alphabet,
                    found: v.alphabet,
                });
            }
        }
    }
    let columns: BTreeSet<&Word> = vectors.iter().flat_map(|v| v.terms.keys()).collect();
    let index: BTreeMap<&Word, usize> = columns.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    let rows: Vec<Vec<BigRational>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigRational::zero(); index.len()];
            for (w, q) in &v.terms {
                row[index[w]] = q.clone();
            }
            row
        })
        .collect();
    Ok(crate::linalg::rational_rank(&rows))
}

/// Rank of a rational matrix given by rows.
pub fn matrix_rank(rows: &[Vec<BigRational>]) -> usize {
    crate::linalg::rational_rank(rows)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RingJson {
    alphabet: Alphabet,
    terms: Vec<TermJson>,
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RingJson {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .map(|(w, q)| TermJson {
                    word: w.to_string(),
                    coeff: q.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RingJson::deserialize(deserializer)?;
        let mut x = RingElement::zero(raw.alphabet);
        for t in raw.terms {
            let w = Word::parse(&t.word, raw.alphabet).map_err(D::Error::custom)?;
            let q = parse_rational(&t.coeff).map_err(D::Error::custom)?;
            x.add_term(w, q);
        }
        Ok(x)
    }
}

impl RingElement {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ring elements always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }
}

/// Parses `p` or `p/q` with an optional sign.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidCoefficient(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) if !d.starts_with(['+', '-']) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(s: &str) -> RingElement {
        RingElement::parse(s, Some(Alphabet::Quad)).unwrap()
    }

    fn base(s: &str) -> RingElement {
        RingElement::parse(s, Some(Alphabet::Base)).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn add_examples() {
        assert_eq!(&quad("t_1 + u_3") + &quad("-u_3"), quad("t_1"));
        let x = quad("t_1 - 1/2 u_3 t_1");
        assert_eq!(&x + &RingElement::zero(Alphabet::Quad), x);
        assert_eq!(&quad("t_1 u_3") + &quad("t_1 u_3"), quad("2 t_1 u_3"));
        assert!(quad("t_1").checked_add(&base("t")).is_err());
    }

    #[test]
    fn scale_examples() {
        let x = quad("t_1 - 3 u_3 + 2/3 t_3");
        assert_eq!(x.scale(&q(1)), x);
        assert!((&x.scale(&q(-1)) + &x).is_zero());
        assert!(x.scale(&q(0)).is_zero());
    }

    #[test]
    fn coeff_of_missing_word_is_zero() {
        let zero = RingElement::zero(Alphabet::Quad);
        assert!(zero.coeff(&Word::parse("t_1", Alphabet::Quad).unwrap()).is_zero());
    }

    #[test]
    fn functional_on_zero() {
        let f = Functional::new([(Word::parse("t_1", Alphabet::Quad).unwrap(), q(5))]);
        assert!(f.evaluate(&RingElement::zero(Alphabet::Quad)).is_zero());
    }

    #[test]
    fn mod2_examples() {
        let x = base("2 t u t^-1 + t^3 u^3 t^2");
        let p = x.mod2_project().unwrap();
        let support: Vec<String> = p.support().iter().map(|w| w.to_string()).collect();
        assert_eq!(support, ["t^3 u^3 t^2"]);
        assert!(base("1").mod2_project().unwrap().is_zero());
        assert!(base("3").mod2_project().unwrap().is_zero());
        assert!(RingElement::zero(Alphabet::Base).mod2_project().unwrap().is_zero());
        assert!(matches!(
            base("1/2 t").mod2_project(),
            Err(Error::NonIntegerCoefficient { .. })
        ));
        assert_eq!(base("-3 t").mod2_project().unwrap().support().len(), 1);
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(rank(&[]).unwrap(), 0);
        let x = quad("t_1 - u_3");
        assert_eq!(rank(&[x.clone(), x.clone()]).unwrap(), 1);
        assert_eq!(rank(&[x.clone(), quad("u_3 - t_3"), quad("t_1 - t_3")]).unwrap(), 2);
        assert_eq!(rank(&[RingElement::zero(Alphabet::Quad)]).unwrap(), 0);
        assert!(rank(&[x, base("t")]).is_err());
    }

    #[test]
    fn display_round_trips() {
        let x = quad("-1/2 t_1 u_3 + 3 - t_3^-2 + u_1");
        assert_eq!(x.to_string(), "3 + u_1 - t_3^-2 - 1/2 t_1 u_3");
        assert_eq!(RingElement::parse(&x.to_string(), None).unwrap(), x);
        assert_eq!(RingElement::zero(Alphabet::Base).to_string(), "0");
    }

    #[test]
    fn json_format() {
        let x = quad("-1/2 t_1 u_3 + 3 - t_3^-2");
        let json = x.to_json();
        assert_eq!(
            json,
            r#"{"alphabet":"QUAD","terms":[{"word":"1","coeff":"3"},{"word":"t_3^-2","coeff":"-1"},{"word":"t_1 u_3","coeff":"-1/2"}]}"#
        );
        assert_eq!(RingElement::from_json(&json).unwrap(), x);
        let messy = r#"{"alphabet":"BASE","terms":[{"word":"t","coeff":"2/4"},{"word":"t","coeff":"-1/2"},{"word":"u","coeff":"6/-3"}]}"#;
        assert!(RingElement::from_json(messy).is_err());
        let ok = r#"{"alphabet":"BASE","terms":[{"word":"t","coeff":"2/4"},{"word":"t","coeff":"-1/2"},{"word":"u","coeff":"-6/3"}]}"#;
        assert_eq!(RingElement::from_json(ok).unwrap(), base("-2 u"));
        assert!(RingElement::from_json(r#"{"alphabet":"BASE","terms":[{"word":"t_1","coeff":"1"}]}"#).is_err());
    }
}
