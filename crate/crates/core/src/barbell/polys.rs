//! The polynomials `T_1, T_3, T_4, T_6` and the hexagon relations.

use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::pattern::{Assignment, Factor, Pattern};
use crate::ring::RingElement;
use crate::word::{Alphabet, Tag, Word};

const fn x(var: char, tag: Tag) -> Factor {
    Factor::new(var, false, tag)
}

const fn xbar(var: char, tag: Tag) -> Factor {
    Factor::new(var, true, tag)
}

use Tag::{One as S1, Three as S3};

type SignedMonomial = (i8, &'static [Factor]);

const T1_TERMS: &[SignedMonomial] = &[
    (1, &[x('a', S1), xbar('c', S3), x('a', S3)]),
    (1, &[xbar('c', S1), x('a', S1), x('a', S3)]),
    (-1, &[xbar('c', S1), xbar('a', S3)]),
    (-1, &[xbar('a', S1), xbar('c', S3)]),
];

const T3_TERMS: &[SignedMonomial] = &[
    (-1, &[x('c', S1), xbar('a', S3), x('c', S3)]),
    (1, &[x('a', S1), xbar('c', S3), x('a', S3)]),
    (1, &[xbar('a', S1), x('c', S3), xbar('a', S3)]),
    (-1, &[x('c', S1), x('a', S3)]),
    (-1, &[x('a', S1), x('c', S3)]),
    (1, &[x('c', S1), xbar('a', S1), xbar('a', S3)]),
    (1, &[xbar('c', S1), x('a', S1), x('a', S3)]),
    (-1, &[x('a', S1), xbar('c', S1), xbar('c', S3)]),
];

const T4_TERMS: &[SignedMonomial] = &[
    (1, &[xbar('a', S1), xbar('c', S3), xbar('a', S3)]),
    (1, &[x('a', S1), xbar('c', S3), x('a', S3)]),
    (-1, &[xbar('c', S1), xbar('a', S3)]),
    (-1, &[xbar('c', S1), x('a', S3)]),
    (1, &[xbar('a', S1), xbar('c', S3)]),
    (1, &[x('a', S1), xbar('c', S3)]),
    (-1, &[xbar('c', S1), xbar('a', S1), xbar('a', S3)]),
    (-1, &[xbar('c', S1), x('a', S1), x('a', S3)]),
];

const T6_TERMS: &[SignedMonomial] = &[
    (1, &[xbar('c', S1), xbar('a', S3), xbar('c', S3)]),
    (1, &[x('c', S1), xbar('a', S3), x('c', S3)]),
    (-1, &[x('a', S1), x('c', S3), x('a', S3)]),
    (-1, &[x('a', S1), xbar('c', S3), x('a', S3)]),
    (1, &[xbar('a', S1), x('c', S3), xbar('a', S3)]),
    (1, &[xbar('a', S1), xbar('c', S3), xbar('a', S3)]),
    (1, &[xbar('a', S1), xbar('c', S3)]),
    (1, &[xbar('a', S1), x('c', S3)]),
    (-1, &[xbar('c', S1), xbar('a', S3)]),
    (-1, &[x('c', S1), xbar('a', S3)]),
    (-1, &[xbar('c', S1), xbar('a', S1), xbar('a', S3)]),
    (-1, &[x('c', S1), xbar('a', S1), xbar('a', S3)]),
    (1, &[xbar('c', S1), x('a', S1), x('a', S3)]),
    (1, &[x('c', S1), x('a', S1), x('a', S3)]),
    (-1, &[xbar('a', S1), xbar('c', S1), xbar('c', S3)]),
    (-1, &[xbar('a', S1), x('c', S1), x('c', S3)]),
];

/// The four terms `ν_1μ_3 + μ̄_1ν̄_3 − ν̄_1μ_3ν̄_3 − ν_1μ̄_1ν_3`.
const HEXAGON_TERMS: &[SignedMonomial] = &[
    (1, &[x('ν', S1), x('μ', S3)]),
    (1, &[xbar('μ', S1), xbar('ν', S3)]),
    (-1, &[xbar('ν', S1), x('μ', S3), xbar('ν', S3)]),
    (-1, &[x('ν', S1), xbar('μ', S1), x('ν', S3)]),
];

/// Which of the four intersection-type polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TKind {
    T1,
    T3,
    T4,
    T6,
}

impl TKind {
    pub const ALL: [TKind; 4] = [TKind::T1, TKind::T3, TKind::T4, TKind::T6];

    pub fn number(self) -> u8 {
        match self {
            TKind::T1 => 1,
            TKind::T3 => 3,
            TKind::T4 => 4,
            TKind::T6 => 6,
        }
    }

    pub fn from_number(n: u8) -> Option<TKind> {
        match n {
            1 => Some(TKind::T1),
            3 => Some(TKind::T3),
            4 => Some(TKind::T4),
            6 => Some(TKind::T6),
            _ => None,
        }
    }

    fn raw_terms(self) -> &'static [SignedMonomial] {
        match self {
            TKind::T1 => T1_TERMS,
            TKind::T3 => T3_TERMS,
            TKind::T4 => T4_TERMS,
            TKind::T6 => T6_TERMS,
        }
    }

    /// The signed monomials of this polynomial, in display order, as
    /// patterns in the variables `a` and `c`.
    pub fn terms(self) -> Vec<(i8, Pattern)> {
        self.raw_terms()
            .iter()
            .map(|(s, fs)| (*s, Pattern::new(fs.to_vec()).expect("static pattern")))
            .collect()
    }
}

impl fmt::Display for TKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}", self.number())
    }
}

/// The four signed hexagon monomials in the variables `ν`, `μ`.
pub fn hexagon_terms() -> Vec<(i8, Pattern)> {
    HEXAGON_TERMS
        .iter()
        .map(|(s, fs)| (*s, Pattern::new(fs.to_vec()).expect("static pattern")))
        .collect()
}

fn sum_terms(terms: &[SignedMonomial], assignment: &Assignment) -> Result<RingElement> {
    let mut out = RingElement::zero(Alphabet::Quad);
    for (sign, factors) in terms {
        let mut w = Word::identity(Alphabet::Quad);
        for f in *factors {
            let value = &assignment[&f.var];
            let value = if f.inverted { value.inverse() } else { value.clone() };
            w.append(&value.rename(f.tag)?);
        }
        out.add_term(w, BigRational::from_integer((*sign).into()));
    }
    Ok(out)
}

fn require_base(word: &Word) -> Result<()> {
    if word.alphabet() != Alphabet::Base {
        return Err(Error::AlphabetMismatch {
            expected: Alphabet::Base,
            found: word.alphabet(),
        });
    }
    Ok(())
}

/// The hexagon relation `H(ν, μ)`. Identity arguments are allowed.
pub fn hexagon(nu: &Word, mu: &Word) -> Result<RingElement> {
    require_base(nu)?;
    require_base(mu)?;
    let assignment: Assignment = [('ν', nu.clone()), ('μ', mu.clone())].into();
    sum_terms(HEXAGON_TERMS, &assignment)
}

/// `T_i` evaluated at the unbarred pair `(a, c)`.
///
/// The displayed formulas are written in terms of `a`, `c` for the call
/// `T_i(ā, c̄)`; this function takes `a` and `c` themselves, so the target
/// `T_4(t^{-1}, t u^{-k} t^{-1})` is `t_poly(T4, t, t u^k t^{-1})`.
pub fn t_poly(kind: TKind, a: &Word, c: &Word) -> Result<RingElement> {
    require_base(a)?;
    require_base(c)?;
    if a.is_identity() {
        return Err(Error::TrivialArgument("a"));
    }
    if c.is_identity() {
        return Err(Error::TrivialArgument("c"));
    }
    let assignment: Assignment = [('a', a.clone()), ('c', c.clone())].into();
    sum_terms(kind.raw_terms(), &assignment)
}
