//! The `W_3` values of the barbell family `t ν_B ν_R t u^k t^{-1}`, the
//! marker monomials `m_1(k)`, `m_2(k)` and the functionals `Ψ_k`.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::polys::{t_poly, TKind};
use crate::error::{Error, Result};
use crate::ring::{Functional, RingElement};
use crate::word::{Alphabet, Letter, Word};

/// The two embedded 3-balls on which `W_3` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Disk {
    #[serde(rename = "d1")]
    Delta1,
    #[serde(rename = "d2")]
    Delta2,
}

impl Disk {
    pub const ALL: [Disk; 2] = [Disk::Delta1, Disk::Delta2];

    /// `Ψ_k` of the `k`-th target on this disk.
    pub fn expected_psi(self) -> i64 {
        match self {
            Disk::Delta1 => 1,
            Disk::Delta2 => 3,
        }
    }
}

impl fmt::Display for Disk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Disk::Delta1 => f.write_str("Δ1"),
            Disk::Delta2 => f.write_str("Δ2"),
        }
    }
}

/// A target value together with the disk and family index it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct W3Value {
    pub disk: Disk,
    pub k: u64,
    pub value: RingElement,
}

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidK)
    } else {
        Ok(())
    }
}

fn base(text: &str) -> Word {
    Word::parse(text, Alphabet::Base).expect("well-formed template")
}

/// `c = t u^k t^{-1}`, the unbarred second argument of the targets.
pub fn target_argument(k: u64) -> Result<Word> {
    check_k(k)?;
    let mut c = Word::generator(Letter::T);
    c.push(Letter::U, k.into());
    c.push(Letter::T, (-1i64).into());
    Ok(c)
}

/// `W_3^{Δ1} = T_4(t^{-1}, t u^{-k} t^{-1})` and
/// `W_3^{Δ2} = 2 T_4(…) + T_6(…)`, built from the polynomial formulas.
pub fn w3_target(disk: Disk, k: u64) -> Result<W3Value> {
    let a = base("t");
    let c = target_argument(k)?;
    let t4 = t_poly(TKind::T4, &a, &c)?;
    let value = match disk {
        Disk::Delta1 => t4,
        Disk::Delta2 => {
            let t6 = t_poly(TKind::T6, &a, &c)?;
            &t4.scale(&BigRational::from_integer(2.into())) + &t6
        }
    };
    Ok(W3Value { disk, k, value })
}

/// `m_1(k) = t_1^{-1} t_3 u_3^{-k} t_3^{-2}` and `m_2(k) = t_1^2 u_1^k t_1^{-1} t_3`.
pub fn monomials_m(k: u64) -> Result<(Word, Word)> {
    check_k(k)?;
    let k_exp = crate::exponent::Exponent::from(k);
    let mut m1 = Word::power(Letter::T1, -1i64);
    m1.push(Letter::T3, 1i64.into());
    m1.push(Letter::U3, -&k_exp);
    m1.push(Letter::T3, (-2i64).into());
    let mut m2 = Word::power(Letter::T1, 2i64);
    m2.push(Letter::U1, k_exp);
    m2.push(Letter::T1, (-1i64).into());
    m2.push(Letter::T3, 1i64.into());
    Ok((m1, m2))
}

/// `Ψ_k = coeff_{m_1(k)} − coeff_{m_2(k)}`.
pub fn psi(k: u64) -> Result<Functional> {
    let (m1, m2) = monomials_m(k)?;
    Ok(Functional::new([
        (m1, BigRational::one()),
        (m2, -BigRational::one()),
    ]))
}

/// Replaces the placeholder exponents `^K` / `^-K` in a word template.
pub(crate) fn instantiate(template: &str, k: u64) -> String {
    template
        .replace("^-K", &format!("^-{k}"))
        .replace("^K", &format!("^{k}"))
}

/// One hard-coded monomial of a closed-form expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedTerm {
    pub coeff: i64,
    /// QUAD word with `K` standing for the family index.
    pub template: String,
}

/// Closed-form expansions of `T_4(t^{-1}, t u^{-k} t^{-1})` and
/// `T_6(t^{-1}, t u^{-k} t^{-1})`, written out monomial by monomial.
///
/// These are kept independent of [`t_poly`] so that the two constructions
/// can be compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansions {
    pub t4: Vec<ExpandedTerm>,
    pub t6: Vec<ExpandedTerm>,
}

const T4_EXPANDED: &[(i64, &str)] = &[
    (1, "t_1^-1 t_3 u_3^-K t_3^-2"),
    (1, "t_1 t_3 u_3^-K"),
    (-1, "t_1 u_1^-K t_1^-1 t_3^-1"),
    (-1, "t_1 u_1^-K t_1^-1 t_3"),
    (1, "t_1^-1 t_3 u_3^-K t_3^-1"),
    (1, "t_1 t_3 u_3^-K t_3^-1"),
    (-1, "t_1 u_1^-K t_1^-2 t_3^-1"),
    (-1, "t_1 u_1^-K t_3"),
];

const T6_EXPANDED: &[(i64, &str)] = &[
    (1, "t_1 u_1^-K t_1^-1 u_3^-K t_3^-1"),
    (1, "t_1 u_1^K t_1^-1 u_3^K t_3^-1"),
    (-1, "t_1 t_3 u_3^K"),
    (-1, "t_1 t_3 u_3^-K"),
    (1, "t_1^-1 t_3 u_3^K t_3^-2"),
    (1, "t_1^-1 t_3 u_3^-K t_3^-2"),
    (1, "t_1^-1 t_3 u_3^-K t_3^-1"),
    (1, "t_1^-1 t_3 u_3^K t_3^-1"),
    (-1, "t_1 u_1^-K t_1^-1 t_3^-1"),
    (-1, "t_1 u_1^K t_1^-1 t_3^-1"),
    (-1, "t_1 u_1^-K t_1^-2 t_3^-1"),
    (-1, "t_1 u_1^K t_1^-2 t_3^-1"),
    (1, "t_1 u_1^-K t_3"),
    (1, "t_1 u_1^K t_3"),
    (-1, "u_1^-K t_1^-1 t_3 u_3^-K t_3^-1"),
    (-1, "u_1^K t_1^-1 t_3 u_3^K t_3^-1"),
];

fn to_terms(raw: &[(i64, &str)]) -> Vec<ExpandedTerm> {
    raw.iter()
        .map(|(c, t)| ExpandedTerm {
            coeff: *c,
            template: t.to_string(),
        })
        .collect()
}

impl Expansions {
    pub fn reference() -> Self {
        Expansions {
            t4: to_terms(T4_EXPANDED),
            t6: to_terms(T6_EXPANDED),
        }
    }

    fn build(terms: &[ExpandedTerm], k: u64) -> Result<RingElement> {
        check_k(k)?;
        let mut out = RingElement::zero(Alphabet::Quad);
        for term in terms {
            let w = Word::parse(&instantiate(&term.template, k), Alphabet::Quad)?;
            out.add_term(w, BigRational::from_integer(term.coeff.into()));
        }
        Ok(out)
    }

    pub fn t4(&self, k: u64) -> Result<RingElement> {
        Expansions::build(&self.t4, k)
    }

    pub fn t6(&self, k: u64) -> Result<RingElement> {
        Expansions::build(&self.t6, k)
    }

    /// The hard-coded value of the target on `disk`.
    pub fn target(&self, disk: Disk, k: u64) -> Result<RingElement> {
        let t4 = self.t4(k)?;
        Ok(match disk {
            Disk::Delta1 => t4,
            Disk::Delta2 => &t4.scale(&BigRational::from_integer(2.into())) + &self.t6(k)?,
        })
    }

    /// Compares the formula-built `T_4`, `T_6` against the expansions at `k`.
    /// Returns a description of the first disagreement.
    pub fn cross_check(&self, k: u64) -> Result<Option<String>> {
        let a = base("t");
        let c = target_argument(k)?;
        for (name, built, expected) in [
            ("T_4", t_poly(TKind::T4, &a, &c)?, self.t4(k)?),
            ("T_6", t_poly(TKind::T6, &a, &c)?, self.t6(k)?),
        ] {
            if built != expected {
                let diff = &built - &expected;
                return Ok(Some(format!(
                    "{name} at k={k}: formula minus expansion = {diff}"
                )));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn monomials_examples() {
        let (m1, m2) = monomials_m(1).unwrap();
        assert_eq!(m1.to_string(), "t_1^-1 t_3 u_3^-1 t_3^-2");
        assert_eq!(m2.to_string(), "t_1^2 u_1 t_1^-1 t_3");
        let (m1, m2) = monomials_m(5).unwrap();
        assert_eq!(m1.to_string(), "t_1^-1 t_3 u_3^-5 t_3^-2");
        assert_eq!(m2.to_string(), "t_1^2 u_1^5 t_1^-1 t_3");
        for k in 1..=100 {
            let (m1, m2) = monomials_m(k).unwrap();
            assert_ne!(m1, m2);
        }
        assert_eq!(monomials_m(0), Err(Error::InvalidK));
        let (m1, _) = monomials_m(u64::MAX).unwrap();
        assert_eq!(m1.syllables()[2].exponent.to_string(), "-18446744073709551615");
    }

    #[test]
    fn psi_on_markers() {
        let (m1, m2) = monomials_m(1).unwrap();
        let psi1 = psi(1).unwrap();
        assert_eq!(psi1.evaluate(&RingElement::from_word(m1)), int(1));
        assert_eq!(psi1.evaluate(&RingElement::from_word(m2)), int(-1));
        assert!(psi(0).is_err());
    }

    #[test]
    fn first_target_coefficients() {
        let t = w3_target(Disk::Delta1, 1).unwrap();
        let (m1, m2) = monomials_m(1).unwrap();
        assert_eq!(t.value.coeff(&m1), int(1));
        assert!(t.value.coeff(&m2).is_zero());
        assert_eq!(psi(1).unwrap().evaluate(&t.value), int(1));
    }

    #[test]
    fn second_target_psi() {
        for k in [2, 3] {
            let t = w3_target(Disk::Delta2, k).unwrap();
            assert_eq!(psi(k).unwrap().evaluate(&t.value), int(3));
        }
        assert_eq!(w3_target(Disk::Delta2, 0), Err(Error::InvalidK));
    }

    #[test]
    fn expansions_match_formulas() {
        let e = Expansions::reference();
        for k in 1..=5 {
            assert_eq!(e.cross_check(k).unwrap(), None);
            for disk in Disk::ALL {
                assert_eq!(e.target(disk, k).unwrap(), w3_target(disk, k).unwrap().value);
            }
        }
    }

    #[test]
    fn instantiate_replaces_both_signs() {
        assert_eq!(instantiate("t u^K t^-1 u^-K", 7), "t u^7 t^-1 u^-7");
    }
}
