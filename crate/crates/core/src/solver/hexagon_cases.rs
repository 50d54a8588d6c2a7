//! Which hexagon terms can equal `m_1(k)` or `m_2(k)`, and what the rest of
//! the relation looks like when one does.

use serde::Serialize;

use super::{solve_with, Method, SolveOptions};
use crate::barbell::targets::instantiate;
use crate::barbell::{hexagon, hexagon_terms, monomials_m};
use crate::error::Result;
use crate::pattern::Assignment;
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Marker {
    M1,
    M2,
}

impl Marker {
    pub fn other(self) -> Marker {
        match self {
            Marker::M1 => Marker::M2,
            Marker::M2 => Marker::M1,
        }
    }
}

impl std::fmt::Display for Marker {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Marker::M1 => f.write_str("m_1"),
            Marker::M2 => f.write_str("m_2"),
        }
    }
}

/// One case "term `term` equals `marker`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexagonCase {
    /// 1-based position of the term in `H(ν, μ)`.
    pub term: usize,
    pub marker: Marker,
    pub solutions: Vec<Assignment>,
    /// For each solution: the terms equal to each marker in the full relation.
    pub hits: Vec<Vec<(usize, Marker)>>,
    /// For each solution: whether `coeff_{m_1} = coeff_{m_2}` in `H(ν, μ)`.
    pub balanced: Vec<bool>,
}

impl HexagonCase {
    /// The unique `(ν, μ)`, if there is exactly one.
    pub fn unique(&self) -> Option<(&Word, &Word)> {
        match self.solutions.as_slice() {
            [s] => Some((s.get(&'ν')?, s.get(&'μ')?)),
            _ => None,
        }
    }

    /// The partner term for the unique solution: the other term that equals
    /// the other marker, provided nothing else hits a marker.
    pub fn partner(&self) -> Option<usize> {
        let [hits] = self.hits.as_slice() else {
            return None;
        };
        let mut own = false;
        let mut partner = None;
        for &(t, m) in hits {
            if t == self.term && m == self.marker {
                own = true;
            } else if m == self.marker.other() && partner.is_none() {
                partner = Some(t);
            } else {
                return None;
            }
        }
        if own {
            partner
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexagonCaseAnalysis {
    pub k: u64,
    /// All eight cases, ordered by term then marker.
    pub cases: Vec<HexagonCase>,
    /// False if any solve had to fall back to a bounded search.
    pub structural: bool,
}

impl HexagonCaseAnalysis {
    /// Every case has a unique solution, a partner term, and balanced
    /// marker coefficients.
    pub fn holds(&self) -> bool {
        self.structural
            && self.cases.iter().all(|c| {
                c.unique().is_some() && c.partner().is_some() && c.balanced.iter().all(|b| *b)
            })
    }
}

pub fn hexagon_case_analysis(k: u64) -> Result<HexagonCaseAnalysis> {
    let (m1, m2) = monomials_m(k)?;
    let marker_word = |m: Marker| if m == Marker::M1 { &m1 } else { &m2 };
    let terms = hexagon_terms();
    let options = SolveOptions {
        allow_identity: true,
    };
    let mut cases = Vec::new();
    let mut structural = true;
    for (ti, (_, pattern)) in terms.iter().enumerate() {
        for marker in [Marker::M1, Marker::M2] {
            let sols = solve_with(pattern, marker_word(marker), options)?;
            structural &= sols.method == Method::Structural;
            let mut hits = Vec::new();
            let mut balanced = Vec::new();
            for s in &sols.assignments {
                let mut h = Vec::new();
                for (tj, (_, other)) in terms.iter().enumerate() {
                    let w = other.eval(s)?;
                    for m in [Marker::M1, Marker::M2] {
                        if &w == marker_word(m) {
                            h.push((tj + 1, m));
                        }
                    }
                }
                hits.push(h);
                let full = hexagon(&s[&'ν'], &s[&'μ'])?;
                balanced.push(full.coeff(&m1) == full.coeff(&m2));
            }
            cases.push(HexagonCase {
                term: ti + 1,
                marker,
                solutions: sols.assignments,
                hits,
                balanced,
            });
        }
    }
    Ok(HexagonCaseAnalysis {
        k,
        cases,
        structural,
    })
}

/// One case of the reference case analysis, exponents written with `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceHexagonCase {
    pub term: usize,
    pub marker: Marker,
    pub nu: &'static str,
    pub mu: &'static str,
    pub partner: usize,
}

impl ReferenceHexagonCase {
    pub fn at(&self, k: u64) -> (Word, Word) {
        let w = |s: &str| Word::parse(&instantiate(s, k), Alphabet::Base).expect("vendored word");
        (w(self.nu), w(self.mu))
    }
}

const REFERENCE_CASES: [ReferenceHexagonCase; 4] = [
    ReferenceHexagonCase {
        term: 1,
        marker: Marker::M1,
        nu: "t^-1",
        mu: "t u^-K t^-2",
        partner: 2,
    },
    ReferenceHexagonCase {
        term: 1,
        marker: Marker::M2,
        nu: "t^2 u^K t^-1",
        mu: "t",
        partner: 2,
    },
    ReferenceHexagonCase {
        term: 3,
        marker: Marker::M1,
        nu: "t",
        mu: "t u^-K t^-1",
        partner: 4,
    },
    ReferenceHexagonCase {
        term: 4,
        marker: Marker::M1,
        nu: "t u^-K t^-2",
        mu: "t^2 u^-K t^-2",
        partner: 3,
    },
];

/// The four reference cases. The remaining four cases are their mirror
/// images (partner term equal to the other marker).
pub fn reference_hexagon_cases() -> &'static [ReferenceHexagonCase] {
    &REFERENCE_CASES
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analysis_holds_for_small_k() {
        for k in 1..=4 {
            let a = hexagon_case_analysis(k).unwrap();
            assert_eq!(a.cases.len(), 8);
            assert!(a.holds(), "k={k}: {a:?}");
        }
    }

    #[test]
    fn reference_cases_match() {
        let a = hexagon_case_analysis(2).unwrap();
        for b in reference_hexagon_cases() {
            let case = a
                .cases
                .iter()
                .find(|c| c.term == b.term && c.marker == b.marker)
                .unwrap();
            let (nu, mu) = case.unique().unwrap();
            assert_eq!((nu.clone(), mu.clone()), b.at(2));
            assert_eq!(case.partner(), Some(b.partner));
        }
    }

    #[test]
    fn mirror_cases_share_solutions() {
        let a = hexagon_case_analysis(3).unwrap();
        for case in &a.cases {
            let partner = case.partner().unwrap();
            let mirror = a
                .cases
                .iter()
                .find(|c| c.term == partner && c.marker == case.marker.other())
                .unwrap();
            assert_eq!(mirror.solutions, case.solutions);
        }
    }
}
