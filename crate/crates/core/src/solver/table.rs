//! Solutions of `M(a, c) = m_1(k)` and `M(a, c) = m_2(k)` for every distinct
//! monomial of `T_1, T_3, T_4, T_6`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::solve;
use crate::barbell::targets::instantiate;
use crate::barbell::{is_admissible, monomials_m, TKind};
use crate::error::Result;
use crate::pattern::{Assignment, Pattern};
use crate::word::{Alphabet, Word};

/// The distinct monomial patterns of `T_1, T_3, T_4, T_6` in order of first
/// appearance, each with the polynomials it occurs in (sign ignored).
pub fn table_patterns() -> Vec<(Pattern, Vec<TKind>)> {
    let mut out: Vec<(Pattern, Vec<TKind>)> = Vec::new();
    for kind in TKind::ALL {
        for (_, p) in kind.terms() {
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some((_, kinds)) => {
                    if !kinds.contains(&kind) {
                        kinds.push(kind);
                    }
                }
                None => out.push((p, vec![kind])),
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub pattern: Pattern,
    pub appears_in: Vec<TKind>,
    pub m1_solutions: Vec<Assignment>,
    pub m2_solutions: Vec<Assignment>,
}

fn pair(a: &Assignment) -> Option<(&Word, &Word)> {
    Some((a.get(&'a')?, a.get(&'c')?))
}

impl TableRow {
    pub fn m1_unique(&self) -> Option<(&Word, &Word)> {
        match self.m1_solutions.as_slice() {
            [s] => pair(s),
            _ => None,
        }
    }

    pub fn m2_unique(&self) -> Option<(&Word, &Word)> {
        match self.m2_solutions.as_slice() {
            [s] => pair(s),
            _ => None,
        }
    }

    /// True iff some solution is an admissible pair.
    pub fn any_admissible(&self) -> bool {
        self.m1_solutions
            .iter()
            .chain(&self.m2_solutions)
            .filter_map(pair)
            .any(|(a, c)| is_admissible(a, c))
    }
}

impl Serialize for TableRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Pair {
            a: String,
            c: String,
        }
        let conv = |p: Option<(&Word, &Word)>| {
            p.map(|(a, c)| Pair {
                a: a.to_string(),
                c: c.to_string(),
            })
        };
        let kinds: Vec<u8> = self.appears_in.iter().map(|k| k.number()).collect();
        let mut s = serializer.serialize_struct("TableRow", 5)?;
        s.serialize_field("pattern", &self.pattern.to_string())?;
        s.serialize_field("appears_in", &kinds)?;
        s.serialize_field("m1_solution", &conv(self.m1_unique()))?;
        s.serialize_field("m2_solution", &conv(self.m2_unique()))?;
        s.serialize_field("admissible", &self.any_admissible())?;
        s.end()
    }
}

/// Solves every table pattern against `m_1(k)` and `m_2(k)`.
pub fn regenerate_table(k: u64) -> Result<Vec<TableRow>> {
    let (m1, m2) = monomials_m(k)?;
    table_patterns()
        .into_iter()
        .map(|(pattern, appears_in)| {
            Ok(TableRow {
                m1_solutions: solve(&pattern, &m1)?,
                m2_solutions: solve(&pattern, &m2)?,
                pattern,
                appears_in,
            })
        })
        .collect()
}

fn cell(solutions: &[Assignment]) -> String {
    if solutions.is_empty() {
        return "none".into();
    }
    solutions
        .iter()
        .map(|s| match pair(s) {
            Some((a, c)) => format!("({a}, {c})"),
            None => "?".into(),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Four-column markdown rendering.
pub fn table_markdown(rows: &[TableRow], k: u64) -> String {
    let mut out = format!(
        "| appears in | monomial term M(a,c) | (a,c) if M = m_1({k}) | (a,c) if M = m_2({k}) |\n\
         |---|---|---|---|\n"
    );
    for row in rows {
        let kinds: Vec<String> = row.appears_in.iter().map(|k| k.to_string()).collect();
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            kinds.join(", "),
            row.pattern,
            cell(&row.m1_solutions),
            cell(&row.m2_solutions)
        ));
    }
    out
}

/// One row of the reference table, exponents written with `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    pub pattern: &'static str,
    pub m1: (&'static str, &'static str),
    pub m2: (&'static str, &'static str),
    pub appears_in: &'static [u8],
}

impl ReferenceRow {
    pub fn pattern(&self) -> Pattern {
        Pattern::parse(self.pattern).expect("vendored pattern")
    }

    fn word(template: &str, k: u64) -> Word {
        Word::parse(&instantiate(template, k), Alphabet::Base).expect("vendored word")
    }

    pub fn m1_at(&self, k: u64) -> (Word, Word) {
        (Self::word(self.m1.0, k), Self::word(self.m1.1, k))
    }

    pub fn m2_at(&self, k: u64) -> (Word, Word) {
        (Self::word(self.m2.0, k), Self::word(self.m2.1, k))
    }
}

const fn row(
    pattern: &'static str,
    m1: (&'static str, &'static str),
    m2: (&'static str, &'static str),
    appears_in: &'static [u8],
) -> ReferenceRow {
    ReferenceRow {
        pattern,
        m1,
        m2,
        appears_in,
    }
}

/// Reference copy of the solution table, in its original row order.
const REFERENCE: [ReferenceRow; 21] = [
    row("a_1 ~c_3 a_3", ("t^-1", "t u^K t^-1"), ("t^2 u^K t^-1", "t^2 u^K t^-2"), &[1, 3, 4, 6]),
    row("~c_1 a_1 a_3", ("t u^-K t^-2", "t u^-K t^-1"), ("t", "t^2 u^-K t^-2"), &[1, 3, 4, 6]),
    row("~c_1 ~a_3", ("t^2 u^K t^-1", "t"), ("t^-1", "t u^-K t^-2"), &[1, 4, 6]),
    row("~a_1 ~c_3", ("t", "t^2 u^K t^-1"), ("t u^-K t^-2", "t^-1"), &[1, 4, 6]),
    row("c_1 ~a_3 c_3", ("t u^K t^-1", "t^-1"), ("t^2 u^K t^-2", "t^2 u^K t^-1"), &[3, 6]),
    row("~a_1 c_3 ~a_3", ("t", "t u^-K t^-1"), ("t u^-K t^-2", "t^2 u^-K t^-2"), &[3, 6]),
    row("c_1 a_3", ("t u^-K t^-2", "t^-1"), ("t", "t^2 u^K t^-1"), &[3]),
    row("a_1 c_3", ("t^-1", "t u^-K t^-2"), ("t^2 u^K t^-1", "t"), &[3]),
    row("c_1 ~a_1 ~a_3", ("t^2 u^K t^-1", "t u^K t^-1"), ("t^-1", "t^2 u^K t^-2"), &[3, 6]),
    row("a_1 ~c_1 ~c_3", ("t u^K t^-1", "t^2 u^K t^-1"), ("t^2 u^K t^-2", "t^-1"), &[3]),
    row("~a_1 ~c_3 ~a_3", ("t", "t u^K t^-1"), ("t u^-K t^-2", "t^2 u^K t^-2"), &[4, 6]),
    row("~c_1 a_3", ("t u^-K t^-2", "t"), ("t", "t u^-K t^-2"), &[4, 6]),
    row("a_1 ~c_3", ("t^-1", "t^2 u^K t^-1"), ("t^2 u^K t^-1", "t^-1"), &[4]),
    row("~c_1 ~a_1 ~a_3", ("t^2 u^K t^-1", "t u^-K t^-1"), ("t^-1", "t^2 u^-K t^-2"), &[4, 6]),
    row("c_1 ~a_3", ("t^2 u^K t^-1", "t^-1"), ("t^-1", "t^2 u^K t^-1"), &[6]),
    row("c_1 a_1 a_3", ("t u^-K t^-2", "t u^K t^-1"), ("t", "t^2 u^K t^-2"), &[6]),
    row("~c_1 ~a_3 ~c_3", ("t u^K t^-1", "t"), ("t^2 u^K t^-2", "t u^-K t^-2"), &[6]),
    row("a_1 c_3 a_3", ("t^-1", "t u^-K t^-1"), ("t^2 u^K t^-1", "t^2 u^-K t^-2"), &[6]),
    row("~a_1 ~c_1 ~c_3", ("t u^-K t^-1", "t^2 u^K t^-1"), ("t^2 u^-K t^-2", "t^-1"), &[6]),
    row("~a_1 c_3", ("t", "t u^-K t^-2"), ("t u^-K t^-2", "t"), &[6]),
    row("~a_1 c_1 c_3", ("t u^-K t^-1", "t u^-K t^-2"), ("t^2 u^-K t^-2", "t"), &[6]),
];

pub fn reference_table() -> &'static [ReferenceRow] {
    &REFERENCE
}

/// Rows whose reference "appears in" entry differs from the polynomial
/// formulas: the pattern `c̄_1 a_3` occurs only in `T_4`.
pub(crate) const APPEARS_IN_EXCEPTIONS: &[(&str, &[u8])] = &[("~c_1 a_3", &[4])];
