//! Solving `M(x, y) = w` for a monomial pattern `M` and a reduced QUAD word `w`.
//!
//! The target is cut into its maximal subscript blocks. The pattern is cut
//! into groups of consecutive factors sharing a subscript. A solution makes
//! some groups evaluate to the identity, after which neighbouring groups with
//! the same subscript merge; what survives must line up one-to-one with the
//! target blocks. Every such collapse history is explored, each yields a
//! system of BASE equations, and the systems are solved by substitution.

mod hexagon_cases;
mod table;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::barbell::bounded_words;
use crate::error::{Error, Result};
use crate::pattern::{Assignment, Factor, Pattern};
use crate::word::{Alphabet, Tag, Word};

pub use hexagon_cases::{
    hexagon_case_analysis, reference_hexagon_cases, HexagonCase, HexagonCaseAnalysis, Marker,
    ReferenceHexagonCase,
};
pub(crate) use table::APPEARS_IN_EXCEPTIONS;
pub use table::{
    reference_table, regenerate_table, table_markdown, table_patterns, ReferenceRow, TableRow,
};

/// How a solution set was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Method {
    /// Exact: every solution in the free group is listed.
    Structural,
    /// Only assignments inside the stated bounds were searched.
    Bounded { max_syllables: usize, max_exponent: u32 },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Keep assignments in which some variable is the identity.
    pub allow_identity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solutions {
    pub assignments: Vec<Assignment>,
    pub method: Method,
}

/// `p` evaluated at `assignment`, reduced.
pub fn eval_pattern(p: &Pattern, assignment: &Assignment) -> Result<Word> {
    p.eval(assignment)
}

/// All assignments with nontrivial values solving `p = target`, sorted.
pub fn solve(p: &Pattern, target: &Word) -> Result<Vec<Assignment>> {
    Ok(solve_with(p, target, SolveOptions::default())?.assignments)
}

pub fn solve_with(p: &Pattern, target: &Word, options: SolveOptions) -> Result<Solutions> {
    if target.alphabet() != Alphabet::Quad {
        return Err(Error::AlphabetMismatch {
            expected: Alphabet::Quad,
            found: target.alphabet(),
        });
    }
    if target.is_identity() {
        return Err(Error::IdentityTarget);
    }
    let blocks = target.split_blocks().expect("QUAD word");
    let segments: Vec<Segment> = p
        .groups()
        .into_iter()
        .map(|(tag, factors)| Segment { tag, factors })
        .collect();

    let mut systems = Vec::new();
    collapse_histories(segments, Vec::new(), &blocks, &mut systems);

    let mut found = BTreeSet::new();
    let mut triangular = true;
    for system in &systems {
        match solve_system(system, options.allow_identity) {
            Some(assignments) => found.extend(assignments),
            None => {
                triangular = false;
                break;
            }
        }
    }
    if !triangular {
        let max_syllables = target.syllable_count();
        let max_exponent = target
            .max_abs_exponent()
            .to_i64()
            .and_then(|e| u32::try_from(e + 1).ok())
            .unwrap_or(u32::MAX);
        let assignments = brute_force(p, target, max_syllables, max_exponent, options);
        return Ok(Solutions {
            assignments,
            method: Method::Bounded {
                max_syllables,
                max_exponent,
            },
        });
    }
    let assignments = found
        .into_iter()
        .filter(|a| p.eval(a).as_ref() == Ok(target))
        .filter(|a| options.allow_identity || a.values().all(|w| !w.is_identity()))
        .collect();
    Ok(Solutions {
        assignments,
        method: Method::Structural,
    })
}

#[derive(Debug, Clone)]
struct Segment {
    tag: Tag,
    factors: Vec<Factor>,
}

/// `factors = rhs` in the free group on `t, u`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Equation {
    factors: Vec<(char, bool)>,
    rhs: Word,
}

impl Equation {
    fn new(factors: &[Factor], rhs: Word) -> Self {
        Equation {
            factors: factors.iter().map(|f| (f.var, f.inverted)).collect(),
            rhs,
        }
    }
}

/// Enumerates every way the segments can cancel down to the target blocks.
fn collapse_histories(
    segments: Vec<Segment>,
    collapsed: Vec<Equation>,
    blocks: &[(Tag, Word)],
    out: &mut Vec<Vec<Equation>>,
) {
    let n = segments.len();
    if n == blocks.len() && segments.iter().zip(blocks).all(|(s, (t, _))| s.tag == *t) {
        let mut system = collapsed.clone();
        for (s, (_, w)) in segments.iter().zip(blocks) {
            system.push(Equation::new(&s.factors, w.clone()));
        }
        system.sort();
        if !out.contains(&system) {
            out.push(system);
        }
    }
    // Any further collapse would leave fewer segments than blocks.
    if n <= blocks.len() {
        return;
    }
    for mask in 1u32..(1 << n) {
        let mut next: Vec<Segment> = Vec::new();
        let mut eqs = collapsed.clone();
        for (i, s) in segments.iter().enumerate() {
            if mask & (1 << i) != 0 {
                eqs.push(Equation::new(&s.factors, Word::identity(Alphabet::Base)));
                continue;
            }
            match next.last_mut() {
                Some(last) if last.tag == s.tag => last.factors.extend_from_slice(&s.factors),
                _ => next.push(s.clone()),
            }
        }
        if next.len() >= blocks.len() {
            collapse_histories(next, eqs, blocks, out);
        }
    }
}

fn factor_value(values: &BTreeMap<char, Word>, var: char, inverted: bool) -> Option<Word> {
    values
        .get(&var)
        .map(|w| if inverted { w.inverse() } else { w.clone() })
}

/// Solves a system by repeatedly isolating a variable that occurs once in
/// an equation whose other variables are already known. Returns `None` if
/// the system cannot be reduced this way.
fn solve_system(system: &[Equation], allow_identity: bool) -> Option<Vec<Assignment>> {
    let vars: BTreeSet<char> = system
        .iter()
        .flat_map(|e| e.factors.iter().map(|(v, _)| *v))
        .collect();
    let mut values: BTreeMap<char, Word> = BTreeMap::new();
    while values.len() < vars.len() {
        let mut progress = false;
        for eq in system {
            let unknown: Vec<usize> = (0..eq.factors.len())
                .filter(|&i| !values.contains_key(&eq.factors[i].0))
                .collect();
            if unknown.len() != 1 {
                continue;
            }
            let i = unknown[0];
            let mut left = Word::identity(Alphabet::Base);
            for &(v, inv) in &eq.factors[..i] {
                left.append(&factor_value(&values, v, inv)?);
            }
            let mut right = Word::identity(Alphabet::Base);
            for &(v, inv) in &eq.factors[i + 1..] {
                right.append(&factor_value(&values, v, inv)?);
            }
            let mut x = left.inverse();
            x.append(&eq.rhs);
            x.append(&right.inverse());
            let (var, inverted) = eq.factors[i];
            let x = if inverted { x.inverse() } else { x };
            if x.is_identity() && !allow_identity {
                return Some(Vec::new());
            }
            values.insert(var, x);
            progress = true;
        }
        if !progress {
            return None;
        }
    }
    // Every equation must hold; the caller re-checks against the pattern too.
    for eq in system {
        let mut lhs = Word::identity(Alphabet::Base);
        for &(v, inv) in &eq.factors {
            lhs.append(&factor_value(&values, v, inv)?);
        }
        if lhs != eq.rhs {
            return Some(Vec::new());
        }
    }
    Some(vec![values])
}

/// Every assignment with values inside the bounds that solves `p = target`.
pub fn brute_force(
    p: &Pattern,
    target: &Word,
    max_syllables: usize,
    max_exponent: u32,
    options: SolveOptions,
) -> Vec<Assignment> {
    let words = bounded_words(max_syllables, max_exponent);
    let vars = p.variables();
    let mut out = Vec::new();
    let mut idx = vec![0usize; vars.len()];
    loop {
        let assignment: Assignment = vars
            .iter()
            .zip(&idx)
            .map(|(v, &i)| (*v, words[i].clone()))
            .collect();
        let ok_identity = options.allow_identity || assignment.values().all(|w| !w.is_identity());
        if ok_identity && p.eval(&assignment).as_ref() == Ok(target) {
            out.push(assignment);
        }
        let mut j = vars.len();
        loop {
            if j == 0 {
                out.sort();
                return out;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < words.len() {
                break;
            }
            idx[j] = 0;
        }
    }
}
