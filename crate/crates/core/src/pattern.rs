//! Formal monomials in renamed, possibly inverted variables, such as
//! `a_1 c̄_3 a_3`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Tag, Word};

/// One factor `x_s` or `x̄_s` of a monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub var: char,
    pub inverted: bool,
    pub tag: Tag,
}

impl Factor {
    pub const fn new(var: char, inverted: bool, tag: Tag) -> Self {
        Factor { var, inverted, tag }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverted {
            write!(f, "{}\u{0304}_{}", self.var, self.tag)
        } else {
            write!(f, "{}_{}", self.var, self.tag)
        }
    }
}

/// Values of the pattern variables, all over BASE.
pub type Assignment = BTreeMap<char, Word>;

/// A nonempty product of factors in at most two variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    factors: Vec<Factor>,
}

impl Pattern {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidPattern("empty pattern".into()));
        }
        let mut vars: Vec<char> = factors.iter().map(|f| f.var).collect();
        vars.sort_unstable();
        vars.dedup();
        if vars.len() > 2 {
            return Err(Error::InvalidPattern(format!(
                "{} distinct variables; at most 2 are supported",
                vars.len()
            )));
        }
        Ok(Pattern { factors })
    }

    /// Parses whitespace-separated factors `x_1`, `x_3`, `~x_1`, or `x̄_3`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for tok in text.split_whitespace() {
            let bad = || Error::InvalidPattern(format!("bad factor `{tok}`"));
            let (inverted, rest) = match tok.strip_prefix('~') {
                Some(r) => (true, r),
                None => (false, tok),
            };
            let (name, tag) = rest.rsplit_once('_').ok_or_else(bad)?;
            let tag = tag
                .parse::<u8>()
                .ok()
                .and_then(Tag::from_number)
                .ok_or_else(bad)?;
            let mut chars = name.chars();
            let var = chars.next().ok_or_else(bad)?;
            let inverted = match chars.as_str() {
                "" => inverted,
                "\u{0304}" if !inverted => true,
                _ => return Err(bad()),
            };
            factors.push(Factor { var, inverted, tag });
        }
        Pattern::new(factors)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Distinct variables in order of first appearance.
    pub fn variables(&self) -> Vec<char> {
        let mut out = Vec::new();
        for f in &self.factors {
            if !out.contains(&f.var) {
                out.push(f.var);
            }
        }
        out
    }

    /// The reduced QUAD word obtained by substituting the assignment.
    pub fn eval(&self, assignment: &Assignment) -> Result<Word> {
        let mut out = Word::identity(Alphabet::Quad);
        for f in &self.factors {
            let value = assignment.get(&f.var).ok_or(Error::MissingVariable(f.var))?;
            let value = if f.inverted { value.inverse() } else { value.clone() };
            out.append(&value.rename(f.tag)?);
        }
        Ok(out)
    }

    /// Maximal runs of factors sharing a subscript.
    pub fn groups(&self) -> Vec<(Tag, Vec<Factor>)> {
        let mut out: Vec<(Tag, Vec<Factor>)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((t, fs)) if *t == f.tag => fs.push(*f),
                _ => out.push((f.tag, vec![*f])),
            }
        }
        out
    }

    /// Renames the variables, e.g. `{a ↦ ν, c ↦ μ}`.
    pub fn with_variables(&self, map: &[(char, char)]) -> Pattern {
        Pattern {
            factors: self
                .factors
                .iter()
                .map(|f| Factor {
                    var: map
                        .iter()
                        .find(|(from, _)| *from == f.var)
                        .map_or(f.var, |(_, to)| *to),
                    ..*f
                })
                .collect(),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(s: &str) -> Word {
        Word::parse(s, Alphabet::Base).unwrap()
    }

    fn assign(pairs: &[(char, &str)]) -> Assignment {
        pairs.iter().map(|(v, w)| (*v, base(w))).collect()
    }

    #[test]
    fn parse_and_print() {
        let p = Pattern::parse("a_1 ~c_3 a_3").unwrap();
        assert_eq!(p.to_string(), "a_1 c\u{0304}_3 a_3");
        assert_eq!(Pattern::parse(&p.to_string()).unwrap(), p);
        assert!(Pattern::parse("").is_err());
        assert!(Pattern::parse("a_2").is_err());
        assert!(Pattern::parse("a_1 b_3 c_1").is_err());
    }

    #[test]
    fn eval_examples() {
        let p = Pattern::parse("a_1 ~c_3 a_3").unwrap();
        let w = p.eval(&assign(&[('a', "t^-1"), ('c', "t u t^-1")])).unwrap();
        assert_eq!(w, Word::parse("t_1^-1 t_3 u_3^-1 t_3^-2", Alphabet::Quad).unwrap());

        let p = Pattern::parse("~c_1 a_3").unwrap();
        let w = p.eval(&assign(&[('a', "t"), ('c', "t u^-1 t^-2")])).unwrap();
        assert_eq!(w, Word::parse("t_1^2 u_1 t_1^-1 t_3", Alphabet::Quad).unwrap());

        assert!(p.eval(&assign(&[('a', "1"), ('c', "1")])).unwrap().is_identity());
        assert_eq!(p.eval(&assign(&[('a', "t")])), Err(Error::MissingVariable('c')));
    }

    #[test]
    fn groups_split_on_subscript_changes() {
        let p = Pattern::parse("~c_1 ~a_1 ~a_3").unwrap();
        let g = p.groups();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].1.len(), 2);
        assert_eq!(g[1].0, Tag::Three);
    }
}
