//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use barbell_w3::{Alphabet, Assignment, Letter, Pattern, Word};

/// All reduced BASE words with at most `max_syllables` syllables and every
/// exponent in `[-max_exponent, max_exponent]`, identity first.
pub fn words_up_to(max_syllables: usize, max_exponent: i64) -> Vec<Word> {
    let mut out = vec![Word::identity(Alphabet::Base)];
    let mut frontier = out.clone();
    for _ in 0..max_syllables {
        let mut next = Vec::new();
        for w in &frontier {
            let last = w.syllables().last().map(|s| s.letter);
            for letter in [Letter::T, Letter::U] {
                if Some(letter) == last {
                    continue;
                }
                for e in (-max_exponent..=max_exponent).filter(|&e| e != 0) {
                    let piece = Word::power(letter, e);
                    next.push(w.concat(&piece).unwrap());
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Exponent sums per QUAD generator.
fn abelian(w: &Word) -> [i64; 4] {
    let mut v = [0i64; 4];
    for s in w.syllables() {
        let i = match s.letter {
            Letter::T1 => 0,
            Letter::U1 => 1,
            Letter::T3 => 2,
            Letter::U3 => 3,
            other => panic!("not a QUAD letter: {other:?}"),
        };
        v[i] += s.exponent.to_i64().unwrap();
    }
    v
}

fn sub(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

/// Every assignment of non-identity words from `domain` with `p = target`,
/// sorted. Pairs are pruned by exponent sums, which are additive in each
/// variable separately.
pub fn oracle(p: &Pattern, target: &Word, domain: &[Word]) -> Vec<Assignment> {
    let vars = p.variables();
    let id = Word::identity(Alphabet::Base);
    let domain: Vec<&Word> = domain.iter().filter(|w| !w.is_identity()).collect();
    let part = |var: char, w: &Word| -> [i64; 4] {
        let a: Assignment = vars
            .iter()
            .map(|&v| (v, if v == var { w.clone() } else { id.clone() }))
            .collect();
        abelian(&p.eval(&a).unwrap())
    };
    let goal = abelian(target);
    let mut out = Vec::new();
    match vars.as_slice() {
        [x] => {
            for w in &domain {
                let a: Assignment = [(*x, (*w).clone())].into();
                if &p.eval(&a).unwrap() == target {
                    out.push(a);
                }
            }
        }
        [x, y] => {
            let mut by_sum: HashMap<[i64; 4], Vec<&Word>> = HashMap::new();
            for w in &domain {
                by_sum.entry(part(*y, w)).or_default().push(w);
            }
            for wx in &domain {
                let need = sub(goal, part(*x, wx));
                for wy in by_sum.get(&need).into_iter().flatten() {
                    let a: Assignment = [(*x, (*wx).clone()), (*y, (*wy).clone())].into();
                    if &p.eval(&a).unwrap() == target {
                        out.push(a);
                    }
                }
            }
        }
        _ => unreachable!("patterns have one or two variables"),
    }
    out.sort();
    out
}

/// Whether every value of `a` lies inside the bounds.
pub fn within(a: &Assignment, max_syllables: usize, max_exponent: i64) -> bool {
    a.values().all(|w| {
        w.syllable_count() <= max_syllables
            && w.max_abs_exponent().to_i64().is_some_and(|e| e <= max_exponent)
    })
}
