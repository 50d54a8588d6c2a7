//! The expensive sweeps shared by several suites. Each sweep visits its
//! instances in parallel and then records, per `k`, the first instance (in
//! enumeration order) on which `Ψ_k` misbehaves.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::Params;
use crate::barbell::{bounded_words, enumerate_admissible, hexagon, monomials_m, t_poly, TKind};
use crate::exponent::Exponent;
use crate::ring::RingElement;
use crate::solver::Marker;
use crate::word::{Alphabet, Letter, Syllable, Word};

/// Looks up `m_1(k)` and `m_2(k)` for all `k ≤ kmax` at once.
pub(crate) struct MarkerIndex {
    kmax: u64,
    map: HashMap<Word, (u64, Marker)>,
}

impl MarkerIndex {
    pub(crate) fn new(kmax: u64) -> Self {
        let mut map = HashMap::new();
        for k in 1..=kmax {
            let (m1, m2) = monomials_m(k).expect("k >= 1");
            map.insert(m1, (k, Marker::M1));
            map.insert(m2, (k, Marker::M2));
        }
        MarkerIndex { kmax, map }
    }

    /// Nonzero coefficients of `x` at marker words, in term order.
    pub(crate) fn marker_coeffs(&self, x: &RingElement) -> Vec<(u64, Marker, BigRational)> {
        x.terms()
            .filter_map(|(w, q)| self.map.get(w).map(|&(k, m)| (k, m, q.clone())))
            .collect()
    }

    /// Nonzero values `Ψ_k(x)`, by increasing `k`.
    pub(crate) fn psi_values(&self, x: &RingElement) -> Vec<(u64, BigRational)> {
        let mut acc: Vec<(u64, BigRational)> = Vec::new();
        for (k, m, q) in self.marker_coeffs(x) {
            let q = if m == Marker::M1 { q } else { -q };
            match acc.iter_mut().find(|(j, _)| *j == k) {
                Some((_, v)) => *v += q,
                None => acc.push((k, q)),
            }
        }
        acc.retain(|(_, v)| !v.is_zero());
        acc.sort_by_key(|(k, _)| *k);
        acc
    }
}

pub(crate) struct Sweep {
    pub checked: usize,
    /// Index `k - 1`: description of the first failure, if any.
    pub failures: Vec<Option<String>>,
    pub elapsed: Duration,
}

impl Sweep {
    fn collect(kmax: u64, per_item: Vec<Vec<(u64, String)>>, started: Instant) -> Sweep {
        let mut failures = vec![None; kmax as usize];
        for item in &per_item {
            for (k, msg) in item {
                let slot = &mut failures[*k as usize - 1];
                if slot.is_none() {
                    *slot = Some(msg.clone());
                }
            }
        }
        Sweep {
            checked: per_item.len(),
            failures,
            elapsed: started.elapsed(),
        }
    }

    pub(crate) fn failure(&self, k: u64) -> Option<&str> {
        self.failures[k as usize - 1].as_deref()
    }
}

fn hexagon_failures(index: &MarkerIndex, nu: &Word, mu: &Word) -> Vec<(u64, String)> {
    let h = hexagon(nu, mu).expect("BASE arguments");
    index
        .psi_values(&h)
        .into_iter()
        .map(|(k, v)| (k, format!("Ψ_{k}(H({nu}, {mu})) = {v}")))
        .collect()
}

/// `Ψ_k(H(ν, μ))` for every bounded pair, identity words included.
pub(crate) fn hexagon_exhaustive(params: &Params) -> Sweep {
    let started = Instant::now();
    let index = MarkerIndex::new(params.kmax);
    let words = bounded_words(params.max_syllables, params.max_exponent);
    let per_item: Vec<Vec<(u64, String)>> = (0..words.len() * words.len())
        .into_par_iter()
        .map(|i| hexagon_failures(&index, &words[i / words.len()], &words[i % words.len()]))
        .collect();
    Sweep::collect(index.kmax, per_item, started)
}

/// A uniformly chosen syllable count, starting letter and exponents.
pub(crate) fn random_word<R: Rng>(rng: &mut R, max_syllables: usize, max_exponent: u32) -> Word {
    let n = rng.gen_range(0..=max_syllables);
    let mut letter = if rng.gen_bool(0.5) { Letter::T } else { Letter::U };
    let e = max_exponent as i64;
    let syllables: Vec<Syllable> = (0..n)
        .map(|_| {
            let mut x = rng.gen_range(1..=e);
            if rng.gen_bool(0.5) {
                x = -x;
            }
            let s = Syllable::new(letter, Exponent::from(x));
            letter = if letter == Letter::T { Letter::U } else { Letter::T };
            s
        })
        .collect();
    Word::from_syllables(Alphabet::Base, syllables).expect("alternating letters")
}

/// The seeded random pairs, generated sequentially so that the sample does
/// not depend on the number of workers.
pub(crate) fn random_pairs(params: &Params) -> Vec<(Word, Word)> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    (0..params.trials)
        .map(|_| {
            let nu = random_word(&mut rng, params.random_max_syllables, params.random_max_exponent);
            let mu = random_word(&mut rng, params.random_max_syllables, params.random_max_exponent);
            (nu, mu)
        })
        .collect()
}

pub(crate) fn hexagon_random(params: &Params) -> Sweep {
    let started = Instant::now();
    let index = MarkerIndex::new(params.kmax);
    let pairs = random_pairs(params);
    let per_item = pairs
        .par_iter()
        .map(|(nu, mu)| hexagon_failures(&index, nu, mu))
        .collect();
    Sweep::collect(index.kmax, per_item, started)
}

/// `coeff_{m_1(k)} = coeff_{m_2(k)} = 0` on every generator `T_i(ā, c̄)`
/// with `(a, c)` admissible and inside the bounds.
pub(crate) fn span_sweep(params: &Params) -> Sweep {
    let started = Instant::now();
    let index = MarkerIndex::new(params.kmax);
    let pairs = enumerate_admissible(params.max_syllables, params.max_exponent);
    let per_item: Vec<Vec<(u64, String)>> = pairs
        .par_iter()
        .flat_map_iter(|pair| {
            let index = &index;
            TKind::ALL.iter().map(move |&kind| {
                let value = t_poly(kind, pair.a(), pair.c()).expect("nontrivial words");
                index
                    .marker_coeffs(&value)
                    .into_iter()
                    .map(|(k, m, q)| {
                        let (a, c) = (pair.a(), pair.c());
                        (k, format!("coeff of {m}({k}) in {kind}({a}, {c}) is {q}"))
                    })
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    Sweep::collect(index.kmax, per_item, started)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Params {
        Params {
            kmax: 3,
            max_syllables: 1,
            max_exponent: 1,
            trials: 50,
            ..Params::default()
        }
    }

    #[test]
    fn psi_values_from_index() {
        let index = MarkerIndex::new(3);
        let (m1, m2) = monomials_m(2).unwrap();
        let x = &RingElement::from_word(m1) + &RingElement::from_word(m2).scale(&BigRational::from_integer(3.into()));
        assert_eq!(index.psi_values(&x), vec![(2, BigRational::from_integer((-2).into()))]);
        let (m1, m2) = monomials_m(3).unwrap();
        let x = &RingElement::from_word(m1) + &RingElement::from_word(m2);
        assert!(index.psi_values(&x).is_empty());
    }

    #[test]
    fn sweeps_pass_at_small_bounds() {
        let p = small();
        let h = hexagon_exhaustive(&p);
        assert_eq!(h.checked, 25);
        assert!(h.failures.iter().all(Option::is_none));
        let s = span_sweep(&p);
        assert_eq!(s.checked, 32);
        assert!(s.failures.iter().all(Option::is_none));
        assert!(hexagon_random(&p).failures.iter().all(Option::is_none));
    }

    #[test]
    fn random_pairs_are_seeded() {
        let p = small();
        assert_eq!(random_pairs(&p), random_pairs(&p));
        let q = Params { seed: 1, ..p };
        assert_ne!(random_pairs(&p), random_pairs(&q));
        for (nu, mu) in random_pairs(&p) {
            assert!(nu.syllable_count() <= 5 && mu.syllable_count() <= 5);
        }
    }
}
