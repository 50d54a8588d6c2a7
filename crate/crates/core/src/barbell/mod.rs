//! Hexagon relations, the polynomials `T_i`, the target values and the
//! span of admissible generators.

pub mod admissible;
pub mod polys;
pub mod spin;
pub mod targets;

pub use admissible::{
    admissible_pairs, bounded_words, enumerate_admissible, is_admissible, span_generators,
    words_with_syllables, AdmissiblePair, SpanGenerator,
};
pub use polys::{hexagon, hexagon_terms, t_poly, TKind};
pub use spin::{spin_to_barbell, BarbellSymbol, BarbellWord};
pub use targets::{monomials_m, psi, target_argument, w3_target, Disk, Expansions, W3Value};
