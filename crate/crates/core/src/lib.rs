//! Exact arithmetic in the rational group rings of the free groups `⟨t, u⟩`
//! and `⟨t_1, u_1, t_3, u_3⟩`, and a checker for the W3 non-membership
//! certificate of barbell diffeomorphisms.
//!
//! ```
//! use barbell_w3::barbell::{psi, w3_target, Disk};
//! use barbell_w3::Rational;
//!
//! for k in 1..=5 {
//!     let target = w3_target(Disk::Delta1, k).unwrap();
//!     assert_eq!(psi(k).unwrap().evaluate(&target.value), Rational::from_integer(1.into()));
//! }
//! ```
//!
//! See the guide in `book/` for a tour.

pub mod barbell;
pub mod cli;
pub mod error;
pub mod exponent;
mod linalg;
mod parse;
pub mod pattern;
pub mod ring;
pub mod solver;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use exponent::Exponent;
pub use pattern::{Assignment, Factor, Pattern};
pub use ring::{matrix_rank, rank, Functional, Mod2Element, Rational, RingElement};
pub use word::{Alphabet, Letter, Side, Sign, Syllable, Tag, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/group-ring.md")]
    mod group_ring {}
    #[doc = include_str!("../../../book/src/barbell.md")]
    mod barbell {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
