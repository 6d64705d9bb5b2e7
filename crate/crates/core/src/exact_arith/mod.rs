//! Exact rational and polynomial arithmetic, plus the special numbers
//! (Bernoulli, Goldberg) used throughout the crate.

pub mod rational;
pub mod special;
pub mod unipoly;

pub use rational::{
    binomial, binomial_q, factorial, factorial_q, format_rational, int, parse_rational, pow, rat,
    sign, to_f64, ParseRationalError, Rational,
};
pub use special::{
    bernoulli, bernoulli_star, carlitz_check, goldberg_coeff, goldberg_poly, integrate_unit,
    kks_kernel, run_lengths, thompson_sum, word_coeff, Letter,
};
pub use unipoly::{PolyZ, UniPoly};
