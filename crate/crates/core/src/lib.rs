//! Exact computation of the Gutt star product on the symmetric algebra of a
//! finite-dimensional Lie algebra with rational structure constants.
//!
//! Modules, bottom-up:
//! - [`exact_arith`]: rationals, polynomials, Bernoulli and Goldberg numbers;
//! - [`free_lie`]: bracket words and the BCH series;
//! - [`lie_algebra`]: structure constants, validation, named algebras;
//! - [`sym_algebra`]: the symmetric algebra with coefficients in `Q[z]`;
//! - [`enveloping`]: PBW normal forms in `U(g_z)` and the symmetrization map;
//! - [`gutt_star`]: the star product, computed three ways;
//! - [`hopf`]: coproduct, counit and antipode;
//! - [`seminorm`]: `p_R` seminorms and the continuity estimates;
//! - [`sampling`]: seeded samples and monomial grids.

pub mod concurrency;
pub mod error;
pub mod exact_arith;
pub mod free_lie;
pub mod gutt_star;
pub mod hopf;
pub mod enveloping;
pub mod lie_algebra;
pub mod sampling;
pub mod seminorm;
pub mod sym_algebra;

pub use concurrency::Execution;
pub use error::{AlgebraError, Violation};
pub use exact_arith::{PolyZ, Rational, UniPoly};
pub use lie_algebra::{LieAlgebra, Vector};
