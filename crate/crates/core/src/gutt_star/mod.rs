//! The Gutt star product `f ⋆_z g = Σ z^n C_n(f, g)` on `Sym(g)`.
//!
//! Three independent constructions are provided and cross-checked in tests:
//! - [`star_pbw`]: `q_z^{-1}(q_z(f) ⊙ q_z(g))` in `U(g_z)`; the reference;
//! - [`star_bch`]: the G-index formula built from BCH components;
//! - [`star_gutt_original`]: the undeformed product at `z = 1`, regraded by
//!   inserting `z^n` in front of the degree `k+ℓ-n` component.
//!
//! [`star_linear`] and [`star_vectors`] give closed formulas when one factor
//! is a vector.

mod bch;
mod gindex;
mod linear;

pub use bch::{all_permutations, distinct_arrangements, star_bch, star_bch_literal, star_bch_ordered, Symmetrization};
pub use gindex::{g_indices, g_indices_with_multiplicity, ordered_tuples, GIndex};
pub use linear::{linear_c_n, linear_coefficient, star_linear, star_vectors, Side};

use crate::enveloping::{Deformation, Enveloping};
use crate::error::{check_dim, Result};
use crate::exact_arith::{PolyZ, Rational};
use crate::lie_algebra::LieAlgebra;
use crate::sym_algebra::{project, SymElement, SymMonomial};
use num::One;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// A star product context over one algebra, memoizing products of
/// monomials. Safe to share between threads.
#[derive(Debug)]
pub struct GuttStar {
    env: Enveloping,
    cache: RwLock<HashMap<(SymMonomial, SymMonomial), Arc<SymElement>>>,
}

impl GuttStar {
    /// Star product with a formal parameter `z`.
    pub fn new(alg: &LieAlgebra) -> Self {
        GuttStar { env: Enveloping::new(alg), cache: RwLock::new(HashMap::new()) }
    }

    /// Star product with `z` fixed to `z0`; results have constant coefficients.
    pub fn at(alg: &LieAlgebra, z0: Rational) -> Self {
        GuttStar { env: Enveloping::at(alg, z0), cache: RwLock::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.env.algebra()
    }

    pub fn enveloping(&self) -> &Enveloping {
        &self.env
    }

    pub fn deformation(&self) -> &Deformation {
        self.env.deformation()
    }

    /// `m ⋆ n` for monomials.
    pub fn star_monomials(&self, m: &SymMonomial, n: &SymMonomial) -> Arc<SymElement> {
        let d = self.env.dim();
        if m.is_unit() || n.is_unit() {
            return Arc::new(SymElement::mono(d, m.mul(n)));
        }
        let key = (m.clone(), n.clone());
        if let Some(hit) = self.cache.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return hit.clone();
        }
        let u = self
            .env
            .mul(&self.env.q_monomial(m), &self.env.q_monomial(n))
            .expect("same algebra");
        let out = Arc::new(self.env.q_inv(&u).expect("same algebra"));
        self.cache.write().unwrap_or_else(|e| e.into_inner()).insert(key, out.clone());
        out
    }

    /// `f ⋆ g`, bilinear over `Q[z]`.
    pub fn star(&self, f: &SymElement, g: &SymElement) -> Result<SymElement> {
        check_dim(self.env.dim(), f.dim())?;
        check_dim(self.env.dim(), g.dim())?;
        let mut out = SymElement::zero(self.env.dim());
        for (m, c) in f.terms() {
            for (n, e) in g.terms() {
                let p = c * e;
                if !p.is_zero() {
                    out.add_scaled(&p, &self.star_monomials(m, n));
                }
            }
        }
        Ok(out)
    }

    /// Coefficient of `z^n` in `f ⋆ g`.
    pub fn c_n(&self, f: &SymElement, g: &SymElement, n: usize) -> Result<SymElement> {
        Ok(self.star(f, g)?.z_coefficient(n))
    }
}

/// `q_z^{-1}(q_z(f) ⊙ q_z(g))` with a formal parameter.
pub fn star_pbw(alg: &LieAlgebra, f: &SymElement, g: &SymElement) -> Result<SymElement> {
    let env = Enveloping::new(alg);
    let u = env.mul(&env.q(f)?, &env.q(g)?)?;
    env.q_inv(&u)
}

/// The original definition: the product is computed in `U(g)` with the
/// undeformed bracket (`z = 1`), and the degree `k+ℓ-n` component of the
/// result for homogeneous inputs of degrees `k`, `ℓ` is multiplied by `z^n`.
pub fn star_gutt_original(alg: &LieAlgebra, f: &SymElement, g: &SymElement) -> Result<SymElement> {
    check_dim(alg.dim(), f.dim())?;
    check_dim(alg.dim(), g.dim())?;
    let one = GuttStar::at(alg, Rational::one());
    let mut out = SymElement::zero(alg.dim());
    for (m, c) in f.terms() {
        for (n, e) in g.terms() {
            let p = c * e;
            if p.is_zero() {
                continue;
            }
            let top = m.degree() + n.degree();
            let w = one.star_monomials(m, n);
            for deg in w.degrees() {
                let z_power = PolyZ::monomial(Rational::one(), top - deg);
                out.add_scaled(&(&p * &z_power), &project(&w, deg));
            }
        }
    }
    Ok(out)
}

/// Coefficient of `z^n` in `star_pbw(f, g)`.
pub fn c_n(alg: &LieAlgebra, f: &SymElement, g: &SymElement, n: usize) -> Result<SymElement> {
    Ok(star_pbw(alg, f, g)?.z_coefficient(n))
}

/// The linear Poisson bracket `{f, g}`: the biderivation extending the Lie
/// bracket, computed by the Leibniz rule on monomials.
pub fn kks_bracket(alg: &LieAlgebra, f: &SymElement, g: &SymElement) -> Result<SymElement> {
    check_dim(alg.dim(), f.dim())?;
    check_dim(alg.dim(), g.dim())?;
    let d = alg.dim();
    let mut out = SymElement::zero(d);
    for (m, c) in f.terms() {
        for (n, e) in g.terms() {
            let p = c * e;
            for (i, mi) in m.multiplicities() {
                for (j, nj) in n.multiplicities() {
                    let br = alg.bracket_basis(i, j);
                    if br.is_zero() {
                        continue;
                    }
                    let rest = m.without(i).unwrap().mul(&n.without(j).unwrap());
                    let factor = Rational::from_integer(((mi * nj) as u64).into());
                    for (k, ck) in br.support() {
                        let mono = rest.mul(&SymMonomial::power(k, 1));
                        out.add_term(mono, &p.scale(&(ck * &factor)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Whether `C_1(f, g) − C_1(g, f)` equals [`kks_bracket`]`(f, g)`.
pub fn poisson_check(alg: &LieAlgebra, f: &SymElement, g: &SymElement) -> Result<bool> {
    let lhs = c_n(alg, f, g, 1)?.sub(&c_n(alg, g, f, 1)?)?;
    Ok(lhs == kks_bracket(alg, f, g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int;

    #[test]
    fn three_products_agree_on_small_cases() {
        let h = LieAlgebra::heisenberg(1);
        let p2 = SymElement::mono(3, SymMonomial::power(0, 2));
        let q2 = SymElement::mono(3, SymMonomial::power(1, 2));
        let a = star_pbw(&h, &p2, &q2).unwrap();
        assert_eq!(star_bch(&h, &p2, &q2).unwrap(), a);
        assert_eq!(star_gutt_original(&h, &p2, &q2).unwrap(), a);
        assert_eq!(GuttStar::new(&h).star(&p2, &q2).unwrap(), a);
    }

    #[test]
    fn poisson_examples() {
        let h = LieAlgebra::heisenberg(1);
        let p2 = SymElement::mono(3, SymMonomial::power(0, 2));
        let q = SymElement::basis(3, 1);
        assert!(poisson_check(&h, &p2, &q).unwrap());
        let pe = SymElement::mono(3, SymMonomial::from_indices(vec![0, 2])).scale(&int(2));
        assert_eq!(kks_bracket(&h, &p2, &q).unwrap(), pe);
        let a = LieAlgebra::abelian(2);
        let x = SymElement::mono(2, SymMonomial::from_indices(vec![0, 1]));
        assert!(kks_bracket(&a, &x, &x).unwrap().is_zero());
        assert!(poisson_check(&a, &x, &x).unwrap());
    }
}
