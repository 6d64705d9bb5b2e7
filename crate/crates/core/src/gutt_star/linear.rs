//! Closed formulas for products with a single vector:
//!
//! `ξ_1⋯ξ_k ⋆ η = Σ_j (1/k!) C(k,j) z^j B*_j Σ_σ [ξ_σ1,[…[ξ_σj, η]…]] ξ_σ(j+1)⋯ξ_σk`
//!
//! and the mirrored `η ⋆ ξ_1⋯ξ_k` with `B_j` in place of `B*_j`.

use crate::error::{check_dim, Result};
use crate::exact_arith::{bernoulli, bernoulli_star, binomial_q, factorial_q, int, PolyZ, Rational};
use crate::lie_algebra::{LieAlgebra, Vector};
use crate::sym_algebra::{sym_mul_unchecked, SymElement, SymMonomial};
use num::{One, Zero};

/// Which side the vector multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `f ⋆ η`.
    Left,
    /// `η ⋆ f`.
    Right,
}

/// `Σ_σ [ξ_σ1,[…[ξ_σj, η]…]] ξ_σ(j+1)⋯ξ_σk` for a monomial `ξ_1⋯ξ_k` of
/// basis vectors, enumerating ordered `j`-sequences drawn from the multiset.
fn symmetrized_nested(alg: &LieAlgebra, m: &SymMonomial, eta: &Vector, j: usize) -> SymElement {
    let d = alg.dim();
    let k = m.degree();
    let mut out = SymElement::zero(d);
    let mut counts = m.multiplicities();
    let mut seq = Vec::with_capacity(j);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        alg: &LieAlgebra,
        eta: &Vector,
        j: usize,
        counts: &mut Vec<(usize, usize)>,
        seq: &mut Vec<usize>,
        weight: u64,
        rest_factor: &Rational,
        out: &mut SymElement,
    ) {
        if seq.len() == j {
            let mut v = eta.clone();
            for &t in seq.iter().rev() {
                v = alg.bracket_unchecked(&Vector::basis(alg.dim(), t), &v);
                if v.is_zero() {
                    return;
                }
            }
            let rest: Vec<usize> =
                counts.iter().flat_map(|&(i, c)| std::iter::repeat_n(i, c)).collect();
            let rest = SymElement::mono(alg.dim(), SymMonomial::from_indices(rest));
            let term = sym_mul_unchecked(&rest, &SymElement::from_vector(&v));
            out.add_scaled(&PolyZ::constant(rest_factor * int(weight as i64)), &term);
            return;
        }
        for idx in 0..counts.len() {
            let (i, c) = counts[idx];
            if c == 0 {
                continue;
            }
            counts[idx].1 -= 1;
            seq.push(i);
            rec(alg, eta, j, counts, seq, weight * c as u64, rest_factor, out);
            seq.pop();
            counts[idx].1 += 1;
        }
    }
    let rest_factor = factorial_q((k - j) as u64);
    rec(alg, eta, j, &mut counts, &mut seq, 1, &rest_factor, &mut out);
    out
}

/// The `z^j` coefficient of `m ⋆ η` (left) or `η ⋆ m` (right).
pub fn linear_coefficient(alg: &LieAlgebra, m: &SymMonomial, eta: &Vector, j: usize, side: Side) -> SymElement {
    let k = m.degree();
    if j > k {
        return SymElement::zero(alg.dim());
    }
    let b = match side {
        Side::Left => bernoulli_star(j),
        Side::Right => bernoulli(j),
    };
    if b.is_zero() {
        return SymElement::zero(alg.dim());
    }
    let c = binomial_q(k as u64, j as u64) * b / factorial_q(k as u64);
    symmetrized_nested(alg, m, eta, j).scale(&c)
}

/// `C_n(x, η)` for an element `x`, as used in iterated products.
pub fn linear_c_n(alg: &LieAlgebra, x: &SymElement, eta: &Vector, n: usize) -> SymElement {
    let mut out = SymElement::zero(alg.dim());
    for (m, c) in x.terms() {
        out.add_scaled(c, &linear_coefficient(alg, m, eta, n, Side::Left));
    }
    out
}

/// `f ⋆ η` (left) or `η ⋆ f` (right) from the closed formula.
pub fn star_linear(alg: &LieAlgebra, f: &SymElement, eta: &Vector, side: Side) -> Result<SymElement> {
    check_dim(alg.dim(), f.dim())?;
    check_dim(alg.dim(), eta.dim())?;
    let mut out = SymElement::zero(alg.dim());
    for (m, c) in f.terms() {
        for j in 0..=m.degree() {
            let coeff = c * &PolyZ::monomial(Rational::one(), j);
            out.add_scaled(&coeff, &linear_coefficient(alg, m, eta, j, side));
        }
    }
    Ok(out)
}

/// `ξ_1 ⋆ ⋯ ⋆ ξ_k` as
/// `Σ z^{i_1+…+i_{k-1}} C_{i_{k-1}}(…C_{i_1}(ξ_1, ξ_2)…, ξ_k)` with `i_j ≤ j`.
pub fn star_vectors(alg: &LieAlgebra, xs: &[Vector]) -> Result<SymElement> {
    assert!(!xs.is_empty(), "at least one vector is required");
    for v in xs {
        check_dim(alg.dim(), v.dim())?;
    }
    let mut acc = SymElement::from_vector(&xs[0]);
    for (j, eta) in xs.iter().enumerate().skip(1) {
        let mut next = SymElement::zero(alg.dim());
        for i in 0..=j {
            next.add_scaled(&PolyZ::monomial(Rational::one(), i), &linear_c_n(alg, &acc, eta, i));
        }
        acc = next;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    #[test]
    fn square_times_vector() {
        // ξ² ⋆ η = ξ²η + z ξ[ξ,η] + (z²/6)[ξ,[ξ,η]] with ξ = e1, η = e2 in so(3)
        let s = LieAlgebra::so3();
        let xi2 = SymElement::mono(3, SymMonomial::power(0, 2));
        let eta = Vector::basis(3, 1);
        let got = star_linear(&s, &xi2, &eta, Side::Left).unwrap();
        let mut expected = SymElement::mono(3, SymMonomial::from_indices(vec![0, 0, 1]));
        expected.add_term(SymMonomial::from_indices(vec![0, 2]), &PolyZ::monomial(int(1), 1));
        expected.add_term(SymMonomial::from_indices(vec![1]), &PolyZ::monomial(rat(-1, 6), 2));
        assert_eq!(got, expected);
    }

    #[test]
    fn vector_times_vector() {
        let h = LieAlgebra::heisenberg(1);
        let p = SymElement::basis(3, 0);
        let got = star_linear(&h, &p, &Vector::basis(3, 1), Side::Left).unwrap();
        assert_eq!(got.render(h.labels()), "P*Q + (1/2)z*E");
        let got = star_linear(&h, &p, &Vector::basis(3, 1), Side::Right).unwrap();
        assert_eq!(got.render(h.labels()), "P*Q - (1/2)z*E");
        let v = star_vectors(&h, &[Vector::basis(3, 0), Vector::basis(3, 1)]).unwrap();
        assert_eq!(v.render(h.labels()), "P*Q + (1/2)z*E");
    }
}
