//! The star product from the BCH series:
//!
//! `C_n(ξ_1⋯ξ_k, η_1⋯η_ℓ) = Σ_{J ∈ G_{k+ℓ-n}(k,ℓ)} (1/J!) Σ_{σ ∈ S_k} Σ_{τ ∈ S_ℓ} Π_i BCH~_{a_i,b_i}(ξ_σ, η_τ)`,
//!
//! where the `i`-th factor takes the next `a_i` of the permuted `ξ`'s and the
//! next `b_i` of the permuted `η`'s.

use super::gindex::{g_indices, ordered_tuples};
use crate::error::{check_dim, Result};
use crate::exact_arith::{factorial, factorial_q, PolyZ, Rational};
use crate::free_lie::bch_tilde_unchecked;
use crate::lie_algebra::{LieAlgebra, Vector};
use crate::sym_algebra::{SymElement, SymMonomial};
use num::One;
use std::collections::HashMap;

/// How the `S_k × S_ℓ` sums are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetrization {
    /// Distinct arrangements of each multiset, weighted by `Π mult!`.
    Multiset,
    /// Every permutation of positions.
    Literal,
}

/// Distinct arrangements of a sorted multiset, in lexicographic order.
pub fn distinct_arrangements(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// Every permutation of `items` (with repetitions when items repeat).
pub fn all_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let positions: Vec<usize> = (0..items.len()).collect();
    distinct_arrangements(&positions)
        .into_iter()
        .map(|p| p.into_iter().map(|i| items[i]).collect())
        .collect()
}

fn arrangements(m: &SymMonomial, mode: Symmetrization) -> Vec<(Vec<usize>, Rational)> {
    match mode {
        Symmetrization::Multiset => {
            let w = m
                .multiplicities()
                .iter()
                .fold(Rational::one(), |acc, &(_, k)| acc * factorial_q(k as u64));
            distinct_arrangements(m.indices()).into_iter().map(|a| (a, w.clone())).collect()
        }
        Symmetrization::Literal => {
            all_permutations(m.indices()).into_iter().map(|a| (a, Rational::one())).collect()
        }
    }
}

struct TildeCache<'a> {
    alg: &'a LieAlgebra,
    map: HashMap<(usize, usize, Vec<usize>, Vec<usize>), Vector>,
}

impl<'a> TildeCache<'a> {
    fn get(&mut self, a: usize, b: usize, xs: &[usize], ys: &[usize]) -> Vector {
        let key = (a, b, xs.to_vec(), ys.to_vec());
        if let Some(v) = self.map.get(&key) {
            return v.clone();
        }
        let d = self.alg.dim();
        let xv: Vec<Vector> = xs.iter().map(|&i| Vector::basis(d, i)).collect();
        let yv: Vec<Vector> = ys.iter().map(|&i| Vector::basis(d, i)).collect();
        let v = bch_tilde_unchecked(a, b, &xv, &yv, self.alg);
        self.map.insert(key, v.clone());
        v
    }
}

/// `Σ_{σ,τ} Π_i BCH~_{a_i,b_i}` for one tuple of pairs.
fn symmetrized_product(
    cache: &mut TildeCache,
    pairs: &[(usize, usize)],
    xis: &[(Vec<usize>, Rational)],
    etas: &[(Vec<usize>, Rational)],
) -> SymElement {
    let d = cache.alg.dim();
    let mut out = SymElement::zero(d);
    for (alpha, wa) in xis {
        for (beta, wb) in etas {
            let (mut ia, mut ib) = (0, 0);
            let mut factors = Vec::with_capacity(pairs.len());
            let mut vanishes = false;
            for &(a, b) in pairs {
                let v = cache.get(a, b, &alpha[ia..ia + a], &beta[ib..ib + b]);
                ia += a;
                ib += b;
                if v.is_zero() {
                    vanishes = true;
                    break;
                }
                factors.push(v);
            }
            if vanishes {
                continue;
            }
            let prod = SymElement::product_of_vectors(d, &factors);
            out.add_scaled(&PolyZ::constant(wa * wb), &prod);
        }
    }
    out
}

/// `ξ⋆η` on two monomials through G-indices; coefficients carry `z^n`.
pub(crate) fn star_bch_monomials(alg: &LieAlgebra, xi: &SymMonomial, eta: &SymMonomial, mode: Symmetrization) -> SymElement {
    let d = alg.dim();
    let (k, l) = (xi.degree(), eta.degree());
    if k == 0 || l == 0 {
        return SymElement::mono(d, xi.mul(eta));
    }
    let xis = arrangements(xi, mode);
    let etas = arrangements(eta, mode);
    let mut cache = TildeCache { alg, map: HashMap::new() };
    let mut out = SymElement::zero(d);
    for n in 0..k + l {
        let r = k + l - n;
        let mut c_n = SymElement::zero(d);
        for j in g_indices(r, k, l) {
            let s = symmetrized_product(&mut cache, j.pairs(), &xis, &etas);
            c_n.add_scaled(&PolyZ::constant(Rational::new(1.into(), j.factorial())), &s);
        }
        out.add_scaled(&PolyZ::monomial(Rational::one(), n), &c_n);
    }
    out
}

/// Same product from the sum over ordered tuples, `1/r! Σ_{ordered}`.
pub(crate) fn star_bch_ordered_monomials(alg: &LieAlgebra, xi: &SymMonomial, eta: &SymMonomial) -> SymElement {
    let d = alg.dim();
    let (k, l) = (xi.degree(), eta.degree());
    if k == 0 || l == 0 {
        return SymElement::mono(d, xi.mul(eta));
    }
    let xis = arrangements(xi, Symmetrization::Multiset);
    let etas = arrangements(eta, Symmetrization::Multiset);
    let mut cache = TildeCache { alg, map: HashMap::new() };
    let mut out = SymElement::zero(d);
    for n in 0..k + l {
        let r = k + l - n;
        let mut c_n = SymElement::zero(d);
        for t in ordered_tuples(r, k, l) {
            c_n.add_assign(&symmetrized_product(&mut cache, &t, &xis, &etas));
        }
        let scale = Rational::new(1.into(), factorial(r as u64));
        out.add_scaled(&PolyZ::monomial(scale, n), &c_n);
    }
    out
}

fn bilinear(
    f: &SymElement,
    g: &SymElement,
    alg: &LieAlgebra,
    mono: impl Fn(&SymMonomial, &SymMonomial) -> SymElement,
) -> Result<SymElement> {
    check_dim(alg.dim(), f.dim())?;
    check_dim(alg.dim(), g.dim())?;
    let mut out = SymElement::zero(alg.dim());
    for (m, c) in f.terms() {
        for (n, e) in g.terms() {
            let p = c * e;
            if !p.is_zero() {
                out.add_scaled(&p, &mono(m, n));
            }
        }
    }
    Ok(out)
}

/// The star product through G-indices and `BCH~`, with multiset-aware
/// symmetrization.
pub fn star_bch(alg: &LieAlgebra, f: &SymElement, g: &SymElement) -> Result<SymElement> {
    bilinear(f, g, alg, |m, n| star_bch_monomials(alg, m, n, Symmetrization::Multiset))
}

/// As [`star_bch`], but summing over every permutation literally.
pub fn star_bch_literal(alg: &LieAlgebra, f: &SymElement, g: &SymElement) -> Result<SymElement> {
    bilinear(f, g, alg, |m, n| star_bch_monomials(alg, m, n, Symmetrization::Literal))
}

/// As [`star_bch`], but summing over ordered tuples of pairs with weight
/// `1/r!` instead of canonical G-indices with weight `1/J!`.
pub fn star_bch_ordered(alg: &LieAlgebra, f: &SymElement, g: &SymElement) -> Result<SymElement> {
    bilinear(f, g, alg, |m, n| star_bch_ordered_monomials(alg, m, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangements_count() {
        assert_eq!(distinct_arrangements(&[0, 0, 1]).len(), 3);
        assert_eq!(distinct_arrangements(&[]).len(), 1);
        assert_eq!(all_permutations(&[0, 0, 1]).len(), 6);
        assert_eq!(distinct_arrangements(&[0, 1, 2, 3]).len(), 24);
    }

    #[test]
    fn generators_in_heisenberg() {
        let h = LieAlgebra::heisenberg(1);
        let p = SymElement::basis(3, 0);
        let q = SymElement::basis(3, 1);
        assert_eq!(star_bch(&h, &p, &q).unwrap().render(h.labels()), "P*Q + (1/2)z*E");
    }
}
