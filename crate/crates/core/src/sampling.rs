//! Deterministic sample generation for checks and tests.

use crate::exact_arith::{int, PolyZ};
use crate::sym_algebra::{SymElement, SymMonomial};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded generator used by every sampling routine.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every monomial in `dim` variables of degree exactly `deg`, in
/// lexicographic order of sorted index lists.
pub fn monomials_of_degree(dim: usize, deg: usize) -> Vec<SymMonomial> {
    fn rec(dim: usize, start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<SymMonomial>) {
        if left == 0 {
            out.push(SymMonomial::from_indices(cur.clone()));
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(dim, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, 0, deg, &mut Vec::new(), &mut out);
    out
}

/// Every monomial of degree at most `max_deg`.
pub fn monomials_up_to(dim: usize, max_deg: usize) -> Vec<SymMonomial> {
    (0..=max_deg).flat_map(|d| monomials_of_degree(dim, d)).collect()
}

/// Ordered pairs of monomials with total degree at most `max_total`.
pub fn monomial_pairs(dim: usize, max_total: usize) -> Vec<(SymMonomial, SymMonomial)> {
    let all = monomials_up_to(dim, max_total);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.degree() + b.degree() <= max_total {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// A uniformly chosen monomial of degree at most `max_deg`.
pub fn random_monomial<R: Rng>(rng: &mut R, dim: usize, max_deg: usize) -> SymMonomial {
    let deg = rng.gen_range(0..=max_deg);
    SymMonomial::from_indices((0..deg).map(|_| rng.gen_range(0..dim)).collect())
}

/// `count` random monomials whose degrees sum to at most `total`.
pub fn random_monomial_tuple<R: Rng>(rng: &mut R, dim: usize, count: usize, total: usize) -> Vec<SymMonomial> {
    let mut left = total;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let deg = rng.gen_range(0..=left);
        left -= deg;
        out.push(SymMonomial::from_indices((0..deg).map(|_| rng.gen_range(0..dim)).collect()));
    }
    out
}

/// A random element with up to `terms` monomials of degree at most
/// `max_deg` and small nonzero integer coefficients (constant in `z`).
pub fn random_element<R: Rng>(rng: &mut R, dim: usize, max_deg: usize, terms: usize) -> SymElement {
    let mut x = SymElement::zero(dim);
    let count = rng.gen_range(1..=terms.max(1));
    for _ in 0..count {
        let m = random_monomial(rng, dim, max_deg);
        let mut c = rng.gen_range(-5i64..=5);
        if c == 0 {
            c = 1;
        }
        x.add_term(m, &PolyZ::constant(int(c)));
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_up_to(3, 8).len(), 165);
        assert_eq!(monomial_pairs(1, 2).len(), 6);
    }

    #[test]
    fn seeded_samples_repeat() {
        let a = random_element(&mut rng(7), 3, 5, 4);
        let b = random_element(&mut rng(7), 3, 5, 4);
        assert_eq!(a, b);
    }
}
