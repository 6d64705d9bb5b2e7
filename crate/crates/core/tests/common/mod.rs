#![allow(dead_code)]

use gutt_core::enveloping::UElement;
use gutt_core::exact_arith::{int, PolyZ};
use gutt_core::lie_algebra::{LieAlgebra, Vector};
use gutt_core::sym_algebra::{SymElement, SymMonomial};
use proptest::prelude::*;

pub fn algebras() -> Vec<LieAlgebra> {
    vec![LieAlgebra::heisenberg(1), LieAlgebra::so3()]
}

/// Index of one of the two 3-dimensional test algebras.
pub fn algebra_index() -> impl Strategy<Value = usize> {
    0usize..2
}

pub fn small_int() -> impl Strategy<Value = i64> {
    prop_oneof![-4i64..=-1, 1i64..=4]
}

pub fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, dim).prop_map(|v| Vector::from_ints(&v))
}

pub fn monomial(dim: usize, max_deg: usize) -> impl Strategy<Value = SymMonomial> {
    prop::collection::vec(0..dim, 0..=max_deg).prop_map(SymMonomial::from_indices)
}

/// Elements with up to `terms` monomials and small integer coefficients,
/// some of them linear in `z`.
pub fn element(dim: usize, max_deg: usize, terms: usize) -> impl Strategy<Value = SymElement> {
    prop::collection::vec((monomial(dim, max_deg), small_int(), 0i64..=2), 1..=terms).prop_map(move |ts| {
        let mut x = SymElement::zero(dim);
        for (m, c, zc) in ts {
            x.add_term(m, &PolyZ::from_ints(&[c, if zc == 2 { 1 } else { 0 }]));
        }
        x
    })
}

/// Elements with constant coefficients only.
pub fn const_element(dim: usize, max_deg: usize, terms: usize) -> impl Strategy<Value = SymElement> {
    prop::collection::vec((monomial(dim, max_deg), small_int()), 1..=terms).prop_map(move |ts| {
        let mut x = SymElement::zero(dim);
        for (m, c) in ts {
            x.add_term(m, &PolyZ::constant(int(c)));
        }
        x
    })
}

pub fn u_element(dim: usize, max_len: usize, terms: usize) -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..dim, 0..=max_len), small_int()), 1..=terms)
}

/// Builds a `UElement` by normal-ordering arbitrary words.
pub fn build_u(env: &gutt_core::enveloping::Enveloping, words: &[(Vec<usize>, i64)]) -> UElement {
    let mut u = UElement::zero(env.dim());
    for (w, c) in words {
        u.add_scaled(&PolyZ::constant(int(*c)), &env.normal_order(w).unwrap());
    }
    u
}
