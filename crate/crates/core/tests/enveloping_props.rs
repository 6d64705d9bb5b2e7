mod common;

use common::*;
use gutt_core::enveloping::*;
use gutt_core::exact_arith::{int, Rational};
use gutt_core::lie_algebra::LieAlgebra;
use gutt_core::sym_algebra::{evaluate_z, sym_mul, SymElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rewriting_is_confluent(which in algebra_index(), word in prop::collection::vec(0usize..3, 0..=6), seed in any::<u64>()) {
        let alg = &algebras()[which];
        let fast = normal_order(alg, &word).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut pick = |n: usize| rng.gen_range(0..n);
        prop_assert_eq!(normal_order_by_rewriting(alg, &word, &mut pick).unwrap(), fast.clone());
        let mut first = |_: usize| 0;
        prop_assert_eq!(normal_order_by_rewriting(alg, &word, &mut first).unwrap(), fast);
    }

    #[test]
    fn product_is_associative(which in algebra_index(), a in u_element(3, 4, 3), b in u_element(3, 4, 3), c in u_element(3, 4, 3)) {
        let env = Enveloping::new(&algebras()[which]);
        let (a, b, c) = (build_u(&env, &a), build_u(&env, &b), build_u(&env, &c));
        let l = env.mul(&env.mul(&a, &b).unwrap(), &c).unwrap();
        let r = env.mul(&a, &env.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn symmetrization_round_trip(which in algebra_index(), x in element(3, 5, 4), words in u_element(3, 5, 3)) {
        let alg = &algebras()[which];
        prop_assert_eq!(q_z_inv(alg, &q_z(alg, &x).unwrap()).unwrap(), x);
        let env = Enveloping::new(alg);
        let u = build_u(&env, &words);
        prop_assert_eq!(q_z(alg, &q_z_inv(alg, &u).unwrap()).unwrap(), u);
    }

    #[test]
    fn zero_parameter_is_commutative(which in algebra_index(), x in const_element(3, 3, 3), y in const_element(3, 3, 3)) {
        let env = Enveloping::at(&algebras()[which], Rational::from_integer(0.into()));
        let prod = env.mul(&env.q(&x).unwrap(), &env.q(&y).unwrap()).unwrap();
        prop_assert_eq!(env.q_inv(&prod).unwrap(), sym_mul(&x, &y).unwrap());
    }

    #[test]
    fn lifted_symplectic_maps_respect_products(a in -2i64..=2, b in -2i64..=2, c in -2i64..=2, d in -2i64..=2,
                                               u in u_element(3, 3, 3), v in u_element(3, 3, 3)) {
        // (P, Q, E) ↦ (aP + cQ, bP + dQ, (ad − bc)E) preserves [P, Q] = E.
        let h = LieAlgebra::heisenberg(1);
        let det = a * d - b * c;
        let phi = vec![
            vec![int(a), int(b), int(0)],
            vec![int(c), int(d), int(0)],
            vec![int(0), int(0), int(det)],
        ];
        let lift = lift_hom(&h, &h, &phi).unwrap();
        let env = Enveloping::new(&h);
        let (u, v) = (build_u(&env, &u), build_u(&env, &v));
        let lhs = lift.apply(&env.mul(&u, &v).unwrap()).unwrap();
        let rhs = env.mul(&lift.apply(&u).unwrap(), &lift.apply(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_representation_is_multiplicative(x in const_element(3, 3, 3), y in const_element(3, 3, 3), z in 1i64..=3) {
        let so3 = LieAlgebra::so3();
        let rep = Representation::new(&so3, &adjoint_representation(&so3), int(z)).unwrap();
        let env = Enveloping::at(&so3, int(z));
        let star = env.q_inv(&env.mul(&env.q(&x).unwrap(), &env.q(&y).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(rep.apply(&star).unwrap(), rep.apply(&x).unwrap().mul(&rep.apply(&y).unwrap()));
    }
}

#[test]
fn non_homomorphisms_are_rejected() {
    let h = LieAlgebra::heisenberg(1);
    let phi = vec![
        vec![int(1), int(0), int(0)],
        vec![int(0), int(1), int(0)],
        vec![int(0), int(0), int(2)],
    ];
    assert!(matches!(lift_hom(&h, &h, &phi), Err(gutt_core::AlgebraError::NotAHomomorphism(_))));
}

#[test]
fn evaluation_commutes_with_products() {
    let so3 = LieAlgebra::so3();
    let x = SymElement::basis(3, 0);
    let y = SymElement::basis(3, 1);
    let formal = Enveloping::new(&so3).star(&x, &y).unwrap();
    let at = Enveloping::at(&so3, int(3)).star(&x, &y).unwrap();
    assert_eq!(evaluate_z(&formal, &int(3)), at);
}
