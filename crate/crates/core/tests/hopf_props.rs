mod common;

use common::*;
use gutt_core::enveloping::Enveloping;
use gutt_core::exact_arith::{int, rat};
use gutt_core::hopf::*;
use gutt_core::lie_algebra::LieAlgebra;
use gutt_core::sampling::monomials_up_to;
use gutt_core::seminorm::{BasisSeminorm, Order};
use gutt_core::sym_algebra::SymElement;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn axioms_hold(which in algebra_index(), x in const_element(3, 4, 3), y in const_element(3, 3, 2), z in 0usize..3) {
        let z0 = [int(0), int(1), rat(2, 3)][z].clone();
        let rep = verify_hopf(&algebras()[which], &x, &y, &z0).unwrap();
        prop_assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn antipode_is_an_involution(x in element(3, 5, 5)) {
        prop_assert_eq!(antipode(&antipode(&x)), x);
    }

    #[test]
    fn coproduct_is_cocommutative(x in element(3, 5, 4)) {
        let d = coproduct(&x);
        prop_assert_eq!(d.swap(), d);
    }
}

#[test]
fn abelian_is_a_classical_bialgebra() {
    let a = LieAlgebra::abelian(3);
    let x = SymElement::mono(3, gutt_core::sym_algebra::SymMonomial::from_indices(vec![0, 1, 1]));
    let y = SymElement::basis(3, 2);
    assert!(verify_hopf(&a, &x, &y, &int(1)).unwrap().passed());
}

#[test]
fn undeformed_through_symmetrization() {
    for alg in algebras() {
        let env = Enveloping::new(&alg);
        for m in monomials_up_to(3, 4) {
            assert!(undeformed_check(&env, &m), "{m:?}");
        }
    }
}

#[test]
fn seminorm_bounds_on_monomials() {
    let alg = LieAlgebra::so3();
    let monos = monomials_up_to(3, 10);
    for r in [0.0, 0.5, 1.0, 2.0] {
        let p = BasisSeminorm::new(vec![int(1), rat(1, 2), int(3)]).unwrap();
        let rep = hopf_seminorm_check(&alg, &p, Order::new(r).unwrap(), &monos);
        assert!(rep.passed(), "{}", rep.failures().next().unwrap());
        for n in 0..=10 {
            assert!(subset_factorial_check(n, Order::new(r).unwrap()).pass);
        }
    }
}
