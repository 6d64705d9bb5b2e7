mod common;

use common::*;
use gutt_core::sym_algebra::{project, sym_mul, SymElement};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutative_and_associative(a in element(3, 3, 4), b in element(3, 3, 4), c in element(3, 2, 3)) {
        prop_assert_eq!(sym_mul(&a, &b).unwrap(), sym_mul(&b, &a).unwrap());
        let l = sym_mul(&sym_mul(&a, &b).unwrap(), &c).unwrap();
        let r = sym_mul(&a, &sym_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn grading_is_multiplicative(a in element(3, 3, 4), b in element(3, 3, 4), n in 0usize..=6) {
        let lhs = project(&sym_mul(&a, &b).unwrap(), n);
        let mut rhs = SymElement::zero(3);
        for p in 0..=n {
            rhs.add_assign(&sym_mul(&project(&a, p), &project(&b, n - p)).unwrap());
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_is_neutral(a in element(3, 4, 5)) {
        prop_assert_eq!(sym_mul(&SymElement::one(3), &a).unwrap(), a.clone());
        prop_assert_eq!(sym_mul(&a, &SymElement::one(3)).unwrap(), a);
    }
}
