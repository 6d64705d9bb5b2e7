mod common;

use common::*;
use gutt_core::exact_arith::{int, rat, Rational};
use gutt_core::free_lie::*;
use gutt_core::lie_algebra::{LieAlgebra, StructureConstants, Vector};
use num::Zero;
use proptest::prelude::*;

fn shipped() -> Vec<LieAlgebra> {
    vec![
        LieAlgebra::abelian(3),
        LieAlgebra::heisenberg(1),
        LieAlgebra::heisenberg(2),
        LieAlgebra::heisenberg(3),
        LieAlgebra::so3(),
    ]
}

/// Jacobiator of basis vectors computed through `bracket`, independently
/// of the constant-level check in `validate`.
#[allow(clippy::needless_range_loop)]
fn jacobi_holds(c: &StructureConstants) -> bool {
    let d = c.len();
    let br = |x: &Vector, y: &Vector| {
        let mut out = Vector::zero(d);
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                for k in 0..d {
                    out.0[k] += a * b * &c[i][j][k];
                }
            }
        }
        out
    };
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = (Vector::basis(d, i), Vector::basis(d, j), Vector::basis(d, k));
                let s = &(&br(&x, &br(&y, &z)) + &br(&y, &br(&z, &x))) + &br(&z, &br(&x, &y));
                if !s.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn antisymmetric_constants(d: usize) -> impl Strategy<Value = StructureConstants> {
    prop::collection::vec(-2i64..=2, d * d * d).prop_map(move |raw| {
        let mut c = vec![vec![vec![Rational::zero(); d]; d]; d];
        for i in 0..d {
            for j in i + 1..d {
                for k in 0..d {
                    let v = int(raw[(i * d + j) * d + k]);
                    c[j][i][k] = -v.clone();
                    c[i][j][k] = v;
                }
            }
        }
        c
    })
}

#[test]
fn heisenberg_is_two_step_nilpotent() {
    for n in 1..=3 {
        assert_eq!(LieAlgebra::heisenberg(n).nilpotency_index(6), Some(2));
    }
    assert_eq!(LieAlgebra::abelian(2).nilpotency_index(6), Some(1));
    assert_eq!(LieAlgebra::so3().nilpotency_index(6), None);
}

#[test]
fn goldberg_form_expands_to_associative_log() {
    for n in 1..=6 {
        let lhs = bch_goldberg(n).expand();
        assert_eq!(lhs, bch_associative(n), "order {n}");
    }
}

#[test]
fn dynkin_form_agrees() {
    for n in 1..=5 {
        assert_eq!(bch_dynkin(n).expand(), bch_associative(n), "order {n}");
    }
}

#[test]
fn parts_sum_to_homogeneous_components() {
    for n in 1..=6 {
        let full = bch_goldberg(n).degree(n).expand();
        let mut sum = NCPoly::zero();
        for a in 0..=n {
            sum.add_assign(&bch_part(a, n - a).expand());
        }
        assert_eq!(sum, full, "degree {n}");
    }
    assert!(bch_part(3, 1).expand().is_zero());
    assert!(bch_part(1, 3).expand().is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shipped_brackets_satisfy_jacobi(which in 0usize..5, seed in prop::collection::vec(-3i64..=3, 27)) {
        let alg = &shipped()[which];
        let d = alg.dim();
        let v = |o: usize| Vector::from_ints(&(0..d).map(|i| seed[(o * 9 + i) % 27]).collect::<Vec<_>>());
        let (x, y, z) = (v(0), v(1), v(2));
        let b = |p: &Vector, q: &Vector| alg.bracket(p, q).unwrap();
        let s = &(&b(&x, &b(&y, &z)) + &b(&y, &b(&z, &x))) + &b(&z, &b(&x, &y));
        prop_assert!(s.is_zero());
        prop_assert_eq!(b(&x, &y), -&b(&y, &x));
    }

    #[test]
    fn validation_matches_jacobiator(d in 1usize..=3, c in antisymmetric_constants(3)) {
        let c: StructureConstants =
            c.into_iter().take(d).map(|row| row.into_iter().take(d).map(|v| v.into_iter().take(d).collect()).collect()).collect();
        let labels: Vec<String> = (1..=d).map(|i| format!("e{i}")).collect();
        let built = LieAlgebra::from_structure_constants(labels, c.clone());
        prop_assert_eq!(built.is_ok(), jacobi_holds(&c));
        if d <= 2 {
            prop_assert!(built.is_ok());
        }
    }

    #[test]
    fn bch_tilde_is_multilinear(which in algebra_index(), a in 1usize..=3, b in 1usize..=2,
                                 vs in prop::collection::vec(vector(3), 5), slot in 0usize..5, k in -3i64..=3) {
        let alg = &algebras()[which];
        let xs: Vec<Vector> = vs[..a].to_vec();
        let ys: Vec<Vector> = vs[a..a + b].to_vec();
        let base = bch_tilde(a, b, &xs, &ys, alg).unwrap();
        let c = rat(k, 2);
        let (mut xs2, mut ys2) = (xs.clone(), ys.clone());
        let s = slot % (a + b);
        if s < a { xs2[s] = xs2[s].scale(&c) } else { ys2[s - a] = ys2[s - a].scale(&c) }
        prop_assert_eq!(bch_tilde(a, b, &xs2, &ys2, alg).unwrap(), base.scale(&c));
    }

    #[test]
    fn first_order_identity(which in algebra_index(), x in vector(3), y in vector(3)) {
        let alg = &algebras()[which];
        prop_assert!(bch_first_order(alg, &x, &y, 6).unwrap().agrees());
    }
}
