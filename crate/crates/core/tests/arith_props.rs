use gutt_core::exact_arith::*;
use gutt_core::free_lie::bch_associative;
use num::{One, Zero};
use proptest::prelude::*;

/// Akiyama–Tanigawa, which produces `B_1 = +1/2`; flipped to the crate's
/// convention.
fn bernoulli_oracle(n: usize) -> Rational {
    let mut a: Vec<Rational> = Vec::new();
    let mut out = Rational::zero();
    for m in 0..=n {
        a.push(rat(1, (m + 1) as i64));
        for j in (1..=m).rev() {
            a[j - 1] = int(j as i64) * (&a[j - 1] - &a[j]);
        }
        out = a[0].clone();
    }
    if n == 1 {
        -out
    } else {
        out
    }
}

#[test]
fn bernoulli_matches_independent_oracle() {
    for n in 0..=30 {
        assert_eq!(bernoulli(n), bernoulli_oracle(n), "n = {n}");
    }
}

#[test]
fn bernoulli_recursion() {
    for n in 1..=30usize {
        let s: Rational = (0..n).map(|k| binomial_q((n + 1) as u64, k as u64) * bernoulli(k)).sum();
        assert_eq!(bernoulli(n), -s / int((n + 1) as i64));
    }
}

#[test]
fn starred_bernoulli_sum() {
    for k in 0..=20usize {
        let s: Rational = (0..=k).map(|j| binomial_q((k + 1) as u64, j as u64) * bernoulli_star(j)).sum();
        assert_eq!(s, int((k + 1) as i64));
    }
}

#[test]
fn goldberg_bernoulli_bridge() {
    for s in 1..=12usize {
        let expected = sign(s) * bernoulli(s) / factorial_q(s as u64);
        assert_eq!(goldberg_coeff(Letter::X, &[1, s]), expected, "s = {s}");
    }
}

#[test]
fn goldberg_vanishing_rule() {
    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        (1..=n)
            .flat_map(|f| compositions(n - f).into_iter().map(move |mut r| {
                r.insert(0, f);
                r
            }))
            .collect()
    }
    for n in (2..=8).step_by(2) {
        for runs in compositions(n) {
            if runs.len() % 2 == 1 {
                assert!(goldberg_coeff(Letter::X, &runs).is_zero(), "{runs:?}");
                assert!(goldberg_coeff(Letter::Y, &runs).is_zero(), "{runs:?}");
            }
        }
    }
}

#[test]
fn word_coefficients_match_associative_log() {
    // log(e^X e^Y) in associative form has the Goldberg coefficient of
    // every word as its coefficient.
    let n_max = 6;
    let series = bch_associative(n_max);
    for n in 1..=n_max {
        for mask in 0u32..(1 << n) {
            let w: Vec<Letter> = (0..n).map(|i| if mask >> i & 1 == 1 { Letter::Y } else { Letter::X }).collect();
            assert_eq!(word_coeff(&w), series.coeff(&w), "{w:?}");
        }
    }
}

#[test]
fn thompson_and_kernel() {
    for n in 1..=10 {
        assert!(thompson_sum(n) <= int(2), "n = {n}");
    }
    for k in 0..=15 {
        for s in 0..=k {
            let expected = if s == 0 { Rational::one() } else { Rational::zero() };
            assert_eq!(kks_kernel(k, s), expected, "k = {k}, s = {s}");
        }
    }
    for k in 0..=12 {
        for m in 0..=12 {
            assert!(carlitz_check(k, m), "k = {k}, m = {m}");
        }
    }
}

fn poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|c| UniPoly::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn goldberg_ignores_run_order(mut runs in prop::collection::vec(1usize..4, 1..5), seed in any::<u64>()) {
        let before = goldberg_coeff(Letter::X, &runs);
        let k = runs.len();
        runs.rotate_left((seed as usize) % k);
        if k > 1 {
            runs.swap(0, (seed as usize / 7) % k);
        }
        prop_assert_eq!(goldberg_coeff(Letter::X, &runs), before);
    }

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly(), x in -5i64..=5) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        let x = int(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn rational_parse_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let q = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
}
