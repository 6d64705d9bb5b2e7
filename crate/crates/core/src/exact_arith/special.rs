//! Bernoulli numbers, Goldberg polynomials and coefficients, and the
//! combinatorial identities built on them.
//!
//! Convention: `B_1 = -1/2`, and `B*_n = (-1)^n B_n`, so `B*_1 = 1/2`.

use super::rational::{binomial_q, int, rat, sign, Rational};
use super::unipoly::UniPoly;
use num::{One, Signed, Zero};
use std::sync::Mutex;

/// The two letters of the BCH alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());
static GOLDBERG: Mutex<Vec<UniPoly>> = Mutex::new(Vec::new());

/// `B_n` from `B_n = -1/(n+1) Σ_{k<n} C(n+1,k) B_k`, memoized.
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n {
        let m = cache.len();
        let value = if m == 0 {
            Rational::one()
        } else {
            let s = (0..m).fold(Rational::zero(), |acc, k| {
                acc + binomial_q(m as u64 + 1, k as u64) * &cache[k]
            });
            -s / int(m as i64 + 1)
        };
        cache.push(value);
    }
    cache[n].clone()
}

/// `B*_n = (-1)^n B_n`.
pub fn bernoulli_star(n: usize) -> Rational {
    sign(n) * bernoulli(n)
}

/// `G_1 = 1`, `G_s = (1/s)·d/dt[t(t-1)·G_{s-1}]`, memoized.
pub fn goldberg_poly(s: usize) -> UniPoly {
    assert!(s >= 1, "Goldberg polynomials are indexed from 1");
    let mut cache = GOLDBERG.lock().unwrap_or_else(|e| e.into_inner());
    if cache.is_empty() {
        cache.push(UniPoly::one());
    }
    let t2_minus_t = UniPoly::from_ints(&[0, -1, 1]);
    while cache.len() < s {
        let m = cache.len() + 1;
        let next = (&t2_minus_t * &cache[m - 2]).derivative().scale(&rat(1, m as i64));
        cache.push(next);
    }
    cache[s - 1].clone()
}

/// `∫₀¹ p(t) dt`.
pub fn integrate_unit(p: &UniPoly) -> Rational {
    p.integrate_unit()
}

/// Goldberg coefficient of the word with the given first letter and run
/// lengths `s_1, …, s_m`.
///
/// `c_X = ∫₀¹ t^{⌊m/2⌋} (t-1)^{⌊(m-1)/2⌋} Π G_{s_i}(t) dt` and
/// `c_Y = (-1)^{n-1} c_X` with `n = Σ s_i`.
pub fn goldberg_coeff(first: Letter, runs: &[usize]) -> Rational {
    assert!(!runs.is_empty(), "a word has at least one run");
    assert!(runs.iter().all(|&s| s >= 1), "runs are positive");
    let m = runs.len();
    let mut integrand = UniPoly::from_ints(&[-1, 1]).pow((m - 1) / 2).shift(m / 2);
    for &s in runs {
        integrand = &integrand * &goldberg_poly(s);
    }
    let c = integrand.integrate_unit();
    match first {
        Letter::X => c,
        Letter::Y => {
            let n: usize = runs.iter().sum();
            sign(n - 1) * c
        }
    }
}

/// Run-length encoding of a nonempty word.
pub fn run_lengths(word: &[Letter]) -> Vec<usize> {
    let mut runs: Vec<usize> = Vec::new();
    for (i, l) in word.iter().enumerate() {
        if i > 0 && word[i - 1] == *l {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    runs
}

/// Goldberg coefficient `g_w` of a nonempty word.
pub fn word_coeff(word: &[Letter]) -> Rational {
    goldberg_coeff(word[0], &run_lengths(word))
}

/// `Σ_{|w| = n} |g_w|` over all `2^n` words of length `n`.
pub fn thompson_sum(n: usize) -> Rational {
    assert!(n >= 1);
    let mut total = Rational::zero();
    for bits in 0u64..(1u64 << n) {
        let word: Vec<Letter> =
            (0..n).map(|i| if bits >> i & 1 == 0 { Letter::X } else { Letter::Y }).collect();
        total += word_coeff(&word).abs();
    }
    total
}

/// The kernel
/// `K(k,s) = 1/(k+1) Σ_{n=0}^{k} C(k+1,n) B*_n Σ_{j=0}^{n} (-1)^j C(n,j) Σ_{l=0}^{k-n} δ_{s,l+j}`.
pub fn kks_kernel(k: usize, s: usize) -> Rational {
    let mut total = Rational::zero();
    for n in 0..=k {
        let mut inner = Rational::zero();
        for j in 0..=n {
            // number of l in 0..=k-n with l + j = s
            if s >= j && s - j <= k - n {
                inner += sign(j) * binomial_q(n as u64, j as u64);
            }
        }
        total += binomial_q(k as u64 + 1, n as u64) * bernoulli_star(n) * inner;
    }
    total / int(k as i64 + 1)
}

/// Whether `(-1)^k Σ_j C(k,j) B_{m+j} = (-1)^m Σ_i C(m,i) B_{k+i}`.
pub fn carlitz_check(k: usize, m: usize) -> bool {
    let lhs = (0..=k).fold(Rational::zero(), |acc, j| {
        acc + binomial_q(k as u64, j as u64) * bernoulli(m + j)
    }) * sign(k);
    let rhs = (0..=m).fold(Rational::zero(), |acc, i| {
        acc + binomial_q(m as u64, i as u64) * bernoulli(k + i)
    }) * sign(m);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bernoulli() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(16), rat(-3617, 510));
        assert_eq!(bernoulli(7), int(0));
        assert_eq!(bernoulli_star(1), rat(1, 2));
        assert_eq!(bernoulli_star(2), rat(1, 6));
    }

    #[test]
    fn goldberg_small() {
        assert_eq!(goldberg_poly(1), UniPoly::one());
        assert_eq!(goldberg_poly(2), UniPoly::from_coeffs(vec![rat(-1, 2), int(1)]));
        let g3 = goldberg_poly(3);
        assert_eq!(g3.degree(), Some(2));
        assert_eq!(g3.leading(), int(1));
        assert_eq!(goldberg_coeff(Letter::X, &[1]), int(1));
        assert_eq!(goldberg_coeff(Letter::X, &[1, 2]), rat(1, 12));
        assert_eq!(goldberg_coeff(Letter::X, &[1, 1, 1]), rat(-1, 6));
        assert_eq!(goldberg_coeff(Letter::Y, &[1, 1]), rat(-1, 2));
    }

    #[test]
    fn runs() {
        use Letter::*;
        assert_eq!(run_lengths(&[X, X, Y, X]), vec![2, 1, 1]);
        assert_eq!(run_lengths(&[Y]), vec![1]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kks_kernel(5, 0), int(1));
        assert_eq!(kks_kernel(5, 3), int(0));
        assert_eq!(kks_kernel(0, 0), int(1));
        assert!(carlitz_check(3, 5));
        assert!(carlitz_check(0, 0));
        assert!(carlitz_check(10, 7));
    }

    #[test]
    fn thompson_small() {
        assert_eq!(thompson_sum(1), int(2));
        assert!(thompson_sum(2) <= int(2));
    }
}
