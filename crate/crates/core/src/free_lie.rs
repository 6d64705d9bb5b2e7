//! Words, left-nested brackets and the Baker–Campbell–Hausdorff series.
//!
//! A word `w = w_1 … w_n` in the letters `X`, `Y` stands for the left-nested
//! bracket `[w] = [[…[w_1, w_2], …], w_n]`. Bracket series are never reduced
//! modulo antisymmetry or Jacobi; equality of Lie series is decided by
//! expanding into the free associative algebra ([`NCPoly`]).
//!
//! Three constructions of `log(e^X e^Y)` are provided:
//! - [`bch_goldberg`]: the commutator form with Goldberg coefficients,
//!   `Σ_w (g_w / |w|) [w]`;
//! - [`bch_dynkin`]: Dynkin's double sum;
//! - [`bch_associative`]: composition of truncated exponential and logarithm
//!   series, used as the oracle for the other two.

use crate::error::{check_dim, Result};
use crate::exact_arith::{bernoulli_star, factorial_q, int, rat, word_coeff, Rational};
pub use crate::exact_arith::Letter;
use crate::lie_algebra::{LieAlgebra, Vector};
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

/// A word over `{X, Y}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `X` and `Y` letters.
    pub fn content(&self) -> (usize, usize) {
        let a = self.0.iter().filter(|&&l| l == Letter::X).count();
        (a, self.0.len() - a)
    }

    /// Whether `[w]` vanishes for trivial reasons (`[a, a] = 0` innermost).
    pub fn bracket_vanishes(&self) -> bool {
        self.0.len() >= 2 && self.0[0] == self.0[1]
    }

    pub fn parse(s: &str) -> Option<Word> {
        s.chars()
            .map(|c| match c {
                'X' => Some(Letter::X),
                'Y' => Some(Letter::Y),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::X => "X",
                Letter::Y => "Y",
            })?;
        }
        Ok(())
    }
}

/// A finite combination `Σ c_w [w]` of left-nested brackets with distinct
/// words and nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BracketSeries {
    terms: Vec<(Rational, Word)>,
}

impl BracketSeries {
    /// Collects terms, merging repeated words and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Word)>) -> Self {
        let mut map: BTreeMap<Word, Rational> = BTreeMap::new();
        for (c, w) in terms {
            *map.entry(w).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<(Rational, Word)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (c, w)).collect();
        terms.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.1.cmp(&b.1)));
        BracketSeries { terms }
    }

    pub fn terms(&self) -> &[(Rational, Word)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms with exactly `a` letters `X` and `b` letters `Y`.
    pub fn part(&self, a: usize, b: usize) -> BracketSeries {
        BracketSeries {
            terms: self.terms.iter().filter(|(_, w)| w.content() == (a, b)).cloned().collect(),
        }
    }

    /// Terms of length `n`.
    pub fn degree(&self, n: usize) -> BracketSeries {
        BracketSeries { terms: self.terms.iter().filter(|(_, w)| w.len() == n).cloned().collect() }
    }

    /// Associative expansion of every term.
    pub fn expand(&self) -> NCPoly {
        let mut out = NCPoly::zero();
        for (c, w) in &self.terms {
            out.add_assign(&expand_bracket(c, w));
        }
        out
    }
}

impl fmt::Display for BracketSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, w)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})[{w}]")?;
        }
        Ok(())
    }
}

/// An element of the free associative algebra on `X`, `Y` with rational
/// coefficients and no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Vec<Letter>, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), Vec::new())
    }

    pub fn monomial(c: Rational, word: Vec<Letter>) -> Self {
        let mut p = Self::zero();
        p.add_term(word, c);
        p
    }

    pub fn letter(l: Letter) -> Self {
        Self::monomial(Rational::one(), vec![l])
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Letter>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[Letter]) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, word: Vec<Letter>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &NCPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    /// Product with all words longer than `max_len` discarded.
    pub fn mul_truncated(&self, other: &NCPoly, max_len: usize) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.len() + v.len() > max_len {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }

    /// Words with exactly `a` letters `X` and `b` letters `Y`.
    pub fn component(&self, a: usize, b: usize) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| Word((*w).clone()).content() == (a, b))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Words of length `n`.
    pub fn degree(&self, n: usize) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut words: Vec<_> = self.terms.iter().collect();
        words.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        for (i, (w, c)) in words.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){}", Word(w.clone()))?;
        }
        Ok(())
    }
}

/// Expands `c·[[…[w_1, w_2], …], w_n]` into associative words.
pub fn expand_bracket(c: &Rational, word: &Word) -> NCPoly {
    assert!(!word.is_empty(), "cannot expand the empty bracket");
    let mut acc = NCPoly::monomial(c.clone(), vec![word.0[0]]);
    for &l in &word.0[1..] {
        let mut next = NCPoly::zero();
        for (w, a) in acc.terms() {
            let mut right = w.clone();
            right.push(l);
            next.add_term(right, a.clone());
            let mut left = vec![l];
            left.extend_from_slice(w);
            next.add_term(left, -a.clone());
        }
        acc = next;
    }
    acc
}

static GOLDBERG_PARTS: Mutex<Vec<Option<Arc<BracketSeries>>>> = Mutex::new(Vec::new());

/// Degree-`n` part of the Goldberg form, cached per degree.
fn goldberg_homogeneous(n: usize) -> Arc<BracketSeries> {
    {
        let cache = GOLDBERG_PARTS.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(Some(s)) = cache.get(n) {
            return s.clone();
        }
    }
    let mut terms = Vec::new();
    for bits in 0u64..(1u64 << n) {
        let w = Word((0..n).map(|i| if bits >> (n - 1 - i) & 1 == 0 { Letter::X } else { Letter::Y }).collect());
        if w.bracket_vanishes() {
            continue;
        }
        let g = word_coeff(&w.0);
        terms.push((g / int(n as i64), w));
    }
    let series = Arc::new(BracketSeries::from_terms(terms));
    let mut cache = GOLDBERG_PARTS.lock().unwrap_or_else(|e| e.into_inner());
    if cache.len() <= n {
        cache.resize(n + 1, None);
    }
    cache[n] = Some(series.clone());
    series
}

/// `Σ_{1 ≤ |w| ≤ order} (g_w / |w|) [w]`.
///
/// Words whose bracket vanishes identically (first two letters equal) and
/// words with zero coefficient are omitted.
pub fn bch_goldberg(order: usize) -> BracketSeries {
    assert!(order >= 1);
    BracketSeries::from_terms((1..=order).flat_map(|n| goldberg_homogeneous(n).terms().to_vec()))
}

/// Dynkin's form
/// `Σ_k (-1)^{k-1}/k Σ 1/(Σ(n_i+m_i)) [X^{n_1} Y^{m_1} … X^{n_k} Y^{m_k}] / Π n_i! m_i!`
/// over `n_i + m_i ≥ 1`, truncated at `order` letters, with left-nested brackets.
pub fn bch_dynkin(order: usize) -> BracketSeries {
    assert!(order >= 1);
    let mut terms: Vec<(Rational, Word)> = Vec::new();
    // Depth-first over sequences of blocks (n_i, m_i).
    fn walk(
        order: usize,
        letters: &mut Vec<Letter>,
        blocks: usize,
        denom: &Rational,
        terms: &mut Vec<(Rational, Word)>,
    ) {
        if blocks > 0 {
            let w = Word(letters.clone());
            if !w.bracket_vanishes() {
                let sign = if blocks % 2 == 1 { int(1) } else { int(-1) };
                let c = sign / (int(blocks as i64) * int(letters.len() as i64) * denom);
                terms.push((c, w));
            }
        }
        let used = letters.len();
        for n in 0..=order - used {
            for m in 0..=order - used - n {
                if n + m == 0 {
                    continue;
                }
                let before = letters.len();
                letters.extend(std::iter::repeat_n(Letter::X, n));
                letters.extend(std::iter::repeat_n(Letter::Y, m));
                let d = denom * factorial_q(n as u64) * factorial_q(m as u64);
                walk(order, letters, blocks + 1, &d, terms);
                letters.truncate(before);
            }
        }
    }
    walk(order, &mut Vec::new(), 0, &Rational::one(), &mut terms);
    BracketSeries::from_terms(terms)
}

/// `log(exp(X)·exp(Y))` in the free associative algebra, all words of
/// length `≤ order`.
pub fn bch_associative(order: usize) -> NCPoly {
    assert!(order >= 1);
    // E = exp(X) exp(Y) - 1
    let mut e = NCPoly::zero();
    for a in 0..=order {
        for b in 0..=order - a {
            if a + b == 0 {
                continue;
            }
            let mut w = vec![Letter::X; a];
            w.extend(std::iter::repeat_n(Letter::Y, b));
            e.add_term(w, Rational::one() / (factorial_q(a as u64) * factorial_q(b as u64)));
        }
    }
    let mut out = NCPoly::zero();
    let mut power = NCPoly::one();
    for k in 1..=order {
        power = power.mul_truncated(&e, order);
        let c = if k % 2 == 1 { rat(1, k as i64) } else { rat(-1, k as i64) };
        out.add_assign(&power.scale(&c));
    }
    out
}

/// The part of the Goldberg series with `a` letters `X` and `b` letters `Y`.
pub fn bch_part(a: usize, b: usize) -> BracketSeries {
    assert!(a + b >= 1);
    goldberg_homogeneous(a + b).part(a, b)
}

type PartCache = HashMap<(usize, usize), Arc<BracketSeries>>;

static PART_CACHE: Mutex<Option<PartCache>> = Mutex::new(None);

pub(crate) fn bch_part_cached(a: usize, b: usize) -> Arc<BracketSeries> {
    let mut cache = PART_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    cache
        .get_or_insert_with(HashMap::new)
        .entry((a, b))
        .or_insert_with(|| Arc::new(bch_part(a, b)))
        .clone()
}

/// Evaluates `BCH_{a,b}` with the `i`-th occurrence of `X` replaced by
/// `xs[i]` and the `j`-th occurrence of `Y` by `ys[j]`, counting occurrences
/// from the left.
pub fn bch_tilde(a: usize, b: usize, xs: &[Vector], ys: &[Vector], l: &LieAlgebra) -> Result<Vector> {
    check_dim(a, xs.len())?;
    check_dim(b, ys.len())?;
    for v in xs.iter().chain(ys) {
        check_dim(l.dim(), v.dim())?;
    }
    Ok(bch_tilde_unchecked(a, b, xs, ys, l))
}

pub(crate) fn bch_tilde_unchecked(a: usize, b: usize, xs: &[Vector], ys: &[Vector], l: &LieAlgebra) -> Vector {
    let mut out = Vector::zero(l.dim());
    if (a, b) == (1, 0) {
        return xs[0].clone();
    }
    if (a, b) == (0, 1) {
        return ys[0].clone();
    }
    for (c, w) in bch_part_cached(a, b).terms() {
        let (mut ix, mut iy) = (0, 0);
        let mut next = |letter: Letter| match letter {
            Letter::X => {
                ix += 1;
                &xs[ix - 1]
            }
            Letter::Y => {
                iy += 1;
                &ys[iy - 1]
            }
        };
        let mut v = next(w.0[0]).clone();
        for &letter in &w.0[1..] {
            let u = next(letter);
            v = l.bracket_unchecked(&v, u);
            if v.is_zero() {
                break;
            }
        }
        out.add_scaled(c, &v);
    }
    out
}

/// The two sides of the first-order BCH identity
/// `Σ_{n ≤ N} BCH_{n,1}(ξ, η) = Σ_{n ≤ N} (B*_n / n!) ad_ξ^n(η)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOrderCheck {
    /// `Σ (B*_n / n!) ad_ξ^n(η)`.
    pub bernoulli_side: Vector,
    /// `Σ bch_tilde(n, 1, [ξ; n], [η])`.
    pub bch_side: Vector,
}

impl FirstOrderCheck {
    pub fn agrees(&self) -> bool {
        self.bernoulli_side == self.bch_side
    }
}

/// Computes both sides of the first-order identity up to `order`.
pub fn bch_first_order(l: &LieAlgebra, xi: &Vector, eta: &Vector, order: usize) -> Result<FirstOrderCheck> {
    check_dim(l.dim(), xi.dim())?;
    check_dim(l.dim(), eta.dim())?;
    let mut bernoulli_side = Vector::zero(l.dim());
    let mut bch_side = Vector::zero(l.dim());
    let mut ad = eta.clone();
    for n in 0..=order {
        bernoulli_side.add_scaled(&(bernoulli_star(n) / factorial_q(n as u64)), &ad);
        ad = l.bracket_unchecked(xi, &ad);
        let xs = vec![xi.clone(); n];
        bch_side.add_scaled(&Rational::one(), &bch_tilde_unchecked(n, 1, &xs, std::slice::from_ref(eta), l));
    }
    Ok(FirstOrderCheck { bernoulli_side, bch_side })
}
