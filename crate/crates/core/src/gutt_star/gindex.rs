//! G-indices: canonical multi-indices `J = ((a_1,b_1), …, (a_r,b_r))`
//! labelling the factorizations of a `(k, ℓ)` BCH monomial into `r` factors.

use crate::exact_arith::factorial;
use num::bigint::BigInt;
use num::One;
use std::collections::BTreeMap;
use std::fmt;

/// A tuple of pairs satisfying
/// 1. `a_i ≤ k`, `b_i ≤ ℓ`;
/// 2. `a_i + b_i ≥ 1`;
/// 3. `Σ a_i = k`, `Σ b_i = ℓ`;
/// 4. nondecreasing in `(a_i + b_i, a_i)`;
/// 5. `(a, 0)` only for `a = 1` and `(0, b)` only for `b = 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GIndex {
    pairs: Vec<(usize, usize)>,
}

fn pair_key(p: &(usize, usize)) -> (usize, usize) {
    (p.0 + p.1, p.0)
}

fn admissible(p: &(usize, usize)) -> bool {
    let (a, b) = *p;
    a + b >= 1 && (b != 0 || a == 1) && (a != 0 || b == 1)
}

impl GIndex {
    /// Validates all five conditions for the given `(k, ℓ)`.
    pub fn new(pairs: Vec<(usize, usize)>, k: usize, l: usize) -> Result<Self, String> {
        if pairs.is_empty() {
            return Err("a G-index has at least one pair".into());
        }
        if let Some(p) = pairs.iter().find(|p| p.0 > k || p.1 > l) {
            return Err(format!("pair {p:?} exceeds ({k}, {l})"));
        }
        if let Some(p) = pairs.iter().find(|p| p.0 + p.1 == 0) {
            return Err(format!("pair {p:?} is empty"));
        }
        let (sa, sb) = pairs.iter().fold((0, 0), |(x, y), p| (x + p.0, y + p.1));
        if (sa, sb) != (k, l) {
            return Err(format!("sums ({sa}, {sb}) differ from ({k}, {l})"));
        }
        if pairs.windows(2).any(|w| pair_key(&w[0]) > pair_key(&w[1])) {
            return Err("pairs are not in canonical order".into());
        }
        if let Some(p) = pairs.iter().find(|p| !admissible(p)) {
            return Err(format!("pair {p:?} has a vanishing BCH component"));
        }
        Ok(GIndex { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of pairs `r`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// G-factorial: the product of the factorials of the multiplicities of
    /// repeated pairs.
    pub fn factorial(&self) -> BigInt {
        let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for p in &self.pairs {
            *counts.entry(*p).or_default() += 1;
        }
        counts.values().fold(BigInt::one(), |acc, &m| acc * factorial(m))
    }
}

impl fmt::Display for GIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str(")")
    }
}

/// Every ordered `r`-tuple of admissible pairs with sums `(k, ℓ)`.
pub fn ordered_tuples(r: usize, k: usize, l: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(r: usize, k: usize, l: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if r == 0 {
            if k == 0 && l == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // each remaining pair needs at least one letter
        if k + l < r {
            return;
        }
        for a in 0..=k {
            for b in 0..=l {
                if !admissible(&(a, b)) {
                    continue;
                }
                cur.push((a, b));
                rec(r - 1, k - a, l - b, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(r, k, l, &mut Vec::new(), &mut out);
    out
}

/// The canonical G-indices with `r` pairs for `(k, ℓ)`, each with the number
/// of ordered tuples it represents (which equals `r!/J!`).
pub fn g_indices_with_multiplicity(r: usize, k: usize, l: usize) -> Vec<(GIndex, usize)> {
    let mut counts: BTreeMap<Vec<(usize, usize)>, usize> = BTreeMap::new();
    for mut t in ordered_tuples(r, k, l) {
        t.sort_by_key(pair_key);
        *counts.entry(t).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(pairs, m)| (GIndex::new(pairs, k, l).expect("canonicalized tuple is a G-index"), m))
        .collect()
}

/// The canonical G-indices with `r` pairs for `(k, ℓ)`.
pub fn g_indices(r: usize, k: usize, l: usize) -> Vec<GIndex> {
    g_indices_with_multiplicity(r, k, l).into_iter().map(|(j, _)| j).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(r: usize, k: usize, l: usize) -> Vec<Vec<(usize, usize)>> {
        let mut v: Vec<_> = g_indices(r, k, l).into_iter().map(|j| j.pairs().to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn quadratic_examples() {
        let mut expected = vec![vec![(0, 1), (2, 1)], vec![(1, 0), (1, 2)], vec![(1, 1), (1, 1)]];
        expected.sort();
        assert_eq!(set(2, 2, 2), expected);
        assert_eq!(set(1, 2, 2), vec![vec![(2, 2)]]);
        let mut cubic = vec![vec![(0, 1), (1, 0), (2, 1)], vec![(1, 0), (1, 0), (1, 2)], vec![(1, 0), (1, 1), (1, 1)]];
        cubic.sort();
        assert_eq!(set(3, 3, 2), cubic);
        let mut c3 = vec![vec![(0, 1), (3, 1)], vec![(1, 0), (2, 2)], vec![(1, 1), (2, 1)]];
        c3.sort();
        assert_eq!(set(2, 3, 2), c3);
    }

    #[test]
    fn factorials() {
        let j = GIndex::new(vec![(1, 1), (1, 1)], 2, 2).unwrap();
        assert_eq!(j.factorial(), BigInt::from(2));
        let j = GIndex::new(vec![(0, 1), (2, 1)], 2, 2).unwrap();
        assert_eq!(j.factorial(), BigInt::from(1));
    }

    #[test]
    fn validation() {
        assert!(GIndex::new(vec![(2, 1), (0, 1)], 2, 2).is_err());
        assert!(GIndex::new(vec![(2, 0), (0, 2)], 2, 2).is_err());
        assert!(GIndex::new(vec![(1, 1)], 2, 2).is_err());
    }

    #[test]
    fn multiplicity_is_r_factorial_over_j_factorial() {
        for k in 0..=4 {
            for l in 0..=4 {
                for r in 1..=k + l {
                    for (j, m) in g_indices_with_multiplicity(r, k, l) {
                        assert_eq!(BigInt::from(m) * j.factorial(), factorial(r as u64));
                    }
                }
            }
        }
    }
}
