//! Finite-dimensional Lie algebras given by rational structure constants.
//!
//! The basis order is also the PBW order used by [`crate::enveloping`].

use crate::error::{check_dim, AlgebraError, Result, Violation};
use crate::exact_arith::{int, Rational};
use num::{One, Zero};
use std::collections::BTreeSet;
use std::ops::{Add, Neg, Sub};

/// Coordinates of an element of `g` in the basis of its algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// The basis vector `e_i` (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Vector(cs.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Vector) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// Nonzero coordinates as `(index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// A Lie algebra `g = span(e_1, …, e_d)` with `[e_i, e_j] = Σ_k c_{ij}^k e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// `brackets[i * dim + j] = [e_i, e_j]`, both triangles filled.
    brackets: Vec<Vector>,
}

/// Raw structure constants `c[i][j][k] = c_{ij}^k`.
pub type StructureConstants = Vec<Vec<Vec<Rational>>>;

/// Checks antisymmetry, then the Jacobi identity, reporting the first
/// failing index tuple.
#[allow(clippy::needless_range_loop)] // indices mirror c_{ij}^k
pub fn validate_constants(c: &StructureConstants) -> std::result::Result<(), Violation> {
    let d = c.len();
    for (i, row) in c.iter().enumerate() {
        if row.len() != d || row.iter().any(|v| v.len() != d) {
            return Err(Violation::Malformed(format!("row {} is not {d}x{d}", i + 1)));
        }
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if c[i][j][k] != -c[j][i][k].clone() {
                    return Err(Violation::Antisymmetry { i: i + 1, j: j + 1, k: k + 1 });
                }
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for m in 0..d {
                    let mut s = Rational::zero();
                    for l in 0..d {
                        s += &c[i][j][l] * &c[l][k][m]
                            + &c[j][k][l] * &c[l][i][m]
                            + &c[k][i][l] * &c[l][j][m];
                    }
                    if !s.is_zero() {
                        return Err(Violation::Jacobi { i: i + 1, j: j + 1, k: k + 1, m: m + 1 });
                    }
                }
            }
        }
    }
    Ok(())
}

impl LieAlgebra {
    /// Builds an algebra from a full table of structure constants.
    pub fn from_structure_constants(labels: Vec<String>, c: StructureConstants) -> Result<Self> {
        if labels.len() != c.len() {
            return Err(AlgebraError::Invalid(Violation::Malformed(format!(
                "{} labels for dimension {}",
                labels.len(),
                c.len()
            ))));
        }
        validate_constants(&c).map_err(AlgebraError::Invalid)?;
        let d = c.len();
        let brackets = (0..d * d).map(|ij| Vector(c[ij / d][ij % d].clone())).collect();
        Ok(LieAlgebra { labels, brackets })
    }

    /// Builds an algebra from a list of basis brackets `[e_i, e_j] = v`.
    /// Either triangle may be given; the other is completed by antisymmetry.
    /// Repeated pairs must agree; unspecified pairs bracket to zero.
    #[allow(clippy::needless_range_loop)]
    pub fn from_brackets(labels: Vec<String>, entries: &[(usize, usize, Vector)]) -> Result<Self> {
        let d = labels.len();
        let malformed = |msg: String| AlgebraError::Invalid(Violation::Malformed(msg));
        let mut c: StructureConstants = vec![vec![vec![Rational::zero(); d]; d]; d];
        let mut seen: Vec<Option<Vector>> = vec![None; d * d];
        for (i, j, v) in entries {
            let (i, j) = (*i, *j);
            if i >= d || j >= d {
                return Err(AlgebraError::IndexOutOfRange { index: i.max(j), dim: d });
            }
            check_dim(d, v.dim())?;
            if i == j {
                if !v.is_zero() {
                    return Err(AlgebraError::Invalid(Violation::Antisymmetry {
                        i: i + 1,
                        j: j + 1,
                        k: v.support().next().map(|(k, _)| k + 1).unwrap_or(1),
                    }));
                }
                continue;
            }
            let (lo, hi, v) = if i < j { (i, j, v.clone()) } else { (j, i, -v) };
            match &seen[lo * d + hi] {
                Some(prev) if *prev != v => {
                    return Err(malformed(format!(
                        "conflicting entries for [{}, {}]",
                        labels[lo], labels[hi]
                    )))
                }
                _ => seen[lo * d + hi] = Some(v.clone()),
            }
            for k in 0..d {
                c[lo][hi][k] = v.0[k].clone();
                c[hi][lo][k] = -v.0[k].clone();
            }
        }
        Self::from_structure_constants(labels, c)
    }

    /// `d`-dimensional abelian algebra with labels `e1, …, ed`.
    pub fn abelian(d: usize) -> Self {
        assert!(d >= 1);
        let labels = (1..=d).map(|i| format!("e{i}")).collect();
        Self::from_brackets(labels, &[]).expect("abelian algebra is valid")
    }

    /// Heisenberg algebra of dimension `2n+1` with `[P_i, Q_i] = E`.
    /// Labels are `P, Q, E` for `n = 1` and `P1, …, Pn, Q1, …, Qn, E` otherwise.
    pub fn heisenberg(n: usize) -> Self {
        assert!(n >= 1);
        let d = 2 * n + 1;
        let labels: Vec<String> = if n == 1 {
            vec!["P".into(), "Q".into(), "E".into()]
        } else {
            (1..=n)
                .map(|i| format!("P{i}"))
                .chain((1..=n).map(|i| format!("Q{i}")))
                .chain(std::iter::once("E".to_string()))
                .collect()
        };
        let entries: Vec<_> = (0..n).map(|i| (i, n + i, Vector::basis(d, 2 * n))).collect();
        Self::from_brackets(labels, &entries).expect("Heisenberg algebra is valid")
    }

    /// `so(3)` with `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
    pub fn so3() -> Self {
        let labels = vec!["e1".into(), "e2".into(), "e3".into()];
        let entries = [
            (0, 1, Vector::basis(3, 2)),
            (1, 2, Vector::basis(3, 0)),
            (2, 0, Vector::basis(3, 1)),
        ];
        Self::from_brackets(labels, &entries).expect("so(3) is valid")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Structure constant `c_{ij}^k` (0-based).
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.brackets[i * self.dim() + j].0[k]
    }

    /// `[e_i, e_j]` (0-based).
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.brackets[i * self.dim() + j]
    }

    /// Full table of structure constants.
    pub fn structure_constants(&self) -> StructureConstants {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.bracket_basis(i, j).0.clone()).collect()).collect()
    }

    /// Re-runs both invariant checks.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        validate_constants(&self.structure_constants())
    }

    /// Whether every structure constant vanishes.
    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(Vector::is_zero)
    }

    /// `[x, y]^k = Σ_{ij} x_i y_j c_{ij}^k`.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        check_dim(self.dim(), x.dim())?;
        check_dim(self.dim(), y.dim())?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let d = self.dim();
        let mut out = Vector::zero(d);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                if i != j {
                    out.add_scaled(&(xi * yj), self.bracket_basis(i, j));
                }
            }
        }
        out
    }

    /// `(ad_x)^n (y)`.
    pub fn ad_power(&self, x: &Vector, n: usize, y: &Vector) -> Result<Vector> {
        check_dim(self.dim(), x.dim())?;
        check_dim(self.dim(), y.dim())?;
        let mut v = y.clone();
        for _ in 0..n {
            v = self.bracket_unchecked(x, &v);
        }
        Ok(v)
    }

    /// Smallest `N ≤ max_n` such that every `(N+1)`-fold nested bracket of
    /// basis vectors vanishes.
    pub fn nilpotency_index(&self, max_n: usize) -> Option<usize> {
        let d = self.dim();
        // Left-normed brackets of basis vectors span all nested brackets.
        let mut level: BTreeSet<Vector> = (0..d).map(|i| Vector::basis(d, i)).collect();
        for n in 1..=max_n {
            let next: BTreeSet<Vector> = level
                .iter()
                .flat_map(|v| (0..d).map(move |i| (v, i)))
                .map(|(v, i)| self.bracket_unchecked(v, &Vector::basis(d, i)))
                .filter(|v| !v.is_zero())
                .collect();
            if next.is_empty() {
                return Some(n);
            }
            level = next;
        }
        None
    }
}
