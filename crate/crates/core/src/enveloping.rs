//! The deformed universal enveloping algebra `U(g_z)` in PBW normal form.
//!
//! `U(g_z)` is the tensor algebra modulo `ξ⊗η − η⊗ξ − z[ξ,η]`. Elements are
//! combinations of nondecreasing index words (the PBW basis for the basis
//! order of the algebra) with coefficients in `Q[z]`. An [`Enveloping`]
//! context memoizes left multiplication by generators and the symmetrization
//! map `q_z`; it can also be specialized to a fixed rational `z`.

use crate::error::{check_dim, AlgebraError, Result};
use crate::exact_arith::{int, PolyZ, Rational};
use crate::lie_algebra::{LieAlgebra, Vector};
use crate::sym_algebra::{SymElement, SymMonomial};
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

/// A nondecreasing sequence of basis indices.
pub type PBWWord = Vec<usize>;

/// A finite combination of PBW words with `Q[z]` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UElement {
    dim: usize,
    terms: BTreeMap<PBWWord, PolyZ>,
}

impl UElement {
    pub fn zero(dim: usize) -> Self {
        UElement { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::word(dim, Vec::new(), PolyZ::one())
    }

    /// `c·w` for a word that must already be sorted.
    pub fn word(dim: usize, w: PBWWord, c: PolyZ) -> Self {
        debug_assert!(w.windows(2).all(|p| p[0] <= p[1]));
        let mut u = Self::zero(dim);
        u.add_term(w, &c);
        u
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        Self::word(dim, vec![i], PolyZ::one())
    }

    pub fn from_vector(v: &Vector) -> Self {
        let mut u = Self::zero(v.dim());
        for (i, c) in v.support() {
            u.add_term(vec![i], &PolyZ::constant(c.clone()));
        }
        u
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<PBWWord, PolyZ> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[usize]) -> PolyZ {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: PBWWord, c: &PolyZ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &PolyZ, other: &UElement) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), &(a * c));
        }
    }

    pub fn add_assign(&mut self, other: &UElement) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a);
        }
    }

    pub fn scale_poly(&self, c: &PolyZ) -> UElement {
        let mut out = UElement::zero(self.dim);
        out.add_scaled(c, self);
        out
    }

    pub fn neg(&self) -> UElement {
        self.scale_poly(&PolyZ::constant(int(-1)))
    }

    /// Highest word length; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// Every coefficient evaluated at `z0`.
    pub fn evaluate_z(&self, z0: &Rational) -> UElement {
        let mut out = UElement::zero(self.dim);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &PolyZ::constant(c.eval(z0)));
        }
        out
    }

    /// Reinterprets the PBW words as symmetric monomials (no symmetrization).
    pub fn as_sym_words(&self) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        for (w, c) in &self.terms {
            out.add_term(SymMonomial::from_indices(w.clone()), c);
        }
        out
    }

    /// Canonical text form, words rendered as label products.
    pub fn render(&self, labels: &[String]) -> String {
        self.as_sym_words().render(labels)
    }
}

/// Value of the deformation parameter used by a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Deformation {
    /// `z` stays a formal variable.
    Formal,
    /// `z` is fixed to a rational number.
    At(Rational),
}

/// Computation context for `U(g_z)` over a fixed algebra, with memoized
/// left multiplication and symmetrization.
#[derive(Debug)]
pub struct Enveloping {
    alg: LieAlgebra,
    deformation: Deformation,
    z: PolyZ,
    lmul_cache: RwLock<HashMap<(usize, PBWWord), Arc<UElement>>>,
    q_cache: RwLock<HashMap<SymMonomial, Arc<UElement>>>,
}

impl Enveloping {
    /// Context with a formal parameter `z`.
    pub fn new(alg: &LieAlgebra) -> Self {
        Self::with_deformation(alg, Deformation::Formal)
    }

    /// Context for `U(g_{z0})`.
    pub fn at(alg: &LieAlgebra, z0: Rational) -> Self {
        Self::with_deformation(alg, Deformation::At(z0))
    }

    pub fn with_deformation(alg: &LieAlgebra, deformation: Deformation) -> Self {
        let z = match &deformation {
            Deformation::Formal => PolyZ::var(),
            Deformation::At(z0) => PolyZ::constant(z0.clone()),
        };
        Enveloping {
            alg: alg.clone(),
            deformation,
            z,
            lmul_cache: RwLock::new(HashMap::new()),
            q_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn deformation(&self) -> &Deformation {
        &self.deformation
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `e_g ⊙ w` for a PBW word `w`, in normal form.
    pub fn lmul_word(&self, g: usize, w: &[usize]) -> Arc<UElement> {
        if w.first().is_none_or(|&w0| g <= w0) {
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(g);
            word.extend_from_slice(w);
            return Arc::new(UElement::word(self.dim(), word, PolyZ::one()));
        }
        let key = (g, w.to_vec());
        if let Some(hit) = self.lmul_cache.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return hit.clone();
        }
        // e_g e_{w0} rest = e_{w0} (e_g rest) + z [e_g, e_{w0}] rest
        let (w0, rest) = (w[0], &w[1..]);
        let inner = self.lmul_word(g, rest);
        let mut out = self.lmul(w0, &inner);
        for (k, c) in self.alg.bracket_basis(g, w0).support() {
            let coeff = self.z.scale(c);
            out.add_scaled(&coeff, &self.lmul_word(k, rest));
        }
        let out = Arc::new(out);
        self.lmul_cache.write().unwrap_or_else(|e| e.into_inner()).insert(key, out.clone());
        out
    }

    /// `e_g ⊙ u`.
    pub fn lmul(&self, g: usize, u: &UElement) -> UElement {
        let mut out = UElement::zero(self.dim());
        for (w, c) in u.terms() {
            out.add_scaled(c, &self.lmul_word(g, w));
        }
        out
    }

    /// Normal form of an arbitrary index word.
    pub fn normal_order(&self, word: &[usize]) -> Result<UElement> {
        for &i in word {
            if i >= self.dim() {
                return Err(AlgebraError::IndexOutOfRange { index: i, dim: self.dim() });
            }
        }
        let mut acc = UElement::one(self.dim());
        for &g in word.iter().rev() {
            acc = self.lmul(g, &acc);
        }
        Ok(acc)
    }

    /// `w ⊙ u` for a PBW word `w`.
    fn word_mul(&self, w: &[usize], u: &UElement) -> UElement {
        let mut acc = u.clone();
        for &g in w.iter().rev() {
            acc = self.lmul(g, &acc);
        }
        acc
    }

    /// The product `a ⊙ b`.
    pub fn mul(&self, a: &UElement, b: &UElement) -> Result<UElement> {
        check_dim(self.dim(), a.dim())?;
        check_dim(self.dim(), b.dim())?;
        let mut out = UElement::zero(self.dim());
        for (w, c) in a.terms() {
            out.add_scaled(c, &self.word_mul(w, b));
        }
        Ok(out)
    }

    /// `q_z` on a single monomial, via
    /// `q(m) = (1/n) Σ_i mult_i(m) · e_i ⊙ q(m − e_i)` over distinct indices.
    pub fn q_monomial(&self, m: &SymMonomial) -> Arc<UElement> {
        if m.degree() <= 1 {
            return Arc::new(UElement::word(self.dim(), m.indices().to_vec(), PolyZ::one()));
        }
        if let Some(hit) = self.q_cache.read().unwrap_or_else(|e| e.into_inner()).get(m) {
            return hit.clone();
        }
        let n = m.degree();
        let mut out = UElement::zero(self.dim());
        for (i, mult) in m.multiplicities() {
            let rest = m.without(i).expect("index is present");
            let term = self.lmul(i, &self.q_monomial(&rest));
            out.add_scaled(&PolyZ::constant(Rational::new(mult.into(), n.into())), &term);
        }
        let out = Arc::new(out);
        self.q_cache.write().unwrap_or_else(|e| e.into_inner()).insert(m.clone(), out.clone());
        out
    }

    /// The symmetrization map `q_z`, extended linearly over `Q[z]`.
    pub fn q(&self, x: &SymElement) -> Result<UElement> {
        check_dim(self.dim(), x.dim())?;
        let mut out = UElement::zero(self.dim());
        for (m, c) in x.terms() {
            out.add_scaled(c, &self.q_monomial(m));
        }
        Ok(out)
    }

    /// Inverse of [`Enveloping::q`], by peeling off top-degree words: the
    /// top-degree part of `q_z(m)` is the sorted word of `m`.
    pub fn q_inv(&self, u: &UElement) -> Result<SymElement> {
        check_dim(self.dim(), u.dim())?;
        let mut rem = u.clone();
        let mut out = SymElement::zero(self.dim());
        while let Some(top) = rem.degree() {
            let leading: Vec<(PBWWord, PolyZ)> =
                rem.terms().iter().filter(|(w, _)| w.len() == top).map(|(w, c)| (w.clone(), c.clone())).collect();
            for (w, c) in leading {
                let m = SymMonomial::from_indices(w);
                out.add_term(m.clone(), &c);
                rem.add_scaled(&-&c, &self.q_monomial(&m));
            }
        }
        Ok(out)
    }

    /// `q_z^{-1}(q_z(f) ⊙ q_z(g))`.
    pub fn star(&self, f: &SymElement, g: &SymElement) -> Result<SymElement> {
        let u = self.mul(&self.q(f)?, &self.q(g)?)?;
        self.q_inv(&u)
    }
}

/// Normal form of an arbitrary index word, with a formal parameter.
pub fn normal_order(alg: &LieAlgebra, word: &[usize]) -> Result<UElement> {
    Enveloping::new(alg).normal_order(word)
}

/// Normal ordering by repeated application of the rewrite rule
/// `e_j e_i → e_i e_j + z[e_j, e_i]` (`j > i`). `choose(n)` picks one of `n`
/// candidates (first the word, then the adjacent inversion), so callers can
/// explore different rewrite orders.
pub fn normal_order_by_rewriting(
    alg: &LieAlgebra,
    word: &[usize],
    choose: &mut dyn FnMut(usize) -> usize,
) -> Result<UElement> {
    let d = alg.dim();
    for &i in word {
        if i >= d {
            return Err(AlgebraError::IndexOutOfRange { index: i, dim: d });
        }
    }
    let mut pending: BTreeMap<Vec<usize>, PolyZ> = BTreeMap::new();
    let mut done = UElement::zero(d);
    pending.insert(word.to_vec(), PolyZ::one());
    while !pending.is_empty() {
        let keys: Vec<Vec<usize>> = pending.keys().cloned().collect();
        let w = keys[choose(keys.len()) % keys.len()].clone();
        let c = pending.remove(&w).expect("key exists");
        let inversions: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]).collect();
        if inversions.is_empty() {
            done.add_term(w, &c);
            continue;
        }
        let p = inversions[choose(inversions.len()) % inversions.len()];
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        let mut push = |w: Vec<usize>, c: PolyZ| *pending.entry(w).or_default() += &c;
        push(swapped, c.clone());
        for (k, ck) in alg.bracket_basis(w[p], w[p + 1]).support() {
            let mut shorter = w[..p].to_vec();
            shorter.push(k);
            shorter.extend_from_slice(&w[p + 2..]);
            push(shorter, (&c * &PolyZ::var()).scale(ck));
        }
        pending.retain(|_, c| !c.is_zero());
    }
    Ok(done)
}

/// `a ⊙ b` with a formal parameter.
pub fn u_mul(alg: &LieAlgebra, a: &UElement, b: &UElement) -> Result<UElement> {
    Enveloping::new(alg).mul(a, b)
}

/// `q_z(x)` with a formal parameter.
pub fn q_z(alg: &LieAlgebra, x: &SymElement) -> Result<UElement> {
    Enveloping::new(alg).q(x)
}

/// `q_z^{-1}(u)` with a formal parameter.
pub fn q_z_inv(alg: &LieAlgebra, u: &UElement) -> Result<SymElement> {
    Enveloping::new(alg).q_inv(u)
}

/// Square matrix over `Q`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * &other.entries[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        Matrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { n: self.n, entries: self.entries.iter().map(|a| a * c).collect() }
    }
}

/// The adjoint representation `(ad e_i)_{kj} = c_{ij}^k`.
pub fn adjoint_representation(alg: &LieAlgebra) -> Vec<Matrix> {
    let d = alg.dim();
    (0..d)
        .map(|i| {
            let mut m = Matrix::zero(d);
            for j in 0..d {
                for k in 0..d {
                    m.entries[k * d + j] = alg.constant(i, j, k).clone();
                }
            }
            m
        })
        .collect()
}

/// Checks `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` on all basis pairs.
pub fn validate_representation(alg: &LieAlgebra, rho: &[Matrix]) -> Result<()> {
    check_dim(alg.dim(), rho.len())?;
    let n = rho.first().map_or(0, Matrix::size);
    if rho.iter().any(|m| m.size() != n) {
        return Err(AlgebraError::InvalidRepresentation("matrices of different sizes".into()));
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let mut lhs = Matrix::zero(n);
            for (k, c) in alg.bracket_basis(i, j).support() {
                lhs = lhs.add(&rho[k].scale(c));
            }
            let rhs = rho[i].mul(&rho[j]).sub(&rho[j].mul(&rho[i]));
            if lhs != rhs {
                return Err(AlgebraError::InvalidRepresentation(format!(
                    "rho([{}, {}]) differs from the commutator",
                    alg.label(i),
                    alg.label(j)
                )));
            }
        }
    }
    Ok(())
}

/// Evaluates `q_{z0}(x)` in the representation `e_i ↦ z0·ρ(e_i)`.
pub fn represent(alg: &LieAlgebra, rho: &[Matrix], z0: &Rational, x: &SymElement) -> Result<Matrix> {
    Representation::new(alg, rho, z0.clone())?.apply(x)
}

/// A validated representation together with its evaluation context.
#[derive(Debug)]
pub struct Representation {
    env: Enveloping,
    images: Vec<Matrix>,
    size: usize,
}

impl Representation {
    pub fn new(alg: &LieAlgebra, rho: &[Matrix], z0: Rational) -> Result<Self> {
        if z0.is_zero() {
            return Err(AlgebraError::Domain("represent requires z0 != 0".into()));
        }
        validate_representation(alg, rho)?;
        let images = rho.iter().map(|m| m.scale(&z0)).collect();
        let size = rho.first().map_or(0, Matrix::size);
        Ok(Representation { env: Enveloping::at(alg, z0), images, size })
    }

    pub fn apply(&self, x: &SymElement) -> Result<Matrix> {
        let u = self.env.q(x)?;
        let mut out = Matrix::zero(self.size);
        for (w, c) in u.terms() {
            let m = w.iter().fold(Matrix::identity(self.size), |acc, &i| acc.mul(&self.images[i]));
            out = out.add(&m.scale(&c.coeff(0)));
        }
        Ok(out)
    }
}

/// The algebra morphism `U(g_1) → U(g_2)` induced by a Lie algebra
/// homomorphism.
#[derive(Debug)]
pub struct LiftedHom {
    source: Enveloping,
    target: Enveloping,
    images: Vec<Vector>,
}

/// Validates `phi` (a `dim2 × dim1` matrix whose column `i` is the image of
/// `e_i`) and returns the induced morphism.
pub fn lift_hom(l1: &LieAlgebra, l2: &LieAlgebra, phi: &[Vec<Rational>]) -> Result<LiftedHom> {
    check_dim(l2.dim(), phi.len())?;
    for row in phi {
        check_dim(l1.dim(), row.len())?;
    }
    let images: Vec<Vector> = (0..l1.dim()).map(|i| Vector(phi.iter().map(|r| r[i].clone()).collect())).collect();
    let apply = |v: &Vector| {
        let mut out = Vector::zero(l2.dim());
        for (i, c) in v.support() {
            out.add_scaled(c, &images[i]);
        }
        out
    };
    for i in 0..l1.dim() {
        for j in i + 1..l1.dim() {
            let lhs = apply(l1.bracket_basis(i, j));
            let rhs = l2.bracket_unchecked(&images[i], &images[j]);
            if lhs != rhs {
                return Err(AlgebraError::NotAHomomorphism(format!(
                    "phi([{}, {}]) != [phi({}), phi({})]",
                    l1.label(i),
                    l1.label(j),
                    l1.label(i),
                    l1.label(j)
                )));
            }
        }
    }
    Ok(LiftedHom { source: Enveloping::new(l1), target: Enveloping::new(l2), images })
}

impl LiftedHom {
    /// Letterwise image of every word, normal-ordered in the target.
    pub fn apply(&self, u: &UElement) -> Result<UElement> {
        check_dim(self.source.dim(), u.dim())?;
        let d2 = self.target.dim();
        let mut out = UElement::zero(d2);
        for (w, c) in u.terms() {
            let mut acc = UElement::one(d2);
            for &g in w.iter().rev() {
                let mut next = UElement::zero(d2);
                for (k, a) in self.images[g].support() {
                    next.add_scaled(&PolyZ::constant(a.clone()), &self.target.lmul(k, &acc));
                }
                acc = next;
            }
            out.add_scaled(c, &acc);
        }
        Ok(out)
    }

    /// The induced map `q_z^{-1} ∘ lift ∘ q_z` on symmetric algebras.
    pub fn apply_sym(&self, x: &SymElement) -> Result<SymElement> {
        let u = self.apply(&self.source.q(x)?)?;
        self.target.q_inv(&u)
    }

    pub fn source(&self) -> &Enveloping {
        &self.source
    }

    pub fn target(&self) -> &Enveloping {
        &self.target
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn w(dim: usize, word: &[usize], c: PolyZ) -> UElement {
        UElement::word(dim, word.to_vec(), c)
    }

    #[test]
    fn heisenberg_rewrite() {
        let h = LieAlgebra::heisenberg(1);
        let qp = normal_order(&h, &[1, 0]).unwrap();
        let mut expected = w(3, &[0, 1], PolyZ::one());
        expected.add_term(vec![2], &PolyZ::monomial(int(-1), 1));
        assert_eq!(qp, expected);
        assert_eq!(normal_order(&h, &[0, 1, 2]).unwrap(), w(3, &[0, 1, 2], PolyZ::one()));
        assert!(normal_order(&h, &[3]).is_err());
        let a = LieAlgebra::abelian(3);
        assert_eq!(normal_order(&a, &[2, 0, 1, 0]).unwrap(), w(3, &[0, 0, 1, 2], PolyZ::one()));
    }

    #[test]
    fn symmetrization_examples() {
        let h = LieAlgebra::heisenberg(1);
        let env = Enveloping::new(&h);
        let pq = SymElement::mono(3, SymMonomial::from_indices(vec![0, 1]));
        let mut expected = w(3, &[0, 1], PolyZ::one());
        expected.add_term(vec![2], &PolyZ::monomial(rat(-1, 2), 1));
        assert_eq!(env.q(&pq).unwrap(), expected);
        assert_eq!(env.q(&SymElement::one(3)).unwrap(), UElement::one(3));
        let inv = env.q_inv(&w(3, &[0, 1], PolyZ::one())).unwrap();
        let mut expected = pq.clone();
        expected.add_term(SymMonomial::power(2, 1), &PolyZ::monomial(rat(1, 2), 1));
        assert_eq!(inv, expected);
    }

    #[test]
    fn star_of_generators() {
        let h = LieAlgebra::heisenberg(1);
        let env = Enveloping::new(&h);
        let s = env.star(&SymElement::basis(3, 0), &SymElement::basis(3, 1)).unwrap();
        assert_eq!(s.render(h.labels()), "P*Q + (1/2)z*E");
    }

    #[test]
    fn rewriting_matches_fast_path() {
        let s = LieAlgebra::so3();
        let word = [2, 1, 0, 2, 1, 0];
        let fast = normal_order(&s, &word).unwrap();
        let mut k = 0usize;
        let slow = normal_order_by_rewriting(&s, &word, &mut |n| {
            k = k.wrapping_mul(31).wrapping_add(7);
            k % n
        })
        .unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn adjoint_is_a_representation() {
        let s = LieAlgebra::so3();
        let rho = adjoint_representation(&s);
        assert!(validate_representation(&s, &rho).is_ok());
        let x = SymElement::mono(3, SymMonomial::from_indices(vec![0, 1]));
        let m = represent(&s, &rho, &int(1), &x).unwrap();
        let expected = rho[0].mul(&rho[1]).add(&rho[1].mul(&rho[0])).scale(&rat(1, 2));
        assert_eq!(m, expected);
        assert!(represent(&s, &rho, &int(0), &x).is_err());
    }

    #[test]
    fn homomorphism_validation() {
        let h = LieAlgebra::heisenberg(1);
        let a = LieAlgebra::abelian(1);
        let phi = vec![vec![int(0), int(0), int(1)]];
        assert!(lift_hom(&h, &a, &phi).is_err());
        let scale = vec![
            vec![int(2), int(0), int(0)],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(2)],
        ];
        let lift = lift_hom(&h, &h, &scale).unwrap();
        let qp = normal_order(&h, &[1, 0]).unwrap();
        let img = lift.apply(&qp).unwrap();
        let mut expected = w(3, &[0, 1], PolyZ::constant(int(2)));
        expected.add_term(vec![2], &PolyZ::monomial(int(-2), 1));
        assert_eq!(img, expected);
    }
}
