//! The symmetric algebra `Sym(g)` with coefficients in `Q[z]`.

use crate::error::{check_dim, Result};
use crate::exact_arith::{PolyZ, Rational};
use crate::lie_algebra::Vector;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A monomial `e_{i_1} ⋯ e_{i_n}` stored as the sorted index multiset.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMonomial(Vec<usize>);

impl SymMonomial {
    pub fn unit() -> Self {
        SymMonomial(Vec::new())
    }

    /// Sorts the given indices.
    pub fn from_indices(mut idx: Vec<usize>) -> Self {
        idx.sort_unstable();
        SymMonomial(idx)
    }

    /// `e_i^k`.
    pub fn power(i: usize, k: usize) -> Self {
        SymMonomial(vec![i; k])
    }

    /// Monomial with the given exponent for each basis index.
    pub fn from_exponents(exps: &[usize]) -> Self {
        SymMonomial(exps.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k)).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union.
    pub fn mul(&self, other: &SymMonomial) -> SymMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SymMonomial(out)
    }

    /// Distinct indices with their multiplicities, in increasing order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &i in &self.0 {
            match out.last_mut() {
                Some((j, m)) if *j == i => *m += 1,
                _ => out.push((i, 1)),
            }
        }
        out
    }

    /// Exponent vector of length `dim`.
    pub fn exponents(&self, dim: usize) -> Vec<usize> {
        let mut e = vec![0; dim];
        for &i in &self.0 {
            e[i] += 1;
        }
        e
    }

    /// The monomial with one copy of `i` removed, if present.
    pub fn without(&self, i: usize) -> Option<SymMonomial> {
        let pos = self.0.iter().position(|&j| j == i)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(SymMonomial(v))
    }

    /// Renders as `P^2*Q`; the unit renders as `1`.
    pub fn render(&self, labels: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.multiplicities()
            .into_iter()
            .map(|(i, k)| if k == 1 { labels[i].clone() } else { format!("{}^{k}", labels[i]) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A finite combination of symmetric monomials with `Q[z]` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    dim: usize,
    terms: BTreeMap<SymMonomial, PolyZ>,
}

impl SymElement {
    pub fn zero(dim: usize) -> Self {
        SymElement { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, SymMonomial::unit(), PolyZ::one())
    }

    pub fn monomial(dim: usize, m: SymMonomial, c: PolyZ) -> Self {
        let mut x = Self::zero(dim);
        x.add_term(m, &c);
        x
    }

    /// Monomial with coefficient 1.
    pub fn mono(dim: usize, m: SymMonomial) -> Self {
        Self::monomial(dim, m, PolyZ::one())
    }

    /// The basis vector `e_i` as a degree-one element.
    pub fn basis(dim: usize, i: usize) -> Self {
        Self::mono(dim, SymMonomial(vec![i]))
    }

    /// A vector of `g` as a degree-one element.
    pub fn from_vector(v: &Vector) -> Self {
        let mut x = Self::zero(v.dim());
        for (i, c) in v.support() {
            x.add_term(SymMonomial(vec![i]), &PolyZ::constant(c.clone()));
        }
        x
    }

    /// The symmetric product `v_1 ⋯ v_n` of vectors.
    pub fn product_of_vectors(dim: usize, vs: &[Vector]) -> Self {
        vs.iter().fold(Self::one(dim), |acc, v| sym_mul_unchecked(&acc, &Self::from_vector(v)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<SymMonomial, PolyZ> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<SymMonomial, PolyZ> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SymMonomial) -> PolyZ {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: SymMonomial, c: &PolyZ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add_assign(&mut self, other: &SymElement) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn add_scaled(&mut self, c: &PolyZ, other: &SymElement) {
        for (m, a) in &other.terms {
            self.add_term(m.clone(), &(a * c));
        }
    }

    pub fn add(&self, other: &SymElement) -> Result<SymElement> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn sub(&self, other: &SymElement) -> Result<SymElement> {
        check_dim(self.dim, other.dim)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub(crate) fn add_unchecked(&self, other: &SymElement) -> SymElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> SymElement {
        SymElement { dim: self.dim, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> SymElement {
        self.scale_poly(&PolyZ::constant(c.clone()))
    }

    pub fn scale_poly(&self, c: &PolyZ) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        out.add_scaled(c, self);
        out
    }

    /// Highest monomial degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(SymMonomial::degree).max()
    }

    /// Highest power of `z` in any coefficient; `None` for zero.
    pub fn z_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(PolyZ::degree).max()
    }

    /// Whether every coefficient is a constant polynomial.
    pub fn is_constant_in_z(&self) -> bool {
        self.terms.values().all(PolyZ::is_constant)
    }

    /// Degrees that occur, in increasing order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(SymMonomial::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Coefficient of `z^n` in every entry.
    pub fn z_coefficient(&self, n: usize) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &PolyZ::constant(c.coeff(n)));
        }
        out
    }

    /// Canonical text form: descending degree, then lexicographic index
    /// order, then ascending power of `z`, e.g. `P*Q + (1/2)z*E`.
    pub fn render(&self, labels: &[String]) -> String {
        let mut entries: Vec<(&SymMonomial, usize, &Rational)> = Vec::new();
        for (m, c) in &self.terms {
            for (k, a) in c.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    entries.push((m, k, a));
                }
            }
        }
        entries.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)).then(a.1.cmp(&b.1)));
        if entries.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (m, k, a)) in entries.into_iter().enumerate() {
            let negative = a.is_negative();
            if n == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&render_term(&a.abs(), k, m, labels));
        }
        out
    }
}

fn render_term(a: &Rational, k: usize, m: &SymMonomial, labels: &[String]) -> String {
    let mut prefix = String::new();
    if !(a.is_one() && (k > 0 || !m.is_unit())) {
        if a.is_integer() {
            prefix.push_str(&a.to_string());
        } else {
            prefix.push_str(&format!("({a})"));
        }
    }
    match k {
        0 => {}
        1 => prefix.push('z'),
        _ => prefix.push_str(&format!("z^{k}")),
    }
    if m.is_unit() {
        prefix
    } else if prefix.is_empty() {
        m.render(labels)
    } else {
        format!("{prefix}*{}", m.render(labels))
    }
}

/// The commutative product `a·b`.
pub fn sym_mul(a: &SymElement, b: &SymElement) -> Result<SymElement> {
    check_dim(a.dim, b.dim)?;
    Ok(sym_mul_unchecked(a, b))
}

pub(crate) fn sym_mul_unchecked(a: &SymElement, b: &SymElement) -> SymElement {
    let mut out = SymElement::zero(a.dim);
    for (m, c) in &a.terms {
        for (n, d) in &b.terms {
            out.add_term(m.mul(n), &(c * d));
        }
    }
    out
}

/// Restriction of `x` to its degree-`n` monomials.
pub fn project(x: &SymElement, n: usize) -> SymElement {
    SymElement {
        dim: x.dim,
        terms: x.terms.iter().filter(|(m, _)| m.degree() == n).map(|(m, c)| (m.clone(), c.clone())).collect(),
    }
}

/// Every coefficient evaluated at `z = z0`.
pub fn evaluate_z(x: &SymElement, z0: &Rational) -> SymElement {
    let mut out = SymElement::zero(x.dim);
    for (m, c) in &x.terms {
        out.add_term(m.clone(), &PolyZ::constant(c.eval(z0)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};

    fn labels() -> Vec<String> {
        vec!["P".into(), "Q".into(), "E".into()]
    }

    #[test]
    fn products() {
        let e1 = SymElement::basis(3, 0);
        let e2 = SymElement::basis(3, 1);
        let p = sym_mul(&e1, &e2).unwrap();
        assert_eq!(p, SymElement::mono(3, SymMonomial::from_indices(vec![1, 0])));
        let s = sym_mul(&e1.add(&e2).unwrap(), &e1).unwrap();
        assert_eq!(s.terms().len(), 2);
        assert_eq!(sym_mul(&SymElement::one(3), &s).unwrap(), s);
        assert!(sym_mul(&e1, &SymElement::basis(2, 0)).is_err());
    }

    #[test]
    fn projections() {
        let x = SymElement::mono(3, SymMonomial::from_indices(vec![0, 1])).add(&SymElement::basis(3, 2)).unwrap();
        assert_eq!(project(&x, 1), SymElement::basis(3, 2));
        assert!(project(&x, 5).is_zero());
        let back = project(&x, 1).add(&project(&x, 2)).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn evaluation() {
        let x = SymElement::monomial(3, SymMonomial::unit(), PolyZ::monomial(int(1), 2));
        assert_eq!(evaluate_z(&x, &int(2)), SymElement::monomial(3, SymMonomial::unit(), PolyZ::constant(int(4))));
    }

    #[test]
    fn rendering() {
        let l = labels();
        let mut x = SymElement::mono(3, SymMonomial::from_indices(vec![0, 1]));
        x.add_term(SymMonomial::power(2, 1), &PolyZ::monomial(rat(1, 2), 1));
        assert_eq!(x.render(&l), "P*Q + (1/2)z*E");
        let mut y = SymElement::monomial(3, SymMonomial::power(0, 2), PolyZ::constant(int(-3)));
        y.add_term(SymMonomial::unit(), &PolyZ::from_ints(&[1, -1, 0, 2]));
        assert_eq!(y.render(&l), "-3*P^2 + 1 - z + 2z^3");
        assert_eq!(SymElement::zero(3).render(&l), "0");
        let w = SymElement::monomial(3, SymMonomial::power(1, 1), PolyZ::monomial(int(-1), 2));
        assert_eq!(w.render(&l), "-z^2*Q");
    }
}
