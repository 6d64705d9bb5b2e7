//! The Hopf structure on `Sym(g)`: the coproduct with primitive generators,
//! the counit and the sign antipode. These are not deformed by `⋆_z`; the
//! checks here verify the axioms against the star product at a fixed `z0`.

use crate::enveloping::{Enveloping, PBWWord, UElement};
use crate::error::{check_dim, Result};
use crate::exact_arith::{binomial, int, PolyZ, Rational};
use crate::gutt_star::GuttStar;
use crate::lie_algebra::LieAlgebra;
use crate::seminorm::{factorial_pow, p_r, BasisSeminorm, CheckLine, Order, Report, Value};
use crate::sym_algebra::{SymElement, SymMonomial};
use num::One;
use std::collections::BTreeMap;

/// An element of `Sym(g) ⊗ Sym(g)` in the monomial tensor basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSquareElement {
    dim: usize,
    terms: BTreeMap<(SymMonomial, SymMonomial), PolyZ>,
}

impl TensorSquareElement {
    pub fn zero(dim: usize) -> Self {
        TensorSquareElement { dim, terms: BTreeMap::new() }
    }

    /// `a ⊗ b`.
    pub fn pure(a: &SymElement, b: &SymElement) -> Self {
        let mut out = TensorSquareElement::zero(a.dim());
        for (m, c) in a.terms() {
            for (n, e) in b.terms() {
                out.add_term(m.clone(), n.clone(), &(c * e));
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<(SymMonomial, SymMonomial), PolyZ> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: SymMonomial, b: SymMonomial, c: &PolyZ) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let entry = self.terms.entry(key.clone()).or_insert_with(PolyZ::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign(&mut self, other: &TensorSquareElement) {
        for ((a, b), c) in &other.terms {
            self.add_term(a.clone(), b.clone(), c);
        }
    }

    /// The leg swap `a ⊗ b ↦ b ⊗ a`.
    pub fn swap(&self) -> Self {
        let mut out = TensorSquareElement::zero(self.dim);
        for ((a, b), c) in &self.terms {
            out.add_term(b.clone(), a.clone(), c);
        }
        out
    }

    /// Applies `f ⊗ id`, where `f` maps monomials to elements.
    pub fn map_left(&self, f: impl Fn(&SymMonomial) -> SymElement) -> Self {
        let mut out = TensorSquareElement::zero(self.dim);
        for ((a, b), c) in &self.terms {
            for (m, e) in f(a).terms() {
                out.add_term(m.clone(), b.clone(), &(c * e));
            }
        }
        out
    }

    /// Applies `id ⊗ f`.
    pub fn map_right(&self, f: impl Fn(&SymMonomial) -> SymElement) -> Self {
        self.swap().map_left(f).swap()
    }

    /// `(ε ⊗ id)`: keeps terms whose left leg is the unit.
    pub fn counit_left(&self) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        for ((a, b), c) in &self.terms {
            if a.is_unit() {
                out.add_term(b.clone(), c);
            }
        }
        out
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> SymElement {
        self.swap().counit_left()
    }

    /// `μ_⋆ ∘ (f ⊗ g)`: multiplies the legs with the star product.
    pub fn star_contract(&self, star: &GuttStar) -> SymElement {
        let mut out = SymElement::zero(self.dim);
        for ((a, b), c) in &self.terms {
            out.add_scaled(c, &star.star_monomials(a, b));
        }
        out
    }

    /// `(a ⊗ b)·(a' ⊗ b') = (a ⋆ a') ⊗ (b ⋆ b')`, extended bilinearly.
    pub fn star_legs(&self, other: &TensorSquareElement, star: &GuttStar) -> Self {
        let mut out = TensorSquareElement::zero(self.dim);
        for ((a, b), c) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let left = star.star_monomials(a, a2);
                let right = star.star_monomials(b, b2);
                let cc = c * c2;
                for (m, e) in left.terms() {
                    let ce = &cc * e;
                    for (n, f) in right.terms() {
                        out.add_term(m.clone(), n.clone(), &(&ce * f));
                    }
                }
            }
        }
        out
    }
}

/// `Δ` on one monomial: `Σ_{b ≤ a} Π C(a_i, b_i) x^b ⊗ x^{a−b}` in exponent
/// notation, i.e. the subset sum with repeated letters merged.
pub fn coproduct_monomial(dim: usize, m: &SymMonomial) -> TensorSquareElement {
    let exps = m.exponents(dim);
    let mut out = TensorSquareElement::zero(dim);
    let mut cur = vec![0usize; dim];
    fn rec(i: usize, exps: &[usize], cur: &mut Vec<usize>, out: &mut TensorSquareElement) {
        if i == exps.len() {
            let coeff: num::BigInt = exps.iter().zip(cur.iter()).map(|(&a, &b)| binomial(a as u64, b as u64)).product();
            let rest: Vec<usize> = exps.iter().zip(cur.iter()).map(|(a, b)| a - b).collect();
            out.add_term(
                SymMonomial::from_exponents(cur),
                SymMonomial::from_exponents(&rest),
                &PolyZ::constant(Rational::from_integer(coeff)),
            );
            return;
        }
        for b in 0..=exps[i] {
            cur[i] = b;
            rec(i + 1, exps, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, &exps, &mut cur, &mut out);
    out
}

/// `Δ(x)`, extended linearly over `Q[z]`.
pub fn coproduct(x: &SymElement) -> TensorSquareElement {
    let mut out = TensorSquareElement::zero(x.dim());
    for (m, c) in x.terms() {
        for ((a, b), e) in coproduct_monomial(x.dim(), m).terms() {
            out.add_term(a.clone(), b.clone(), &(c * e));
        }
    }
    out
}

/// `S(x)`: the degree-`n` component is multiplied by `(−1)^n`.
pub fn antipode(x: &SymElement) -> SymElement {
    let mut out = SymElement::zero(x.dim());
    for (m, c) in x.terms() {
        if m.degree() % 2 == 0 {
            out.add_term(m.clone(), c);
        } else {
            out.add_term(m.clone(), &-c);
        }
    }
    out
}

/// `ε(x)`: the coefficient of the unit monomial.
pub fn counit(x: &SymElement) -> PolyZ {
    x.coeff(&SymMonomial::unit())
}

type Triple = BTreeMap<(SymMonomial, SymMonomial, SymMonomial), PolyZ>;

fn add_triple(t: &mut Triple, key: (SymMonomial, SymMonomial, SymMonomial), c: &PolyZ) {
    let e = t.entry(key.clone()).or_insert_with(PolyZ::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&key);
    }
}

/// `(Δ ⊗ id)∘Δ(x)` and `(id ⊗ Δ)∘Δ(x)`.
fn coassociativity_sides(x: &SymElement) -> (Triple, Triple) {
    let d = x.dim();
    let delta = coproduct(x);
    let (mut left, mut right) = (Triple::new(), Triple::new());
    for ((a, b), c) in delta.terms() {
        for ((a1, a2), e) in coproduct_monomial(d, a).terms() {
            add_triple(&mut left, (a1.clone(), a2.clone(), b.clone()), &(c * e));
        }
        for ((b1, b2), e) in coproduct_monomial(d, b).terms() {
            add_triple(&mut right, (a.clone(), b1.clone(), b2.clone()), &(c * e));
        }
    }
    (left, right)
}

/// `Δ_U` on a PBW element: generators are primitive, so an ordered word maps
/// to the sum over its position subsets of subword ⊗ complement, and
/// subwords of ordered words stay ordered.
pub fn coproduct_u(u: &UElement) -> BTreeMap<(PBWWord, PBWWord), PolyZ> {
    let mut out: BTreeMap<(PBWWord, PBWWord), PolyZ> = BTreeMap::new();
    for (w, c) in u.terms() {
        let n = w.len();
        for mask in 0u64..(1u64 << n) {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (i, &g) in w.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    a.push(g);
                } else {
                    b.push(g);
                }
            }
            let key = (a, b);
            let e = out.entry(key.clone()).or_insert_with(PolyZ::zero);
            *e += c;
            if e.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

/// Whether `(q_z ⊗ q_z)∘Δ(m) = Δ_U(q_z(m))` for a monomial.
pub fn undeformed_check(env: &Enveloping, m: &SymMonomial) -> bool {
    let lhs_sym = coproduct_monomial(env.dim(), m);
    let mut lhs: BTreeMap<(PBWWord, PBWWord), PolyZ> = BTreeMap::new();
    for ((a, b), c) in lhs_sym.terms() {
        let (qa, qb) = (env.q_monomial(a), env.q_monomial(b));
        for (wa, ca) in qa.terms() {
            for (wb, cb) in qb.terms() {
                let key = (wa.clone(), wb.clone());
                let e = lhs.entry(key.clone()).or_insert_with(PolyZ::zero);
                *e += &(&(c * ca) * cb);
                if e.is_zero() {
                    lhs.remove(&key);
                }
            }
        }
    }
    lhs == coproduct_u(&env.q_monomial(m))
}

/// Pass/fail of each Hopf axiom at one parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub z0: Rational,
    pub checks: Vec<(&'static str, bool)>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

impl std::fmt::Display for HopfReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (name, ok) in &self.checks {
            writeln!(f, "{:<20} z0={:<6} {}", name, self.z0.to_string(), if *ok { "PASS" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Checks, exactly at `z0`: the counit axioms, coassociativity and
/// cocommutativity on `x`, the antipode axiom on both sides, and that `Δ`
/// is multiplicative: `Δ(x ⋆ y) = Δ(x) ⋆⊗⋆ Δ(y)`.
pub fn verify_hopf(alg: &LieAlgebra, x: &SymElement, y: &SymElement, z0: &Rational) -> Result<HopfReport> {
    check_dim(alg.dim(), x.dim())?;
    check_dim(alg.dim(), y.dim())?;
    let star = GuttStar::at(alg, z0.clone());
    let dx = coproduct(x);
    let unit_eps = SymElement::one(alg.dim()).scale_poly(&counit(x));
    let (l, r) = coassociativity_sides(x);
    let s_left = dx.map_left(|m| antipode(&SymElement::mono(alg.dim(), m.clone()))).star_contract(&star);
    let s_right = dx.map_right(|m| antipode(&SymElement::mono(alg.dim(), m.clone()))).star_contract(&star);
    let xy = star.star(x, y)?;
    let morphism = coproduct(&xy) == dx.star_legs(&coproduct(y), &star);
    let checks = vec![
        ("counit-left", dx.counit_left() == *x),
        ("counit-right", dx.counit_right() == *x),
        ("coassociativity", l == r),
        ("cocommutativity", dx.swap() == dx),
        ("antipode-left", s_left == unit_eps),
        ("antipode-right", s_right == unit_eps),
        ("antipode-involution", antipode(&antipode(x)) == *x),
        ("delta-morphism", morphism),
    ];
    Ok(HopfReport { z0: z0.clone(), checks })
}

/// `(p_R ⊗ p_R)` on the monomial tensor basis (the ℓ¹ cross norm).
pub fn p_r_tensor(t: &TensorSquareElement, p: &BasisSeminorm, r: Order, z_abs: &Rational) -> Value {
    let mut total = Value::zero();
    for ((a, b), c) in t.terms() {
        let w = c.abs_eval(z_abs) * p.monomial_weight(a) * p.monomial_weight(b);
        let f = factorial_pow(a.degree(), r.value()).mul(&factorial_pow(b.degree(), r.value()));
        total = total.add(&Value::Exact(w).mul(&f));
    }
    total
}

/// `p_R(S(m)) ≤ p_R(m)` and `(p_R ⊗ p_R)(Δm) ≤ (2p)_R(m)` on the given
/// monomials.
pub fn hopf_seminorm_check(alg: &LieAlgebra, p: &BasisSeminorm, r: Order, monomials: &[SymMonomial]) -> Report {
    let d = alg.dim();
    let two_p = p.scaled(&int(2));
    let one = Rational::one();
    let mut lines = Vec::new();
    for m in monomials {
        let x = SymElement::mono(d, m.clone());
        let id = m.render(alg.labels());
        let px = p_r(&x, p, r, &one);
        lines.push(CheckLine::le(format!("antipode-bound[R={r}]"), id.clone(), p_r(&antipode(&x), p, r, &one), px));
        let lhs = p_r_tensor(&coproduct(&x), p, r, &one);
        lines.push(CheckLine::le(format!("coproduct-bound[R={r}]"), id, lhs, p_r(&x, &two_p, r, &one)));
    }
    Report::new(lines)
}

/// The unit-weight form of the coproduct bound on a degree-`n` monomial
/// with distinct letters: `Σ_I |I|!^R (n−|I|)!^R ≤ 2^n n!^R`.
pub fn subset_factorial_check(n: usize, r: Order) -> CheckLine {
    let mut lhs = Value::zero();
    for i in 0..=n {
        let count = Value::Exact(Rational::from_integer(binomial(n as u64, i as u64)));
        lhs = lhs.add(&count.mul(&factorial_pow(i, r.value()).mul(&factorial_pow(n - i, r.value()))));
    }
    let rhs = Value::Exact(Rational::from_integer(num::BigInt::from(2u8).pow(n as u32))).mul(&factorial_pow(n, r.value()));
    CheckLine::le(format!("subset-factorials[R={r}]"), format!("n={n}"), lhs, rhs)
}
