//! ℓ¹-type `p_R` seminorms on `Sym(g)` and the continuity estimates.
//!
//! For weights `w_i > 0` on the basis,
//! `p_R(x) = Σ_m [Σ_j |a_j| |z|^j] · (deg m)!^R · Π w_i` where `a_j` are the
//! `z`-coefficients of the monomial `m`. Integer orders are evaluated exactly;
//! fractional orders in double precision, compared with a relative slack of
//! [`REL_TOL`].

use crate::concurrency::Execution;
use crate::enveloping::Deformation;
use crate::error::{AlgebraError, Result};
use crate::exact_arith::{bernoulli_star, int, pow, rat, to_f64, PolyZ, Rational};
use crate::gutt_star::{star_linear, GuttStar, Side};
use crate::lie_algebra::{LieAlgebra, Vector};
use crate::sym_algebra::{evaluate_z, SymElement, SymMonomial};
use num::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Relative slack for inequalities evaluated in floating point.
pub const REL_TOL: f64 = 1e-9;

/// A seminorm order `R ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(r: f64) -> Result<Self> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(AlgebraError::Domain(format!("seminorm order must be a finite R >= 0, got {r}")));
        }
        Ok(Order(r))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn as_integer(self) -> Option<u32> {
        (self.0.fract() == 0.0 && self.0 <= u32::MAX as f64).then_some(self.0 as u32)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A nonnegative real, exact when every ingredient was.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(f64),
}

impl Value {
    pub fn zero() -> Self {
        Value::Exact(Rational::zero())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => to_f64(q),
            Value::Approx(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn add(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a + b),
            _ => Value::Approx(self.to_f64() + other.to_f64()),
        }
    }

    pub fn mul(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a * b),
            _ => Value::Approx(self.to_f64() * other.to_f64()),
        }
    }

    /// `self ≤ other`: exact when both sides are, otherwise within
    /// [`REL_TOL`] relative to the right-hand side.
    pub fn le(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a <= b,
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                a <= b + REL_TOL * b.abs()
            }
        }
    }

    /// `self / other` in floating point, for ratio diagnostics.
    pub fn ratio(&self, other: &Value) -> f64 {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) if !b.is_zero() => to_f64(&(a / b)),
            _ => self.to_f64() / other.to_f64(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{q}"),
            Value::Approx(x) => f.write_str(&format_sig(*x, 12)),
        }
    }
}

/// Decimal rendering with `digits` significant digits, trailing zeros
/// trimmed, switching to exponent notation outside `[1e-5, 1e12)`.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&exp) {
        let s = format!("{:.*e}", digits - 1, x);
        let (mantissa, e) = s.split_once('e').expect("exponent form");
        let mantissa = trim_zeros(mantissa);
        let e: i32 = e.parse().expect("integer exponent");
        return format!("{mantissa}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs());
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `ln n!`.
pub fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// `n!^e`; exact for integer exponents (of either sign).
pub fn factorial_pow(n: usize, e: f64) -> Value {
    if e.fract() == 0.0 && e.abs() <= 64.0 {
        let f = Rational::from_integer(crate::exact_arith::factorial(n as u64));
        let q = pow(&f, e.abs() as u32);
        return Value::Exact(if e < 0.0 { q.recip() } else { q });
    }
    Value::Approx((e * ln_factorial(n)).exp())
}

/// Positive basis weights `w_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSeminorm {
    weights: Vec<Rational>,
}

impl BasisSeminorm {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
            return Err(AlgebraError::Domain(format!("seminorm weights must be positive, got {w}")));
        }
        Ok(BasisSeminorm { weights })
    }

    /// All weights equal to one.
    pub fn unit(dim: usize) -> Self {
        BasisSeminorm { weights: vec![int(1); dim] }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// `c·p`.
    pub fn scaled(&self, c: &Rational) -> Self {
        assert!(c.is_positive(), "scale must be positive");
        BasisSeminorm { weights: self.weights.iter().map(|w| w * c).collect() }
    }

    /// `p^n` on a monomial: the product of its weights.
    pub fn monomial_weight(&self, m: &SymMonomial) -> Rational {
        m.indices().iter().map(|&i| self.weights[i].clone()).product()
    }

    /// `p(v) = Σ |v_i| w_i`.
    pub fn of_vector(&self, v: &Vector) -> Rational {
        v.0.iter().zip(&self.weights).map(|(a, w)| a.abs() * w).sum()
    }

    /// Smallest `s ≥ 1` with `p([e_i, e_j]) ≤ s·w_i·w_j` for all basis pairs.
    /// Then `p([x, y]) ≤ (sp)(x)·(sp)(y)` and every nested bracket obeys
    /// `p([ξ_1,[…,ξ_n]]) ≤ Π (sp)(ξ_i)`, so `s·p` is an asymptotic estimate.
    pub fn asymptotic_scale(&self, alg: &LieAlgebra) -> Rational {
        let mut s = int(1);
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let r = self.of_vector(alg.bracket_basis(i, j)) / (&self.weights[i] * &self.weights[j]);
                if r > s {
                    s = r;
                }
            }
        }
        s
    }

    /// `s·p` with `s` from [`asymptotic_scale`](Self::asymptotic_scale).
    pub fn asymptotic_estimate(&self, alg: &LieAlgebra) -> Self {
        self.scaled(&self.asymptotic_scale(alg))
    }
}

/// `p_R(x)` with `z` replaced by `|z|`, coefficientwise in absolute value.
pub fn p_r(x: &SymElement, p: &BasisSeminorm, r: Order, z_abs: &Rational) -> Value {
    assert_eq!(x.dim(), p.dim(), "seminorm dimension");
    let mut total = Value::zero();
    for (m, c) in x.terms() {
        let a = c.abs_eval(z_abs) * p.monomial_weight(m);
        total = total.add(&Value::Exact(a).mul(&factorial_pow(m.degree(), r.value())));
    }
    total
}

/// `p_R` of a single monomial.
pub fn p_r_monomial(m: &SymMonomial, p: &BasisSeminorm, r: Order) -> Value {
    Value::Exact(p.monomial_weight(m)).mul(&factorial_pow(m.degree(), r.value()))
}

/// One inequality evaluated on one sample.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub check: String,
    pub sample: String,
    pub lhs: Value,
    pub rhs: Value,
    pub pass: bool,
}

impl CheckLine {
    /// A line asserting `lhs ≤ rhs`.
    pub fn le(check: impl Into<String>, sample: impl Into<String>, lhs: Value, rhs: Value) -> Self {
        let pass = lhs.le(&rhs);
        CheckLine { check: check.into(), sample: sample.into(), lhs, rhs, pass }
    }

    /// A line asserting `lhs = rhs`.
    pub fn eq(check: impl Into<String>, sample: impl Into<String>, lhs: Value, rhs: Value) -> Self {
        let pass = lhs == rhs;
        CheckLine { check: check.into(), sample: sample.into(), lhs, rhs, pass }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} lhs={} rhs={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.sample,
            self.lhs,
            self.rhs
        )
    }
}

/// A list of check lines in a deterministic order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn new(lines: Vec<CheckLine>) -> Self {
        Report { lines }
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.pass)
    }

    /// Largest observed `lhs/rhs`, ignoring lines with `rhs = 0`.
    pub fn max_ratio(&self) -> Option<f64> {
        self.lines
            .iter()
            .filter(|l| l.rhs.to_f64() > 0.0)
            .map(|l| l.lhs.ratio(&l.rhs))
            .max_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

fn pair_id(alg: &LieAlgebra, m: &SymMonomial, n: &SymMonomial) -> String {
    format!("{}|{}", m.render(alg.labels()), n.render(alg.labels()))
}

fn require_formal(star: &GuttStar) -> Result<()> {
    match star.deformation() {
        Deformation::Formal => Ok(()),
        Deformation::At(_) => Err(AlgebraError::Domain("a star product with formal z is required".into())),
    }
}

fn scale_of(p: &BasisSeminorm, c: f64) -> ScaledValue {
    ScaledValue { p: p.clone(), c }
}

/// `(c·p)_R` for a possibly irrational `c`, evaluated on monomials.
struct ScaledValue {
    p: BasisSeminorm,
    c: f64,
}

impl ScaledValue {
    fn on(&self, m: &SymMonomial, r: f64) -> Value {
        let base = Value::Exact(self.p.monomial_weight(m)).mul(&factorial_pow(m.degree(), r));
        base.mul(&Value::Approx(self.c.powi(m.degree() as i32)))
    }
}

/// `p_R(x ⋆_{z0} y) ≤ (cq)_R(x)·(cq)_R(y)` with `c = 16(|z0|+1)` and
/// `q = s·p`, on monomial pairs. Requires `R ≥ 1`.
pub fn check_continuity_r1(
    star: &GuttStar,
    p: &BasisSeminorm,
    z0: &Rational,
    r: Order,
    pairs: &[(SymMonomial, SymMonomial)],
    exec: Execution,
) -> Result<Report> {
    require_formal(star)?;
    if r.value() < 1.0 {
        return Err(AlgebraError::Domain(format!("continuity estimate needs R >= 1, got {r}")));
    }
    let alg = star.algebra();
    let z_abs = z0.abs();
    let c = (&z_abs + int(1)) * int(16);
    let cq = p.asymptotic_estimate(alg).scaled(&c);
    let lines = exec.map(pairs, |(m, n)| {
        let prod = star.star_monomials(m, n);
        let lhs = p_r(&prod, p, r, &z_abs);
        let rhs = p_r_monomial(m, &cq, r).mul(&p_r_monomial(n, &cq, r));
        CheckLine::le(format!("continuity[z0={z0},R={r}]"), pair_id(alg, m, n), lhs, rhs)
    });
    Ok(Report::new(lines))
}

/// `p_R(C_n(x,y)) ≤ n!^{1−R}/(2·8^n)·(16q)_R(x)·(16q)_R(y)` on monomial pairs.
pub fn cn_estimate_check(
    star: &GuttStar,
    p: &BasisSeminorm,
    r: Order,
    n: usize,
    pairs: &[(SymMonomial, SymMonomial)],
    exec: Execution,
) -> Result<Report> {
    require_formal(star)?;
    let alg = star.algebra();
    let q16 = p.asymptotic_estimate(alg).scaled(&int(16));
    let front = factorial_pow(n, 1.0 - r.value()).mul(&Value::Exact(rat(1, 2) / pow(&int(8), n as u32)));
    let lines = exec.map(pairs, |(x, y)| {
        let cn = star.star_monomials(x, y).z_coefficient(n);
        let lhs = p_r(&cn, p, r, &int(1));
        let rhs = front.mul(&p_r_monomial(x, &q16, r)).mul(&p_r_monomial(y, &q16, r));
        CheckLine::le(format!("cn-estimate[n={n},R={r}]"), pair_id(alg, x, y), lhs, rhs)
    });
    Ok(Report::new(lines))
}

fn nilpotency(alg: &LieAlgebra) -> Result<usize> {
    alg.nilpotency_index(alg.dim() + 1)
        .ok_or_else(|| AlgebraError::Domain("the algebra is not nilpotent".into()))
}

/// The sharpened estimate for nilpotent algebras with `0 ≤ R < 1`:
/// `p_R(C_n(x,y)) ≤ 1/(2·8^n)·(32e·q)_{R+ε}(x)·(32e·q)_{R+ε}(y)` with
/// `ε = (N−1)/N·(1−R)`.
pub fn cn_nilpotent_check(
    star: &GuttStar,
    p: &BasisSeminorm,
    r: Order,
    n: usize,
    pairs: &[(SymMonomial, SymMonomial)],
    exec: Execution,
) -> Result<Report> {
    require_formal(star)?;
    if r.value() >= 1.0 {
        return Err(AlgebraError::Domain(format!("nilpotent estimate needs R < 1, got {r}")));
    }
    let alg = star.algebra();
    let big_n = nilpotency(alg)? as f64;
    let eps = (big_n - 1.0) / big_n * (1.0 - r.value());
    let q = scale_of(&p.asymptotic_estimate(alg), 32.0 * std::f64::consts::E);
    let front = Value::Exact(rat(1, 2) / pow(&int(8), n as u32));
    let lines = exec.map(pairs, |(x, y)| {
        let cn = star.star_monomials(x, y).z_coefficient(n);
        let lhs = p_r(&cn, p, r, &int(1));
        let rhs = front.mul(&q.on(x, r.value() + eps)).mul(&q.on(y, r.value() + eps));
        CheckLine::le(format!("cn-nilpotent[n={n},R={r}]"), pair_id(alg, x, y), lhs, rhs)
    });
    Ok(Report::new(lines))
}

/// Both bimodule estimates for a nilpotent algebra with index `N`:
/// `p_R(x ⋆ y) ≤ (16q)_R(x)·(16cq)_{R+N(1−R)}(y)` and the mirrored one,
/// with `c = (Ne)^{N(1−R)}`.
pub fn bimodule_estimate_check(
    star: &GuttStar,
    p: &BasisSeminorm,
    r: Order,
    z0: &Rational,
    pairs: &[(SymMonomial, SymMonomial)],
    exec: Execution,
) -> Result<Report> {
    require_formal(star)?;
    if r.value() >= 1.0 {
        return Err(AlgebraError::Domain(format!("bimodule estimate needs R < 1, got {r}")));
    }
    let alg = star.algebra();
    let big_n = nilpotency(alg)? as f64;
    let q = p.asymptotic_estimate(alg);
    let c = (big_n * std::f64::consts::E).powf(big_n * (1.0 - r.value()));
    let small = scale_of(&q, 16.0);
    let large = scale_of(&q, 16.0 * c);
    let r_large = r.value() + big_n * (1.0 - r.value());
    let z_abs = z0.abs();
    let nested = exec.map(pairs, |(x, y)| {
        let lhs = p_r(&star.star_monomials(x, y), p, r, &z_abs);
        let id = pair_id(alg, x, y);
        let left = small.on(x, r.value()).mul(&large.on(y, r_large));
        let right = large.on(x, r_large).mul(&small.on(y, r.value()));
        vec![
            CheckLine::le(format!("bimodule-left[z0={z0},R={r}]"), id.clone(), lhs.clone(), left),
            CheckLine::le(format!("bimodule-right[z0={z0},R={r}]"), id, lhs, right),
        ]
    });
    Ok(Report::new(nested.into_iter().flatten().collect()))
}

fn require_heisenberg(alg: &LieAlgebra) -> Result<()> {
    if alg.dim() != 3 || alg.structure_constants() != LieAlgebra::heisenberg(1).structure_constants() {
        return Err(AlgebraError::WrongAlgebra("the Weyl quotient needs heisenberg(1) with basis P, Q, E".into()));
    }
    Ok(())
}

/// The quotient map `E ↦ h·1` from `Sym(heisenberg(1))` onto polynomials
/// in `P, Q` (a two-dimensional result, index 0 for `P` and 1 for `Q`).
pub fn weyl_project(alg: &LieAlgebra, x: &SymElement, h: &Rational) -> Result<SymElement> {
    require_heisenberg(alg)?;
    crate::error::check_dim(3, x.dim())?;
    let mut out = SymElement::zero(2);
    for (m, c) in x.terms() {
        let e = m.exponents(3);
        let mono = SymMonomial::from_exponents(&e[..2]);
        out.add_term(mono, &c.scale(&pow(h, e[2] as u32)));
    }
    Ok(out)
}

/// `p_R(π(m)) ≤ ((|h|+1)p)_R(m)` with unit weights on all monomials of
/// degree at most `max_deg`.
pub fn weyl_projection_check(alg: &LieAlgebra, h: &Rational, r: Order, max_deg: usize) -> Result<Report> {
    require_heisenberg(alg)?;
    let unit2 = BasisSeminorm::unit(2);
    let scaled = BasisSeminorm::unit(3).scaled(&(h.abs() + int(1)));
    let mut lines = Vec::new();
    for m in crate::sampling::monomials_up_to(3, max_deg) {
        let x = SymElement::mono(3, m.clone());
        let lhs = p_r(&weyl_project(alg, &x, h)?, &unit2, r, &int(1));
        let rhs = p_r_monomial(&m, &scaled, r);
        lines.push(CheckLine::le(format!("weyl-projection[h={h},R={r}]"), m.render(alg.labels()), lhs, rhs));
    }
    Ok(Report::new(lines))
}

/// `p_R(π(x ⋆_{z0} y)) ≤ (c̃p)_R(x)·(c̃p)_R(y)` with
/// `c̃ = 8(|z0|+1)(|h|+1)` and unit weights, on every pair of monomials
/// `Q^k P^ℓ E^m` with `k+ℓ+m ≤ max_deg`. Requires `R ≥ 1/2`.
pub fn weyl_estimate_check(
    star: &GuttStar,
    h: &Rational,
    z0: &Rational,
    r: Order,
    max_deg: usize,
    exec: Execution,
) -> Result<Report> {
    require_formal(star)?;
    let alg = star.algebra();
    require_heisenberg(alg)?;
    if r.value() < 0.5 {
        return Err(AlgebraError::Domain(format!("Weyl product estimate needs R >= 1/2, got {r}")));
    }
    let monos = crate::sampling::monomials_up_to(3, max_deg);
    let pairs: Vec<(SymMonomial, SymMonomial)> =
        monos.iter().flat_map(|a| monos.iter().map(move |b| (a.clone(), b.clone()))).collect();
    weyl_estimate_on(star, h, z0, r, &pairs, exec)
}

/// [`weyl_estimate_check`] on explicit pairs.
pub fn weyl_estimate_on(
    star: &GuttStar,
    h: &Rational,
    z0: &Rational,
    r: Order,
    pairs: &[(SymMonomial, SymMonomial)],
    exec: Execution,
) -> Result<Report> {
    require_formal(star)?;
    let alg = star.algebra();
    require_heisenberg(alg)?;
    let z_abs = z0.abs();
    let ct = int(8) * (&z_abs + int(1)) * (h.abs() + int(1));
    let scaled = BasisSeminorm::unit(3).scaled(&ct);
    let unit2 = BasisSeminorm::unit(2);
    let lines = exec.map(pairs, |(x, y)| {
        let prod = star.star_monomials(x, y);
        let lhs = p_r(&weyl_project(alg, &prod, h).expect("checked algebra"), &unit2, r, &z_abs);
        let rhs = p_r_monomial(x, &scaled, r).mul(&p_r_monomial(y, &scaled, r));
        CheckLine::le(format!("weyl-product[h={h},z0={z0},R={r}]"), pair_id(alg, x, y), lhs, rhs)
    });
    Ok(Report::new(lines))
}

/// One row of a growth table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthRow {
    pub k: usize,
    pub value: f64,
    pub bound: f64,
}

/// Rows `(k, value, bound)` with strictly increasing `k`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GrowthTable {
    pub rows: Vec<GrowthRow>,
}

impl GrowthTable {
    /// `value ≥ bound` (within [`REL_TOL`]) on every row.
    pub fn above_bound(&self) -> bool {
        self.rows.iter().all(|r| Value::Approx(r.bound).le(&Value::Approx(r.value)))
    }

    /// Whether `value_k / c^k` strictly increases over the last `last` rows.
    pub fn outgrows(&self, c: f64, last: usize) -> bool {
        let ratios = self.ratios(c);
        let tail = &ratios[ratios.len().saturating_sub(last)..];
        tail.len() >= 2 && tail.windows(2).all(|w| w[1] > w[0])
    }

    /// `value_k / c^k` per row, computed in log space.
    pub fn ratios(&self, c: f64) -> Vec<f64> {
        self.rows.iter().map(|r| (r.value.ln() - r.k as f64 * c.ln()).exp()).collect()
    }

    /// CSV with header `k,value,bound` and 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,value,bound\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{}\n", r.k, format_sig(r.value, 12), format_sig(r.bound, 12)));
        }
        out
    }
}

/// `P^k ⋆_z Q^k = Σ_j C(k,j)² j! (z/2)^j P^{k−j} Q^{k−j} E^j` in
/// heisenberg(1). Cross-checked against the PBW product in tests.
pub fn heisenberg_power_product(k: usize, z: &PolyZ) -> SymElement {
    let mut out = SymElement::zero(3);
    let half_z = z.scale(&rat(1, 2));
    for j in 0..=k {
        let c = Rational::from_integer(
            crate::exact_arith::binomial(k as u64, j as u64).pow(2) * crate::exact_arith::factorial(j as u64),
        );
        let mono = SymMonomial::from_exponents(&[k - j, k - j, j]);
        out.add_term(mono, &half_z.pow(j).scale(&c));
    }
    out
}

/// Rows `(k, n_R(a_k ⋆_1 b_k), k!^{1−R−2ε})` for `a_k = P^k/k!^{R+ε}`,
/// `b_k = Q^k/k!^{R+ε}` and unit weights.
pub fn heisenberg_counterexample(r: f64, eps: f64, kmax: usize) -> Result<GrowthTable> {
    let order = Order::new(r)?;
    if r >= 1.0 || eps <= 0.0 || 2.0 * eps >= 1.0 - r || kmax > 30 {
        return Err(AlgebraError::Domain(format!(
            "need 0 <= R < 1, eps > 0, 2 eps < 1 - R and kmax <= 30 (R={r}, eps={eps}, kmax={kmax})"
        )));
    }
    let unit = BasisSeminorm::unit(3);
    let rows = (1..=kmax)
        .map(|k| {
            let prod = heisenberg_power_product(k, &PolyZ::one());
            let norm = p_r(&prod, &unit, order, &int(1)).to_f64();
            let value = (norm.ln() - 2.0 * (r + eps) * ln_factorial(k)).exp();
            let bound = ((1.0 - r - 2.0 * eps) * ln_factorial(k)).exp();
            GrowthRow { k, value, bound }
        })
        .collect();
    Ok(GrowthTable { rows })
}

/// Rows `(k, n_R(a_k ⋆_1 e_2), |B*_k|/k!^{R+ε})` in so(3) with
/// `a_k = e_1^k/k!^{R+ε}` and unit weights.
pub fn so3_counterexample(r: f64, eps: f64, kmax: usize) -> Result<GrowthTable> {
    let order = Order::new(r)?;
    if eps <= 0.0 || r + eps >= 1.0 {
        return Err(AlgebraError::Domain(format!("need eps > 0 and R + eps < 1 (R={r}, eps={eps})")));
    }
    let so3 = LieAlgebra::so3();
    let unit = BasisSeminorm::unit(3);
    let e2 = Vector::basis(3, 1);
    let rows = (1..=kmax)
        .map(|k| {
            let ak = SymElement::mono(3, SymMonomial::power(0, k));
            let prod = evaluate_z(&star_linear(&so3, &ak, &e2, Side::Left).expect("same algebra"), &int(1));
            let scale = -(r + eps) * ln_factorial(k);
            let norm = p_r(&prod, &unit, order, &int(1)).to_f64();
            let value = (norm.ln() + scale).exp();
            let b = bernoulli_star(k).abs().to_f64().expect("finite");
            let bound = b * scale.exp();
            GrowthRow { k, value, bound }
        })
        .collect();
    Ok(GrowthTable { rows })
}
