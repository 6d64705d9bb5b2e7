//! `verify` suites. Every check prints one line
//! `<check>[ <sample>] PASS|FAIL[ <detail>]`; `INFO` lines carry
//! diagnostics that do not affect the exit code.

use crate::error::CliError;
use gutt_core::exact_arith::{
    bernoulli, carlitz_check, factorial_q, goldberg_coeff, int, kks_kernel, rat, sign, thompson_sum, to_f64, Letter,
};
use gutt_core::enveloping::Enveloping;
use gutt_core::free_lie::{bch_associative, bch_dynkin, bch_goldberg};
use gutt_core::gutt_star::{poisson_check, star_bch, star_gutt_original, GuttStar};
use gutt_core::hopf::{hopf_seminorm_check, undeformed_check, verify_hopf};
use gutt_core::sampling::{self, monomial_pairs, monomials_of_degree, monomials_up_to, random_element, random_monomial_tuple};
use gutt_core::seminorm::{
    bimodule_estimate_check, check_continuity_r1, cn_nilpotent_check, format_sig, heisenberg_counterexample,
    so3_counterexample, weyl_estimate_check, weyl_projection_check, BasisSeminorm, Order, Report,
};
use gutt_core::sym_algebra::{evaluate_z, SymElement};
use gutt_core::{Execution, LieAlgebra};
use std::fmt::Write;

/// Desk-scale bounds, all overridable from the command line.
#[derive(Clone, Debug)]
pub struct Settings {
    pub degree: Option<usize>,
    pub seed: u64,
    pub r: f64,
}

#[derive(Default)]
pub struct Log {
    pub text: String,
    pub checks: usize,
    pub failures: usize,
}

impl Log {
    fn check(&mut self, check: &str, sample: &str, pass: bool, detail: &str) {
        let mut line = check.to_string();
        if !sample.is_empty() {
            line.push(' ');
            line.push_str(sample);
        }
        line.push_str(if pass { " PASS" } else { " FAIL" });
        if !detail.is_empty() {
            line.push(' ');
            line.push_str(detail);
        }
        writeln!(self.text, "{line}").unwrap();
        self.checks += 1;
        if !pass {
            self.failures += 1;
        }
    }

    fn info(&mut self, msg: &str) {
        writeln!(self.text, "INFO {msg}").unwrap();
    }

    fn section(&mut self, title: &str) {
        writeln!(self.text, "# {title}").unwrap();
    }

    fn report(&mut self, check: &str, sample: &str, rep: &Report) {
        let detail = if rep.passed() {
            let ratio = rep.max_ratio().map(|r| format_sig(r, 6)).unwrap_or_else(|| "-".into());
            format!("checks={} max_ratio={ratio}", rep.len())
        } else {
            let first = rep.failures().next().map(|l| l.to_string()).unwrap_or_default();
            format!("failed={}/{} first: {first}", rep.failures().count(), rep.len())
        };
        self.check(check, sample, rep.passed(), &detail);
    }
}

fn order(r: f64) -> Order {
    Order::new(r).expect("nonnegative order")
}

pub fn bch(log: &mut Log, s: &Settings) {
    log.section("bch");
    let n_max = s.degree.unwrap_or(6);
    for k in 1..=12usize {
        let expected = sign(k) * bernoulli(k) / factorial_q(k as u64);
        log.check("goldberg_bernoulli", &format!("s={k}"), goldberg_coeff(Letter::X, &[1, k]) == expected, "");
    }
    for n in 1..=10 {
        let sum = thompson_sum(n);
        log.check("thompson_sum", &format!("n={n}"), sum <= int(2), &format!("sum={}", format_sig(to_f64(&sum), 12)));
    }
    for n in 1..=n_max {
        log.check("goldberg_vs_associative", &format!("N={n}"), bch_goldberg(n).expand() == bch_associative(n), "");
    }
    for n in 1..=n_max.min(5) {
        log.check("dynkin_vs_goldberg", &format!("N={n}"), bch_dynkin(n).expand() == bch_goldberg(n).expand(), "");
    }
    for k in 0..=15 {
        let ok = (0..=k).all(|s| kks_kernel(k, s) == if s == 0 { int(1) } else { int(0) });
        log.check("kks_kernel", &format!("k={k}"), ok, "");
    }
    for k in 0..=12 {
        log.check("carlitz", &format!("k={k}"), (0..=12).all(|m| carlitz_check(k, m)), "m=0..12");
    }
}

pub fn star(log: &mut Log, name: &str, alg: &LieAlgebra, s: &Settings) -> Result<(), CliError> {
    log.section(&format!("star: {name}"));
    let d = alg.dim();
    let max = s.degree.unwrap_or(5);
    let gs = GuttStar::new(alg);
    let mut rng = sampling::rng(s.seed);
    for t in 0..=max {
        let pairs: Vec<_> = monomial_pairs(d, t).into_iter().filter(|(a, b)| a.degree() + b.degree() == t).collect();
        let bad = Execution::default().map(&pairs, |(a, b)| {
            let (x, y) = (SymElement::mono(d, a.clone()), SymElement::mono(d, b.clone()));
            let pbw = gs.star(&x, &y).expect("same algebra");
            let agree = star_bch(alg, &x, &y).expect("same algebra") == pbw
                && star_gutt_original(alg, &x, &y).expect("same algebra") == pbw;
            let z_ok = pbw.z_degree().is_none_or(|k| t == 0 || k < t);
            (!agree || !z_ok).then(|| format!("{}|{}", a.render(alg.labels()), b.render(alg.labels())))
        });
        let first = bad.iter().flatten().next();
        let detail = match first {
            None => format!("pairs={}", pairs.len()),
            Some(p) => format!("first mismatch {p}"),
        };
        log.check("three_way_agreement", &format!("degree={t}"), first.is_none(), &detail);
    }
    let one = SymElement::one(d);
    let (mut assoc, mut unit) = (true, true);
    for _ in 0..50 {
        let t = random_monomial_tuple(&mut rng, d, 3, max);
        let [a, b, c] = [0, 1, 2].map(|i| SymElement::mono(d, t[i].clone()));
        assoc &= gs.star(&gs.star(&a, &b)?, &c)? == gs.star(&a, &gs.star(&b, &c)?)?;
        unit &= gs.star(&one, &a)? == a && gs.star(&a, &one)? == a;
    }
    log.check("associativity", &format!("triples=50 total_degree<={max}"), assoc, "");
    log.check("unit", "samples=50", unit, "");
    let mut poisson = true;
    for _ in 0..20 {
        let x = random_element(&mut rng, d, max.min(4), 3);
        let y = random_element(&mut rng, d, max.min(4), 3);
        poisson &= poisson_check(alg, &x, &y)?;
    }
    log.check("poisson_limit", "samples=20", poisson, "");
    Ok(())
}

pub fn hopf(log: &mut Log, name: &str, alg: &LieAlgebra, s: &Settings) -> Result<(), CliError> {
    log.section(&format!("hopf: {name}"));
    let d = alg.dim();
    let mut rng = sampling::rng(s.seed);
    let samples: Vec<(SymElement, SymElement)> = (0..5)
        .map(|_| {
            let x = evaluate_z(&random_element(&mut rng, d, 4, 3), &int(1));
            let y = evaluate_z(&random_element(&mut rng, d, 3, 2), &int(1));
            (x, y)
        })
        .collect();
    for z0 in [int(0), int(1), rat(2, 3)] {
        let mut reports = Vec::new();
        for (x, y) in &samples {
            reports.push(verify_hopf(alg, x, y, &z0)?);
        }
        let holds = |names: &[&str]| reports.iter().all(|r| r.checks.iter().filter(|c| names.contains(&c.0)).all(|c| c.1));
        let detail = format!("z0={z0} samples={}", samples.len());
        log.check("counit axiom", "", holds(&["counit-left", "counit-right"]), &detail);
        log.check("coassociativity", "", holds(&["coassociativity"]), &detail);
        log.check("cocommutativity", "", holds(&["cocommutativity"]), &detail);
        log.check("antipode axiom", "", holds(&["antipode-left", "antipode-right"]), &detail);
        log.check("antipode involution", "", holds(&["antipode-involution"]), &detail);
        log.check("coproduct multiplicative", "", holds(&["delta-morphism"]), &detail);
    }
    let env = Enveloping::new(alg);
    let undeformed = monomials_up_to(d, 4).iter().all(|m| undeformed_check(&env, m));
    log.check("coproduct undeformed", "degree<=4", undeformed, "");
    let monos = monomials_up_to(d, s.degree.unwrap_or(6));
    for r in [0.0, 0.5, 1.0, 2.0] {
        let rep = hopf_seminorm_check(alg, &BasisSeminorm::unit(d), order(r), &monos);
        log.report("hopf seminorm bounds", &format!("R={r}"), &rep);
    }
    Ok(())
}

fn same_algebra(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a.dim() == b.dim() && a.structure_constants() == b.structure_constants()
}

pub fn seminorm(log: &mut Log, name: &str, alg: &LieAlgebra, s: &Settings) -> Result<(), CliError> {
    log.section(&format!("seminorm: {name}"));
    let d = alg.dim();
    let max = s.degree.unwrap_or(5);
    let gs = GuttStar::new(alg);
    let pairs = monomial_pairs(d, max);
    let unit = BasisSeminorm::unit(d);
    let exec = Execution::default();
    if s.r >= 1.0 {
        for z0 in [int(0), int(1)] {
            let rep = check_continuity_r1(&gs, &unit, &z0, order(s.r), &pairs, exec)?;
            log.report("continuity", &format!("R={} z0={z0}", s.r), &rep);
        }
    } else {
        log.info(&format!("continuity estimate skipped: needs R >= 1, got {}", s.r));
    }
    if alg.nilpotency_index(d + 1).is_some() && !alg.is_abelian() {
        for n in 1..max {
            let rep = cn_nilpotent_check(&gs, &unit, order(0.5), n, &pairs, exec)?;
            log.report("nilpotent cn estimate", &format!("R=0.5 n={n}"), &rep);
        }
        for r in [0.0, 0.5] {
            let rep = bimodule_estimate_check(&gs, &unit, order(r), &int(1), &pairs, exec)?;
            log.report("bimodule estimate", &format!("R={r} z0=1"), &rep);
        }
    }
    if same_algebra(alg, &LieAlgebra::heisenberg(1)) {
        for r in [0.0, 0.5, 1.0] {
            let rep = weyl_projection_check(alg, &int(1), order(r), max)?;
            log.report("weyl projection", &format!("R={r} h=1"), &rep);
        }
        let rep = weyl_estimate_check(&gs, &int(1), &int(1), order(0.5), max.min(6), exec)?;
        log.report("weyl product", "R=0.5 h=1 z0=1", &rep);
        let table = heisenberg_counterexample(0.5, 0.1, 20)?;
        log.check("counterexample growth", "", table.above_bound(), "R=0.5 eps=0.1 k=1..20 value>=bound");
        for c in [10.0, 100.0] {
            log.info(&format!("value/{c}^k increasing over k=16..20: {}", table.outgrows(c, 5)));
        }
    }
    if same_algebra(alg, &LieAlgebra::so3()) {
        let table = so3_counterexample(0.5, 0.1, 16)?;
        log.check("counterexample growth", "", table.above_bound(), "R=0.5 eps=0.1 k=1..16 value>=|B*_k|/k!^(R+eps)");
    }
    let degree_max = monomials_of_degree(d, max).len();
    log.info(&format!("pairs up to total degree {max}: {} ({degree_max} monomials of top degree)", pairs.len()));
    Ok(())
}

/// Runs one suite over the given algebras (`bch` ignores them).
pub fn run(suite: &str, algebras: &[(String, LieAlgebra)], s: &Settings) -> Result<Log, CliError> {
    let mut log = Log::default();
    let want = |name: &str| suite == "all" || suite == name;
    if !["all", "bch", "star", "hopf", "seminorm"].contains(&suite) {
        return Err(CliError::Usage(format!("unknown suite {suite:?}; use all, bch, star, hopf or seminorm")));
    }
    if let Some(r) = Some(s.r).filter(|r| !r.is_finite() || *r < 0.0) {
        return Err(CliError::Usage(format!("--R must be a finite nonnegative number, got {r}")));
    }
    if want("bch") {
        bch(&mut log, s);
    }
    for (name, alg) in algebras {
        if want("star") {
            star(&mut log, name, alg, s)?;
        }
        if want("hopf") {
            hopf(&mut log, name, alg, s)?;
        }
        if want("seminorm") {
            seminorm(&mut log, name, alg, s)?;
        }
    }
    let verdict = if log.failures == 0 { "PASS" } else { "FAIL" };
    writeln!(log.text, "summary {verdict} checks={} failures={}", log.checks, log.failures).unwrap();
    Ok(log)
}
