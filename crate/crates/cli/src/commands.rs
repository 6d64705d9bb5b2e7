//! Table, product and growth commands. Each returns its full output so the
//! caller decides where it goes; `Ok(false)` means a check failed.

use crate::error::CliError;
use crate::expr;
use crate::spec;
use gutt_core::exact_arith::{bernoulli, goldberg_coeff, parse_rational, Letter, Rational};
use gutt_core::free_lie::{bch_associative, bch_dynkin, bch_goldberg, Word};
use gutt_core::gutt_star::{star_bch, star_gutt_original, star_pbw};
use gutt_core::hopf::verify_hopf;
use gutt_core::seminorm::{heisenberg_counterexample, so3_counterexample, GrowthTable};
use gutt_core::sym_algebra::evaluate_z;
use num::Zero;
use std::collections::BTreeMap;
use std::fmt::Write;

pub const BERNOULLI_MAX: usize = 200;
pub const GOLDBERG_MAX: usize = 12;
pub const BCH_MAX: usize = 8;

fn bound(name: &str, n: usize, lo: usize, hi: usize) -> Result<(), CliError> {
    if n < lo || n > hi {
        return Err(CliError::Usage(format!("{name} must be in {lo}..={hi}, got {n}")));
    }
    Ok(())
}

pub fn bernoulli_table(nmax: usize) -> Result<String, CliError> {
    bound("nmax", nmax, 0, BERNOULLI_MAX)?;
    let mut out = String::new();
    for n in 0..=nmax {
        writeln!(out, "{n} {}", bernoulli(n)).unwrap();
    }
    Ok(out)
}

/// Compositions of `n` in lexicographic order.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `c_xi(s_1,…,s_m)` for every composition of every `n ≤ nmax`.
pub fn goldberg_table(nmax: usize) -> Result<String, CliError> {
    bound("nmax", nmax, 1, GOLDBERG_MAX)?;
    let mut out = String::new();
    for n in 1..=nmax {
        for runs in compositions(n) {
            let args: Vec<String> = runs.iter().map(usize::to_string).collect();
            writeln!(out, "c_xi({}) = {}", args.join(","), goldberg_coeff(Letter::X, &runs)).unwrap();
        }
    }
    Ok(out)
}

/// Left-nested bracket notation: `YXX` is `[[Y,X],X]`.
pub fn render_bracket(w: &Word) -> String {
    let letters = w.to_string();
    let mut chars = letters.chars();
    let mut out = chars.next().map(String::from).unwrap_or_default();
    for c in chars {
        out = format!("[{out},{c}]");
    }
    out
}

/// Merges terms using `[Y,X,…] = −[X,Y,…]` on the innermost bracket, so
/// that every word of length ≥ 2 starts with `XY`. Sorted by length, then
/// lexicographically.
fn collect_brackets(terms: &[(Rational, Word)]) -> Vec<(Vec<Letter>, Rational)> {
    let mut acc: BTreeMap<(usize, Vec<Letter>), Rational> = BTreeMap::new();
    for (c, w) in terms {
        let mut letters = w.0.clone();
        let mut c = c.clone();
        if letters.len() >= 2 {
            match (letters[0], letters[1]) {
                (Letter::X, Letter::Y) => {}
                (Letter::Y, Letter::X) => {
                    letters.swap(0, 1);
                    c = -c;
                }
                _ => continue,
            }
        }
        *acc.entry((letters.len(), letters)).or_insert_with(Rational::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((_, w), c)| (w, c)).collect()
}

pub fn bch_table(order: usize, form: &str) -> Result<String, CliError> {
    bound("order", order, 1, BCH_MAX)?;
    let mut out = String::new();
    match form {
        "goldberg" | "dynkin" => {
            let series = if form == "goldberg" { bch_goldberg(order) } else { bch_dynkin(order) };
            for (w, c) in collect_brackets(series.terms()) {
                writeln!(out, "{c} {}", render_bracket(&Word(w))).unwrap();
            }
        }
        "associative" => {
            let series = bch_associative(order);
            let mut terms: Vec<_> = series.terms().iter().collect();
            terms.sort_by_key(|(w, _)| (w.len(), (*w).clone()));
            for (w, c) in terms {
                writeln!(out, "{c} {}", Word(w.clone())).unwrap();
            }
        }
        _ => return Err(CliError::Usage(format!("unknown BCH form {form:?}; use goldberg, dynkin or associative"))),
    }
    Ok(out)
}

/// `formal` or a rational value for `z`.
pub fn parse_z(text: &str) -> Result<Option<Rational>, CliError> {
    if text == "formal" {
        return Ok(None);
    }
    parse_rational(text).map(Some).map_err(|e| CliError::Usage(format!("--z: {e}")))
}

pub fn star(spec_name: &str, f: &str, g: &str, z: Option<Rational>, verify: bool) -> Result<(String, bool), CliError> {
    let alg = spec::load(spec_name)?;
    let (f, g) = (expr::parse(f, &alg)?, expr::parse(g, &alg)?);
    let prod = star_pbw(&alg, &f, &g)?;
    let shown = match &z {
        Some(z0) => evaluate_z(&prod, z0),
        None => prod.clone(),
    };
    let mut out = format!("{}\n", shown.render(alg.labels()));
    let mut ok = true;
    if verify {
        ok = star_bch(&alg, &f, &g)? == prod && star_gutt_original(&alg, &f, &g)? == prod;
        writeln!(out, "3-way agreement: {}", if ok { "OK" } else { "FAILED" }).unwrap();
    }
    Ok((out, ok))
}

pub fn growth(which: &str, r: f64, eps: f64, kmax: usize) -> Result<GrowthTable, CliError> {
    if kmax == 0 {
        return Err(CliError::Usage("kmax must be at least 1".into()));
    }
    Ok(match which {
        "heisenberg" => heisenberg_counterexample(r, eps, kmax)?,
        "so3" => so3_counterexample(r, eps, kmax)?,
        _ => return Err(CliError::Usage(format!("growth tables exist for heisenberg and so3, not {which:?}"))),
    })
}

pub fn hopf_verify(spec_name: &str, x: &str, y: &str, z: &[Rational]) -> Result<(String, bool), CliError> {
    let alg = spec::load(spec_name)?;
    let (x, y) = (expr::parse(x, &alg)?, expr::parse(y, &alg)?);
    let mut out = String::new();
    let mut ok = true;
    for z0 in z {
        let rep = verify_hopf(&alg, &evaluate_z(&x, z0), &evaluate_z(&y, z0), z0)?;
        ok &= rep.passed();
        out.push_str(&rep.to_string());
    }
    Ok((out, ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(compositions(3), vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
    }

    #[test]
    fn bracket_rendering() {
        assert_eq!(render_bracket(&Word::parse("YXX").unwrap()), "[[Y,X],X]");
        assert_eq!(render_bracket(&Word::parse("X").unwrap()), "X");
    }

    #[test]
    fn order_two_collects_to_half_commutator() {
        assert_eq!(bch_table(2, "goldberg").unwrap(), "1 X\n1 Y\n1/2 [X,Y]\n");
        assert_eq!(bch_table(2, "dynkin").unwrap(), bch_table(2, "goldberg").unwrap());
    }
}
