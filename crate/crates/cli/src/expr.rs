//! Expressions: sums of scaled monomials such as `2*P^2*Q - (1/2)z*E + 3`.
//!
//! A term is a product of factors, each a rational (`3`, `3/4`, `(3/4)`),
//! `z` or a basis label, optionally raised to a power `^k`. The `*` between
//! factors may be omitted. Rendered elements parse back to themselves.

use crate::error::CliError;
use gutt_core::exact_arith::{int, PolyZ, Rational};
use gutt_core::sym_algebra::{SymElement, SymMonomial};
use gutt_core::LieAlgebra;
use num::{BigInt, One};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alg: &'a LieAlgebra,
}

fn err(pos: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { col: pos + 1, msg: msg.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, CliError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn exponent(&mut self) -> Result<usize, CliError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let k = self.integer()?;
        usize::try_from(k).ok().filter(|&k| k <= 1000).ok_or_else(|| err(at, "exponent too large"))
    }

    fn rational(&mut self) -> Result<Rational, CliError> {
        let n = self.integer()?;
        if self.eat(b'/') {
            let at = self.pos;
            let d = self.integer()?;
            if d == BigInt::from(0) {
                return Err(err(at, "zero denominator"));
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    /// Multiplies one factor into `(coeff, z_power, monomial)`.
    fn factor(&mut self, acc: &mut (Rational, usize, SymMonomial)) -> Result<(), CliError> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let neg = self.eat(b'-');
                let mut q = self.rational()?;
                if neg {
                    q = -q;
                }
                if !self.eat(b')') {
                    return Err(err(self.pos, "expected ')'"));
                }
                let k = self.exponent()?;
                acc.0 *= num::pow(q, k);
            }
            Some(c) if c.is_ascii_digit() => {
                let q = self.rational()?;
                let k = self.exponent()?;
                acc.0 *= num::pow(q, k);
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let k = self.exponent()?;
                if name == "z" {
                    acc.1 += k;
                } else {
                    let i = self.alg.index_of(name).ok_or_else(|| err(start, format!("unknown label {name:?}")))?;
                    acc.2 = acc.2.mul(&SymMonomial::power(i, k));
                }
            }
            Some(c) => return Err(err(at, format!("unexpected character {:?}", c as char))),
            None => return Err(err(at, "unexpected end of input")),
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(Rational, usize, SymMonomial), CliError> {
        let mut acc = (Rational::one(), 0, SymMonomial::unit());
        self.factor(&mut acc)?;
        loop {
            match self.peek() {
                None | Some(b'+') | Some(b'-') => return Ok(acc),
                Some(b'*') => {
                    self.pos += 1;
                    self.factor(&mut acc)?;
                }
                Some(_) => self.factor(&mut acc)?,
            }
        }
    }
}

/// Parses an expression over the labels of `alg`.
pub fn parse(text: &str, alg: &LieAlgebra) -> Result<SymElement, CliError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, alg };
    let mut out = SymElement::zero(alg.dim());
    let mut sign = if p.eat(b'-') { int(-1) } else { int(1) };
    if p.peek().is_none() {
        return Err(err(p.pos, "empty expression"));
    }
    loop {
        let (c, k, m) = p.term()?;
        out.add_term(m, &PolyZ::monomial(c * &sign, k));
        match p.peek() {
            None => return Ok(out),
            Some(b'+') => sign = int(1),
            Some(b'-') => sign = int(-1),
            Some(c) => return Err(err(p.pos, format!("unexpected character {:?}", c as char))),
        }
        p.pos += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gutt_core::exact_arith::rat;

    #[test]
    fn parses_terms() {
        let h = LieAlgebra::heisenberg(1);
        let x = parse("2*P^2*Q - (1/2)z*E + 3", &h).unwrap();
        assert_eq!(x.coeff(&SymMonomial::from_indices(vec![0, 0, 1])), PolyZ::constant(int(2)));
        assert_eq!(x.coeff(&SymMonomial::power(2, 1)), PolyZ::monomial(rat(-1, 2), 1));
        assert_eq!(x.coeff(&SymMonomial::unit()), PolyZ::constant(int(3)));
        assert_eq!(parse("P Q", &h).unwrap(), parse("Q*P", &h).unwrap());
        assert_eq!(parse("P*P", &h).unwrap(), parse("P^2", &h).unwrap());
    }

    #[test]
    fn rendered_output_round_trips() {
        let so3 = LieAlgebra::so3();
        let text = "e1^2*e2 + z*e1*e3 - (1/6)z^2*e2";
        assert_eq!(parse(text, &so3).unwrap().render(so3.labels()), text);
    }

    #[test]
    fn errors_carry_columns() {
        let h = LieAlgebra::heisenberg(1);
        match parse("P + X", &h) {
            Err(CliError::Parse { col, .. }) => assert_eq!(col, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse("", &h).is_err());
        assert!(parse("P +", &h).is_err());
        assert!(parse("1/0", &h).is_err());
        assert!(parse("P ^", &h).is_err());
    }
}
