//! Canonical text form: `-3/4*a1^2*b2 + b1 - 1`.
//!
//! Terms appear in descending monomial order, unit coefficients are omitted
//! in front of a monomial, and the zero polynomial renders as `0`. The
//! parser accepts this form (and a little more: repeated numeric factors,
//! repeated variables, arbitrary whitespace).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::rational::render_rational;
use crate::{Monomial, MultiPoly, PolyError, Rational, VarContext};

fn render_monomial(ctx: &VarContext, m: &Monomial, out: &mut String) {
    let mut first = true;
    for (name, &e) in ctx.names().iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let abs = c.abs();
            if m.is_one() {
                s.push_str(&render_rational(&abs));
            } else {
                if !abs.is_one() {
                    s.push_str(&render_rational(&abs));
                    s.push('*');
                }
                render_monomial(self.context(), m, &mut s);
            }
        }
        f.write_str(&s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a VarContext,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn factor(&mut self, coef: &mut Rational, mono: &mut Monomial) -> Result<(), PolyError> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let n = self.integer()?;
                let mut q = Rational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return self.err("zero denominator");
                    }
                    q /= Rational::from_integer(d);
                }
                *coef *= q;
                Ok(())
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let Some(idx) = self.ctx.index_of(name) else {
                    return Err(PolyError::UnknownVariable(name.to_string()));
                };
                let mut e: u32 = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let k = self.integer()?;
                    e = match u32::try_from(k) {
                        Ok(e) => e,
                        Err(_) => return self.err("exponent too large"),
                    };
                }
                mono.exponents_mut()[idx] += e;
                Ok(())
            }
            Some(_) => self.err("expected a number or a variable"),
            None => self.err("unexpected end of input"),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), PolyError> {
        let mut coef = Rational::one();
        let mut mono = Monomial::one(self.ctx.len());
        self.factor(&mut coef, &mut mono)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut coef, &mut mono)?;
        }
        Ok((mono, coef))
    }

    fn poly(&mut self) -> Result<MultiPoly, PolyError> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -Rational::one()
            }
            Some(b'+') => {
                self.pos += 1;
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * &sign));
            match self.peek() {
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                None => break,
                Some(_) => return self.err("expected `+`, `-`, `*` or end of input"),
            }
            self.pos += 1;
        }
        Ok(MultiPoly::from_terms(self.ctx, terms))
    }
}

impl MultiPoly {
    /// Parses the canonical text form over `ctx`.
    pub fn parse(ctx: &VarContext, text: &str) -> Result<MultiPoly, PolyError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, ctx };
        p.poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        let ctx = VarContext::new(["a1", "b1", "b2"]).unwrap();
        let p = MultiPoly::parse(&ctx, "b1 - 1 - 3/4*a1^2*b2").unwrap();
        assert_eq!(p.to_string(), "-3/4*a1^2*b2 + b1 - 1");
        assert_eq!(MultiPoly::zero(&ctx).to_string(), "0");
        assert_eq!(MultiPoly::parse(&ctx, "-a1*a1 + 2").unwrap().to_string(), "-a1^2 + 2");
    }

    #[test]
    fn parse_errors() {
        let ctx = VarContext::new(["x"]).unwrap();
        assert!(matches!(MultiPoly::parse(&ctx, "x +"), Err(PolyError::Parse { .. })));
        assert_eq!(MultiPoly::parse(&ctx, "y"), Err(PolyError::UnknownVariable("y".into())));
        assert!(MultiPoly::parse(&ctx, "1/0").is_err());
        assert!(MultiPoly::parse(&ctx, "").is_err());
    }
}
