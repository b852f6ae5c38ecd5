//! Recursive-descent parser for curve equations.
//!
//! ```text
//! expr     := [sign] term { sign term }
//! term     := factor { ['*'] factor }
//! factor   := atom [ '^' exponent ]
//! atom     := rational | 't' | 'x' | 'y' | '(' expr ')'
//! exponent := [sign] digits ['/' digits] | '(' [sign] digits ['/' digits] ')'
//! ```
//!
//! `t` may carry any rational exponent, `x` and `y` any integer exponent, and a
//! parenthesised sum any non-negative integer exponent. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::LaurentPolynomial;
use super::scalar::PuiseuxScalar;
use crate::error::{Error, Result};
use crate::rational::{is_integer, Q};

pub fn parse_polynomial(text: &str) -> Result<LaurentPolynomial> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty input"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(&format!("unexpected {c:?}")));
    }
    Ok(v)
}

/// Parses a single Puiseux scalar such as `3t^-3 + t^-2`.
pub fn parse_scalar(text: &str) -> Result<PuiseuxScalar> {
    let p = parse_polynomial(text)?;
    if p.is_zero() {
        return Ok(PuiseuxScalar::zero());
    }
    let r = match p.terms().next() {
        Some((&(0, 0), c)) if p.len() == 1 => Ok(c.clone()),
        _ => Err(Error::Parse { pos: 0, msg: format!("{text:?} mentions x or y") }),
    };
    r
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<LaurentPolynomial> {
        let neg = self.sign().unwrap_or(false);
        let first = self.term()?;
        let mut acc = if neg { -&first } else { first };
        while let Some(neg) = self.sign() {
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPolynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c.is_ascii_digit() || matches!(c, 't' | 'x' | 'y' | '(') => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPolynomial> {
        let start = self.pos;
        let (base, kind) = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let e = self.exponent()?;
        let at = |msg: String| Error::Parse { pos: start, msg };
        match kind {
            Atom::T => {
                let (_, c) = base.terms().next().unwrap();
                Ok(LaurentPolynomial::constant(c.pow_rational(&e)?))
            }
            Atom::X | Atom::Y => {
                if !is_integer(&e) {
                    return Err(at(format!("non-integer exponent {e} on a variable")));
                }
                let n = small_int(&e).ok_or_else(|| at("exponent too large".into()))?;
                let (i, j) = if kind == Atom::X { (n, 0) } else { (0, n) };
                Ok(LaurentPolynomial::monomial(PuiseuxScalar::one(), i, j))
            }
            Atom::Number | Atom::Group => {
                if !is_integer(&e) {
                    return Err(at(format!("non-integer exponent {e} on a sum")));
                }
                let n = small_int(&e).ok_or_else(|| at("exponent too large".into()))?;
                if n >= 0 {
                    return Ok(base.pow(n as u32));
                }
                // Negative powers only for a single monomial.
                if base.len() != 1 {
                    return Err(at("negative power of a sum".into()));
                }
                let (&(i, j), c) = base.terms().next().unwrap();
                let inv = c.pow(n)?;
                Ok(LaurentPolynomial::monomial(inv, i * n, j * n))
            }
        }
    }

    fn atom(&mut self) -> Result<(LaurentPolynomial, Atom)> {
        match self.peek() {
            Some('t') => {
                self.bump();
                Ok((LaurentPolynomial::constant(PuiseuxScalar::t_pow(Q::one())), Atom::T))
            }
            Some('x') => {
                self.bump();
                Ok((LaurentPolynomial::x(), Atom::X))
            }
            Some('y') => {
                self.bump();
                Ok((LaurentPolynomial::y(), Atom::Y))
            }
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok((v, Atom::Group))
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                Ok((LaurentPolynomial::constant(PuiseuxScalar::constant(r)), Atom::Number))
            }
            Some(c) => Err(self.error(&format!("unexpected {c:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.src[start..self.pos].parse().unwrap())
    }

    fn rational(&mut self) -> Result<Q> {
        let n = self.digits()?;
        if self.peek() == Some('/') {
            self.bump();
            let d = self.digits()?;
            if d.is_zero() {
                return Err(self.error("zero denominator"));
            }
            return Ok(Q::new(n, d));
        }
        Ok(Q::from_integer(n))
    }

    fn exponent(&mut self) -> Result<Q> {
        let paren = self.peek() == Some('(');
        if paren {
            self.bump();
        }
        let neg = self.sign().unwrap_or(false);
        let r = self.rational()?;
        if paren && self.bump() != Some(')') {
            return Err(self.error("expected ')'"));
        }
        Ok(if neg { -r } else { r })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Atom {
    T,
    X,
    Y,
    Number,
    Group,
}

fn small_int(e: &Q) -> Option<i64> {
    let n = i64::try_from(e.numer().clone()).ok()?;
    (n.abs() <= 1 << 20).then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn t(e: i64) -> PuiseuxScalar {
        PuiseuxScalar::t_pow(q(e))
    }

    #[test]
    fn single_monomial() {
        let f = parse_polynomial("t^-3*x*y^3").unwrap();
        assert_eq!(f.support(), vec![(1, 3)]);
        assert_eq!(f.coefficient(1, 3), Some(&t(-3)));
    }

    #[test]
    fn cancellation_gives_zero() {
        assert!(parse_polynomial("x^3 - x^3").unwrap().is_zero());
        assert!(parse_polynomial("0*x").unwrap().is_zero());
    }

    #[test]
    fn parenthesised_coefficient() {
        let f = parse_polynomial("(3t^-3+t^-2)*x*y^2").unwrap();
        let c = &t(-3).scale(&q(3)) + &t(-2);
        assert_eq!(f.coefficient(1, 2), Some(&c));
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn products_and_powers() {
        let f = parse_polynomial("(x-1)^2*(y-1)").unwrap();
        let g = parse_polynomial("x^2*y - x^2 - 2x*y + 2x + y - 1").unwrap();
        assert_eq!(f, g);
        let h = parse_polynomial("x^-1 y^-2 + t^1/2 + 2/3 t^(-1/2)").unwrap();
        assert_eq!(h.support(), vec![(-1, -2), (0, 0)]);
        assert_eq!(
            h.coefficient(0, 0).unwrap(),
            &PuiseuxScalar::from_terms([(qf(1, 2), q(1)), (qf(-1, 2), qf(2, 3))])
        );
        assert_eq!(parse_polynomial("(2 t x)^-1").unwrap().coefficient(-1, 0).unwrap(),
            &PuiseuxScalar::monomial(qf(1, 2), q(-1)));
    }

    #[test]
    fn order_independence() {
        let a = parse_polynomial("x + y^2 - 3 t x y").unwrap();
        let b = parse_polynomial("-3t*x*y + y^2 + x").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_polynomial("x + * y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("").is_err());
        assert!(parse_polynomial("x^1/2").is_err());
        assert!(parse_polynomial("(x+1)^-1").is_err());
        assert!(parse_polynomial("(x+1").is_err());
        assert!(parse_polynomial("x $").is_err());
        assert!(parse_polynomial("1/0").is_err());
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("t^-1 + 1").unwrap(), &t(-1) + &PuiseuxScalar::one());
        assert!(parse_scalar("x").is_err());
    }
}
