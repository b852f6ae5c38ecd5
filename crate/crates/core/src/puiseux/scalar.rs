use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{is_integer, q, Q};

/// Value of the non-archimedean valuation: `-min exponent`, or `-∞` for zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    NegInfinity,
    Finite(Q),
}

impl Valuation {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Valuation::NegInfinity => None,
            Valuation::Finite(v) => Some(v),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::NegInfinity => write!(f, "-inf"),
            Valuation::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// A finite sum `Σ c_e t^e` with rational coefficients and rational exponents.
///
/// Zero coefficients are never stored, so the zero scalar is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PuiseuxScalar {
    terms: BTreeMap<Q, Q>,
}

impl PuiseuxScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, Q::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(q(n))
    }

    /// `c · t^exp`
    pub fn monomial(c: Q, exp: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `t^exp`
    pub fn t_pow(exp: Q) -> Self {
        Self::monomial(Q::one(), exp)
    }

    /// Builds a scalar from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Q, Q)>>(it: I) -> Self {
        let mut s = Self::zero();
        for (e, c) in it {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, exp: Q, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Q::zero()).is_some_and(|c| c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms in ascending exponent order, as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Q, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `-(least exponent)`; `-∞` for zero.
    pub fn valuation(&self) -> Valuation {
        match self.terms.keys().next() {
            Some(e) => Valuation::Finite(-e.clone()),
            None => Valuation::NegInfinity,
        }
    }

    /// The term at the least exponent.
    pub fn leading_term(&self) -> Option<PuiseuxScalar> {
        self.terms
            .iter()
            .next()
            .map(|(e, c)| Self::monomial(c.clone(), e.clone()))
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&Q::from_integer(k.clone()))
    }

    /// Exact inverse; only monomials are invertible inside this ring.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroScalar);
        }
        if !self.is_monomial() {
            return Err(Error::NonMonomialInverse(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Ok(Self::monomial(c.recip(), -e.clone()))
    }

    /// Integer power; negative powers require a monomial.
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Rational power of a pure power of `t` (coefficient one).
    pub fn pow_rational(&self, e: &Q) -> Result<Self> {
        if is_integer(e) {
            let n = i64::try_from(e.numer().clone())
                .map_err(|_| Error::OutOfDomain(format!("exponent {e}")))?;
            return self.pow(n);
        }
        match self.terms.iter().next() {
            Some((exp, c)) if self.is_monomial() && c.is_one() => Ok(Self::t_pow(exp * e)),
            _ => Err(Error::OutOfDomain(format!(
                "fractional power {e} of {self}"
            ))),
        }
    }
}

impl From<Q> for PuiseuxScalar {
    fn from(c: Q) -> Self {
        Self::constant(c)
    }
}

impl Add for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn add(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Add for PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn add(self, rhs: PuiseuxScalar) -> PuiseuxScalar {
        &self + &rhs
    }
}

impl Neg for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn neg(self) -> PuiseuxScalar {
        PuiseuxScalar {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn neg(self) -> PuiseuxScalar {
        -&self
    }
}

impl Sub for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn sub(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        self + &(-rhs)
    }
}

impl Sub for PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn sub(self, rhs: PuiseuxScalar) -> PuiseuxScalar {
        &self - &rhs
    }
}

impl Mul for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn mul(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        let mut out = PuiseuxScalar::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn mul(self, rhs: PuiseuxScalar) -> PuiseuxScalar {
        &self * &rhs
    }
}

/// Writes the exponent of `t` so that the parser reads it back unchanged.
pub(crate) fn fmt_exponent(e: &Q) -> String {
    e.to_string()
}

/// Writes one term `c t^e` without its sign; returns whether it is negative.
pub(crate) fn fmt_term(e: &Q, c: &Q) -> (bool, String) {
    let neg = c.is_negative();
    let a = c.abs();
    let tpart = if e.is_zero() {
        None
    } else if e.is_one() {
        Some("t".to_string())
    } else {
        Some(format!("t^{}", fmt_exponent(e)))
    };
    let s = match tpart {
        None => a.to_string(),
        Some(t) if a.is_one() => t,
        Some(t) => format!("{a}*{t}"),
    };
    (neg, s)
}

impl fmt::Display for PuiseuxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let (neg, s) = fmt_term(e, c);
            match (k, neg) {
                (0, false) => write!(f, "{s}")?,
                (0, true) => write!(f, "-{s}")?,
                (_, false) => write!(f, " + {s}")?,
                (_, true) => write!(f, " - {s}")?,
            }
        }
        Ok(())
    }
}

/// Leading-term representatives of a list of nonzero scalars.
pub fn representatives(xs: &[PuiseuxScalar]) -> Result<Vec<PuiseuxScalar>> {
    xs.iter()
        .map(|x| x.leading_term().ok_or(Error::ZeroScalar))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    fn t(e: i64) -> PuiseuxScalar {
        PuiseuxScalar::t_pow(q(e))
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(t(-3).valuation(), Valuation::Finite(q(3)));
        assert_eq!(PuiseuxScalar::zero().valuation(), Valuation::NegInfinity);
        let s = &t(-1) + &PuiseuxScalar::one();
        assert_eq!(s.valuation(), Valuation::Finite(q(1)));
        let s = &t(-3).scale(&q(3)) + &t(-2);
        assert_eq!(s.valuation(), Valuation::Finite(q(3)));
        assert!(Valuation::NegInfinity < Valuation::Finite(q(-100)));
    }

    #[test]
    fn cancellation_removes_terms() {
        let s = &t(2) - &t(2);
        assert!(s.is_zero());
        assert_eq!(s.to_string(), "0");
    }

    #[test]
    fn representatives_are_leading_terms() {
        let xs = vec![
            &t(1) + &t(2),
            &t(1).scale(&q(2)) + &PuiseuxScalar::one(),
            PuiseuxScalar::from_int(5),
        ];
        let reps = representatives(&xs).unwrap();
        assert_eq!(reps, vec![t(1), PuiseuxScalar::one(), PuiseuxScalar::from_int(5)]);
        assert!(representatives(&[PuiseuxScalar::zero()]).is_err());
    }

    #[test]
    fn powers_and_inverses() {
        let s = &t(1) + &PuiseuxScalar::one();
        let sq = s.pow(2).unwrap();
        assert_eq!(sq.to_string(), "1 + 2*t + t^2");
        assert!(s.pow(-1).is_err());
        assert_eq!(t(2).scale(&q(3)).pow(-1).unwrap(), PuiseuxScalar::monomial(qf(1, 3), q(-2)));
        assert_eq!(t(2).pow_rational(&qf(1, 2)).unwrap(), t(1));
        assert!(PuiseuxScalar::from_int(2).pow_rational(&qf(1, 2)).is_err());
    }

    #[test]
    fn display_is_ascending() {
        let s = PuiseuxScalar::from_terms([(q(-2), q(1)), (q(-3), q(3)), (qf(1, 2), q(-1))]);
        assert_eq!(s.to_string(), "3*t^-3 + t^-2 - t^1/2");
    }
}
