use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::scalar::{fmt_term, PuiseuxScalar};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};

/// An integer matrix `(a, b; c, d)` with determinant one, acting on exponent
/// pairs by `(i, j) ↦ (a i + b j, c i + d j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::NotUnimodular(a, b, c, d));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn apply(&self, (i, j): (i64, i64)) -> (i64, i64) {
        (self.a * i + self.b * j, self.c * i + self.d * j)
    }

    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn transpose(&self) -> Self {
        Self { a: self.a, b: self.c, c: self.b, d: self.d }
    }

    /// `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    /// Action on rational points.
    pub fn apply_q(&self, (x, y): (&Q, &Q)) -> (Q, Q) {
        let f = |k: i64| Q::from_integer(k.into());
        (f(self.a) * x + f(self.b) * y, f(self.c) * x + f(self.d) * y)
    }

    /// The induced map on the tropical plane when exponents move by `self`:
    /// `X ↦ self^{-T} X`, which keeps `⟨exponent, X⟩` invariant.
    pub fn dual(&self) -> Self {
        self.inverse().transpose()
    }

    /// A unimodular map whose first row is the primitive vector `u`.
    pub fn with_first_row(u: (i64, i64)) -> Result<Self> {
        let (g, s, t) = ext_gcd(u.0, u.1);
        if g != 1 {
            return Err(Error::Hypothesis(format!("{u:?} is not primitive")));
        }
        // u.0*s + u.1*t = 1, so (u.0, u.1; -t, s) has determinant 1.
        Self::new(u.0, u.1, -t, s)
    }
}

/// Returns `(g, s, t)` with `a s + b t = g = gcd(a, b) ≥ 0`.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - a.div_euclid(b) * t)
    }
}

/// `F(x, y) = Σ a_ij x^i y^j` with Puiseux coefficients and integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    monomials: BTreeMap<(i64, i64), PuiseuxScalar>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(PuiseuxScalar::one())
    }

    pub fn constant(c: PuiseuxScalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: PuiseuxScalar, i: i64, j: i64) -> Self {
        let mut monomials = BTreeMap::new();
        if !c.is_zero() {
            monomials.insert((i, j), c);
        }
        Self { monomials }
    }

    pub fn x() -> Self {
        Self::monomial(PuiseuxScalar::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(PuiseuxScalar::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), PuiseuxScalar)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, key: (i64, i64), c: PuiseuxScalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.monomials.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.monomials.insert(key, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn coefficient(&self, i: i64, j: i64) -> Option<&PuiseuxScalar> {
        self.monomials.get(&(i, j))
    }

    /// The exponent set `A`, in lexicographic order.
    pub fn support(&self) -> Vec<(i64, i64)> {
        self.monomials.keys().copied().collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &PuiseuxScalar)> {
        self.monomials.iter()
    }

    /// Multiplies by the monomial `x^di y^dj`.
    pub fn shift(&self, di: i64, dj: i64) -> Self {
        Self {
            monomials: self
                .monomials
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by a monomial so that every exponent is non-negative and the
    /// minimum in each variable is zero.
    pub fn clear_denominators(&self) -> Self {
        let imin = self.monomials.keys().map(|k| k.0).min().unwrap_or(0);
        let jmin = self.monomials.keys().map(|k| k.1).min().unwrap_or(0);
        self.shift(-imin, -jmin)
    }

    pub fn scale(&self, c: &PuiseuxScalar) -> Self {
        Self::from_terms(self.monomials.iter().map(|(&k, v)| (k, v * c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `(x, y) ↦ (x^a y^c, x^b y^d)`, i.e. moves every exponent
    /// pair by `M`. Coefficients are carried unchanged.
    pub fn monomial_transform(&self, m: &UnimodularMap) -> Self {
        Self {
            monomials: self
                .monomials
                .iter()
                .map(|(&k, c)| (m.apply(k), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x ↦ r x`, `y ↦ q y`.
    ///
    /// Negative exponents need `r` (resp. `q`) to be a monomial, since other
    /// scalars have no finite inverse.
    pub fn scale_transform(&self, r: &PuiseuxScalar, q: &PuiseuxScalar) -> Result<Self> {
        if r.is_zero() || q.is_zero() {
            return Err(Error::ZeroScalar);
        }
        let mut out = Self::zero();
        for (&(i, j), c) in &self.monomials {
            let f = &(c * &r.pow(i)?) * &q.pow(j)?;
            out.add_term((i, j), f);
        }
        Ok(out)
    }

    /// Canonical JSON form.
    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            monomials: self
                .monomials
                .iter()
                .map(|(&(i, j), c)| MonomialJson {
                    i,
                    j,
                    coef: c
                        .terms()
                        .map(|(e, v)| TermJson { exp: fmt_q(e), val: fmt_q(v) })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Self> {
        let mut p = Self::zero();
        for m in &json.monomials {
            let mut c = PuiseuxScalar::zero();
            for t in &m.coef {
                c = &c + &PuiseuxScalar::monomial(parse_q(&t.val)?, parse_q(&t.exp)?);
            }
            p.add_term((m.i, m.j), c);
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub monomials: Vec<MonomialJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub i: i64,
    pub j: i64,
    pub coef: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: String,
    pub val: String,
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.monomials {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            monomials: self.monomials.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&(i1, j1), c1) in &self.monomials {
            for (&(i2, j2), c2) in &rhs.monomials {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $f(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

fn fmt_monomial(i: i64, j: i64) -> Option<String> {
    let part = |v: &str, e: i64| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    match (part("x", i), part("y", j)) {
        (None, None) => None,
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (Some(a), Some(b)) => Some(format!("{a}*{b}")),
    }
}

/// Canonical text: monomials in lexicographic exponent order, Puiseux terms in
/// ascending exponent order. The output parses back to the same value.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&(i, j), c)) in self.monomials.iter().enumerate() {
            let mono = fmt_monomial(i, j);
            let (neg, body) = if c.is_monomial() {
                let (e, v) = c.terms().next().unwrap();
                let (neg, s) = fmt_term(e, v);
                let body = match (&mono, s.as_str()) {
                    (Some(m), "1") => m.clone(),
                    (Some(m), _) => format!("{s}*{m}"),
                    (None, _) => s,
                };
                (neg, body)
            } else {
                let body = match &mono {
                    Some(m) => format!("({c})*{m}"),
                    None => format!("({c})"),
                };
                (false, body)
            };
            match (k, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn t(e: i64) -> PuiseuxScalar {
        PuiseuxScalar::t_pow(q(e))
    }

    #[test]
    fn unimodular_validation() {
        assert!(UnimodularMap::new(1, 1, 0, 1).is_ok());
        assert!(UnimodularMap::new(2, 0, 0, 1).is_err());
        let m = UnimodularMap::new(2, 1, 1, 1).unwrap();
        assert_eq!(m.compose(&m.inverse()), UnimodularMap::IDENTITY);
        for u in [(1, 0), (0, 1), (3, -2), (-5, 7), (1, 1)] {
            let m = UnimodularMap::with_first_row(u).unwrap();
            assert_eq!((m.a, m.b), u);
        }
        assert!(UnimodularMap::with_first_row((2, 4)).is_err());
    }

    #[test]
    fn swap_map_on_x2y() {
        let p = LaurentPolynomial::monomial(PuiseuxScalar::one(), 2, 1);
        let swap = UnimodularMap::new(0, 1, 1, 0);
        assert!(swap.is_err(), "swap has determinant -1");
        let swap = UnimodularMap { a: 0, b: 1, c: 1, d: 0 };
        assert_eq!(p.monomial_transform(&swap).support(), vec![(1, 2)]);
        assert_eq!(p.monomial_transform(&UnimodularMap::IDENTITY), p);
    }

    #[test]
    fn scale_transform_substitution() {
        let f = LaurentPolynomial::monomial(t(-3), 1, 3);
        let g = f.scale_transform(&t(1), &PuiseuxScalar::one()).unwrap();
        assert_eq!(g.coefficient(1, 3), Some(&t(-2)));
        let id = f.scale_transform(&PuiseuxScalar::one(), &PuiseuxScalar::one()).unwrap();
        assert_eq!(id, f);
        let neg = LaurentPolynomial::monomial(PuiseuxScalar::one(), -1, 0);
        assert!(neg.scale_transform(&(&t(1) + &t(2)), &PuiseuxScalar::one()).is_err());
        assert!(f.scale_transform(&PuiseuxScalar::zero(), &t(1)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = LaurentPolynomial::from_terms([
            ((1, 2), &t(-3).scale(&q(3)) + &t(-2)),
            ((0, 0), PuiseuxScalar::from_int(-1)),
        ]);
        let j = f.to_json();
        assert_eq!(j.monomials[1].coef[0].exp, "-3");
        assert_eq!(LaurentPolynomial::from_json(&j).unwrap(), f);
    }
}
