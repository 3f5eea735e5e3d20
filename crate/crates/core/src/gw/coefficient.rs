//! Coefficients in `Z` or `Z[1/p]`.
//!
//! A [`Coefficient`] is stored as a reduced pair `numerator / p^p_exponent`.
//! The prime `p` is not part of the value: it belongs to the ambient
//! [`CoeffRing`], which every arithmetic operation goes through.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::GwError;

/// An element `numerator / p^p_exponent` of `Z[1/p]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coefficient {
    numerator: BigInt,
    p_exponent: u32,
}

impl Coefficient {
    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self {
            numerator: n.into(),
            p_exponent: 0,
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn p_exponent(&self) -> u32 {
        self.p_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Whether the value is a plain integer (no `p` in the denominator).
    pub fn is_integral(&self) -> bool {
        self.p_exponent == 0
    }

    /// The value as an `i64`, when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if self.p_exponent != 0 {
            return None;
        }
        i64::try_from(&self.numerator).ok()
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl fmt::Display for Coefficient {
    /// `n` for integers, `n/p^e` otherwise. The prime is not known here, so
    /// the denominator is printed symbolically; use [`CoeffRing::render`]
    /// for the concrete form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p_exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/p^{}", self.numerator, self.p_exponent)
        }
    }
}

/// The coefficient ring `Z[1/p]` for a characteristic exponent `p`
/// (`p = 1` gives plain `Z`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoeffRing {
    p: u64,
}

impl CoeffRing {
    pub fn new(char_exponent: u64) -> Self {
        assert!(
            char_exponent >= 1,
            "characteristic exponent must be positive"
        );
        Self { p: char_exponent }
    }

    pub fn char_exponent(&self) -> u64 {
        self.p
    }

    fn p_pow(&self, e: u32) -> BigInt {
        num_traits::pow(BigInt::from(self.p), e as usize)
    }

    /// Builds `numerator / p^e`, reducing common factors of `p`.
    pub fn make(
        &self,
        numerator: impl Into<BigInt>,
        p_exponent: u32,
    ) -> Result<Coefficient, GwError> {
        if p_exponent > 0 && self.p == 1 {
            return Err(GwError::DenominatorWithoutCharacteristic);
        }
        Ok(self.reduce(numerator.into(), p_exponent))
    }

    fn reduce(&self, mut numerator: BigInt, mut p_exponent: u32) -> Coefficient {
        if numerator.is_zero() {
            return Coefficient::zero();
        }
        if self.p > 1 {
            let p = BigInt::from(self.p);
            while p_exponent > 0 {
                let (q, r) = numerator.div_rem(&p);
                if !r.is_zero() {
                    break;
                }
                numerator = q;
                p_exponent -= 1;
            }
        }
        Coefficient {
            numerator,
            p_exponent,
        }
    }

    /// Re-checks a coefficient that may have been built under another ring.
    pub fn admit(&self, c: &Coefficient) -> Result<Coefficient, GwError> {
        self.make(c.numerator.clone(), c.p_exponent)
    }

    pub fn add(&self, x: &Coefficient, y: &Coefficient) -> Coefficient {
        let e = x.p_exponent.max(y.p_exponent);
        let xn = &x.numerator * self.p_pow(e - x.p_exponent);
        let yn = &y.numerator * self.p_pow(e - y.p_exponent);
        self.reduce(xn + yn, e)
    }

    pub fn neg(&self, x: &Coefficient) -> Coefficient {
        Coefficient {
            numerator: -&x.numerator,
            p_exponent: x.p_exponent,
        }
    }

    pub fn sub(&self, x: &Coefficient, y: &Coefficient) -> Coefficient {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Coefficient, y: &Coefficient) -> Coefficient {
        self.reduce(&x.numerator * &y.numerator, x.p_exponent + y.p_exponent)
    }

    /// Multiplies by an ordinary integer.
    pub fn scale(&self, x: &Coefficient, k: i64) -> Coefficient {
        self.reduce(&x.numerator * BigInt::from(k), x.p_exponent)
    }

    /// Whether `x` is invertible in `Z[1/p]`, i.e. `x = ±p^j`.
    pub fn is_unit(&self, x: &Coefficient) -> bool {
        let mut n = x.numerator.abs();
        if self.p == 1 {
            return n.is_one();
        }
        let p = BigInt::from(self.p);
        while !n.is_zero() && !n.is_one() {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                return false;
            }
            n = q;
        }
        n.is_one()
    }

    pub fn inverse(&self, x: &Coefficient) -> Option<Coefficient> {
        if !self.is_unit(x) {
            return None;
        }
        // x = sign * p^k / p^e, so 1/x = sign * p^e / p^k
        let sign = if x.numerator.is_negative() { -1 } else { 1 };
        let mut k = 0u32;
        let mut n = x.numerator.abs();
        if self.p > 1 {
            let p = BigInt::from(self.p);
            while !n.is_one() {
                n /= &p;
                k += 1;
            }
        }
        Some(self.reduce(BigInt::from(sign) * self.p_pow(x.p_exponent), k))
    }

    /// Splits `x` as `2q + r` with `r ∈ {0, 1}`. Needs `p` odd (or 1):
    /// then `Z[1/p] / 2 = Z/2` and `r` is the parity of the numerator.
    pub fn div_rem_two(&self, x: &Coefficient) -> (Coefficient, Coefficient) {
        debug_assert!(self.p % 2 == 1);
        let r: i64 = if x.numerator.is_odd() { 1 } else { 0 };
        let shifted = self.sub(x, &Coefficient::integer(r));
        // numerator of x - r is even because p^e is odd
        let q = self.reduce(shifted.numerator / 2, shifted.p_exponent);
        (q, Coefficient::integer(r))
    }

    /// Renders `n` or `n/p^e` with the concrete prime.
    pub fn render(&self, x: &Coefficient) -> String {
        if x.p_exponent == 0 {
            x.numerator.to_string()
        } else {
            format!("{}/{}^{}", x.numerator, self.p, x.p_exponent)
        }
    }

    /// Parses the output of [`CoeffRing::render`] (optionally unsigned).
    pub fn parse(&self, s: &str) -> Result<Coefficient, GwError> {
        let bad = || GwError::BadCoefficient(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Coefficient::integer(n))
            }
            Some((num, den)) => {
                let n: BigInt = num.trim().parse().map_err(|_| bad())?;
                let (base, exp) = den.trim().split_once('^').ok_or_else(bad)?;
                let base: u64 = base.trim().parse().map_err(|_| bad())?;
                let exp: u32 = exp.trim().parse().map_err(|_| bad())?;
                if base != self.p {
                    return Err(GwError::ForeignDenominator {
                        found: base,
                        char_exponent: self.p,
                    });
                }
                self.make(n, exp)
            }
        }
    }
}
