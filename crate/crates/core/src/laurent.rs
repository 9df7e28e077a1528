//! Integer Laurent polynomials in `t`.
//!
//! Stored densely from the lowest exponent; the coefficient vector is empty
//! for zero and otherwise starts and ends with a nonzero entry. Arithmetic is
//! exact: any `i128` overflow panics instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BraidError, Result};

pub type Coeff = i128;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    low: i32,
    coeffs: Vec<Coeff>,
}

fn add_c(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn mul_c(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · t^exp`
    pub fn monomial(c: Coeff, exp: i32) -> Self {
        Self::trimmed(exp, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, Coeff)>>(terms: I) -> Self {
        let terms: Vec<_> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0; (high - low) as usize + 1];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - low) as usize];
            *slot = add_c(*slot, c);
        }
        Self::trimmed(low, coeffs)
    }

    fn trimmed(mut low: i32, mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        low += lead as i32;
        Self { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// `max_exponent − min_exponent`, zero for constants.
    pub fn span(&self) -> u32 {
        self.coeffs.len().saturating_sub(1) as u32
    }

    pub fn coefficient(&self, exp: i32) -> Coeff {
        let k = exp - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    pub fn leading_coefficient(&self) -> Coeff {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, Coeff)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.low + k as i32, c))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: Coeff) -> Self {
        Self::trimmed(self.low, self.coeffs.iter().map(|&x| mul_c(x, c)).collect())
    }

    /// Substitute `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> Self {
        match self.max_exponent() {
            None => Self::zero(),
            Some(high) => Self { low: -high, coeffs: self.coeffs.iter().rev().copied().collect() },
        }
    }

    /// `t^k − 1`
    pub fn t_power_minus_one(k: i32) -> Self {
        Self::from_terms([(k, 1), (0, -1)])
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(BraidError::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d = &divisor.coeffs;
        let d_lead = *d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return Err(BraidError::InexactDivision(format!("{self} by {divisor}")));
        }
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![0; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + d.len() - 1];
            if top == 0 {
                continue;
            }
            if top % d_lead != 0 {
                return Err(BraidError::InexactDivision(format!("{self} by {divisor}")));
            }
            let c = top / d_lead;
            quot[k] = c;
            for (j, &dj) in d.iter().enumerate() {
                rem[k + j] = add_c(rem[k + j], -mul_c(c, dj));
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(BraidError::InexactDivision(format!("{self} by {divisor}")));
        }
        Ok(Self::trimmed(self.low - divisor.low, quot))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exponent().unwrap().max(rhs.max_exponent().unwrap());
        let mut coeffs = vec![0; (high - low) as usize + 1];
        for p in [self, rhs] {
            let off = (p.low - low) as usize;
            for (k, &c) in p.coeffs.iter().enumerate() {
                coeffs[off + k] = add_c(coeffs[off + k], c);
            }
        }
        LaurentPolynomial::trimmed(low, coeffs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
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
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = add_c(coeffs[i + j], mul_c(a, b));
            }
        }
        LaurentPolynomial::trimmed(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            if k > 0 && !sign.is_empty() {
                f.write_str(" ")?;
            }
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermsRepr {
    terms: Vec<(i32, i64)>,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(e, c)| i64::try_from(c).map(|c| (e, c)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        TermsRepr { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TermsRepr::deserialize(deserializer)?;
        Ok(Self::from_terms(repr.terms.into_iter().map(|(e, c)| (e, c as Coeff))))
    }
}
