//! Exact rationals and truncated univariate power series.
//!
//! Every intersection number in this crate is carried as a [`Rational`].
//! Characteristic classes of complete intersections are products and
//! quotients of linear factors `1 + w t`, which [`TruncSeries`] handles in
//! the ring `Q[t] / (t^(n+1))`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Truncation order used for threefold computations.
pub const THREEFOLD_ORDER: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has zero constant term and is not a unit")]
    NonUnit,
}

/// Integer embedded as a rational with denominator one.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Returns the value as an `i64` when it is an integer that fits.
pub fn as_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// Renders an integer as `n` and anything else as `p/q`.
pub fn render(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Element of `Q[t] / (t^(order+1))`.
///
/// The coefficient vector always has exactly `order + 1` entries, trailing
/// zeros included, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Builds a series from the given leading coefficients, padding with
    /// zeros up to `order` and dropping anything past it.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut coeffs: Vec<Rational> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { coeffs }
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::new(order, coeffs.iter().map(|&c| int(c)))
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, std::iter::empty())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, [Rational::one()])
    }

    /// `1 + w t` truncated at `order`.
    pub fn linear_factor(w: u64, order: usize) -> Self {
        Self::new(order, [Rational::one(), Rational::from_integer(w.into())])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncSeries { coeffs })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(Rational::zero(), |acc, i| {
                    acc + &self.coeffs[i] * &other.coeffs[k - i]
                })
            })
            .collect();
        Ok(TruncSeries { coeffs })
    }

    /// Multiplicative inverse, computed by the recurrence
    /// `b_0 = 1/a_0`, `b_k = -(sum_{i=1..k} a_i b_{k-i}) / a_0`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::NonUnit);
        }
        let inv_a0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_a0.clone());
        for k in 1..=self.order() {
            let s = (1..=k).fold(Rational::zero(), |acc, i| {
                acc + &self.coeffs[i] * &out[k - i]
            });
            out.push(-s * &inv_a0);
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.order())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = render(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !c.abs().is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
