//! Weighted complete intersections and their characteristic numbers.
//!
//! A [`WciModel`] is only a numerical presentation: the general member is
//! assumed quasi-smooth and disjoint from the singular locus of the ambient
//! space, and the hyperplane class is assumed to generate the class group.
//! None of this is checked. For the built-in Fano families it holds.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exactnum::{Rational, TruncSeries, THREEFOLD_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("ambient weights must be positive")]
    ZeroWeight,
    #[error("equation degrees must be positive")]
    ZeroDegree,
    #[error("dimension {found} is not allowed here (need {expected})")]
    Dimension { expected: String, found: i64 },
    #[error("not Fano: sum of weights minus sum of degrees is {0}")]
    NotFano(i64),
    #[error("index mismatch: model has index {expected}, got {given}")]
    IndexMismatch { expected: i64, given: i64 },
}

/// Complete intersection of hypersurfaces of degrees `d_1..d_c` in the
/// weighted projective space `P(w_0..w_n)`.
///
/// Weights and degrees are sorted on construction, so two presentations of
/// the same family compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WciModel {
    weights: Vec<u64>,
    degrees: Vec<u64>,
}

impl WciModel {
    pub fn new(
        weights: impl Into<Vec<u64>>,
        degrees: impl Into<Vec<u64>>,
    ) -> Result<Self, ModelError> {
        let mut weights = weights.into();
        let mut degrees = degrees.into();
        if weights.contains(&0) {
            return Err(ModelError::ZeroWeight);
        }
        if degrees.contains(&0) {
            return Err(ModelError::ZeroDegree);
        }
        let dim = weights.len() as i64 - 1 - degrees.len() as i64;
        if dim < 1 {
            return Err(ModelError::Dimension {
                expected: ">= 1".into(),
                found: dim,
            });
        }
        weights.sort_unstable();
        degrees.sort_unstable();
        Ok(WciModel { weights, degrees })
    }

    /// `P^n` itself.
    pub fn projective_space(n: usize) -> Result<Self, ModelError> {
        Self::new(vec![1; n + 1], vec![])
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn dimension(&self) -> usize {
        self.weights.len() - 1 - self.degrees.len()
    }

    /// Degree of `K_X^{-1}` in units of the hyperplane class, which may be
    /// zero or negative for non-Fano models.
    pub fn anticanonical_degree(&self) -> i64 {
        let w: u64 = self.weights.iter().sum();
        let d: u64 = self.degrees.iter().sum();
        w as i64 - d as i64
    }

    fn require_threefold(&self) -> Result<(), ModelError> {
        if self.dimension() == THREEFOLD_ORDER {
            Ok(())
        } else {
            Err(ModelError::Dimension {
                expected: "3".into(),
                found: self.dimension() as i64,
            })
        }
    }

    /// `H^dim = prod(d) / prod(w)`.
    pub fn degree(&self) -> Rational {
        let num: BigInt = self.degrees.iter().map(|&d| BigInt::from(d)).product();
        let den: BigInt = self.weights.iter().map(|&w| BigInt::from(w)).product();
        Rational::new(num, den)
    }

    /// `prod(1 + w t) / prod(1 + d t)`, the total Chern class of the
    /// tangent bundle in powers of the hyperplane class.
    pub fn chern_series(&self, order: usize) -> TruncSeries {
        let ambient = self
            .weights
            .iter()
            .map(|&w| TruncSeries::linear_factor(w, order))
            .fold(TruncSeries::one(order), |acc, f| {
                acc.mul(&f).expect("same order")
            });
        let normal = self
            .degrees
            .iter()
            .map(|&d| TruncSeries::linear_factor(d, order))
            .fold(TruncSeries::one(order), |acc, f| {
                acc.mul(&f).expect("same order")
            });
        let normal_inv = normal.invert().expect("constant term is 1");
        ambient.mul(&normal_inv).expect("same order")
    }
}

impl fmt::Display for WciModel {
    /// `w0,...,wn/d1,...,dc`, the same grammar the CLI accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}/{}", join(&self.weights), join(&self.degrees))
    }
}

/// Fano index, the largest `r` with `-K_X = r H`. Taken to be
/// `sum(w) - sum(d)`; primitivity of `H` is not checked.
pub fn fano_index(m: &WciModel) -> Result<i64, ModelError> {
    match m.anticanonical_degree() {
        r if r > 0 => Ok(r),
        r => Err(ModelError::NotFano(r)),
    }
}

pub fn h_cubed(m: &WciModel) -> Result<Rational, ModelError> {
    m.require_threefold()?;
    Ok(m.degree())
}

/// `(-K_X)^3 = r^3 H^3`.
pub fn minus_k_cubed(m: &WciModel) -> Result<Rational, ModelError> {
    let h3 = h_cubed(m)?;
    let r = fano_index(m)?;
    Ok(Rational::from_integer((r * r * r).into()) * h3)
}

pub fn chern_series(m: &WciModel, order: usize) -> TruncSeries {
    m.chern_series(order)
}

/// Topological Euler characteristic `c_3 . [X]`.
pub fn euler_characteristic(m: &WciModel) -> Result<Rational, ModelError> {
    let h3 = h_cubed(m)?;
    Ok(m.chern_series(THREEFOLD_ORDER).coeff(3) * h3)
}

/// `c_2 . H`; defined for any threefold model.
pub fn c2_dot_h(m: &WciModel) -> Result<Rational, ModelError> {
    let h3 = h_cubed(m)?;
    Ok(m.chern_series(THREEFOLD_ORDER).coeff(2) * h3)
}

pub fn c2_dot_minus_k(m: &WciModel) -> Result<Rational, ModelError> {
    let c2h = c2_dot_h(m)?;
    let r = fano_index(m)?;
    Ok(c2h * Rational::from_integer(r.into()))
}

/// `chi(O_X) = c_1 c_2 / 24` (Todd class in degree three). For a Fano model
/// this is `c2_dot_minus_k / 24`; for index zero it is zero.
pub fn chi_structure_sheaf(m: &WciModel) -> Result<Rational, ModelError> {
    let h3 = h_cubed(m)?;
    let c = m.chern_series(THREEFOLD_ORDER);
    Ok(c.coeff(1) * c.coeff(2) * h3 / Rational::from_integer(24.into()))
}

/// Double cover of `X` branched along a member of `|-2K_X|`: adjoin a
/// variable of weight `r` and the equation `z^2 = f_{2r}`.
pub fn etale_cover_model(m: &WciModel, r: i64) -> Result<WciModel, ModelError> {
    let expected = fano_index(m)?;
    if r != expected {
        return Err(ModelError::IndexMismatch { expected, given: r });
    }
    let r = r as u64;
    let mut weights = m.weights.clone();
    weights.push(r);
    let mut degrees = m.degrees.clone();
    degrees.push(2 * r);
    WciModel::new(weights, degrees)
}

/// Intrinsic numbers of a Fano threefold model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntrinsicInvariants {
    pub index_r: i64,
    pub minus_k_cubed: Rational,
    pub euler: Rational,
    pub c2_dot_minus_k: Rational,
    pub chi_structure: Rational,
}

impl IntrinsicInvariants {
    pub fn compute(m: &WciModel) -> Result<Self, ModelError> {
        let index_r = fano_index(m)?;
        Ok(IntrinsicInvariants {
            index_r,
            minus_k_cubed: minus_k_cubed(m)?,
            euler: euler_characteristic(m)?,
            c2_dot_minus_k: c2_dot_minus_k(m)?,
            chi_structure: chi_structure_sheaf(m)?,
        })
    }

    /// True when `(-K)^3` and `e` are integers and `chi(O) = 1`.
    pub fn is_consistent_fano(&self) -> bool {
        self.minus_k_cubed.is_integer()
            && self.euler.is_integer()
            && !self.minus_k_cubed.is_zero()
            && self.chi_structure == Rational::from_integer(1.into())
    }
}
