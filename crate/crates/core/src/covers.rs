//! Invariants of the Calabi-Yau double cover `Y -> W` of a Fano-Enriques
//! threefold `W = X / theta`, computed from the numbers of the smooth Fano
//! threefold `X` that covers `W`.
//!
//! Notation: `S` is a smooth member of `|-2K_W|` (an Enriques surface cover
//! branch), `S_X` its preimage in `X`, `H_W` the ample Cartier class with
//! `-K_W == H_W` numerically, and `H_Y` the ample generator of `Pic(Y)`.
//! The pull-back `psi^* H_W` equals `k H_Y` with `k = l r`.

use thiserror::Error;

use crate::exactnum::{as_i64, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("invalid Fano input: {0}")]
    InvalidInput(String),
    #[error("unsupported Picard rank h2(X) = {0}; only rank one is determined")]
    UnsupportedPicardRank(i64),
    #[error("no divisibility factor l satisfies the integrality conditions")]
    NoAdmissibleFactor,
    #[error("divisibility factor is ambiguous; candidates l = {0:?}")]
    AmbiguousFactor(Vec<i64>),
    #[error("inconsistent cover invariants: {0}")]
    Inconsistent(String),
}

/// Numbers of the Fano threefold `X` fed into the cover computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FanoInput {
    /// `e(X)`
    pub euler_x: i64,
    /// `(-K_X)^3`
    pub k3: i64,
    /// Fano index `r`
    pub index_r: i64,
    /// `h^2(X)`
    pub h2_x: i64,
}

impl FanoInput {
    pub fn new(euler_x: i64, k3: i64, index_r: i64, h2_x: i64) -> Result<Self, CoverError> {
        let f = FanoInput {
            euler_x,
            k3,
            index_r,
            h2_x,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<(), CoverError> {
        let bad = |msg: String| Err(CoverError::InvalidInput(msg));
        if self.index_r < 1 {
            return bad(format!("index r = {} must be positive", self.index_r));
        }
        if self.h2_x < 1 {
            return bad(format!("h2(X) = {} must be positive", self.h2_x));
        }
        if self.k3 <= 0 {
            return bad(format!("(-K)^3 = {} must be positive", self.k3));
        }
        let r3 = self.index_r.checked_pow(3);
        if r3.is_none_or(|r3| self.k3 % r3 != 0) {
            return bad(format!(
                "(-K)^3 = {} is not divisible by r^3 for r = {}",
                self.k3, self.index_r
            ));
        }
        Ok(())
    }
}

/// `e(Y) = e(X) - 24 - 2 (-K_X)^3`.
pub fn euler_cover(f: &FanoInput) -> i64 {
    f.euler_x - 24 - 2 * f.k3
}

/// `e(S_X) = c_2(X).(-2K_X) + 4(-K_X)^3 = 48 + 4(-K_X)^3`, using
/// `c_2 . (-K_X) = 24` from `chi(O_X) = 1`.
pub fn euler_enriques_surface_cover(f: &FanoInput) -> Rational {
    int(48) + int(4) * int(f.k3)
}

/// `e(S) = e(S_X) / 2`; `S_X -> S` is unramified of degree two.
pub fn euler_enriques_surface(f: &FanoInput) -> Rational {
    euler_enriques_surface_cover(f) / int(2)
}

/// `e(W) = (e(X) + 8) / 2`: `X -> W` is a double cover branched at the eight
/// quotient singularities.
pub fn euler_quotient(f: &FanoInput) -> Rational {
    (int(f.euler_x) + int(8)) / int(2)
}

/// `e(Y) = 2 e(W) - e(S) - 8`, the Euler characteristic by counting the
/// branched double cover `Y -> W` directly.
pub fn euler_cover_via_quotient(f: &FanoInput) -> Rational {
    int(2) * euler_quotient(f) - euler_enriques_surface(f) - int(8)
}

/// `psi^*(H_W) . c_2(Y) = (-K_X)^3 + 24`.
pub fn pullback_h_c2(f: &FanoInput) -> i64 {
    f.k3 + 24
}

/// Riemann-Roch on a Calabi-Yau threefold:
/// `chi(Y, H) = H^3 / 6 + H.c_2 / 12`.
pub fn chi_riemann_roch(h3: &Rational, hc2: &Rational) -> Rational {
    h3 / int(6) + hc2 / int(12)
}

/// Every `l >= 1` for which `H_Y^3 = k3 / (r l)^3` is a positive integer,
/// `H_Y.c_2 = (k3 + 24) / (r l)` is an integer and `chi(Y, H_Y)` is an
/// integer. Ascending.
pub fn admissible_l_factors(f: &FanoInput) -> Result<Vec<i64>, CoverError> {
    f.validate()?;
    let mut out = Vec::new();
    let mut l: i64 = 1;
    loop {
        let k = f.index_r * l;
        let Some(k_cubed) = k.checked_pow(3) else {
            break;
        };
        if k_cubed > f.k3 {
            break;
        }
        let h3 = Rational::new(f.k3.into(), k_cubed.into());
        let hc2 = Rational::new(pullback_h_c2(f).into(), k.into());
        if h3.is_integer() && hc2.is_integer() && chi_riemann_roch(&h3, &hc2).is_integer() {
            out.push(l);
        }
        l += 1;
    }
    if out.is_empty() {
        Err(CoverError::NoAdmissibleFactor)
    } else {
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInvariants {
    pub euler_y: i64,
    pub h_y_cubed: i64,
    pub h_c2: i64,
    pub h11: i64,
    pub h12: i64,
    pub l_factor: i64,
    pub chi_h: i64,
    pub euler_w: Rational,
    pub euler_s: Rational,
    pub euler_sx: Rational,
}

impl CoverInvariants {
    /// Checks `e = 2(h11 - h12)` and Riemann-Roch integrality.
    pub fn is_consistent(&self) -> bool {
        let chi = chi_riemann_roch(&int(self.h_y_cubed), &int(self.h_c2));
        self.euler_y == 2 * (self.h11 - self.h12) && self.h_y_cubed > 0 && chi == int(self.chi_h)
    }
}

/// Invariants of `Y` for a Fano threefold of Picard number one.
///
/// `h^{1,1}(Y) = 1` follows from `1 <= h^2(W) <= h^2(Y) <= h^2(X) = 1`;
/// `h^{1,2}` then comes from `e(Y) = 2(h^{1,1} - h^{1,2})`.
pub fn cover_invariants(f: &FanoInput) -> Result<CoverInvariants, CoverError> {
    f.validate()?;
    if f.h2_x != 1 {
        return Err(CoverError::UnsupportedPicardRank(f.h2_x));
    }
    let ls = admissible_l_factors(f)?;
    if ls != [1] {
        return Err(CoverError::AmbiguousFactor(ls));
    }
    let r = f.index_r;
    let euler_y = euler_cover(f);
    let via_quotient = euler_cover_via_quotient(f);
    if via_quotient != int(euler_y) {
        return Err(CoverError::Inconsistent(format!(
            "e(Y) = {euler_y} but 2e(W) - e(S) - 8 = {via_quotient}"
        )));
    }
    if euler_y % 2 != 0 {
        return Err(CoverError::Inconsistent(format!("e(Y) = {euler_y} is odd")));
    }
    let h11 = 1;
    let h12 = h11 - euler_y / 2;
    if h12 < 0 {
        return Err(CoverError::Inconsistent(format!("h12 = {h12} is negative")));
    }
    let h_y_cubed = f.k3 / (r * r * r);
    let h_c2 = pullback_h_c2(f) / r;
    let chi = chi_riemann_roch(&int(h_y_cubed), &int(h_c2));
    let chi_h =
        as_i64(&chi).ok_or_else(|| CoverError::Inconsistent(format!("chi(Y, H_Y) = {chi}")))?;
    let euler_w = euler_quotient(f);
    let euler_sx = euler_enriques_surface_cover(f);
    let euler_s = euler_enriques_surface(f);
    Ok(CoverInvariants {
        euler_y,
        h_y_cubed,
        h_c2,
        h11,
        h12,
        l_factor: 1,
        chi_h,
        euler_w,
        euler_s,
        euler_sx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::frac;

    const X1: FanoInput = FanoInput {
        euler_x: -56,
        k3: 4,
        index_r: 1,
        h2_x: 1,
    };
    const X2: FanoInput = FanoInput {
        euler_x: -24,
        k3: 8,
        index_r: 1,
        h2_x: 1,
    };
    const X3: FanoInput = FanoInput {
        euler_x: -16,
        k3: 16,
        index_r: 2,
        h2_x: 1,
    };
    const X4: FanoInput = FanoInput {
        euler_x: 0,
        k3: 32,
        index_r: 2,
        h2_x: 1,
    };

    fn degenerate(euler_x: i64, k3: i64) -> FanoInput {
        FanoInput {
            euler_x,
            k3,
            index_r: 1,
            h2_x: 1,
        }
    }

    #[test]
    fn euler_cover_examples() {
        assert_eq!(euler_cover(&X2), -64);
        assert_eq!(euler_cover(&X4), -88);
        assert_eq!(euler_cover(&degenerate(24, 0)), 0);
    }

    #[test]
    fn surface_examples() {
        assert_eq!(euler_enriques_surface_cover(&X1), int(64));
        assert_eq!(euler_enriques_surface_cover(&X4), int(176));
        assert_eq!(euler_enriques_surface_cover(&degenerate(0, 0)), int(48));
        assert_eq!(euler_enriques_surface(&X1), int(32));
        assert_eq!(euler_enriques_surface(&X2), int(40));
        assert_eq!(euler_enriques_surface(&degenerate(0, 0)), int(24));
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(euler_quotient(&X4), int(4));
        assert_eq!(euler_quotient(&X1), int(-24));
        assert_eq!(euler_quotient(&degenerate(-8, 4)), int(0));
        assert_eq!(euler_quotient(&degenerate(-7, 4)), frac(1, 2));
    }

    #[test]
    fn via_quotient_examples() {
        assert_eq!(euler_cover_via_quotient(&X1), int(-88));
        assert_eq!(euler_cover_via_quotient(&X3), int(-72));
        assert_eq!(euler_cover_via_quotient(&X2), int(-64));
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(pullback_h_c2(&X1), 28);
        assert_eq!(pullback_h_c2(&X2), 32);
        assert_eq!(pullback_h_c2(&degenerate(0, 0)), 24);
    }

    #[test]
    fn riemann_roch_examples() {
        assert_eq!(chi_riemann_roch(&int(8), &int(32)), int(4));
        assert_eq!(chi_riemann_roch(&int(0), &int(0)), int(0));
        assert_eq!(chi_riemann_roch(&int(1), &int(16)), frac(3, 2));
    }

    #[test]
    fn l_factor_examples() {
        assert_eq!(admissible_l_factors(&X1).unwrap(), vec![1]);
        assert_eq!(admissible_l_factors(&X2).unwrap(), vec![1]);
        assert_eq!(admissible_l_factors(&X3).unwrap(), vec![1]);
        assert_eq!(admissible_l_factors(&X4).unwrap(), vec![1]);
    }

    #[test]
    fn l_factor_ambiguity_is_reported() {
        // r = 1, k3 = 16: l = 2 gives H^3 = 2, H.c2 = 20, chi = 2.
        let f = FanoInput::new(-100, 16, 1, 1).unwrap();
        let ls = admissible_l_factors(&f).unwrap();
        assert_eq!(ls, vec![1, 2]);
        assert_eq!(
            cover_invariants(&f).unwrap_err(),
            CoverError::AmbiguousFactor(vec![1, 2])
        );
    }

    #[test]
    fn l_factor_none() {
        // r = 1, k3 = 1: H^3 = 1, H.c2 = 25, chi = 1/6 + 25/12 = 9/4.
        let f = FanoInput::new(0, 1, 1, 1).unwrap();
        assert_eq!(
            admissible_l_factors(&f).unwrap_err(),
            CoverError::NoAdmissibleFactor
        );
    }

    #[test]
    fn cover_examples() {
        let y1 = cover_invariants(&X1).unwrap();
        assert_eq!((y1.h_y_cubed, y1.h_c2, y1.h11, y1.h12), (4, 28, 1, 45));
        let y3 = cover_invariants(&X3).unwrap();
        assert_eq!((y3.h_y_cubed, y3.h_c2, y3.h11, y3.h12), (2, 20, 1, 37));
        let y4 = cover_invariants(&X4).unwrap();
        assert_eq!((y4.h_y_cubed, y4.h_c2, y4.h11, y4.h12), (4, 28, 1, 45));
        assert_eq!(y4.euler_w, int(4));
        assert_eq!(y4.euler_sx, int(176));
        assert_eq!(y4.euler_s, int(88));
        for y in [y1, y3, y4] {
            assert!(y.is_consistent());
            assert_eq!(y.l_factor, 1);
        }
    }

    #[test]
    fn rejects_higher_picard_rank() {
        let f = FanoInput { h2_x: 2, ..X2 };
        assert_eq!(
            cover_invariants(&f).unwrap_err(),
            CoverError::UnsupportedPicardRank(2)
        );
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(FanoInput::new(0, 0, 1, 1).is_err());
        assert!(FanoInput::new(0, 12, 2, 1).is_err());
        assert!(FanoInput::new(0, 8, 0, 1).is_err());
        assert!(FanoInput::new(0, 8, 1, 0).is_err());
        assert!(cover_invariants(&degenerate(24, 0)).is_err());
    }
}
