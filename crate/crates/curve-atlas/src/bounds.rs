//! Castelnuovo bounds, Brill–Noether numbers and related numerics.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("degree {d} is below the ambient dimension {r}")]
    DegreeBelowDimension { d: i64, r: i64 },
    #[error("ambient dimension {0} must be at least 2")]
    DimensionTooSmall(i64),
    #[error("pi1({d},{r}) is only provided for d >= 2r")]
    Pi1Domain { d: i64, r: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveTriple {
    pub d: i64,
    pub g: i64,
    pub r: i64,
}

impl CurveTriple {
    pub fn new(d: i64, g: i64, r: i64) -> Self {
        CurveTriple { d, g, r }
    }

    /// The triple with speciality `alpha`, i.e. `d = g + r - alpha`.
    pub fn with_alpha(alpha: i64, r: i64, g: i64) -> Self {
        CurveTriple { d: g + r - alpha, g, r }
    }

    pub fn alpha(&self) -> i64 {
        self.g - self.d + self.r
    }

    pub fn rho(&self) -> i64 {
        rho(self.d, self.g, self.r)
    }
}

/// Castelnuovo's bound for nondegenerate irreducible curves of degree `d` in `P^r`.
pub fn pi(d: i64, r: i64) -> Result<i64, BoundsError> {
    if r < 2 {
        return Err(BoundsError::DimensionTooSmall(r));
    }
    if d < r {
        return Err(BoundsError::DegreeBelowDimension { d, r });
    }
    let m = (d - 1) / (r - 1);
    let eps = (d - 1) - m * (r - 1);
    Ok(m * (m - 1) * (r - 1) / 2 + m * eps)
}

/// Bound for curves not lying on a surface of minimal degree.
pub fn pi1(d: i64, r: i64) -> Result<i64, BoundsError> {
    if r < 2 {
        return Err(BoundsError::DimensionTooSmall(r));
    }
    if d < 2 * r {
        return Err(BoundsError::Pi1Domain { d, r });
    }
    let m = d / r;
    let eps = d - m * r;
    Ok(m * (m - 1) * r / 2 + m * eps + i64::from(eps == 0))
}

pub fn rho(d: i64, g: i64, r: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

pub fn lambda(d: i64, g: i64, r: i64) -> i64 {
    3 * g - 3 + rho(d, g, r)
}

pub fn pgl_dim(r: i64) -> i64 {
    (r + 1) * (r + 1) - 1
}

pub fn hilb_expected_dim(d: i64, g: i64, r: i64) -> i64 {
    lambda(d, g, r) + pgl_dim(r)
}

/// Castelnuovo–Severi: a curve with maps of degrees `m`, `n` onto curves of
/// genera `h`, `q` (not factoring through a common map) has genus at most this.
pub fn castelnuovo_severi_max_genus(m: i64, h: i64, n: i64, q: i64) -> i64 {
    m * h + n * q + (m - 1) * (n - 1)
}

/// Largest `r` admitting a birationally very ample `g^r_d` on a genus `g` curve.
pub fn max_birational_dim(d: i64, g: i64) -> i64 {
    if d <= g {
        (d + 1).div_euclid(3)
    } else {
        (2 * d - g + 1).div_euclid(3)
    }
}

/// Largest speciality of a birationally very ample `g^r_d` (the same bound
/// rewritten in terms of `g - d + r`).
pub fn max_speciality(d: i64, g: i64) -> i64 {
    if d <= g {
        (3 * g - 2 * d + 1).div_euclid(3)
    } else {
        (2 * g - d + 1).div_euclid(3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normal_curve() {
        for r in 2..20 {
            assert_eq!(pi(r, r).unwrap(), 0);
        }
    }

    #[test]
    fn domains() {
        assert!(pi(3, 4).is_err());
        assert!(pi1(7, 4).is_err());
        assert!(pi(5, 1).is_err());
    }

    #[test]
    fn speciality_bound_matches_dimension_bound() {
        for d in 0..60 {
            for g in 0..60 {
                let r = max_birational_dim(d, g);
                assert_eq!(max_speciality(d, g), g - d + r, "d={d} g={g}");
            }
        }
    }
}
