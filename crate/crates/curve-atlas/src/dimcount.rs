//! Dimension counts for families of curves, kept as labelled ledgers.

use crate::picard::{arithmetic_genus, intersect, riemann_roch_chi, DivisorClass, SurfaceKind, SurfaceModel};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DimError {
    #[error("no automorphism dimension registered for {0}")]
    UnregisteredSurface(String),
    #[error("grassmannian G({k},{n}) needs 0 <= k <= n")]
    Range { k: i64, n: i64 },
    #[error("linked genus is not an integer: (s+t-4)(d-e) = {0} is odd")]
    NonIntegral(i64),
    #[error("list lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("no tabulated residual for class {0}")]
    UnknownClass(String),
    #[error(transparent)]
    Picard(#[from] crate::picard::PicardError),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDim {
    pub value: i64,
    pub ledger: Vec<(String, i64)>,
}

impl FamilyDim {
    pub fn single(label: impl Into<String>, v: i64) -> Self {
        FamilyDim { value: v, ledger: vec![(label.into(), v)] }
    }

    pub fn from_ledger(ledger: Vec<(String, i64)>) -> Self {
        FamilyDim { value: ledger.iter().map(|(_, v)| v).sum(), ledger }
    }

    pub fn plus(mut self, label: impl Into<String>, v: i64) -> Self {
        self.ledger.push((label.into(), v));
        self.value += v;
        self
    }

    pub fn is_balanced(&self) -> bool {
        self.value == self.ledger.iter().map(|(_, v)| v).sum::<i64>()
    }
}

impl fmt::Display for FamilyDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, v) in &self.ledger {
            writeln!(f, "  {v:>+5}  {label}")?;
        }
        write!(f, "  {:>5}  total", self.value)
    }
}

/// Expected dimension of the Severi variety of `delta`-nodal curves in
/// `|a C0 + b f|` on `F_e`.
pub fn severi_expected_dim(e: i64, a: i64, b: i64, delta: i64) -> i64 {
    (a + 1) * (2 * b + 2 - a * e) / 2 - 1 - delta
}

pub fn severi_expected_dim_class(s: &SurfaceModel, l: &DivisorClass, delta: i64) -> Option<i64> {
    match s.kind {
        SurfaceKind::Hirzebruch(e) if l.rank() == 2 => Some(severi_expected_dim(i64::from(e), l.coeffs[0], l.coeffs[1], delta)),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutSurface {
    Hirzebruch(u32),
    Projective(i64),
}

pub fn aut_dim(s: AutSurface) -> Result<(i64, &'static str), DimError> {
    match s {
        AutSurface::Hirzebruch(0) => Ok((6, "PGL(2) x PGL(2) acting on the quadric")),
        AutSurface::Hirzebruch(n @ 1..=4) => Ok((i64::from(n) + 5, "H^0(O(n)) semidirect GL(2) modulo n-th roots of unity")),
        AutSurface::Projective(r) if r >= 1 => Ok(((r + 1) * (r + 1) - 1, "PGL(r+1)")),
        other => Err(DimError::UnregisteredSurface(format!("{other:?}"))),
    }
}

pub fn family_dim_mod_aut(sev_dim: i64, surface: AutSurface) -> Result<FamilyDim, DimError> {
    let (aut, why) = aut_dim(surface)?;
    Ok(FamilyDim::single("dimension of the system or Severi variety", sev_dim).plus(format!("automorphisms: {why}"), -aut))
}

pub fn grassmannian_dim(k: i64, n: i64) -> Result<i64, DimError> {
    if k < 0 || k > n {
        return Err(DimError::Range { k, n });
    }
    Ok((k + 1) * (n - k))
}

/// Genus of a curve of degree `e` linked to a degree `d` genus `g` curve by a
/// complete intersection of surfaces of degrees `s` and `t` in `P^3`.
pub fn liaison_linked_genus(s: i64, t: i64, d: i64, e: i64, g: i64) -> Result<i64, DimError> {
    let p = (s + t - 4) * (d - e);
    if p % 2 != 0 {
        return Err(DimError::NonIntegral(p));
    }
    Ok(g - p / 2)
}

/// Riemann–Roch on a curve, with the `h^0(K - D)` correction supplied.
pub fn curve_h0(deg: i64, g: i64, h0_residual: i64) -> i64 {
    deg - g + 1 + h0_residual
}

/// `h^0` of the normal bundle of a complete intersection curve, one summand
/// `O_C(m)` per hypersurface degree.
pub fn ci_normal_h0(d: i64, g: i64, degrees: &[i64], residuals: &[i64]) -> Result<FamilyDim, DimError> {
    if degrees.len() != residuals.len() {
        return Err(DimError::LengthMismatch(degrees.len(), residuals.len()));
    }
    Ok(FamilyDim::from_ledger(
        degrees
            .iter()
            .zip(residuals)
            .map(|(&m, &res)| (format!("h0(O_C({m}))"), curve_h0(m * d, g, res)))
            .collect(),
    ))
}

/// `h^0(K_C - 2H)` for curves on the quartic del Pezzo surface in `P^4`.
const QUARTIC_DEL_PEZZO_RESIDUALS: &[(&[i64], i64, &str)] = &[
    (&[8, 3, 2, 2, 2, 2], 0, "K_C(-2) has negative degree"),
    (&[10, 4, 3, 3, 3, 3], 2, "lines through the fourfold point"),
    (&[10, 3, 3, 3, 3, 3], 3, "plane cubics through the five triple points"),
];

/// `h^0(N_{C|P^4})` for a curve `C` on a quartic del Pezzo surface
/// `S = P2_5` embedded by `(3;1^5)`, via `0 -> N_{C|S} -> N_{C|P^4} -> O_C(2)^2 -> 0`.
pub fn surface_curve_normal_h0(c: &DivisorClass) -> Result<FamilyDim, DimError> {
    let s = SurfaceModel::blowup(5);
    let (a, b) = c.plane_parts();
    let key: Vec<i64> = std::iter::once(a).chain(b.iter().copied()).collect();
    let (_, residual, why) = QUARTIC_DEL_PEZZO_RESIDUALS
        .iter()
        .find(|(k, _, _)| *k == key.as_slice())
        .ok_or_else(|| DimError::UnknownClass(crate::picard::notation::format_plane(c)))?;
    let h = DivisorClass::plane(3, &[1; 5]);
    let deg = intersect(&s, c, &h)?;
    let g = arithmetic_genus(&s, c)?;
    let ncs = riemann_roch_chi(&s, c)? - 1;
    let o2 = curve_h0(2 * deg, g, *residual);
    Ok(FamilyDim::from_ledger(vec![
        ("h0(N_{C|S}) = h0(O_S(C)) - 1".into(), ncs),
        (format!("h0(O_C(2)), residual {residual}: {why}"), o2),
        (format!("h0(O_C(2)), residual {residual}: {why}"), o2),
    ]))
}

/// Dimension of the Hurwitz space of degree `n` covers of genus `gamma`
/// curves by genus `g` curves, without the moduli of the target.
pub fn hurwitz_dim(n: i64, gamma: i64, g: i64) -> i64 {
    2 * g + (2 * n - 3) * (1 - gamma) - 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_sums() {
        let f = FamilyDim::single("x", 10).plus("y", -3).plus("z", 5);
        assert_eq!(f.value, 12);
        assert!(f.is_balanced());
    }

    #[test]
    fn unregistered_aut() {
        assert!(aut_dim(AutSurface::Hirzebruch(7)).is_err());
        assert!(aut_dim(AutSurface::Projective(0)).is_err());
    }

    #[test]
    fn odd_link_is_an_error() {
        assert!(liaison_linked_genus(3, 2, 4, 3, 1).is_err());
    }

    #[test]
    fn unknown_class_rejected() {
        assert!(surface_curve_normal_h0(&DivisorClass::plane(7, &[2; 5])).is_err());
    }
}
