//! Divisor classes on Hirzebruch surfaces and blow-ups of the plane.
//!
//! `Hirzebruch(e)` uses the basis `(C0, f)`; `BlowUp(s)` uses `(l, e1, .., es)`.
//! Classes are raw coordinate vectors in that basis. On a blow-up the class
//! written `(a; b1, .., bs)` is stored as `[a, -b1, .., -bs]`.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

pub mod notation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PicardError {
    #[error("class has {got} coordinates but the surface has Picard rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("expected a class on {expected}, found {found}")]
    WrongSurface { expected: String, found: String },
    #[error("cannot parse divisor class `{0}`")]
    Parse(String),
    #[error("cannot parse surface `{0}`")]
    ParseSurface(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceKind {
    Hirzebruch(u32),
    BlowUp(u32),
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::Hirzebruch(e) => write!(f, "F{e}"),
            SurfaceKind::BlowUp(s) => write!(f, "P2_{s}"),
        }
    }
}

impl std::str::FromStr for SurfaceKind {
    type Err = PicardError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || PicardError::ParseSurface(s.to_string());
        if let Some(rest) = t.strip_prefix("P2_") {
            rest.parse().map(SurfaceKind::BlowUp).map_err(|_| bad())
        } else if let Some(rest) = t.strip_prefix('F') {
            rest.parse().map(SurfaceKind::Hirzebruch).map_err(|_| bad())
        } else {
            Err(bad())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        DivisorClass { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass { coeffs: vec![0; rank] }
    }

    /// `(a; b1, .., bs)`, i.e. `a*l - sum bi*ei`.
    pub fn plane(a: i64, b: &[i64]) -> Self {
        let mut coeffs = Vec::with_capacity(b.len() + 1);
        coeffs.push(a);
        coeffs.extend(b.iter().map(|x| -x));
        DivisorClass { coeffs }
    }

    /// `(a; b1^m1, b2^m2, ..)` from run-length blocks.
    pub fn plane_blocks(a: i64, blocks: &[(i64, usize)]) -> Self {
        let b: Vec<i64> = blocks
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect();
        Self::plane(a, &b)
    }

    /// `a*C0 + b*f` on a Hirzebruch surface.
    pub fn hirzebruch(a: i64, b: i64) -> Self {
        DivisorClass { coeffs: vec![a, b] }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Degree and multiplicities `(a, [b1..bs])` of a blow-up class.
    pub fn plane_parts(&self) -> (i64, Vec<i64>) {
        let a = self.coeffs.first().copied().unwrap_or(0);
        let b = self.coeffs.iter().skip(1).map(|x| -x).collect();
        (a, b)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        let mut v = self.coeffs.clone();
        let n = v.len().max(other.coeffs.len());
        v.resize(n, 0);
        for (x, y) in v.iter_mut().zip(&other.coeffs) {
            *x += y;
        }
        DivisorClass { coeffs: v }
    }

    pub fn sub(&self, other: &DivisorClass) -> DivisorClass {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DivisorClass {
        DivisorClass { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass { coeffs: self.coeffs.iter().map(|x| k * x).collect() }
    }

    /// Extend with zero coordinates up to `rank` (adding untouched points).
    pub fn pad(&self, rank: usize) -> DivisorClass {
        let mut v = self.coeffs.clone();
        if v.len() < rank {
            v.resize(rank, 0);
        }
        DivisorClass { coeffs: v }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub kind: SurfaceKind,
    pub basis_labels: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    pub canonical: DivisorClass,
    pub polarization: Option<DivisorClass>,
}

impl SurfaceModel {
    pub fn hirzebruch(e: u32) -> Self {
        let e = i64::from(e);
        SurfaceModel {
            kind: SurfaceKind::Hirzebruch(e as u32),
            basis_labels: vec!["C0".into(), "f".into()],
            gram: vec![vec![-e, 1], vec![1, 0]],
            canonical: DivisorClass::hirzebruch(-2, -(e + 2)),
            polarization: None,
        }
    }

    pub fn blowup(s: u32) -> Self {
        let n = s as usize + 1;
        let mut gram = vec![vec![0; n]; n];
        gram[0][0] = 1;
        for (i, row) in gram.iter_mut().enumerate().skip(1) {
            row[i] = -1;
        }
        let mut labels = vec!["l".to_string()];
        labels.extend((1..=s).map(|i| format!("e{i}")));
        SurfaceModel {
            kind: SurfaceKind::BlowUp(s),
            basis_labels: labels,
            gram,
            canonical: DivisorClass::plane(-3, &vec![-1; s as usize]),
            polarization: None,
        }
    }

    pub fn from_kind(kind: SurfaceKind) -> Self {
        match kind {
            SurfaceKind::Hirzebruch(e) => Self::hirzebruch(e),
            SurfaceKind::BlowUp(s) => Self::blowup(s),
        }
    }

    pub fn with_polarization(mut self, h: DivisorClass) -> Result<Self, PicardError> {
        self.check(&h)?;
        self.polarization = Some(h);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    fn check(&self, d: &DivisorClass) -> Result<(), PicardError> {
        if d.rank() != self.rank() {
            return Err(PicardError::DimensionMismatch { expected: self.rank(), got: d.rank() });
        }
        Ok(())
    }

    /// The hyperplane class of the degree-`n` scroll image of `F_e`:
    /// `H = C0 + ((n+e)/2) f`, `L = f`. Returns the `(C0, f)` coordinates of `aH + bL`.
    pub fn scroll_class(&self, n: i64, a: i64, b: i64) -> Option<DivisorClass> {
        let SurfaceKind::Hirzebruch(e) = self.kind else { return None };
        let e = i64::from(e);
        if n < e || (n + e) % 2 != 0 {
            return None;
        }
        Some(DivisorClass::hirzebruch(a, a * (n + e) / 2 + b))
    }
}

pub fn intersect(s: &SurfaceModel, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64, PicardError> {
    s.check(d1)?;
    s.check(d2)?;
    let mut total = 0;
    for (i, x) in d1.coeffs.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in d2.coeffs.iter().enumerate() {
            total += x * s.gram[i][j] * y;
        }
    }
    Ok(total)
}

/// `p_a(D) = D.(D+K)/2 + 1`.
pub fn arithmetic_genus(s: &SurfaceModel, d: &DivisorClass) -> Result<i64, PicardError> {
    let dk = intersect(s, d, &d.add(&s.canonical))?;
    debug_assert_eq!(dk.rem_euclid(2), 0);
    Ok(dk / 2 + 1)
}

/// `chi(D) = D.(D-K)/2 + 1` on a rational surface.
pub fn riemann_roch_chi(s: &SurfaceModel, d: &DivisorClass) -> Result<i64, PicardError> {
    let dk = intersect(s, d, &d.sub(&s.canonical))?;
    Ok(dk / 2 + 1)
}

/// `dim |aH + bL|` on a smooth rational normal scroll of degree `n`.
pub fn scroll_system_dim(n: i64, a: i64, b: i64) -> i64 {
    a * (a + 1) * n / 2 + (a + 1) * (b + 1) - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    F1ToBlowUp,
    BlowUpToF1,
}

/// Identify `F1` with the plane blown up at one point:
/// `C0 <-> e1`, `f <-> l - e1`.
pub fn convert_f1_blowup(d: &DivisorClass, source: SurfaceKind) -> Result<(DivisorClass, SurfaceKind), PicardError> {
    let wrong = |expected: &str| PicardError::WrongSurface {
        expected: expected.to_string(),
        found: source.to_string(),
    };
    match source {
        SurfaceKind::Hirzebruch(1) => {
            if d.rank() != 2 {
                return Err(PicardError::DimensionMismatch { expected: 2, got: d.rank() });
            }
            let (x, y) = (d.coeffs[0], d.coeffs[1]);
            // x*e1 + y*(l - e1)
            Ok((DivisorClass::new(vec![y, x - y]), SurfaceKind::BlowUp(1)))
        }
        SurfaceKind::BlowUp(1) => {
            if d.rank() != 2 {
                return Err(PicardError::DimensionMismatch { expected: 2, got: d.rank() });
            }
            let (p, q) = (d.coeffs[0], d.coeffs[1]);
            // l = C0 + f, e1 = C0
            Ok((DivisorClass::hirzebruch(p + q, p), SurfaceKind::Hirzebruch(1)))
        }
        SurfaceKind::Hirzebruch(_) => Err(wrong("F1")),
        SurfaceKind::BlowUp(_) => Err(wrong("P2_1")),
    }
}

pub fn convert(d: &DivisorClass, dir: Direction) -> Result<DivisorClass, PicardError> {
    let src = match dir {
        Direction::F1ToBlowUp => SurfaceKind::Hirzebruch(1),
        Direction::BlowUpToF1 => SurfaceKind::BlowUp(1),
    };
    convert_f1_blowup(d, src).map(|(c, _)| c)
}

/// Degree against the polarization and arithmetic genus of a curve class.
pub fn blowup_curve_invariants(
    s: &SurfaceModel,
    c: &DivisorClass,
    h: &DivisorClass,
) -> Result<(i64, i64), PicardError> {
    Ok((intersect(s, c, h)?, arithmetic_genus(s, c)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_section_square() {
        let s = SurfaceModel::hirzebruch(3);
        let h = DivisorClass::hirzebruch(1, 3);
        assert_eq!(intersect(&s, &h, &h).unwrap(), 3);
    }

    #[test]
    fn mismatch_is_an_error() {
        let s = SurfaceModel::blowup(2);
        let d = DivisorClass::plane(1, &[1]);
        assert!(intersect(&s, &d, &d).is_err());
    }

    #[test]
    fn canonical_square() {
        for s in 0..=12u32 {
            let m = SurfaceModel::blowup(s);
            assert_eq!(intersect(&m, &m.canonical, &m.canonical).unwrap(), 9 - i64::from(s));
        }
        for e in 0..=6 {
            let m = SurfaceModel::hirzebruch(e);
            assert_eq!(intersect(&m, &m.canonical, &m.canonical).unwrap(), 8);
        }
    }

    #[test]
    fn scroll_class_on_f1() {
        let s = SurfaceModel::hirzebruch(1);
        assert_eq!(s.scroll_class(3, 5, -2).unwrap(), DivisorClass::hirzebruch(5, 8));
        assert!(s.scroll_class(4, 1, 0).is_none());
    }
}
