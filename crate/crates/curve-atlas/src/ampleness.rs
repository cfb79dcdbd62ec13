//! Positivity of linear systems on blown-up planes, driven by a table of
//! cited axioms plus a decomposition search.

use crate::picard::notation::{format_plane, format_raw, parse_class};
use crate::picard::{intersect, DivisorClass, PicardError, SurfaceKind, SurfaceModel};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

pub const AXIOMS_ENV: &str = "CURVE_ATLAS_AXIOMS";
const BUILTIN_AXIOMS: &str = include_str!("../data/axioms_paper.txt");
const MAX_SUMMANDS: usize = 3;

#[derive(Debug, Error)]
pub enum AxiomError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Class { line: usize, source: PicardError },
    #[error("cannot read axiom file {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    VeryAmple,
    BasePointFree,
    Ample,
    NotVeryAmple,
}

impl Property {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "very-ample" => Property::VeryAmple,
            "base-point-free" => Property::BasePointFree,
            "ample" => Property::Ample,
            "not-very-ample" => Property::NotVeryAmple,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Property::VeryAmple => "very-ample",
            Property::BasePointFree => "base-point-free",
            Property::Ample => "ample",
            Property::NotVeryAmple => "not-very-ample",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityAxiom {
    pub class: DivisorClass,
    pub surface: SurfaceKind,
    pub property: Property,
    pub citation: String,
}

#[derive(Debug, Clone, Default)]
pub struct AxiomTable {
    pub axioms: Vec<PositivityAxiom>,
}

impl AxiomTable {
    pub fn parse(text: &str) -> Result<Self, AxiomError> {
        let mut axioms = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let mut it = t.splitn(4, char::is_whitespace);
            let (Some(c), Some(s), Some(p)) = (it.next(), it.next(), it.next()) else {
                return Err(AxiomError::Syntax { line, msg: "expected four fields".into() });
            };
            let citation = it.next().unwrap_or("").trim().to_string();
            if citation.is_empty() {
                return Err(AxiomError::Syntax { line, msg: "missing citation".into() });
            }
            let surface: SurfaceKind = s.parse().map_err(|e| AxiomError::Class { line, source: e })?;
            let property = Property::parse(p)
                .ok_or_else(|| AxiomError::Syntax { line, msg: format!("unknown property `{p}`") })?;
            let class = parse_class(c).map_err(|e| AxiomError::Class { line, source: e })?;
            let rank = SurfaceModel::from_kind(surface).rank();
            if class.rank() != rank {
                return Err(AxiomError::Class {
                    line,
                    source: PicardError::DimensionMismatch { expected: rank, got: class.rank() },
                });
            }
            axioms.push(PositivityAxiom { class, surface, property, citation });
        }
        Ok(AxiomTable { axioms })
    }

    pub fn builtin() -> Self {
        Self::parse(BUILTIN_AXIOMS).expect("shipped axiom table parses")
    }

    /// The table named by `CURVE_ATLAS_AXIOMS`, or the shipped one.
    pub fn load() -> Result<Self, AxiomError> {
        match std::env::var_os(AXIOMS_ENV) {
            Some(path) => {
                let path = path.to_string_lossy().into_owned();
                let text = std::fs::read_to_string(&path).map_err(|source| AxiomError::Io { path, source })?;
                Self::parse(&text)
            }
            None => Ok(Self::builtin()),
        }
    }

    pub fn lookup(&self, surface: SurfaceKind, class: &DivisorClass, property: Property) -> Option<&PositivityAxiom> {
        self.axioms
            .iter()
            .find(|a| a.surface == surface && a.property == property && &a.class == class)
    }

    pub fn known_not_very_ample(&self, surface: SurfaceKind, class: &DivisorClass) -> Option<&PositivityAxiom> {
        self.lookup(surface, class, Property::NotVeryAmple)
    }

    /// Systems usable as base-point-free summands on `P2_s`: base-point-free or
    /// very ample axioms on at most `s` points, padded with zero multiplicities.
    fn bpf_pool(&self, s: u32) -> Vec<(DivisorClass, &PositivityAxiom)> {
        self.axioms
            .iter()
            .filter(|a| matches!(a.property, Property::BasePointFree | Property::VeryAmple))
            .filter_map(|a| match a.surface {
                SurfaceKind::BlowUp(t) if t <= s => Some((a.class.pad(s as usize + 1), a)),
                _ => None,
            })
            .collect()
    }
}

/// The process-wide table, honouring `CURVE_ATLAS_AXIOMS` on first use.
pub fn default_table() -> &'static AxiomTable {
    static TABLE: OnceLock<AxiomTable> = OnceLock::new();
    TABLE.get_or_init(|| AxiomTable::load().unwrap_or_else(|e| panic!("{e}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "detail")]
pub enum Evidence {
    Axiom(String),
    Decomposition(Vec<PositivityCertificate>),
    CriterionC(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityCertificate {
    pub target: DivisorClass,
    pub surface: SurfaceKind,
    pub property: Property,
    pub evidence: Evidence,
}

impl PositivityCertificate {
    /// Summands add up to the target, the first one carries the certificate's
    /// property and the rest are base-point-free; recursively.
    pub fn is_consistent(&self) -> bool {
        match &self.evidence {
            Evidence::Axiom(c) | Evidence::CriterionC(c) => !c.is_empty(),
            Evidence::Decomposition(parts) => {
                let Some(first) = parts.first() else { return false };
                let rank = self.target.rank();
                let total = parts
                    .iter()
                    .fold(DivisorClass::zero(rank), |acc, p| acc.add(&p.target.pad(rank)));
                total == self.target
                    && first.property == self.property
                    && parts[1..].iter().all(|p| p.property == Property::BasePointFree)
                    && parts.iter().all(|p| p.is_consistent())
            }
        }
    }
}

impl fmt::Display for PositivityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |d: &DivisorClass, s: SurfaceKind| match s {
            SurfaceKind::BlowUp(_) => format_plane(d),
            SurfaceKind::Hirzebruch(_) => format_raw(d),
        };
        match &self.evidence {
            Evidence::Axiom(c) => write!(f, "{} {} [{}]", name(&self.target, self.surface), self.property.as_str(), c),
            Evidence::CriterionC(c) => write!(f, "{} {} [{}]", name(&self.target, self.surface), self.property.as_str(), c),
            Evidence::Decomposition(parts) => {
                let s: Vec<String> = parts.iter().map(|p| name(&p.target, p.surface)).collect();
                write!(f, "{} = {}", name(&self.target, self.surface), s.join(" + "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Check {
    Yes,
    No(String),
    OutOfScope,
    NotApplicable,
}

fn sorted_desc(b: &[i64]) -> bool {
    b.windows(2).all(|w| w[0] >= w[1])
}

fn in_small_scope(s: u32, class: &DivisorClass) -> Option<(i64, Vec<i64>)> {
    if !(3..=6).contains(&s) || class.rank() != s as usize + 1 {
        return None;
    }
    let (a, b) = class.plane_parts();
    (sorted_desc(&b) && a >= b[0] + b[1] + b[2] && a >= b[0].max(0)).then_some((a, b))
}

/// Smooth connected member of `(a; b1 >= .. >= bs)` on `P2_s`, `3 <= s <= 6`.
pub fn check_smooth_member(s: u32, class: &DivisorClass) -> Check {
    let Some((a, b)) = in_small_scope(s, class) else { return Check::OutOfScope };
    if b[b.len() - 1] < 0 {
        return Check::No("negative multiplicity".into());
    }
    if a >= 2 && b[0] == a && b[1..].iter().all(|&x| x == 0) {
        return Check::No("pencil of lines through one point".into());
    }
    Check::Yes
}

/// Linear normality of a smooth member in the anticanonical model of `P2_s`.
pub fn check_linear_normality_small(s: u32, class: &DivisorClass) -> Check {
    let Some((a, b)) = in_small_scope(s, class) else { return Check::OutOfScope };
    let last = b[b.len() - 1];
    if last < 1 {
        return Check::No("some point has multiplicity below one".into());
    }
    let t = last;
    let lambda = b[0] - t;
    let exceptional = b[1..].iter().all(|&x| x == t) && a == lambda + 3 * t && lambda >= 2;
    if exceptional && t <= 1 {
        return Check::No(format!("exceptional shape with lambda={lambda}, t={t}"));
    }
    Check::Yes
}

fn bpf_search(
    pool: &[(DivisorClass, &PositivityAxiom)],
    rest: &DivisorClass,
    start: usize,
    depth: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if rest.is_zero() {
        return !chosen.is_empty();
    }
    if depth == 0 {
        return false;
    }
    for (i, (c, _)) in pool.iter().enumerate().skip(start) {
        let next = rest.sub(c);
        if !nonneg_plane(&next) {
            continue;
        }
        chosen.push(i);
        if bpf_search(pool, &next, i, depth - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn nonneg_plane(d: &DivisorClass) -> bool {
    let (a, b) = d.plane_parts();
    a >= 0 && b.iter().all(|&x| x >= 0)
}

fn axiom_cert(target: DivisorClass, surface: SurfaceKind, property: Property, ax: &PositivityAxiom) -> PositivityCertificate {
    PositivityCertificate { target, surface, property, evidence: Evidence::Axiom(ax.citation.clone()) }
}

/// Base-point-freeness of a class on `P2_s` as a sum of cited systems.
pub fn certify_base_point_free(s: u32, class: &DivisorClass, axioms: &AxiomTable) -> Option<PositivityCertificate> {
    let surface = SurfaceKind::BlowUp(s);
    if class.rank() != s as usize + 1 || !nonneg_plane(class) {
        return None;
    }
    let pool = axioms.bpf_pool(s);
    let mut chosen = Vec::new();
    if !bpf_search(&pool, class, 0, MAX_SUMMANDS, &mut chosen) {
        return None;
    }
    let parts: Vec<PositivityCertificate> = chosen
        .iter()
        .map(|&i| axiom_cert(pool[i].0.clone(), surface, Property::BasePointFree, pool[i].1))
        .collect();
    if parts.len() == 1 {
        return parts.into_iter().next().map(|p| PositivityCertificate { target: class.clone(), ..p });
    }
    Some(PositivityCertificate {
        target: class.clone(),
        surface,
        property: Property::BasePointFree,
        evidence: Evidence::Decomposition(parts),
    })
}

/// A very ample axiom on `P2_s` itself plus base-point-free summands.
/// `None` means no certificate was found, not that the class fails.
pub fn certify_very_ample(s: u32, class: &DivisorClass, axioms: &AxiomTable) -> Option<PositivityCertificate> {
    let surface = SurfaceKind::BlowUp(s);
    if let Some(ax) = axioms.lookup(surface, class, Property::VeryAmple) {
        return Some(axiom_cert(class.clone(), surface, Property::VeryAmple, ax));
    }
    if class.rank() != s as usize + 1 {
        return None;
    }
    let pool = axioms.bpf_pool(s);
    for v in axioms.axioms.iter().filter(|a| a.surface == surface && a.property == Property::VeryAmple) {
        let rest = class.sub(&v.class);
        if !nonneg_plane(&rest) || rest.is_zero() {
            continue;
        }
        let mut chosen = Vec::new();
        if bpf_search(&pool, &rest, 0, MAX_SUMMANDS, &mut chosen) {
            let mut parts = vec![axiom_cert(v.class.clone(), surface, Property::VeryAmple, v)];
            parts.extend(
                chosen
                    .iter()
                    .map(|&i| axiom_cert(pool[i].0.clone(), surface, Property::BasePointFree, pool[i].1)),
            );
            return Some(PositivityCertificate {
                target: class.clone(),
                surface,
                property: Property::VeryAmple,
                evidence: Evidence::Decomposition(parts),
            });
        }
    }
    None
}

/// Linear normality of a general member of `l` on `P2_s` embedded by `embed`,
/// when `l - embed` is a nonzero system with a smooth connected member.
pub fn check_linear_normality_corollary_b(
    embed: &DivisorClass,
    l: &DivisorClass,
    s: u32,
    axioms: &AxiomTable,
) -> Check {
    let rank = s as usize + 1;
    if embed.rank() != rank || l.rank() != rank {
        return Check::NotApplicable;
    }
    let (a, b) = embed.plane_parts();
    if b.iter().any(|&x| x < 1) || b.iter().sum::<i64>() >= 3 * a {
        return Check::NotApplicable;
    }
    let diff = l.sub(embed);
    if diff.is_zero() || !nonneg_plane(&diff) {
        return Check::NotApplicable;
    }
    if (3..=6).contains(&s) {
        let sorted = {
            let (da, mut db) = diff.plane_parts();
            db.sort_by(|x, y| y.cmp(x));
            DivisorClass::plane(da, &db)
        };
        if check_smooth_member(s, &sorted) == Check::Yes {
            return Check::Yes;
        }
    }
    let model = SurfaceModel::blowup(s);
    let square = intersect(&model, &diff, &diff).unwrap_or(0);
    if square > 0 && certify_base_point_free(s, &diff, axioms).is_some() {
        return Check::Yes;
    }
    Check::NotApplicable
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RestrictionCheck {
    Iso(String),
    Unknown,
}

/// Restriction `H^0(S, D) -> H^0(C, D|C)` is an isomorphism when
/// `D - C = K_S - P` and `P - K_S` is certified ample.
pub fn restriction_iso_check(
    s: &SurfaceModel,
    d: &DivisorClass,
    c: &DivisorClass,
    axioms: &AxiomTable,
) -> RestrictionCheck {
    let Some(p) = &s.polarization else { return RestrictionCheck::Unknown };
    if d.rank() != s.rank() || c.rank() != s.rank() {
        return RestrictionCheck::Unknown;
    }
    let kernel = d.sub(c);
    if kernel.is_zero() || kernel != s.canonical.sub(p) {
        return RestrictionCheck::Unknown;
    }
    let positive = kernel.neg();
    for prop in [Property::Ample, Property::VeryAmple] {
        if let Some(ax) = axioms.lookup(s.kind, &positive, prop) {
            return RestrictionCheck::Iso(ax.citation.clone());
        }
    }
    if let SurfaceKind::BlowUp(n) = s.kind {
        if let Some(cert) = certify_very_ample(n, &positive, axioms) {
            return RestrictionCheck::Iso(cert.to_string());
        }
    }
    RestrictionCheck::Unknown
}
