//! Existence verdicts and irreducibility statuses for Hilbert schemes of
//! linearly normal curves with a given index of speciality.

use crate::bounds::CurveTriple;
use crate::picard::notation::format_plane;
use crate::picard::DivisorClass;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

mod alpha5;
mod general;
mod irreducibility;
mod witness;

pub use alpha5::{classify_alpha5, compound_cases, compound_obstruction_cases};
pub use general::{classify_general, general_rules, gonal_witness};
pub use irreducibility::{irreducibility_alpha5, IrreducibilityStatus, Irreducibility};
pub use witness::{validate_obstruction, validate_witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("r = {0} is below 3")]
    DimensionTooSmall(i64),
    #[error("alpha = {0} is below 3")]
    AlphaTooSmall(i64),
    #[error("genus {0} is negative")]
    NegativeGenus(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Empty,
    NonEmpty,
    Unknown,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Empty => "Empty",
            Status::NonEmpty => "NonEmpty",
            Status::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    BrillNoetherGeneral { rho: i64 },
    /// `aH + bL` on a rational normal scroll of degree `n`, of maximal genus.
    ExtremalOnScroll { n: i64, a: i64, b: i64 },
    /// A very ample system on the plane blown up at `points` points, with the
    /// surface embedded by `embedding`.
    BlownPlaneSystem { points: u32, class: DivisorClass, embedding: DivisorClass },
    /// Residual of `n g^1_k + q_1 + .. + q_sigma` on a general `k`-gonal curve.
    GonalResidual { k: i64, sigma: i64, m: i64, n: i64 },
    TripleCoverElliptic,
    QuadricType { a: i64, b: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseReason {
    /// Double cover of a curve of positive genus: the residual gains a dimension.
    DoubleCoverPositiveGenus,
    /// Hyperelliptic curves carry no special very ample series.
    HyperellipticNoSpecialVA,
    /// Triple cover of a rational curve with base points.
    TrigonalWithBasePoints,
    NotCovered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompoundCase {
    pub k: i64,
    pub f: i64,
    pub delta: i64,
    pub reason: CaseReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    DegreeBelowDimension { d: i64, r: i64 },
    GenusExceedsPi { d: i64, r: i64, pi: i64 },
    /// The bound `pi1 < g <= pi` forces a quadric in `P^3`, which carries no such class.
    NoIntegerSolutions { pi1: i64, pi: i64 },
    /// The residual `g^{n}_e` is neither birational nor a harmless covering.
    CompoundResidual { e: i64, n: i64, pi: i64, cases: Vec<CompoundCase> },
    HyperellipticNoSpecialVA,
    /// `r` exceeds the largest dimension of a birationally very ample `g^r_d`.
    ExceedsBirationalDimension { bound: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Evidence {
    Witness(Witness),
    Obstruction(Obstruction),
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub triple: CurveTriple,
    pub status: Status,
    pub evidence: Evidence,
    pub citation: String,
}

pub mod cite {
    pub const BRILL_NOETHER: &str = "Brill-Noether range: existence of smooth linearly normal curves (Eisenbud-Harris)";
    pub const EXTREMAL_SCROLL: &str = "extremal curves lie on rational normal scrolls";
    pub const BLOWN_PLANE: &str = "very ample system on a blown-up plane embedded in P^r";
    pub const GONAL: &str = "residual of a multiple of the gonal pencil on a general k-gonal curve";
    pub const TRIPLE_ELLIPTIC: &str = "residual of a pulled-back series on a triple cover of an elliptic curve";
    pub const QUADRIC: &str = "curve of type (a,b) on a smooth quadric";
    pub const CASTELNUOVO: &str = "Castelnuovo bound pi(d,r) < g";
    pub const QUADRIC_NONE: &str = "nearly extremal curve on a quadric; no type (a,b) fits";
    pub const COMPOUND: &str = "residual series is compounded and its dual is not very ample";
    pub const BIRATIONAL_DIM: &str = "r exceeds the maximal dimension of a birationally very ample series";
    pub const DEGREE: &str = "a nondegenerate curve in P^r has degree at least r";
    pub const OPEN: &str = "not decided by the available constructions or obstructions";
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::BrillNoetherGeneral { .. } => "BrillNoetherGeneral",
            Witness::ExtremalOnScroll { .. } => "ExtremalOnScroll",
            Witness::BlownPlaneSystem { .. } => "BlownPlaneSystem",
            Witness::GonalResidual { .. } => "GonalResidual",
            Witness::TripleCoverElliptic => "TripleCoverElliptic",
            Witness::QuadricType { .. } => "QuadricType",
        }
    }

    pub fn params(&self) -> Value {
        match self {
            Witness::BrillNoetherGeneral { rho } => json!({ "rho": rho }),
            Witness::ExtremalOnScroll { n, a, b } => json!({ "n": n, "a": a, "b": b }),
            Witness::BlownPlaneSystem { points, class, embedding } => json!({
                "points": points,
                "class": format_plane(class),
                "embedding": format_plane(embedding),
            }),
            Witness::GonalResidual { k, sigma, m, n } => json!({ "k": k, "sigma": sigma, "m": m, "n": n }),
            Witness::TripleCoverElliptic => json!({}),
            Witness::QuadricType { a, b } => json!({ "a": a, "b": b }),
        }
    }
}

impl Obstruction {
    pub fn kind(&self) -> &'static str {
        match self {
            Obstruction::DegreeBelowDimension { .. } => "DegreeBelowDimension",
            Obstruction::GenusExceedsPi { .. } => "GenusExceedsPi",
            Obstruction::NoIntegerSolutions { .. } => "NoIntegerSolutions",
            Obstruction::CompoundResidual { .. } => "CompoundResidual",
            Obstruction::HyperellipticNoSpecialVA => "HyperellipticNoSpecialVA",
            Obstruction::ExceedsBirationalDimension { .. } => "ExceedsBirationalDimension",
        }
    }

    pub fn params(&self) -> Value {
        match self {
            Obstruction::DegreeBelowDimension { d, r } => json!({ "d": d, "r": r }),
            Obstruction::GenusExceedsPi { d, r, pi } => json!({ "d": d, "r": r, "pi": pi }),
            Obstruction::NoIntegerSolutions { pi1, pi } => json!({ "pi1": pi1, "pi": pi }),
            Obstruction::CompoundResidual { e, n, pi, cases } => json!({
                "e": e,
                "n": n,
                "pi": pi,
                "cases": cases.iter().map(|c| json!([c.k, c.f, c.delta, format!("{:?}", c.reason)])).collect::<Vec<_>>(),
            }),
            Obstruction::HyperellipticNoSpecialVA => json!({}),
            Obstruction::ExceedsBirationalDimension { bound } => json!({ "bound": bound }),
        }
    }
}

impl Verdict {
    pub fn new(triple: CurveTriple, evidence: Evidence, citation: &str) -> Self {
        let status = match evidence {
            Evidence::Witness(_) => Status::NonEmpty,
            Evidence::Obstruction(_) => Status::Empty,
            Evidence::Open => Status::Unknown,
        };
        Verdict { triple, status, evidence, citation: citation.to_string() }
    }

    pub fn witness(triple: CurveTriple, w: Witness, citation: &str) -> Self {
        Self::new(triple, Evidence::Witness(w), citation)
    }

    pub fn obstruction(triple: CurveTriple, o: Obstruction, citation: &str) -> Self {
        Self::new(triple, Evidence::Obstruction(o), citation)
    }

    pub fn open(triple: CurveTriple) -> Self {
        Self::new(triple, Evidence::Open, cite::OPEN)
    }

    pub fn evidence_kind(&self) -> &'static str {
        match &self.evidence {
            Evidence::Witness(w) => w.kind(),
            Evidence::Obstruction(o) => o.kind(),
            Evidence::Open => "Open",
        }
    }

    pub fn to_json(&self) -> Value {
        let params = match &self.evidence {
            Evidence::Witness(w) => w.params(),
            Evidence::Obstruction(o) => o.params(),
            Evidence::Open => json!({}),
        };
        json!({
            "d": self.triple.d,
            "g": self.triple.g,
            "r": self.triple.r,
            "alpha": self.triple.alpha(),
            "status": self.status.as_str(),
            "evidence": {
                "kind": self.evidence_kind(),
                "params": params,
                "citation": self.citation,
            },
        })
    }
}
