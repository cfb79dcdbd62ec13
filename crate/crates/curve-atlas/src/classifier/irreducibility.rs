use super::{classify_alpha5, ClassifyError, Status};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IrreducibilityStatus {
    Irreducible,
    Reducible(Option<u32>),
    /// A component of the expected dimension is known; nothing more.
    ExpectedDimComponentOnly,
    /// Components correspond one-to-one with those of the Hurwitz space of
    /// triple covers of elliptic curves, whose irreducibility is open.
    MatchesHurwitz31,
    Unknown,
    Empty,
}

impl IrreducibilityStatus {
    pub fn label(&self) -> String {
        match self {
            IrreducibilityStatus::Reducible(Some(n)) => format!("Reducible({n})"),
            IrreducibilityStatus::Reducible(None) => "Reducible".into(),
            other => format!("{other:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Irreducibility {
    pub status: IrreducibilityStatus,
    pub citation: String,
}

fn row(status: IrreducibilityStatus, citation: &str) -> Irreducibility {
    Irreducibility { status, citation: citation.to_string() }
}

const MIN_GENUS_SCROLL: &str = "extremal curves: a unique scroll class gives one component";
const MIN_GENUS_TWO: &str = "extremal curves: two scroll classes give two components";
const LOW_R: &str = "curves on cubic or quartic surfaces in low dimension";
const SEVERI: &str = "Severi varieties of nodal curves on the cubic scroll and their residual series";
const CUBIC_SPACE: &str = "liaison count for space curves of degree 11 and genus 13";
const EXPECTED: &str = "normal bundle count on a quartic del Pezzo surface";
const SEVERI_CONE: &str = "Severi varieties on smooth and singular cubic scrolls in P^4";
const DEL_PEZZO: &str = "Severi varieties on quartic del Pezzo surfaces";
const HURWITZ: &str = "triple covers of elliptic curves";
const OPEN: &str = "not settled";

/// Irreducibility of the Hilbert scheme for `g - d + r = 5`.
pub fn irreducibility_alpha5(r: i64, g: i64) -> Result<Irreducibility, ClassifyError> {
    use IrreducibilityStatus::*;
    let v = classify_alpha5(r, g)?;
    if v.status == Status::Empty {
        return Ok(row(Empty, &v.citation));
    }
    let out = match (g - r, r) {
        (8, 4) => row(Irreducible, MIN_GENUS_SCROLL),
        (9, 3) => row(Reducible(Some(2)), LOW_R),
        (9, 4) => row(Reducible(None), LOW_R),
        (9, 5) => row(Irreducible, LOW_R),
        (9, 6) => row(Reducible(None), MIN_GENUS_TWO),
        (9, _) => row(Irreducible, MIN_GENUS_SCROLL),
        (10, 3) => row(Irreducible, CUBIC_SPACE),
        (10, 4) => row(ExpectedDimComponentOnly, EXPECTED),
        (10, 5) => row(Irreducible, LOW_R),
        (10, 6 | 7) => row(Irreducible, SEVERI),
        (10, 8) => row(Reducible(Some(2)), SEVERI),
        (11, 8 | 9 | 11) => row(Irreducible, SEVERI_CONE),
        (11, 7 | 10) => row(Reducible(None), SEVERI_CONE),
        (12, 9..=14) => row(Reducible(None), DEL_PEZZO),
        (12, x) if x >= 15 => row(MatchesHurwitz31, HURWITZ),
        _ => row(Unknown, OPEN),
    };
    Ok(out)
}
