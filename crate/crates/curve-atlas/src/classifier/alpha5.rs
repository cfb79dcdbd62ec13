use super::{cite, CaseReason, ClassifyError, CompoundCase, Obstruction, Verdict, Witness};
use crate::bounds::{pi, pi1, rho, CurveTriple};
use crate::picard::DivisorClass;
use crate::solvers::{quadric_type_solutions, scroll_solutions};

const ALPHA: i64 = 5;

/// Ways a compounded `g^n_e` with base locus can split: `k`-sheeted onto a
/// curve of degree `f >= n` in `P^n`, plus `delta` base points.
pub fn compound_cases(e: i64, n: i64) -> Vec<CompoundCase> {
    let mut out = Vec::new();
    for k in 2..=e / n.max(1) {
        for f in (n..=e / k).rev() {
            let delta = e - k * f;
            // a complete nonspecial g^n_f on the image has genus f - n
            let h = f - n;
            let reason = match (k, h) {
                (2, 0) => CaseReason::HyperellipticNoSpecialVA,
                (2, _) => CaseReason::DoubleCoverPositiveGenus,
                (3, 0) if delta >= 1 => CaseReason::TrigonalWithBasePoints,
                _ => CaseReason::NotCovered,
            };
            out.push(CompoundCase { k, f, delta, reason });
        }
    }
    out
}

pub fn compound_obstruction_cases(e: i64) -> Vec<(i64, i64, i64)> {
    compound_cases(e, ALPHA - 1).into_iter().map(|c| (c.k, c.f, c.delta)).collect()
}

pub(crate) fn compound_obstruction(alpha: i64, t: CurveTriple) -> Option<Obstruction> {
    let n = alpha - 1;
    let e = 2 * t.g - 2 - t.d;
    let bound = pi(e, n).ok()?;
    let cases = compound_cases(e, n);
    (bound < t.g && cases.iter().all(|c| c.reason != CaseReason::NotCovered))
        .then_some(Obstruction::CompoundResidual { e, n, pi: bound, cases })
}

fn blown(points: u32, class: DivisorClass, embedding: DivisorClass) -> Witness {
    Witness::BlownPlaneSystem { points, class, embedding }
}

fn anticanonical(s: i64) -> DivisorClass {
    DivisorClass::plane_blocks(3, &[(1, s as usize)])
}

fn b(v: i64, m: i64) -> (i64, usize) {
    (v, m.max(0) as usize)
}

/// `(8; 3, 2^{8-r-beta}, 1^beta)` on the del Pezzo surface of degree `r`.
fn octic(r: i64, beta: i64) -> Witness {
    let s = 9 - r;
    blown(s as u32, DivisorClass::plane_blocks(8, &[b(3, 1), b(2, 8 - r - beta), b(1, beta)]), anticanonical(s))
}

/// `(9; 4, 2^{11-r-gamma}, 1^gamma)` with the surface embedded by `(4; 2, 1^{11-r})`.
fn nonic(r: i64, gamma: i64) -> Witness {
    let s = 12 - r;
    blown(
        s as u32,
        DivisorClass::plane_blocks(9, &[b(4, 1), b(2, 11 - r - gamma), b(1, gamma)]),
        DivisorClass::plane_blocks(4, &[b(2, 1), b(1, 11 - r)]),
    )
}

fn sporadic(r: i64, g: i64) -> Option<Witness> {
    let quartic9 = || DivisorClass::plane_blocks(4, &[(1, 9)]);
    match r {
        3 if (16..=18).contains(&g) => Some(octic(3, g - 13)),
        3 if g == 19 => Some(blown(6, DivisorClass::plane_blocks(10, &[(6, 1), (2, 2), (1, 3)]), anticanonical(6))),
        4 if (17..=24).contains(&g) => {
            let delta = 25 - g;
            Some(blown(
                10,
                DivisorClass::plane_blocks(9, &[b(3, 1), b(2, delta), b(1, 9 - delta)]),
                DivisorClass::plane_blocks(4, &[(1, 10)]),
            ))
        }
        5 if (18..=21).contains(&g) => {
            let delta = 22 - g;
            Some(blown(9, DivisorClass::plane_blocks(10, &[b(3, 5), b(2, delta - 1), b(1, 5 - delta)]), quartic9()))
        }
        5 if (22..=25).contains(&g) => {
            let delta = g - 21;
            Some(blown(
                9,
                DivisorClass::plane_blocks(12, &[b(6, 1), b(4, 1), b(3, 3), b(2, 4 - delta), b(1, delta)]),
                quartic9(),
            ))
        }
        5 if (26..=29).contains(&g) => {
            let delta = g - 25;
            Some(blown(
                9,
                DivisorClass::plane_blocks(14, &[b(8, 1), b(4, 3), b(3, 1), b(2, 4 - delta), b(1, delta)]),
                quartic9(),
            ))
        }
        _ => None,
    }
}

fn extremal(t: CurveTriple) -> Option<Witness> {
    scroll_solutions(t.r - 1, t.d, t.g)
        .first()
        .map(|s| Witness::ExtremalOnScroll { n: t.r - 1, a: s.a, b: s.b })
}

/// Existence of smooth linearly normal curves with `g - d + r = 5`.
pub fn classify_alpha5(r: i64, g: i64) -> Result<Verdict, ClassifyError> {
    if r < 3 {
        return Err(ClassifyError::DimensionTooSmall(r));
    }
    if g < 0 {
        return Err(ClassifyError::NegativeGenus(g));
    }
    let t = CurveTriple::with_alpha(ALPHA, r, g);
    let d = t.d;
    if d < r {
        return Ok(Verdict::obstruction(t, Obstruction::DegreeBelowDimension { d, r }, cite::DEGREE));
    }
    let castelnuovo = || {
        let p = pi(d, r).expect("d >= r");
        Verdict::obstruction(t, Obstruction::GenusExceedsPi { d, r, pi: p }, cite::CASTELNUOVO)
    };
    let gonal = |k: i64| Witness::GonalResidual { k, sigma: 0, m: 2, n: ALPHA - 1 };
    let v = match g - r {
        x if x <= 8 => match (r, g) {
            (4, 12) => Verdict::witness(t, extremal(t).expect("(4,-1) on the cubic scroll"), cite::EXTREMAL_SCROLL),
            (3, 11) => Verdict::obstruction(
                t,
                Obstruction::NoIntegerSolutions { pi1: pi1(d, 3).expect("d >= 6"), pi: pi(d, 3).expect("d >= 3") },
                cite::QUADRIC_NONE,
            ),
            _ => castelnuovo(),
        },
        9 => match r {
            3 => {
                let (a, b) = quadric_type_solutions(d, g)[0];
                Verdict::witness(t, Witness::QuadricType { a, b }, cite::QUADRIC)
            }
            4 | 5 => Verdict::witness(t, gonal(3), cite::GONAL),
            _ => Verdict::witness(t, extremal(t).expect("extremal curves exist"), cite::EXTREMAL_SCROLL),
        },
        10 if r >= 9 => Verdict::obstruction(t, compound_obstruction(ALPHA, t).expect("covered cases"), cite::COMPOUND),
        10 => Verdict::witness(t, octic(r, 0), cite::BLOWN_PLANE),
        11 if r >= 12 => Verdict::obstruction(t, compound_obstruction(ALPHA, t).expect("covered cases"), cite::COMPOUND),
        11 if r <= 7 => Verdict::witness(t, octic(r, 1), cite::BLOWN_PLANE),
        11 => Verdict::witness(t, nonic(r, 0), cite::BLOWN_PLANE),
        _ if rho(d, g, r) >= 0 => Verdict::witness(t, Witness::BrillNoetherGeneral { rho: rho(d, g, r) }, cite::BRILL_NOETHER),
        12 if r <= 6 => Verdict::witness(t, octic(r, 2), cite::BLOWN_PLANE),
        12 if r <= 10 => Verdict::witness(t, nonic(r, 1), cite::BLOWN_PLANE),
        12 => Verdict::witness(t, Witness::TripleCoverElliptic, cite::TRIPLE_ELLIPTIC),
        _ if r >= 6 => {
            let w = super::gonal_witness(ALPHA, r, g)?.expect("gonal witness exists for r >= 6, g >= r+13");
            Verdict::witness(t, w, cite::GONAL)
        }
        _ => Verdict::witness(t, sporadic(r, g).expect("sporadic table covers the gap below rho = 0"), cite::BLOWN_PLANE),
    };
    Ok(v)
}
