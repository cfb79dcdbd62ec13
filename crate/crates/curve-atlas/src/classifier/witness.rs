//! Independent re-checks of witnesses and obstructions. Nothing here looks at
//! the verdict tables.

use super::alpha5::compound_cases;
use super::{CaseReason, Obstruction, Witness};
use crate::ampleness::{
    certify_very_ample, check_linear_normality_corollary_b, check_linear_normality_small, AxiomTable, Check,
};
use crate::bounds::{max_birational_dim, pi, pi1, rho, CurveTriple};
use crate::picard::{blowup_curve_invariants, riemann_roch_chi, DivisorClass, SurfaceModel};
use crate::solvers::{quadric_type_solutions, scroll_degree, scroll_genus};

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn validate_witness(t: &CurveTriple, w: &Witness, axioms: &AxiomTable) -> Result<(), String> {
    let (d, g, r) = (t.d, t.g, t.r);
    let alpha = t.alpha();
    match w {
        Witness::BrillNoetherGeneral { rho: stored } => {
            let x = rho(d, g, r);
            ensure(x == *stored && x >= 0 && r >= 3, || format!("rho = {x}, stored {stored}"))
        }
        Witness::ExtremalOnScroll { n, a, b } => {
            ensure(*n == r - 1, || format!("scroll degree {n} != r-1"))?;
            ensure(scroll_degree(*n, *a, *b) == d, || "degree mismatch".into())?;
            ensure(scroll_genus(*n, *a, *b) == g, || "genus mismatch".into())?;
            let p = pi(d, r).map_err(|e| e.to_string())?;
            ensure(p == g, || format!("pi(d,r) = {p} != g"))
        }
        Witness::BlownPlaneSystem { points, class, embedding } => blown(t, *points, class, embedding, axioms),
        Witness::GonalResidual { k, sigma, m, n } => {
            ensure(*n == alpha - 1, || format!("n = {n} but alpha - 1 = {}", alpha - 1))?;
            ensure(*k >= 2 && *sigma >= 0 && *m == sigma + 2, || "bad gonal parameters".into())?;
            let e = n * k + sigma;
            ensure(e == 2 * g - 2 - d, || format!("residual degree {e} != 2g-2-d"))?;
            ensure(2 * k - g - 2 < 0, || "2k - g - 2 >= 0".into())?;
            ensure(g >= 2 * m + n * (k - 1), || "g < 2m + n(k-1)".into())
        }
        Witness::TripleCoverElliptic => {
            ensure(alpha >= 3, || "alpha < 3".into())?;
            ensure(g == r + 2 * alpha + 2 && d == 2 * r + alpha + 2, || "not on the line g = r + 2 alpha + 2".into())?;
            ensure(g >= 3 * alpha + 7, || "g < 3 alpha + 7".into())
        }
        Witness::QuadricType { a, b } => {
            ensure(r == 3, || "quadric witnesses live in P^3".into())?;
            ensure(quadric_type_solutions(d, g).contains(&(*a, *b)), || "(a,b) does not solve the equations".into())?;
            ensure(*a >= 2, || "type (a,b) with a <= 1 is not linearly normal".into())
        }
    }
}

fn blown(t: &CurveTriple, s: u32, class: &DivisorClass, embed: &DivisorClass, axioms: &AxiomTable) -> Result<(), String> {
    let surf = SurfaceModel::blowup(s);
    let (deg, genus) = blowup_curve_invariants(&surf, class, embed).map_err(|e| e.to_string())?;
    ensure(deg == t.d && genus == t.g, || format!("(deg, genus) = ({deg}, {genus})"))?;
    let h0 = riemann_roch_chi(&surf, embed).map_err(|e| e.to_string())?;
    ensure(h0 - 1 == t.r, || format!("embedding spans P^{}", h0 - 1))?;
    certify_very_ample(s, embed, axioms).ok_or("embedding not certified very ample")?;
    let cert = certify_very_ample(s, class, axioms).ok_or("curve system not certified very ample")?;
    ensure(cert.is_consistent(), || "inconsistent certificate".into())?;
    let anticanonical = DivisorClass::plane(3, &vec![1; s as usize]);
    let normal = if (3..=6).contains(&s) && *embed == anticanonical {
        check_linear_normality_small(s, class)
    } else {
        check_linear_normality_corollary_b(embed, class, s, axioms)
    };
    ensure(normal == Check::Yes, || format!("linear normality not established: {normal:?}"))
}

pub fn validate_obstruction(t: &CurveTriple, o: &Obstruction) -> Result<(), String> {
    let (d, g, r) = (t.d, t.g, t.r);
    match o {
        Obstruction::DegreeBelowDimension { d: dd, r: rr } => ensure(*dd == d && *rr == r && d < r, || "d >= r".into()),
        Obstruction::GenusExceedsPi { d: dd, r: rr, pi: p } => {
            let x = pi(d, r).map_err(|e| e.to_string())?;
            ensure(*dd == d && *rr == r && x == *p && x < g, || format!("pi = {x}, g = {g}"))
        }
        Obstruction::NoIntegerSolutions { pi1: p1, pi: p } => {
            ensure(r == 3, || "only quadrics in P^3 are handled".into())?;
            let a = pi1(d, r).map_err(|e| e.to_string())?;
            let b = pi(d, r).map_err(|e| e.to_string())?;
            ensure(a == *p1 && b == *p && a < g && g <= b, || "not nearly extremal".into())?;
            ensure(quadric_type_solutions(d, g).is_empty(), || "a quadric class exists".into())
        }
        Obstruction::CompoundResidual { e, n, pi: p, cases } => {
            ensure(*e == 2 * g - 2 - d && *n == t.alpha() - 1, || "residual data mismatch".into())?;
            let x = pi(*e, *n).map_err(|e| e.to_string())?;
            ensure(x == *p && x < g, || format!("residual could be birational: pi = {x}"))?;
            ensure(*cases == compound_cases(*e, *n), || "case list incomplete".into())?;
            ensure(cases.iter().all(|c| c.reason != CaseReason::NotCovered), || "uncovered case".into())
        }
        Obstruction::HyperellipticNoSpecialVA => ensure(t.alpha() >= 1, || "series not special".into()),
        Obstruction::ExceedsBirationalDimension { bound } => {
            let x = max_birational_dim(d, g);
            ensure(x == *bound && r > x, || format!("bound {x} admits r = {r}"))
        }
    }
}
