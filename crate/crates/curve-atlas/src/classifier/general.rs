use super::alpha5::compound_obstruction;
use super::{cite, classify_alpha5, ClassifyError, Obstruction, Verdict, Witness};
use crate::bounds::{max_birational_dim, rho, CurveTriple};
use crate::solvers::scroll_solutions;

/// Residual series of `(alpha-1) g^1_k + q_1 + .. + q_sigma` on a general
/// `k`-gonal curve, when it is very ample of the right degree.
pub fn gonal_witness(alpha: i64, r: i64, g: i64) -> Result<Option<Witness>, ClassifyError> {
    if alpha < 3 {
        return Err(ClassifyError::AlphaTooSmall(alpha));
    }
    let n = alpha - 1;
    let e = g - r + alpha - 2;
    if e < 0 {
        return Ok(None);
    }
    let sigma = e % n;
    let k = (e - sigma) / n;
    let m = sigma + 2;
    let ok = k >= 4 && 2 * k - g - 2 < 0 && g >= 2 * m + n * (k - 1);
    Ok(ok.then_some(Witness::GonalResidual { k, sigma, m, n }))
}

fn check_domain(alpha: i64, r: i64, g: i64) -> Result<(), ClassifyError> {
    if alpha < 3 {
        return Err(ClassifyError::AlphaTooSmall(alpha));
    }
    if r < 3 {
        return Err(ClassifyError::DimensionTooSmall(r));
    }
    if g < 0 {
        return Err(ClassifyError::NegativeGenus(g));
    }
    Ok(())
}

/// The rule cascade valid for every `alpha`, without deferring to the
/// specialised `alpha = 5` table.
pub fn general_rules(alpha: i64, r: i64, g: i64) -> Result<Verdict, ClassifyError> {
    check_domain(alpha, r, g)?;
    let t = CurveTriple::with_alpha(alpha, r, g);
    let d = t.d;
    if d < r {
        return Ok(Verdict::obstruction(t, Obstruction::DegreeBelowDimension { d, r }, cite::DEGREE));
    }
    let bound = max_birational_dim(d, g);
    if r > bound {
        return Ok(Verdict::obstruction(t, Obstruction::ExceedsBirationalDimension { bound }, cite::BIRATIONAL_DIM));
    }
    if r > alpha && g == r + 2 * alpha - 1 {
        if let Some(s) = scroll_solutions(r - 1, d, g).first() {
            return Ok(Verdict::witness(t, Witness::ExtremalOnScroll { n: r - 1, a: s.a, b: s.b }, cite::EXTREMAL_SCROLL));
        }
    }
    let rh = rho(d, g, r);
    if rh >= 0 {
        return Ok(Verdict::witness(t, Witness::BrillNoetherGeneral { rho: rh }, cite::BRILL_NOETHER));
    }
    if alpha >= 5 {
        let first = g == r + 2 * alpha && r >= alpha + 4;
        let second = g == r + 2 * alpha + 1 && r >= (alpha + 6).max(12);
        if first || second {
            if let Some(o) = compound_obstruction(alpha, t) {
                return Ok(Verdict::obstruction(t, o, cite::COMPOUND));
            }
        }
    }
    if g == r + 2 * alpha + 2 && r >= alpha + 5 {
        return Ok(Verdict::witness(t, Witness::TripleCoverElliptic, cite::TRIPLE_ELLIPTIC));
    }
    if let Some(w) = gonal_witness(alpha, r, g)? {
        return Ok(Verdict::witness(t, w, cite::GONAL));
    }
    Ok(Verdict::open(t))
}

/// Existence verdict for any `alpha >= 3`; `alpha = 5` uses the complete table.
pub fn classify_general(alpha: i64, r: i64, g: i64) -> Result<Verdict, ClassifyError> {
    check_domain(alpha, r, g)?;
    if alpha == 5 {
        return classify_alpha5(r, g);
    }
    general_rules(alpha, r, g)
}
