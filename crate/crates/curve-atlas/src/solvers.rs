//! Integer enumeration of curve classes on scrolls, cones, quadrics and
//! quartic del Pezzo surfaces.

use crate::picard::DivisorClass;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScrollSolution {
    pub a: i64,
    pub b: i64,
    pub p_a: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSolution {
    pub k: i64,
    pub m: i64,
    pub p_a: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelPezzoSolution {
    pub a: i64,
    pub b: [i64; 5],
}

impl DelPezzoSolution {
    pub fn class(&self) -> DivisorClass {
        DivisorClass::plane(self.a, &self.b)
    }
}

/// Degree of `aH + bL` on a scroll of degree `n`.
pub fn scroll_degree(n: i64, a: i64, b: i64) -> i64 {
    n * a + b
}

/// Arithmetic genus of `aH + bL` on a scroll of degree `n`.
pub fn scroll_genus(n: i64, a: i64, b: i64) -> i64 {
    a * (a - 1) * n / 2 + (a - 1) * (b - 1)
}

/// Arithmetic genus of a degree `d` curve meeting the rulings of a cone over a
/// rational normal curve of degree `n` in `k` points.
pub fn cone_genus(n: i64, d: i64, k: i64) -> i64 {
    (k - 1) * (2 * d - n * k - 2) / 2
}

fn isqrt(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    let mut s = (x as f64).sqrt() as i64;
    while s * s > x {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= x {
        s += 1;
    }
    (s * s == x).then_some(s)
}

/// All `(a, b)` with `a >= 1` and `aH + bL` of degree `d`, genus `g`.
///
/// Substituting `b = d - na` turns the genus equation into
/// `n a^2 - (2d - 2 + n) a + (2d - 2 + 2g) = 0`, solved exactly.
pub fn scroll_solutions(n: i64, d: i64, g: i64) -> Vec<ScrollSolution> {
    let p = 2 * d - 2 + n;
    let q = 2 * d - 2 + 2 * g;
    let disc = p * p - 4 * n * q;
    let Some(s) = isqrt(disc) else { return Vec::new() };
    let mut roots: Vec<i64> = [p - s, p + s]
        .into_iter()
        .filter(|x| x % (2 * n) == 0)
        .map(|x| x / (2 * n))
        .filter(|&a| a >= 1)
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots
        .into_iter()
        .map(|a| ScrollSolution { a, b: d - n * a, p_a: g })
        .inspect(|s| debug_assert_eq!(scroll_genus(n, s.a, s.b), g))
        .collect()
}

pub fn cone_solutions(n: i64, d: i64) -> Vec<ConeSolution> {
    (2..)
        .take_while(|k| n * k <= d)
        .map(|k| ConeSolution { k, m: d - n * k, p_a: cone_genus(n, d, k) })
        .collect()
}

/// Classes `(a; b1 >= .. >= b5)` on the plane blown up at five points with
/// `3a - sum b = degree`, `a^2 - sum b^2 = self_int`, all `bi >= min_b`.
pub fn delpezzo_solutions(degree: i64, self_int: i64, min_b: i64) -> Vec<DelPezzoSolution> {
    // (3a - degree)^2 <= 5 (a^2 - self_int)  <=>  4a^2 - 6 degree a + degree^2 + 5 self_int <= 0
    let qa = 4i128;
    let qb = -6 * i128::from(degree);
    let qc = i128::from(degree) * i128::from(degree) + 5 * i128::from(self_int);
    let disc = qb * qb - 4 * qa * qc;
    if disc < 0 {
        return Vec::new();
    }
    let root = (disc as f64).sqrt();
    let lo = ((-qb as f64 - root) / (2.0 * qa as f64)).floor() as i64 - 1;
    let hi = ((-qb as f64 + root) / (2.0 * qa as f64)).ceil() as i64 + 1;
    let mut out = Vec::new();
    for a in lo..=hi {
        let sq = a * a - self_int;
        if sq < 0 {
            continue;
        }
        let mut cur = [0i64; 5];
        let floor = min_b.max(-isqrt_floor(sq));
        fill(&mut cur, 0, 3 * a - degree, sq, isqrt_floor(sq), floor, &mut |b| {
            out.push(DelPezzoSolution { a, b })
        });
    }
    out
}

/// Enumerate non-increasing `cur[i..]` in `[floor, cap]` with the given sum and sum of squares.
fn fill(cur: &mut [i64; 5], i: usize, sum: i64, sq: i64, cap: i64, floor: i64, emit: &mut dyn FnMut([i64; 5])) {
    if i == 5 {
        if sum == 0 && sq == 0 {
            emit(*cur);
        }
        return;
    }
    let rest = (4 - i) as i64;
    let mut v = cap.min(isqrt_floor(sq.max(0)));
    while v >= floor {
        let remaining = sum - v;
        if remaining <= rest * v && remaining >= rest * floor && v * v <= sq {
            cur[i] = v;
            fill(cur, i + 1, remaining, sq - v * v, v, floor, emit);
        }
        v -= 1;
    }
}

fn isqrt_floor(x: i64) -> i64 {
    let mut s = (x as f64).sqrt() as i64;
    while s * s > x {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= x {
        s += 1;
    }
    s
}

/// `(a, b)` with `a <= b`, `a + b = d`, `(a-1)(b-1) = g`: curves of type
/// `(a, b)` on a smooth quadric.
pub fn quadric_type_solutions(d: i64, g: i64) -> Vec<(i64, i64)> {
    (0..=d / 2)
        .map(|a| (a, d - a))
        .filter(|&(a, b)| (a - 1) * (b - 1) == g)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Ascending,
    DescendingGenus,
}

pub fn order_cones(mut v: Vec<ConeSolution>, order: Order) -> Vec<ConeSolution> {
    match order {
        Order::Ascending => v.sort_by_key(|s| s.k),
        Order::DescendingGenus => v.sort_by(|x, y| y.p_a.cmp(&x.p_a).then(x.k.cmp(&y.k))),
    }
    v
}

pub fn order_scrolls(mut v: Vec<ScrollSolution>, order: Order) -> Vec<ScrollSolution> {
    match order {
        Order::Ascending => v.sort_by_key(|s| s.a),
        Order::DescendingGenus => v.sort_by(|x, y| y.p_a.cmp(&x.p_a).then(x.a.cmp(&y.a))),
    }
    v
}
