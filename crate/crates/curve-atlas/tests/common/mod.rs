#![allow(dead_code)]

use std::collections::BTreeMap;

pub const FIGURE1: &str = include_str!("../data/figure1.txt");
pub const FIGURE2: &str = include_str!("../data/figure2.txt");

fn point(s: &str) -> (i64, i64) {
    let t = s.trim_matches(|c| c == '(' || c == ')');
    let (a, b) = t.split_once(',').expect("point");
    (a.parse().expect("r"), b.parse().expect("g"))
}

/// Expected existence status per (r, g), from the transcription.
pub fn figure1() -> BTreeMap<(i64, i64), String> {
    let mut grid = (0, 0, 0);
    let mut out = BTreeMap::new();
    for line in FIGURE1.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let f: Vec<&str> = line.split_whitespace().collect();
        match f[0] {
            "grid" => grid = (f[1].parse().unwrap(), f[2].parse().unwrap(), f[3].parse().unwrap()),
            "band" => {
                let (lo, hi): (i64, i64) = (f[2].parse().unwrap(), f[3].parse().unwrap());
                let (rlo, rhi) = if f.len() > 4 { (f[4].parse().unwrap(), f[5].parse().unwrap()) } else { (grid.0, grid.1) };
                for r in rlo..=rhi {
                    for off in lo..=hi {
                        if r + off <= grid.2 {
                            out.insert((r, r + off), f[1].to_string());
                        }
                    }
                }
            }
            "series" => {
                for p in &f[2..] {
                    out.insert(point(p), f[1].to_string());
                }
            }
            other => panic!("unknown line kind {other}"),
        }
    }
    out
}

/// Figure 2 markers mapped to irreducibility labels.
pub fn figure2() -> Vec<((i64, i64), &'static str)> {
    FIGURE2
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (p, m) = l.split_once(' ').expect("marker line");
            let label = match m.trim() {
                "a" => "Irreducible",
                "b" => "Reducible",
                "c" => "Unknown",
                "d" => "Empty",
                "e" => "MatchesHurwitz31",
                "f" => "ExpectedDimComponentOnly",
                x => panic!("unknown marker {x}"),
            };
            (point(p), label)
        })
        .collect()
}

/// Brute-force scroll classes: naive search over a box.
pub fn scroll_oracle(n: i64, d: i64, g: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for a in 1..=60 {
        // the degree equation pins b inside the box
        let b = d - n * a;
        if (-200..=200).contains(&b) && a * (a - 1) * n / 2 + (a - 1) * (b - 1) == g {
            v.push((a, b));
        }
    }
    v
}

/// Castelnuovo's bound as a sum over hyperplane sections.
pub fn pi_oracle(d: i64, r: i64) -> i64 {
    (1..=d).map(|i| (d - 1 - i * (r - 1)).max(0)).sum()
}
