//! Grids of verdicts over `(r, g)` and their CSV, JSON and SVG renderings.

use crate::classifier::{
    classify_general, irreducibility_alpha5, ClassifyError, Irreducibility, IrreducibilityStatus, Status, Verdict,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Cell {
    pub verdict: Verdict,
    pub irreducibility: Irreducibility,
}

impl Cell {
    pub fn r(&self) -> i64 {
        self.verdict.triple.r
    }

    pub fn g(&self) -> i64 {
        self.verdict.triple.g
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AtlasGrid {
    pub alpha: i64,
    pub r_range: (i64, i64),
    pub g_range: (i64, i64),
    pub cells: Vec<Cell>,
}

/// One CSV record; the same columns serve both tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub r: i64,
    pub g: i64,
    pub d: i64,
    pub alpha: i64,
    pub status: String,
    pub irreducibility: String,
    pub evidence_kind: String,
    pub citation: String,
}

/// The tabulated irreducibility for `alpha = 5`; otherwise only emptiness is known.
pub fn irreducibility_for(verdict: &Verdict) -> Result<Irreducibility, ClassifyError> {
    let t = verdict.triple;
    if t.alpha() == 5 {
        return irreducibility_alpha5(t.r, t.g);
    }
    Ok(if verdict.status == Status::Empty {
        Irreducibility { status: IrreducibilityStatus::Empty, citation: verdict.citation.clone() }
    } else {
        Irreducibility { status: IrreducibilityStatus::Unknown, citation: "not tabulated".into() }
    })
}

impl AtlasGrid {
    /// Row-major over `r` then `g`, both ranges inclusive.
    pub fn build(alpha: i64, r_range: (i64, i64), g_range: (i64, i64)) -> Result<Self, ClassifyError> {
        let coords: Vec<(i64, i64)> = (r_range.0..=r_range.1)
            .flat_map(|r| (g_range.0..=g_range.1).map(move |g| (r, g)))
            .collect();
        let cells = coords
            .par_iter()
            .map(|&(r, g)| {
                let verdict = classify_general(alpha, r, g)?;
                let irreducibility = irreducibility_for(&verdict)?;
                Ok(Cell { verdict, irreducibility })
            })
            .collect::<Result<Vec<_>, ClassifyError>>()?;
        Ok(AtlasGrid { alpha, r_range, g_range, cells })
    }

    pub fn get(&self, r: i64, g: i64) -> Option<&Cell> {
        if r < self.r_range.0 || r > self.r_range.1 || g < self.g_range.0 || g > self.g_range.1 {
            return None;
        }
        let width = (self.g_range.1 - self.g_range.0 + 1) as usize;
        self.cells.get((r - self.r_range.0) as usize * width + (g - self.g_range.0) as usize)
    }

    pub fn existence_rows(&self) -> Vec<Row> {
        self.cells.iter().map(|c| row(c, c.verdict.citation.clone())).collect()
    }

    pub fn irreducibility_rows(&self) -> Vec<Row> {
        self.cells.iter().map(|c| row(c, c.irreducibility.citation.clone())).collect()
    }

    pub fn existence_json(&self) -> Value {
        Value::Array(self.cells.iter().map(|c| c.verdict.to_json()).collect())
    }

    pub fn irreducibility_json(&self) -> Value {
        Value::Array(
            self.cells
                .iter()
                .map(|c| {
                    let t = c.verdict.triple;
                    json!({
                        "d": t.d, "g": t.g, "r": t.r, "alpha": t.alpha(),
                        "status": c.irreducibility.status.label(),
                        "citation": c.irreducibility.citation,
                    })
                })
                .collect(),
        )
    }
}

fn row(c: &Cell, citation: String) -> Row {
    let t = c.verdict.triple;
    Row {
        r: t.r,
        g: t.g,
        d: t.d,
        alpha: t.alpha(),
        status: c.verdict.status.as_str().into(),
        irreducibility: c.irreducibility.status.label(),
        evidence_kind: c.verdict.evidence_kind().into(),
        citation,
    }
}

pub fn rows_to_csv(rows: &[Row]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn rows_from_csv(text: &str) -> Result<Vec<Row>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

const CELL: i64 = 14;
const MARGIN: i64 = 40;
const LEGEND: i64 = 260;

fn existence_color(status: &str) -> &'static str {
    match status {
        "Empty" => "#f4a6c0",
        "NonEmpty" => "#4f8fd8",
        _ => "#d0d0d0",
    }
}

fn irreducibility_color(label: &str) -> &'static str {
    match label {
        "Irreducible" => "#2e8b57",
        l if l.starts_with("Reducible") => "#d9534f",
        "ExpectedDimComponentOnly" => "#f0ad4e",
        "MatchesHurwitz31" => "#8e44ad",
        "Empty" => "#f4a6c0",
        _ => "#d0d0d0",
    }
}

/// Scatter of one square per row at `(r, g)`, coloured by `key`.
fn scatter(rows: &[Row], title: &str, key: fn(&Row) -> &str, color: fn(&str) -> &'static str) -> String {
    let (rmin, rmax) = rows.iter().fold((i64::MAX, i64::MIN), |(a, b), x| (a.min(x.r), b.max(x.r)));
    let (gmin, gmax) = rows.iter().fold((i64::MAX, i64::MIN), |(a, b), x| (a.min(x.g), b.max(x.g)));
    if rows.is_empty() {
        return String::from("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n");
    }
    let w = (rmax - rmin + 1) * CELL + 2 * MARGIN + LEGEND;
    let h = (gmax - gmin + 1) * CELL + 2 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(s, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" font-family=\"sans-serif\" font-size=\"10\">");
    let _ = writeln!(s, "<text x=\"{MARGIN}\" y=\"20\" font-size=\"12\">{title}</text>");
    for x in rows {
        let px = MARGIN + (x.r - rmin) * CELL;
        let py = MARGIN + (gmax - x.g) * CELL;
        let _ = writeln!(
            s,
            "<rect x=\"{px}\" y=\"{py}\" width=\"{}\" height=\"{}\" fill=\"{}\"><title>r={} g={} d={} {}</title></rect>",
            CELL - 1,
            CELL - 1,
            color(key(x)),
            x.r,
            x.g,
            x.d,
            key(x)
        );
    }
    for r in rmin..=rmax {
        let px = MARGIN + (r - rmin) * CELL + 2;
        let _ = writeln!(s, "<text x=\"{px}\" y=\"{}\">{r}</text>", h - MARGIN + 12);
    }
    for g in (gmin..=gmax).filter(|g| g % 5 == 0) {
        let py = MARGIN + (gmax - g) * CELL + 10;
        let _ = writeln!(s, "<text x=\"4\" y=\"{py}\">{g}</text>");
    }
    let mut labels: Vec<&str> = rows.iter().map(key).collect();
    labels.sort_unstable();
    labels.dedup();
    let lx = MARGIN + (rmax - rmin + 1) * CELL + 20;
    for (i, l) in labels.iter().enumerate() {
        let ly = MARGIN + i as i64 * 18;
        let _ = writeln!(s, "<rect x=\"{lx}\" y=\"{ly}\" width=\"12\" height=\"12\" fill=\"{}\"/>", color(l));
        let _ = writeln!(s, "<text x=\"{}\" y=\"{}\">{l}</text>", lx + 18, ly + 10);
    }
    s.push_str("</svg>\n");
    s
}

pub fn existence_svg(rows: &[Row]) -> String {
    let alpha = rows.first().map(|r| r.alpha).unwrap_or_default();
    scatter(rows, &format!("Existence, alpha = {alpha}"), |x| x.status.as_str(), existence_color)
}

pub fn irreducibility_svg(rows: &[Row]) -> String {
    let alpha = rows.first().map(|r| r.alpha).unwrap_or_default();
    scatter(rows, &format!("Irreducibility, alpha = {alpha}"), |x| x.irreducibility.as_str(), irreducibility_color)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

/// Write the requested files into `dir`; returns the paths written.
pub fn write_atlas(grid: &AtlasGrid, dir: &Path, formats: &[Format]) -> std::io::Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let mut put = |name: &str, body: String| -> std::io::Result<()> {
        let p = dir.join(name);
        std::fs::write(&p, body)?;
        written.push(p);
        Ok(())
    };
    let ex = grid.existence_rows();
    let ir = grid.irreducibility_rows();
    let to_io = |e: csv::Error| std::io::Error::other(e.to_string());
    for f in formats {
        match f {
            Format::Csv => {
                put("existence.csv", rows_to_csv(&ex).map_err(to_io)?)?;
                put("irreducibility.csv", rows_to_csv(&ir).map_err(to_io)?)?;
            }
            Format::Json => {
                put("existence.json", pretty(&grid.existence_json()))?;
                put("irreducibility.json", pretty(&grid.irreducibility_json()))?;
            }
            Format::Svg => {
                put("figure1.svg", existence_svg(&ex))?;
                put("figure2.svg", irreducibility_svg(&ir))?;
            }
        }
    }
    Ok(written)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
