//! The `(a; b1^m1, b2^m2, ..)` notation for classes on blown-up planes.

use super::{DivisorClass, PicardError};

/// A parsed class in sorted form together with the sorting permutation:
/// `perm[i]` is the input position of the `i`-th sorted multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub class: DivisorClass,
    pub perm: Vec<usize>,
}

pub fn parse_plane(text: &str) -> Result<Parsed, PicardError> {
    let err = || PicardError::Parse(text.to_string());
    let t = text.trim();
    let inner = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(err)?;
    let (head, tail) = match inner.split_once(';') {
        Some((h, rest)) => (h, Some(rest)),
        None => (inner, None),
    };
    let a: i64 = head.trim().parse().map_err(|_| err())?;
    let mut b = Vec::new();
    if let Some(tail) = tail {
        for item in tail.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let (v, m) = match item.split_once('^') {
                Some((v, m)) => (v.trim(), m.trim()),
                None => (item, "1"),
            };
            let v: i64 = v.parse().map_err(|_| err())?;
            let m: usize = m.parse().map_err(|_| err())?;
            b.extend(std::iter::repeat_n(v, m));
        }
    }
    let mut perm: Vec<usize> = (0..b.len()).collect();
    perm.sort_by(|&i, &j| b[j].cmp(&b[i]).then(i.cmp(&j)));
    let sorted: Vec<i64> = perm.iter().map(|&i| b[i]).collect();
    Ok(Parsed { class: DivisorClass::plane(a, &sorted), perm })
}

/// Parse either plane notation or a raw coordinate vector `[c0, c1, ..]`.
pub fn parse_class(text: &str) -> Result<DivisorClass, PicardError> {
    let t = text.trim();
    if t.starts_with('(') {
        return parse_plane(t).map(|p| p.class);
    }
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| PicardError::Parse(text.to_string()))?;
    let coeffs = inner
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| PicardError::Parse(text.to_string()))?;
    Ok(DivisorClass::new(coeffs))
}

/// Run-length blocks of consecutive equal entries; blocks of length zero never appear.
pub fn blocks(b: &[i64]) -> Vec<(i64, usize)> {
    let mut out: Vec<(i64, usize)> = Vec::new();
    for &x in b {
        match out.last_mut() {
            Some((v, m)) if *v == x => *m += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

pub fn format_plane(d: &DivisorClass) -> String {
    let (a, b) = d.plane_parts();
    if b.is_empty() {
        return format!("({a})");
    }
    let parts: Vec<String> = blocks(&b)
        .into_iter()
        .map(|(v, m)| if m == 1 { v.to_string() } else { format!("{v}^{m}") })
        .collect();
    format!("({a};{})", parts.join(","))
}

pub fn format_raw(d: &DivisorClass) -> String {
    let parts: Vec<String> = d.coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_sorting() {
        let p = parse_plane("(12; 6, 4, 3^3, 2^3, 1)").unwrap();
        assert_eq!(format_plane(&p.class), "(12;6,4,3^3,2^3,1)");
        let p = parse_plane("(8; 1, 3, 2^0, 2)").unwrap();
        assert_eq!(format_plane(&p.class), "(8;3,2,1)");
        assert_eq!(p.perm, vec![1, 2, 0]);
    }

    #[test]
    fn bare_degree() {
        let p = parse_plane("(3)").unwrap();
        assert_eq!(p.class.coeffs, vec![3]);
        assert_eq!(format_plane(&p.class), "(3)");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_plane("9;3").is_err());
        assert!(parse_plane("(x;3)").is_err());
        assert!(parse_class("[1,a]").is_err());
    }
}
