//! JSON and TSV file formats.

use eqribbon_core::construct::{BoxDiagram, CrossingList};
use eqribbon_core::notation::parse_poly;
use eqribbon_core::torsion::{BasedChainComplex, RationalFunction, RfMatrix};
use eqribbon_core::ZPoly;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const REPORT_SCHEMA: &str = "eqribbon.report/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub sign: i8,
    pub g: i64,
    pub t: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxEntryJson {
    pub j: i64,
    pub a: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    pub i: u32,
    pub entries: Vec<BoxEntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxesJson {
    pub q: u32,
    pub boxes: Vec<BoxJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub ranks: Vec<usize>,
    pub matrices: Vec<Vec<Vec<String>>>,
}

pub fn crossings_to_json(c: &CrossingList) -> Vec<CrossingJson> {
    c.records.iter().map(|r| CrossingJson { sign: r.sign, g: r.g as i64, t: r.t }).collect()
}

pub fn crossings_from_json(q: u32, c: &[CrossingJson]) -> Result<CrossingList, CliError> {
    Ok(CrossingList::new(q, c.iter().map(|r| (r.sign, r.g, r.t)))?)
}

pub fn boxes_to_json(b: &BoxDiagram) -> Result<BoxesJson, CliError> {
    let boxes = b
        .boxes
        .iter()
        .enumerate()
        .map(|(i, entries)| {
            let entries = entries
                .iter()
                .map(|(j, a)| {
                    let a = i64::try_from(a).map_err(|_| CliError::Data(format!("box entry {a} exceeds 64 bits")))?;
                    Ok(BoxEntryJson { j: *j, a })
                })
                .collect::<Result<_, CliError>>()?;
            Ok(BoxJson { i: i as u32, entries })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(BoxesJson { q: b.q, boxes })
}

pub fn boxes_from_json(b: &BoxesJson) -> Result<BoxDiagram, CliError> {
    let mut boxes = vec![Vec::new(); b.q as usize];
    for bx in &b.boxes {
        let slot = boxes
            .get_mut(bx.i as usize)
            .ok_or_else(|| CliError::Usage(format!("box index {} out of range for q = {}", bx.i, b.q)))?;
        slot.extend(bx.entries.iter().filter(|e| e.a != 0).map(|e| (e.j, BigInt::from(e.a))));
        slot.sort_by_key(|(j, _)| *j);
    }
    let diagram = BoxDiagram { q: b.q, boxes, normalization: (false, 0) };
    diagram.validate()?;
    Ok(diagram)
}

pub fn complex_from_json(c: &ComplexJson) -> Result<BasedChainComplex, CliError> {
    if c.ranks.len() != c.matrices.len() + 1 {
        return Err(CliError::Usage(format!(
            "{} ranks need {} matrices, got {}",
            c.ranks.len(),
            c.ranks.len().saturating_sub(1),
            c.matrices.len()
        )));
    }
    let matrices = c
        .matrices
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let rows = m
                .iter()
                .map(|row| row.iter().map(|s| RationalFunction::parse(s)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(RfMatrix::with_shape(c.ranks[k + 1], c.ranks[k], rows)?)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(BasedChainComplex::new(c.ranks.clone(), matrices)?)
}

#[cfg(test)]
pub fn complex_to_json(c: &BasedChainComplex) -> ComplexJson {
    ComplexJson {
        ranks: c.ranks().to_vec(),
        matrices: c
            .matrices()
            .iter()
            .map(|m| m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect())
            .collect(),
    }
}

/// One row of a knot table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub delta: ZPoly,
    pub period: Option<u32>,
    pub notes: String,
}

/// Tab-separated `name, polynomial[, period[, notes]]`; blank lines and lines
/// starting with `#` are skipped.
pub fn parse_table(text: &str) -> Result<Vec<KnotRecord>, CliError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let at = |msg: String| CliError::Usage(format!("line {}: {msg}", n + 1));
        if cols.len() < 2 || cols.len() > 4 {
            return Err(at(format!("expected 2 to 4 tab-separated columns, got {}", cols.len())));
        }
        let delta = parse_poly(cols[1]).map_err(|e| at(e.to_string()))?;
        let period = match cols.get(2).map(|s| s.trim()).filter(|s| !s.is_empty()) {
            Some(s) => Some(s.parse::<u32>().ok().filter(|&q| q > 0).ok_or_else(|| at(format!("bad period {s:?}")))?),
            None => None,
        };
        out.push(KnotRecord {
            name: cols[0].trim().to_string(),
            delta,
            period,
            notes: cols.get(3).map(|s| s.trim().to_string()).unwrap_or_default(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let t = "# comment\n6_1\t-2*t + 5 - 2*t^-1\t2\tStevedore\n\nx\t1\n";
        let rows = parse_table(t).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].period, Some(2));
        assert_eq!(rows[0].notes, "Stevedore");
        assert_eq!(rows[1].period, None);
        assert!(parse_table("a\tt + \n").is_err());
        assert!(parse_table("a\t1\t0\n").is_err());
        assert!(parse_table("a\n").is_err());
    }

    #[test]
    fn boxes_round_trip() {
        let json = BoxesJson {
            q: 2,
            boxes: vec![
                BoxJson { i: 0, entries: vec![] },
                BoxJson { i: 1, entries: vec![BoxEntryJson { j: 0, a: -1 }, BoxEntryJson { j: 1, a: 1 }] },
            ],
        };
        let b = boxes_from_json(&json).unwrap();
        assert_eq!(boxes_to_json(&b).unwrap(), json);
        let bad = BoxesJson { q: 2, boxes: vec![BoxJson { i: 1, entries: vec![BoxEntryJson { j: 0, a: 1 }] }] };
        assert!(boxes_from_json(&bad).is_err());
    }

    #[test]
    fn complex_round_trip() {
        let json = ComplexJson { ranks: vec![1, 1], matrices: vec![vec![vec!["(t - 1)/(t + 2)".into()]]] };
        let c = complex_from_json(&json).unwrap();
        assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c);
        let bad = ComplexJson { ranks: vec![1, 2], matrices: vec![vec![vec!["1".into()]]] };
        assert!(complex_from_json(&bad).is_err());
    }
}
