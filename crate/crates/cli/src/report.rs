//! Knot-table reports.

use std::time::Instant;

use eqribbon_core::conditions::{check_2eq_ribbon, check_2eq_slice, is_abstract_alexander, modq_witness};
use eqribbon_core::factor::{fox_witnesses, symmetric_divisors};
use eqribbon_core::{Error, ZPoly};
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::commands::{eqribbon_json, eqslice_json, two_eq_json, yes_no};
use crate::formats::{KnotRecord, REPORT_SCHEMA};
use crate::CliError;

pub struct Report {
    pub body: Value,
    pub all_valid: bool,
}

/// `Δ` with coefficients reduced into `[0, q)`, and whether that class is `t^k`.
fn residue(delta: &ZPoly, q: u32) -> (ZPoly, bool) {
    let m = BigInt::from(q);
    let r = ZPoly::from_terms(delta.terms().map(|(e, c)| (e, ((c % &m) + &m) % &m)));
    let unit = r.num_terms() == 1 && r.terms().all(|(_, c)| c.is_one());
    (r, unit)
}

fn error_block(e: &Error) -> Value {
    json!({ "verdict": "ERROR", "error": e.to_string() })
}

fn period_block(delta: &ZPoly, fox: &[ZPoly], q: u32) -> Result<Value, Error> {
    let (class, unit) = residue(delta, q);
    let mut block = Map::new();
    block.insert("residue".into(), json!({ "q": q, "class": class.to_string(), "unit": unit }));
    let modq = fox.iter().find_map(|p| modq_witness(p, q).ok().map(|w| (p, w)));
    block.insert(
        "modq_witness".into(),
        match modq {
            Some((p, w)) => json!({ "p": p.to_string(), "witness": eqribbon_json(&w) }),
            None => Value::Null,
        },
    );
    if q == 2 {
        let mut rows = Vec::new();
        let (mut slice_any, mut ribbon_any) = (false, false);
        for d in symmetric_divisors(delta)? {
            let slice = match check_2eq_slice(delta, &d) {
                Ok(v) => {
                    slice_any |= v.is_yes();
                    two_eq_json(&v, eqslice_json)
                }
                Err(e) => error_block(&e),
            };
            let ribbon = match check_2eq_ribbon(delta, &d) {
                Ok(v) => {
                    ribbon_any |= v.is_yes();
                    two_eq_json(&v, eqribbon_json)
                }
                Err(e) => error_block(&e),
            };
            rows.push(json!({ "delta_quot": d.to_string(), "eqslice2": slice, "eqribbon2": ribbon }));
        }
        block.insert("eqslice2".into(), json!(yes_no(slice_any)));
        block.insert("eqribbon2".into(), json!(yes_no(ribbon_any)));
        block.insert("divisors".into(), Value::Array(rows));
    }
    Ok(Value::Object(block))
}

pub fn knot_report(rec: &KnotRecord, timing: bool) -> (Value, bool) {
    let start = Instant::now();
    let mut out = Map::new();
    out.insert("name".into(), json!(rec.name));
    out.insert("delta".into(), json!(rec.delta.to_string()));
    out.insert("period".into(), json!(rec.period));
    out.insert("notes".into(), json!(rec.notes));
    let valid = is_abstract_alexander(&rec.delta);
    out.insert("abstract_alexander".into(), json!(valid));
    if valid {
        match fox_witnesses(&rec.delta) {
            Ok(fox) => {
                out.insert("slice".into(), json!(yes_no(!fox.is_empty())));
                out.insert("fox_witnesses".into(), json!(fox.iter().map(ToString::to_string).collect::<Vec<_>>()));
                if let Some(q) = rec.period.filter(|&q| q > 1) {
                    let block = period_block(&rec.delta, &fox, q).unwrap_or_else(|e| error_block(&e));
                    out.insert("periodic".into(), block);
                }
            }
            Err(e) => {
                out.insert("error".into(), json!(e.to_string()));
            }
        }
    }
    if timing {
        out.insert("timing_ms".into(), json!(start.elapsed().as_secs_f64() * 1e3));
    }
    (Value::Object(out), valid)
}

/// Rows are processed on `threads` workers; output order follows input order.
pub fn run(records: &[KnotRecord], threads: Option<usize>, timing: bool) -> Result<Report, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<(Value, bool)> = pool.install(|| records.par_iter().map(|r| knot_report(r, timing)).collect());
    let all_valid = rows.iter().all(|(_, v)| *v);
    let invalid = rows.iter().filter(|(_, v)| !*v).count();
    let knots: Vec<Value> = rows.into_iter().map(|(v, _)| v).collect();
    let body = json!({
        "schema": REPORT_SCHEMA,
        "command": "db run",
        "verdict": yes_no(all_valid),
        "count": knots.len(),
        "invalid": invalid,
        "knots": knots,
    });
    Ok(Report { body, all_valid })
}
