//! Subcommand bodies. Each returns a JSON document and whether its verdict is positive.

use std::path::Path;

use eqribbon_core::conditions::{
    build_2eq_slice_witness, check_2eq_ribbon, check_2eq_slice, check_fox_slice, check_murasugi,
    is_abstract_alexander, modq_witness, verify_eqribbon, verify_eqslice, EqRibbonWitness, EqSliceWitness,
    TwoEquivariant, Verdict,
};
use eqribbon_core::construct::{crossings_from_boxes, equivariant_linking, realize};
use eqribbon_core::notation::{parse_poly, parse_poly2};
use eqribbon_core::{GroupRingPoly, ZPoly};
use serde_json::{json, Value};

use crate::formats::{
    boxes_from_json, boxes_to_json, complex_from_json, crossings_from_json, crossings_to_json, BoxesJson, ComplexJson,
    CrossingJson,
};
use crate::CliError;

pub struct Outcome {
    pub body: Value,
    pub ok: bool,
}

pub fn yes_no(ok: bool) -> &'static str {
    if ok {
        "YES"
    } else {
        "NO"
    }
}

fn outcome(schema: &str, command: &str, ok: bool, fields: Value) -> Outcome {
    let mut body = json!({ "schema": schema, "command": command, "verdict": yes_no(ok) });
    if let (Some(map), Value::Object(extra)) = (body.as_object_mut(), fields) {
        map.extend(extra);
    }
    Outcome { body, ok }
}

pub fn eqslice_json(w: &EqSliceWitness) -> Value {
    json!({
        "q": w.q,
        "delta_zq": w.delta_zq.to_string(),
        "a": w.a.to_string(),
        "b": w.b.to_string(),
        "verified": verify_eqslice(w),
    })
}

pub fn eqribbon_json(w: &EqRibbonWitness) -> Value {
    let murasugi = &w.a * &w.a.involute();
    json!({
        "q": w.q,
        "a": w.a.to_string(),
        "murasugi": murasugi.to_string(),
        "verified": verify_eqribbon(w, &murasugi),
    })
}

/// A verdict block: the witness on YES, the certificate on NO.
pub fn two_eq_json<W>(v: &Verdict<TwoEquivariant<W>>, witness: impl Fn(&W) -> Value) -> Value {
    match v {
        Verdict::Yes(t) => json!({
            "verdict": "YES",
            "p": t.p.to_string(),
            "q": t.q.to_string(),
            "witness": witness(&t.witness),
        }),
        Verdict::No(c) => json!({ "verdict": "NO", "candidates": c.candidates, "reason": c.reason }),
    }
}

fn parse(s: &str) -> Result<ZPoly, CliError> {
    Ok(parse_poly(s)?)
}

fn parse2(s: &str, q: u32) -> Result<GroupRingPoly, CliError> {
    Ok(parse_poly2(s, q)?)
}

pub fn check_alexander(s: &str) -> Result<Outcome, CliError> {
    let p = parse(s)?;
    let ok = is_abstract_alexander(&p);
    Ok(outcome(
        "eqribbon.check/v1",
        "check alexander",
        ok,
        json!({
            "input": p.to_string(),
            "augmentation": p.augment().to_string(),
            "symmetric": !p.is_zero() && p.is_self_reciprocal(),
        }),
    ))
}

pub fn check_slice(s: &str) -> Result<Outcome, CliError> {
    let p = parse(s)?;
    let v = check_fox_slice(&p)?;
    let detail = match &v {
        Verdict::Yes(w) => json!({ "witness": { "p": w.p.to_string(), "p_conj": w.p.conj().to_string() } }),
        Verdict::No(c) => json!({ "certificate": { "candidates": c.candidates, "reason": c.reason } }),
    };
    Ok(outcome("eqribbon.check/v1", "check slice", v.is_yes(), json!({ "input": p.to_string() }).merge(detail)))
}

pub fn check_murasugi_cmd(q: u32, s: &str) -> Result<Outcome, CliError> {
    let d = parse2(s, q)?;
    let r = check_murasugi(&d);
    Ok(outcome(
        "eqribbon.check/v1",
        "check murasugi",
        r.holds(),
        json!({
            "q": q,
            "input": d.to_string(),
            "symmetric": r.symmetric,
            "augments": r.augments,
            "knot_poly": r.knot_poly.to_string(),
            "quotient_poly": r.quotient_poly.to_string(),
            "quotient_divides": r.quotient_divides,
        }),
    ))
}

pub fn check_eqslice2(delta: &str, quot: &str) -> Result<Outcome, CliError> {
    let (d, dq) = (parse(delta)?, parse(quot)?);
    let v = check_2eq_slice(&d, &dq)?;
    let block = two_eq_json(&v, eqslice_json);
    Ok(outcome(
        "eqribbon.check/v1",
        "check eqslice2",
        v.is_yes(),
        json!({ "delta": d.to_string(), "delta_quot": dq.to_string(), "result": block }),
    ))
}

pub fn check_eqribbon2(delta: &str, quot: &str) -> Result<Outcome, CliError> {
    let (d, dq) = (parse(delta)?, parse(quot)?);
    let v = check_2eq_ribbon(&d, &dq)?;
    let block = two_eq_json(&v, eqribbon_json);
    Ok(outcome(
        "eqribbon.check/v1",
        "check eqribbon2",
        v.is_yes(),
        json!({ "delta": d.to_string(), "delta_quot": dq.to_string(), "result": block }),
    ))
}

pub fn witness_modq(q: u32, s: &str) -> Result<Outcome, CliError> {
    let p = parse(s)?;
    let w = modq_witness(&p, q)?;
    let murasugi = &w.a * &w.a.involute();
    let ok = verify_eqribbon(&w, &murasugi);
    Ok(outcome(
        "eqribbon.witness/v1",
        "witness modq",
        ok,
        json!({
            "p": p.to_string(),
            "q": q,
            "a": w.a.to_string(),
            "murasugi": murasugi.to_string(),
            "knot_poly": murasugi.norm_product().to_string(),
            "quotient_poly": murasugi.augment_g().canonical().to_string(),
        }),
    ))
}

pub fn witness_slice2(p: &str, q: &str) -> Result<Outcome, CliError> {
    let (p, q) = (parse(p)?, parse(q)?);
    let w = build_2eq_slice_witness(&p, &q)?;
    let block = eqslice_json(&w);
    let ok = block["verified"] == Value::Bool(true);
    Ok(outcome(
        "eqribbon.witness/v1",
        "witness slice2",
        ok,
        json!({ "p": p.to_string(), "q": q.to_string(), "witness": block }),
    ))
}

pub fn realize_cmd(q: u32, s: &str) -> Result<Outcome, CliError> {
    let a = parse2(s, q)?;
    let r = realize(&a)?;
    Ok(outcome(
        "eqribbon.realization/v1",
        "realize",
        true,
        json!({
            "q": q,
            "a": a.to_string(),
            "boxes": boxes_to_json(&r.boxes)?,
            "crossings": crossings_to_json(&r.crossings),
            "murasugi": r.murasugi.to_string(),
            "knot_poly": r.knot_poly.to_string(),
            "quotient_poly": r.quotient_poly.to_string(),
        }),
    ))
}

/// Crossing input is either a crossing list or a box diagram.
#[derive(serde::Deserialize)]
#[serde(untagged)]
enum LinkingInput {
    Crossings(Vec<CrossingJson>),
    Boxes(BoxesJson),
}

pub fn linking_cmd(q: u32, path: &Path) -> Result<Outcome, CliError> {
    let crossings = match read_json::<LinkingInput>(path)? {
        LinkingInput::Crossings(c) => crossings_from_json(q, &c)?,
        LinkingInput::Boxes(b) => {
            if b.q != q {
                return Err(CliError::Usage(format!("box diagram has q = {}, expected {q}", b.q)));
            }
            crossings_from_boxes(&boxes_from_json(&b)?)?
        }
    };
    let lk = equivariant_linking(&crossings);
    let murasugi = (&lk * &lk.involute()).canonical();
    Ok(outcome(
        "eqribbon.linking/v1",
        "linking",
        true,
        json!({
            "q": q,
            "crossings": crossings.records.len(),
            "linking": lk.to_string(),
            "murasugi": murasugi.to_string(),
            "knot_poly": murasugi.norm_product().to_string(),
            "quotient_poly": murasugi.augment_g().canonical().to_string(),
        }),
    ))
}

pub fn torsion_cmd(path: &Path) -> Result<Outcome, CliError> {
    let c = complex_from_json(&read_json::<ComplexJson>(path)?)?;
    let fields = json!({
        "ranks": c.ranks(),
        "euler_characteristic": c.euler_characteristic(),
        "local": c.is_local(),
    });
    match c.torsion() {
        Ok(tau) => {
            let (num, den) = tau.to_integer_fraction();
            Ok(outcome(
                "eqribbon.torsion/v1",
                "torsion",
                true,
                fields.merge(json!({
                    "acyclic": true,
                    "torsion": tau.to_string(),
                    "numerator": num.to_string(),
                    "denominator": den.to_string(),
                })),
            ))
        }
        Err(eqribbon_core::Error::NotAcyclic(msg)) => Ok(outcome(
            "eqribbon.torsion/v1",
            "torsion",
            false,
            fields.merge(json!({ "acyclic": false, "reason": msg })),
        )),
        Err(e) => Err(e.into()),
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

trait Merge {
    fn merge(self, other: Value) -> Value;
}

impl Merge for Value {
    fn merge(mut self, other: Value) -> Value {
        if let (Some(map), Value::Object(extra)) = (self.as_object_mut(), other) {
            map.extend(extra);
        }
        self
    }
}
