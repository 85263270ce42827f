//! JSON documents for frames, models, proofs and constant specifications.
//!
//! Moments are referenced by name, histories by canonical id (`"h3"` or
//! `3`). Output is canonical: object keys sorted, no floats.

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::bits::Bits;
use crate::calculus::{CalculusOptions, Justification, Proof, ProofLine, Scheme};
use crate::countermodels::{Built, TARGET};
use crate::frames::{
    Classification, FrameError, JstitFrame, MixsuccWitness, RegWitness, Relation, StitFrame,
    TemporalFrame,
};
use crate::models::{ConstantSpecification, EvidenceSet, JstitModel, ModelError, Universe};
use crate::syntax::{parse_formula, parse_polynomial, Formula, SyntaxError};

#[derive(Debug, Error)]
pub enum DocError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
    #[error("in {context}: {source}")]
    Syntax {
        context: String,
        source: SyntaxError,
    },
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn schema(msg: impl Into<String>) -> DocError {
    DocError::Schema(msg.into())
}

/// Pretty-printed canonical serialization.
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

pub fn parse_document(text: &str) -> Result<Value, DocError> {
    Ok(serde_json::from_str(text)?)
}

fn formula(text: &str, context: &str) -> Result<Formula, DocError> {
    parse_formula(text).map_err(|source| DocError::Syntax {
        context: context.to_string(),
        source,
    })
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, DocError> {
    v.as_object()
        .ok_or_else(|| schema(format!("{what} must be a JSON object")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, DocError> {
    v.as_array()
        .ok_or_else(|| schema(format!("{what} must be an array")))
}

fn string<'a>(v: &'a Value, what: &str) -> Result<&'a str, DocError> {
    v.as_str()
        .ok_or_else(|| schema(format!("{what} must be a string")))
}

fn uint(v: &Value, what: &str) -> Result<usize, DocError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema(format!("{what} must be a non-negative integer")))
}

/// Moment index by name.
pub fn moment_index(t: &TemporalFrame, name: &str) -> Result<usize, DocError> {
    t.index_of(name)
        .ok_or_else(|| DocError::Frame(FrameError::UnknownMoment(name.to_string())))
}

/// History id from `"h3"`, `"3"` or `3`.
pub fn history_id(v: &Value) -> Result<usize, DocError> {
    match v {
        Value::Number(_) => uint(v, "history id"),
        Value::String(s) => parse_history(s),
        _ => Err(schema("history id must be a string or integer")),
    }
}

pub fn parse_history(s: &str) -> Result<usize, DocError> {
    s.strip_prefix('h')
        .unwrap_or(s)
        .parse()
        .map_err(|_| schema(format!("bad history id {s:?}")))
}

fn pair_list(
    t_names: &[String],
    v: Option<&Value>,
    what: &str,
) -> Result<Vec<(usize, usize)>, DocError> {
    let Some(v) = v else { return Ok(Vec::new()) };
    array(v, what)?
        .iter()
        .map(|p| {
            let p = array(p, what)?;
            if p.len() != 2 {
                return Err(schema(format!("{what} entries must be pairs")));
            }
            let ix = |x: &Value| -> Result<usize, DocError> {
                let name = string(x, what)?;
                t_names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| DocError::Frame(FrameError::UnknownMoment(name.to_string())))
            };
            Ok((ix(&p[0])?, ix(&p[1])?))
        })
        .collect()
}

/// Loads a frame document; `default_agents` applies when the document has
/// no `"agents"` key.
pub fn frame_from_json(v: &Value, default_agents: usize) -> Result<JstitFrame, DocError> {
    let doc = object(v, "frame document")?;
    let names: Vec<String> = array(
        doc.get("moments")
            .ok_or_else(|| schema("missing \"moments\""))?,
        "moments",
    )?
    .iter()
    .map(|m| string(m, "moment name").map(str::to_string))
    .collect::<Result<_, _>>()?;
    if let Some(bad) = names
        .iter()
        .find(|n| n.is_empty() || n.contains([',', '/']))
    {
        return Err(schema(format!(
            "moment name {bad:?} must be nonempty without ',' or '/'"
        )));
    }
    let order = pair_list(&names, doc.get("order"), "order")?;
    let dense = pair_list(&names, doc.get("dense"), "dense")?;
    let agents = match doc.get("agents") {
        Some(a) => uint(a, "agents")?,
        None => default_agents,
    };
    let n = names.len();
    let t = TemporalFrame::from_pairs(names.clone(), order)?.with_density(dense)?;
    let mut c = StitFrame::trivial(t, agents)?;
    if let Some(choice) = doc.get("choice") {
        for (key, cells) in object(choice, "choice")? {
            let (m, j) = key
                .rsplit_once(',')
                .ok_or_else(|| schema(format!("choice key {key:?} must be \"moment,agent\"")))?;
            let m = moment_index(&c, m)?;
            let j: usize = j
                .trim()
                .parse()
                .map_err(|_| schema(format!("bad agent in choice key {key:?}")))?;
            let cells = array(cells, "choice cells")?
                .iter()
                .map(|cell| {
                    array(cell, "choice cell")?
                        .iter()
                        .map(history_id)
                        .collect::<Result<Bits, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            c.set_choice(m, j, cells)?;
        }
    }
    let le = c.order().clone();
    let rel = |key: &str| -> Result<Option<Relation>, DocError> {
        match doc.get(key) {
            None => Ok(None),
            Some(v) => {
                let pairs = pair_list(&names, Some(v), key)?;
                Ok(Some(
                    Relation::from_pairs(n, pairs).reflexive_transitive_closure(),
                ))
            }
        }
    };
    let r = rel("r")?.unwrap_or_else(|| le.clone());
    let re = rel("re")?.unwrap_or_else(|| le.clone());
    Ok(JstitFrame::new(c, r, re))
}

fn names_of(t: &TemporalFrame, pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<Value> {
    pairs
        .into_iter()
        .map(|(a, b)| json!([t.name(a), t.name(b)]))
        .collect()
}

/// Canonical frame document: `order` lists the covering pairs, `r` and
/// `re` their non-reflexive pairs; `histories` is informational.
pub fn frame_to_json(f: &JstitFrame) -> Value {
    let covers = f
        .order()
        .pairs()
        .filter(|&(a, b)| a != b && !f.moments().any(|c| f.lt(a, c) && f.lt(c, b)));
    let mut choice = Map::new();
    for m in f.moments() {
        for j in 0..f.agents() {
            let cells = f.choice(m, j);
            if cells.len() > 1 {
                choice.insert(
                    format!("{},{j}", f.name(m)),
                    cells.iter().map(|c| json!(c.to_vec())).collect(),
                );
            }
        }
    }
    let strict = |r: &Relation| names_of(f, r.pairs().filter(|(a, b)| a != b));
    let histories: Vec<Value> = f
        .histories()
        .iter()
        .map(|h| h.iter().map(|m| f.name(m)).collect())
        .collect();
    let mut doc = json!({
        "moments": f.names(),
        "order": names_of(f, covers),
        "agents": f.agents(),
        "choice": choice,
        "r": strict(f.r()),
        "re": strict(f.re()),
        "histories": histories,
    });
    if f.has_density() {
        doc["dense"] = json!(names_of(f, f.density().iter().copied()));
    }
    doc
}

fn evidence_from_json(v: &Value, u: &Universe, what: &str) -> Result<EvidenceSet, DocError> {
    match v {
        Value::String(s) if s == "*" => Ok(EvidenceSet::Everything),
        Value::Array(items) => {
            let mut set = BTreeSet::new();
            for item in items {
                let f = formula(string(item, what)?, what)?;
                set.insert(
                    u.formula_index(&f)
                        .expect("evidence formulas are interned before use"),
                );
            }
            Ok(EvidenceSet::Finite(set))
        }
        _ => Err(schema(format!(
            "{what} must be \"*\" or a list of formulas"
        ))),
    }
}

fn evidence_to_json(e: &EvidenceSet, u: &Universe) -> Value {
    match e {
        EvidenceSet::Everything => json!("*"),
        EvidenceSet::Finite(s) => s.iter().map(|&i| json!(u.formula(i).to_string())).collect(),
    }
}

fn split_key<'a>(key: &'a str, what: &str) -> Result<(&'a str, &'a str), DocError> {
    key.split_once('/')
        .ok_or_else(|| schema(format!("{what} key {key:?} must be \"moment/...\"")))
}

/// Loads a model document (a frame document plus `act`, `evidence`,
/// `evidence_default`, `valuation` and an optional `universe`).
pub fn model_from_json(v: &Value, default_agents: usize) -> Result<JstitModel, DocError> {
    let frame = frame_from_json(v, default_agents)?;
    let doc = object(v, "model document")?;
    let empty = Map::new();
    let sub = |key: &str| -> Result<&Map<String, Value>, DocError> {
        doc.get(key).map_or(Ok(&empty), |x| object(x, key))
    };
    let act = sub("act")?;
    let evidence = sub("evidence")?;
    let valuation = sub("valuation")?;

    // universe: declared entries first (keeps interned order stable), then
    // everything mentioned
    let mut u = Universe::new();
    if let Some(decl) = doc.get("universe") {
        let decl = object(decl, "universe")?;
        if let Some(ps) = decl.get("polynomials") {
            for p in array(ps, "universe polynomials")? {
                let text = string(p, "polynomial")?;
                let t = parse_polynomial(text).map_err(|source| DocError::Syntax {
                    context: "universe".into(),
                    source,
                })?;
                u.add_polynomial(&t)?;
            }
        }
        if let Some(fs) = decl.get("formulas") {
            for f in array(fs, "universe formulas")? {
                u.add_formula(&formula(string(f, "formula")?, "universe")?)?;
            }
        }
        if let Some(ps) = decl.get("props") {
            for p in array(ps, "universe props")? {
                u.add_prop(string(p, "prop")?);
            }
        }
    }
    let poly = |text: &str, what: &str| {
        parse_polynomial(text).map_err(|source| DocError::Syntax {
            context: what.to_string(),
            source,
        })
    };
    let mut act_entries = Vec::new();
    for (key, ts) in act {
        let (m, h) = split_key(key, "act")?;
        let m = moment_index(&frame, m)?;
        let h = parse_history(h)?;
        let ts = array(ts, "act value")?
            .iter()
            .map(|t| poly(string(t, "act entry")?, "act"))
            .collect::<Result<Vec<_>, _>>()?;
        for t in &ts {
            u.add_polynomial(t)?;
        }
        act_entries.push((m, h, ts));
    }
    let mut ev_entries = Vec::new();
    for (key, e) in evidence {
        let (m, t) = split_key(key, "evidence")?;
        let m = moment_index(&frame, m)?;
        let t = poly(t, "evidence")?;
        u.add_polynomial(&t)?;
        if let Value::Array(items) = e {
            for item in items {
                u.add_formula(&formula(string(item, "evidence formula")?, "evidence")?)?;
            }
        }
        ev_entries.push((m, t, e));
    }
    let default = doc.get("evidence_default");
    if let Some(Value::Array(items)) = default {
        for item in items {
            u.add_formula(&formula(
                string(item, "evidence formula")?,
                "evidence_default",
            )?)?;
        }
    }
    for p in valuation.keys() {
        u.add_prop(p);
    }

    let mut model = JstitModel::new(frame, u.clone());
    if let Some(d) = default {
        model.set_evidence_default(evidence_from_json(d, &u, "evidence_default")?);
    }
    for (m, h, ts) in act_entries {
        model.set_act_polys(m, h, &ts)?;
    }
    for (m, t, e) in ev_entries {
        let ti = u.poly_index(&t).expect("interned above");
        let e = evidence_from_json(e, &u, "evidence value")?;
        model.set_evidence(m, ti, e);
    }
    for (p, pairs) in valuation {
        model.set_valuation(p, vec![Bits::empty(); model.frame().len()])?;
        for pair in array(pairs, "valuation")? {
            let pair = array(pair, "valuation pair")?;
            if pair.len() != 2 {
                return Err(schema("valuation entries must be [moment, history] pairs"));
            }
            let m = moment_index(model.frame(), string(&pair[0], "moment")?)?;
            let h = history_id(&pair[1])?;
            model.set_holds(p, m, h, true)?;
        }
    }
    Ok(model)
}

pub fn model_to_json(model: &JstitModel) -> Value {
    let f = model.frame();
    let u = model.universe();
    let mut doc = frame_to_json(f);
    let mut act = Map::new();
    for (m, h) in f.mh_pairs() {
        let a = model.act(m, h);
        if !a.is_empty() {
            let ts: Vec<String> = a.iter().map(|t| u.polynomial(t).to_string()).collect();
            act.insert(format!("{}/h{h}", f.name(m)), json!(ts));
        }
    }
    let mut evidence = Map::new();
    for (&(m, t), e) in model.evidence_entries() {
        evidence.insert(
            format!("{}/{}", f.name(m), u.polynomial(t)),
            evidence_to_json(e, u),
        );
    }
    let mut valuation = Map::new();
    for (p, rows) in model.valuation() {
        let pairs: Vec<Value> = rows
            .iter()
            .enumerate()
            .flat_map(|(m, hs)| hs.iter().map(move |h| json!([f.name(m), format!("h{h}")])))
            .collect();
        valuation.insert(p.clone(), json!(pairs));
    }
    doc["act"] = Value::Object(act);
    doc["evidence"] = Value::Object(evidence);
    doc["evidence_default"] = evidence_to_json(model.evidence_default(), u);
    doc["valuation"] = Value::Object(valuation);
    doc["universe"] = json!({
        "polynomials": u.polynomials().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "formulas": u.formulas().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "props": u.props().iter().collect::<Vec<_>>(),
    });
    doc
}

/// A constant specification as a list of formula strings, or an object
/// with such a list under `"cs"`.
pub fn cs_from_json(v: &Value) -> Result<ConstantSpecification, DocError> {
    let list = match v {
        Value::Object(o) => o.get("cs").ok_or_else(|| schema("missing \"cs\""))?,
        other => other,
    };
    let fs = array(list, "cs")?
        .iter()
        .map(|s| formula(string(s, "cs entry")?, "cs"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConstantSpecification::from_formulas(&fs)?)
}

pub fn cs_to_json(cs: &ConstantSpecification) -> Value {
    cs.entries()
        .map(|e| json!(e.formula().to_string()))
        .collect()
}

fn premise(j: &Map<String, Value>) -> Result<usize, DocError> {
    uint(
        j.get("from")
            .ok_or_else(|| schema("justification needs \"from\""))?,
        "from",
    )
}

fn justification(v: &Value) -> Result<Justification, DocError> {
    let j = object(v, "justification")?;
    let kind = string(
        j.get("kind")
            .ok_or_else(|| schema("justification needs \"kind\""))?,
        "kind",
    )?;
    Ok(match kind {
        "axiom" => Justification::Axiom(match j.get("scheme") {
            None | Some(Value::Null) => None,
            Some(s) => Some(
                string(s, "scheme")?
                    .parse::<Scheme>()
                    .map_err(|e| schema(e.to_string()))?,
            ),
        }),
        "mp" => {
            let from = array(
                j.get("from")
                    .ok_or_else(|| schema("mp needs \"from\": [i, j]"))?,
                "from",
            )?;
            if from.len() != 2 {
                return Err(schema("mp needs \"from\": [i, j]"));
            }
            Justification::Mp(uint(&from[0], "from")?, uint(&from[1], "from")?)
        }
        "knec" => Justification::KNec(premise(j)?),
        "rd" => Justification::Rd(premise(j)?),
        "rcs" => Justification::Rcs,
        "nec" => Justification::Nec(
            premise(j)?,
            j.get("agent").map(|a| uint(a, "agent")).transpose()?,
        ),
        other => return Err(schema(format!("unknown justification kind {other:?}"))),
    })
}

/// Proof document: `lines`, optional `cs` and optional `options`
/// (`strict_a0`, `box_necessitation`). Line references are 1-based.
pub fn proof_from_json(
    v: &Value,
) -> Result<(Proof, ConstantSpecification, CalculusOptions), DocError> {
    let doc = object(v, "proof document")?;
    let lines = array(
        doc.get("lines")
            .ok_or_else(|| schema("missing \"lines\""))?,
        "lines",
    )?
    .iter()
    .enumerate()
    .map(|(i, l)| {
        let l = object(l, "proof line")?;
        let text = string(
            l.get("formula")
                .ok_or_else(|| schema("line needs \"formula\""))?,
            "formula",
        )?;
        Ok(ProofLine {
            formula: formula(text, &format!("line {}", i + 1))?,
            just: justification(l.get("just").ok_or_else(|| schema("line needs \"just\""))?)?,
        })
    })
    .collect::<Result<Vec<_>, DocError>>()?;
    let cs = match doc.get("cs") {
        Some(c) => cs_from_json(c)?,
        None => ConstantSpecification::empty(),
    };
    let mut options = CalculusOptions::default();
    if let Some(o) = doc.get("options") {
        let o = object(o, "options")?;
        let flag = |k: &str| o.get(k).and_then(Value::as_bool).unwrap_or(false);
        options.strict_a0 = flag("strict_a0");
        options.box_necessitation = flag("box_necessitation");
    }
    Ok((Proof::new(lines), cs, options))
}

fn justification_to_json(j: &Justification) -> Value {
    match j {
        Justification::Axiom(s) => match s {
            Some(s) => json!({"kind": "axiom", "scheme": s.to_string()}),
            None => json!({"kind": "axiom"}),
        },
        Justification::Mp(a, b) => json!({"kind": "mp", "from": [a, b]}),
        Justification::KNec(a) => json!({"kind": "knec", "from": a}),
        Justification::Rd(a) => json!({"kind": "rd", "from": a}),
        Justification::Rcs => json!({"kind": "rcs"}),
        Justification::Nec(a, None) => json!({"kind": "nec", "from": a}),
        Justification::Nec(a, Some(j)) => json!({"kind": "nec", "from": a, "agent": j}),
    }
}

pub fn proof_to_json(p: &Proof, cs: &ConstantSpecification) -> Value {
    json!({
        "lines": p.lines.iter().map(|l| json!({
            "formula": l.formula.to_string(),
            "just": justification_to_json(&l.just),
        })).collect::<Vec<_>>(),
        "cs": cs_to_json(cs),
    })
}

pub fn mixsucc_witness_to_json(t: &TemporalFrame, w: &MixsuccWitness) -> Value {
    json!({
        "m0": t.name(w.m0),
        "m1": t.name(w.m1),
        "h0": format!("h{}", w.h0),
        "h1": format!("h{}", w.h1),
    })
}

pub fn reg_witness_to_json(t: &TemporalFrame, w: &RegWitness) -> Value {
    json!({
        "m0": t.name(w.m0),
        "m1": t.name(w.m1),
        "h_prime": format!("h{}", w.h_prime),
        "S": w.s.iter().map(|m| t.name(m)).collect::<Vec<_>>(),
    })
}

pub fn classification_to_json(f: &JstitFrame, c: &Classification) -> Value {
    json!({
        "moments": f.names(),
        "mixsucc": {
            "holds": c.mixsucc.is_none(),
            "witness": c.mixsucc.map(|w| mixsucc_witness_to_json(f, &w)),
        },
        "regular": {
            "holds": c.regular.is_none(),
            "witness": c.regular.map(|w| reg_witness_to_json(f, &w)),
        },
        "unirelational": c.unirelational,
        "theta_sizes": c.theta_sizes,
        "density_annotations": c.uses_density,
    })
}

/// The built model document with a `witness` block echoing the witness,
/// the falsified formula and the falsifying index.
pub fn built_to_json(b: &Built, kind: &str, witness: Value) -> Value {
    let f = b.model.frame();
    let mut doc = model_to_json(&b.model);
    doc["witness"] = json!({
        "kind": kind,
        "witness": witness,
        "h2": format!("h{}", b.h2),
        "index": [f.name(b.index.0), format!("h{}", b.index.1)],
        "formula": TARGET,
        "density_annotations_used": b.uses_density,
        "note": b.note(),
    });
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::countermodels::build_temporal_countermodel;
    use crate::frames::mixsucc_witness;
    use crate::models::validate_model;

    const FORK: &str = r#"{
        "moments": ["r", "a", "b"],
        "order": [["r", "a"], ["r", "b"]],
        "agents": 1,
        "choice": {"r,0": [["h0"], [1]]},
        "re": [["a", "b"]],
        "dense": [["r", "a"]]
    }"#;

    #[test]
    fn frame_round_trip() {
        let f = frame_from_json(&parse_document(FORK).unwrap(), 2).unwrap();
        assert_eq!(f.agents(), 1);
        assert_eq!(f.choice(0, 0).len(), 2);
        assert!(f.re().holds(1, 2));
        assert!(f.r().holds(0, 1) && !f.r().holds(1, 2));
        assert!(f.is_dense_edge(0, 1));
        let out = frame_to_json(&f);
        let g = frame_from_json(&out, 2).unwrap();
        assert_eq!(f, g);
        assert_eq!(
            to_canonical_string(&out),
            to_canonical_string(&frame_to_json(&g))
        );
    }

    #[test]
    fn frame_errors() {
        let bad = |s: &str| frame_from_json(&parse_document(s).unwrap(), 2).is_err();
        assert!(bad(r#"{"order": []}"#));
        assert!(bad(r#"{"moments": ["a"], "order": [["a", "z"]]}"#));
        assert!(bad(r#"{"moments": ["a,b"]}"#));
        assert!(bad(r#"{"moments": ["a"], "choice": {"a,5": [[0]]}}"#));
        assert!(parse_document("{").is_err());
    }

    #[test]
    fn model_round_trip() {
        let t = TemporalFrame::from_parents(&[None, Some(0), Some(0)])
            .unwrap()
            .with_density([(0, 1)])
            .unwrap();
        let w = mixsucc_witness(&t).unwrap();
        let b = build_temporal_countermodel(&t, 2, &w).unwrap();
        let doc = model_to_json(&b.model);
        let m = model_from_json(&doc, 2).unwrap();
        assert_eq!(m, b.model);
        assert!(validate_model(&m, None).is_ok());
        let out = built_to_json(&b, "mixsucc", mixsucc_witness_to_json(&t, &w));
        assert_eq!(out["witness"]["index"], json!(["m0", "h0"]));
    }

    #[test]
    fn model_document_fields() {
        let text = r#"{
            "moments": ["m0"],
            "order": [],
            "act": {"m0/h0": ["x"]},
            "evidence": {"m0/x": ["p", "p -> q"]},
            "evidence_default": [],
            "valuation": {"p": [["m0", "h0"]]}
        }"#;
        let m = model_from_json(&parse_document(text).unwrap(), 2).unwrap();
        assert!(m.holds("p", 0, 0));
        assert_eq!(m.act(0, 0).len(), 1);
        assert!(m.evidence_default().is_empty());
        let d = validate_model(&m, None);
        assert!(d.has(crate::diag::Constraint::NoNewProofsGuaranteed));
        assert_eq!(model_from_json(&model_to_json(&m), 2).unwrap(), m);
    }

    #[test]
    fn proof_document() {
        let text = r#"{"lines": [
            {"formula": "K(Box E x | ~Box E y) -> (Box E x | ~Box E y)", "just": {"kind": "axiom", "scheme": "A7"}},
            {"formula": "K(Box E x | ~Box E y) -> (E x | ~E y)", "just": {"kind": "rd", "from": 1}}
        ]}"#;
        let (p, cs, o) = proof_from_json(&parse_document(text).unwrap()).unwrap();
        assert_eq!(p.lines.len(), 2);
        assert!(crate::calculus::verify_proof(&p, &cs, o).accepted());
        let back = proof_from_json(&proof_to_json(&p, &cs)).unwrap();
        assert_eq!(back.0, p);
        let bad = r#"{"lines": [{"formula": "p", "just": {"kind": "magic"}}]}"#;
        assert!(proof_from_json(&parse_document(bad).unwrap()).is_err());
    }
}
