//! Command dispatch: a parsed document in, a JSON report or an SVG out.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::svg::render;
use super::{parse, DslError, Workspace};
use crate::decompose::{
    choose_k, convex_decompose, cork_pseudoconvexify, reduce_defect_step, DecomposeError, GLUING_NOTICE,
};
use crate::front::{ComponentId, FrontDiagram, OneHandleId};
use crate::handlebody::{Handlebody, Verdict};
use crate::whitehead::{homology_multiplicity, whitehead_multiple, FramedComponent, MultiplicityTarget, WhiteheadParams};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunParams {
    /// `NAME` or `NAME.HANDLE`; for corks also `T1,T2`.
    pub target: Option<String>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub budget: usize,
    pub seed: u64,
    pub format: Option<Format>,
}

impl Default for RunParams {
    fn default() -> RunParams {
        RunParams { target: None, n: None, k: None, budget: crate::budget(), seed: 0, format: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Output {
    Json(String),
    Svg(String),
}

impl Output {
    pub fn text(&self) -> &str {
        match self {
            Output::Json(s) | Output::Svg(s) => s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error("{source_name}:{0}", source_name = .1)]
    Dsl(DslError, String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("[{code}] {message}")]
    Module { code: &'static str, message: String },
}

impl RunError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Dsl(..) => 2,
            RunError::Usage(_) => 64,
            RunError::Module { .. } => 3,
        }
    }
}

fn module(code: &'static str, e: impl std::fmt::Display) -> RunError {
    RunError::Module { code, message: e.to_string() }
}

fn decompose_err(e: DecomposeError) -> RunError {
    let code = match e {
        DecomposeError::BadK(_) | DecomposeError::BadN | DecomposeError::KInfeasible { .. } => "E-PARAM",
        DecomposeError::NoDefect(_) => "E-NODEFECT",
        DecomposeError::UnknownHandle(_) => "E-HANDLE",
        DecomposeError::NMismatch => "E-CORK",
        DecomposeError::Unknown(_) | DecomposeError::Uncertified(_) => "E-UNKNOWN",
        DecomposeError::Handlebody(_) => "E-HANDLEBODY",
        DecomposeError::Whitehead(_) => "E-WHITEHEAD",
        DecomposeError::Front(_) => "E-FRONT",
    };
    module(code, e)
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Parses `text`, resolves it and runs `command`.
pub fn run_source(source_name: &str, text: &str, command: &str, params: &RunParams) -> Result<Output, RunError> {
    let doc = parse(text).map_err(|e| RunError::Dsl(e, source_name.to_string()))?;
    let ws = doc.resolve().map_err(|e| RunError::Dsl(e, source_name.to_string()))?;
    let format = params.format.unwrap_or(if command == "render" { Format::Svg } else { Format::Json });
    if format == Format::Svg {
        if command != "render" {
            return Err(RunError::Usage(format!("`{command}` has no svg output")));
        }
        let (_, h) = pick_handlebody(&ws, params)?;
        return Ok(Output::Svg(render_handlebody(h)));
    }
    let results = run(&ws, command, params)?;
    let mut warnings = Vec::new();
    if matches!(command, "decompose" | "corks") {
        warnings.push(Value::String(GLUING_NOTICE.into()));
    }
    if matches!(command, "decompose" | "corks" | "reduce") {
        warnings.push(Value::String(
            "passive 2-handle g is framed canonical_framing(n, 0) along P_n of a 0-framed unknot".into(),
        ));
    }
    let report = json!({
        "schema": SCHEMA,
        "command": command,
        "params": {
            "target": params.target,
            "n": params.n,
            "k": params.k,
            "budget": params.budget,
            "seed": params.seed,
        },
        "inputs": [{ "name": source_name, "sha256": digest(text) }],
        "results": results,
        "warnings": warnings,
    });
    Ok(Output::Json(serde_json::to_string_pretty(&report).expect("serializable") + "\n"))
}

/// Runs one command on a resolved workspace and returns the `results` value.
pub fn run(ws: &Workspace, command: &str, params: &RunParams) -> Result<Value, RunError> {
    match command {
        "invariants" => Ok(Value::Array(selected(ws, params)?.into_iter().map(|(n, h)| invariants(n, h)).collect())),
        "defect" => Ok(Value::Array(selected(ws, params)?.into_iter().map(|(n, h)| defect(n, h)).collect())),
        "whitehead" => whitehead(ws, params),
        "reduce" => reduce(ws, params),
        "decompose" => decompose(ws, params),
        "corks" => corks(ws, params),
        "render" => {
            let (name, h) = pick_handlebody(ws, params)?;
            Ok(json!({ "name": name, "svg": render_handlebody(h) }))
        }
        other => Err(RunError::Usage(format!("unknown command `{other}`"))),
    }
}

fn split_target(params: &RunParams) -> (Option<&str>, Option<&str>) {
    match params.target.as_deref() {
        None => (None, None),
        Some(t) => match t.split_once('.') {
            Some((a, b)) => (Some(a), Some(b)),
            None => (Some(t), None),
        },
    }
}

fn selected<'a>(ws: &'a Workspace, params: &RunParams) -> Result<Vec<(&'a str, &'a Handlebody)>, RunError> {
    match split_target(params).0 {
        None => Ok(ws.handlebodies.iter().map(|(n, h)| (n.as_str(), h)).collect()),
        Some(_) => pick_handlebody(ws, params).map(|x| vec![x]),
    }
}

fn pick_handlebody<'a>(ws: &'a Workspace, params: &RunParams) -> Result<(&'a str, &'a Handlebody), RunError> {
    match split_target(params).0 {
        Some(name) => ws
            .handlebodies
            .iter()
            .find(|(n, _)| n == name)
            .map(|(n, h)| (n.as_str(), h))
            .ok_or_else(|| RunError::Usage(format!("no handlebody named `{name}`"))),
        None => ws
            .handlebodies
            .first()
            .map(|(n, h)| (n.as_str(), h))
            .ok_or_else(|| RunError::Usage("document declares no handlebody".into())),
    }
}

/// Handlebody and 2-handle index named by the target (first handle by default).
fn pick_handle<'a>(ws: &'a Workspace, params: &RunParams) -> Result<(&'a str, &'a Handlebody, usize), RunError> {
    let (name, h) = pick_handlebody(ws, params)?;
    let i = match split_target(params).1 {
        Some(hn) => h.handle_index(hn).ok_or_else(|| RunError::Usage(format!("`{name}` has no 2-handle `{hn}`")))?,
        None if h.two_handles().is_empty() => return Err(RunError::Usage(format!("`{name}` has no 2-handles"))),
        None => 0,
    };
    Ok((name, h, i))
}

fn render_handlebody(h: &Handlebody) -> String {
    render(h.front(), |id| h.one_handles().get(id.0).cloned().unwrap_or_else(|| id.0.to_string()))
}

fn word_text(h: &Handlebody, f: &FrontDiagram) -> String {
    f.to_text_with(|id| h.one_handles().get(id.0).cloned().unwrap_or_else(|| id.0.to_string()))
}

fn invariants(name: &str, h: &Handlebody) -> Value {
    let hom = h.homology();
    let handles: Vec<Value> = h
        .two_handles()
        .iter()
        .enumerate()
        .map(|(i, fh)| {
            let c = fh.component();
            json!({
                "name": fh.name,
                "framing": fh.framing(),
                "tb": h.front().tb(c).ok(),
                "rot": h.front().rot(c).ok(),
                "word": h.word(i).map(|w| w.display_with(h.one_handles())).ok(),
            })
        })
        .collect();
    json!({
        "name": name,
        "orientation": h.orientation(),
        "one_handles": h.one_handles(),
        "chi": h.euler_characteristic(),
        "h1": hom.h1_string(),
        "h1_rank": hom.h1_rank,
        "h1_torsion": hom.h1_torsion,
        "h2_rank": hom.h2_rank,
        "intersection_form": hom.intersection_form,
        "pi1": h.pi1_presentation().to_string(),
        "handles": handles,
    })
}

fn defect(name: &str, h: &Handlebody) -> Value {
    let cert = h.pc_certificate();
    let verdict = match cert.verdict {
        Verdict::Pc => "PC",
        Verdict::NotYet { .. } => "NOT_YET",
    };
    json!({
        "name": name,
        "verdict": verdict,
        "total_defect": cert.total_defect(),
        "ledger": cert.ledger,
    })
}

fn whitehead(ws: &Workspace, params: &RunParams) -> Result<Value, RunError> {
    let (name, h, i) = pick_handle(ws, params)?;
    let n = params.n.unwrap_or(2);
    let c = h.two_handles()[i].component();
    // the knot alone, keeping its 1-handle ids
    let mut knot = h.front().clone();
    for d in (0..knot.component_count()).rev().filter(|&d| d != c.0) {
        knot = knot.without_component(ComponentId(d)).map_err(|e| module("E-FRONT", e))?;
    }
    let k0 = ComponentId(0);
    let tb_in = knot.tb(k0).map_err(|e| module("E-FRONT", e))?;
    let wm = whitehead_multiple(&knot, FramedComponent::new(k0, tb_in), WhiteheadParams::new(n))
        .map_err(|e| module("E-WHITEHEAD", e))?;
    let out = wm.framed.component;
    let tb_out = wm.front.tb(out).map_err(|e| module("E-FRONT", e))?;
    let handles: Vec<Value> = knot
        .handles_used()
        .into_iter()
        .map(|id: OneHandleId| {
            let m = homology_multiplicity(&wm.front, out, MultiplicityTarget::Handle(id)).ok();
            json!({ "handle": h.one_handles().get(id.0), "multiplicity": m })
        })
        .collect();
    let pattern = homology_multiplicity(&wm.front, out, MultiplicityTarget::PatternTorus(wm.chart)).ok();
    Ok(json!({
        "handlebody": name,
        "handle": h.two_handles()[i].name,
        "n": n,
        "framing_in": tb_in,
        "framing_out": wm.framed.framing,
        "tb_in": tb_in,
        "tb_out": tb_out,
        "tb_difference": tb_out - tb_in,
        "expected_difference": n as i64 - 1,
        "identity_holds": tb_out - tb_in == n as i64 - 1,
        "rot_out": wm.front.rot(out).ok(),
        "pattern_multiplicity": pattern,
        "handle_multiplicities": handles,
        "front": word_text(h, &wm.front),
    }))
}

fn reduce(ws: &Workspace, params: &RunParams) -> Result<Value, RunError> {
    let (name, h, i) = pick_handle(ws, params)?;
    let d = h.defect_handle(i).map_err(|e| module("E-HANDLEBODY", e))?;
    let n = params.n.unwrap_or(d.max(1) as usize);
    let k = match params.k {
        Some(k) => k,
        None => choose_k(3).map_err(decompose_err)?,
    };
    let r = reduce_defect_step(h, i, n, k).map_err(decompose_err)?;
    Ok(json!({
        "handlebody": name,
        "handle": r.handle,
        "n": r.n,
        "k": r.k,
        "tb_before": r.tb_before,
        "tb_after": r.tb_after,
        "defect_before": r.defect_before,
        "defect_after": r.defect_after,
        "carved_one_handle": r.one_handle,
        "positron_handle": r.positron_handle,
        "before": { "invariants": invariants(name, h), "certificate": defect(name, h) },
        "after": { "invariants": invariants(name, &r.handlebody), "certificate": defect(name, &r.handlebody) },
    }))
}

fn decompose(ws: &Workspace, params: &RunParams) -> Result<Value, RunError> {
    let (name, dec) = match split_target(params).0 {
        Some(t) => ws
            .decompositions
            .iter()
            .find(|(n, _)| n == t)
            .ok_or_else(|| RunError::Usage(format!("no decomposition named `{t}`")))?,
        None => ws.decompositions.first().ok_or_else(|| RunError::Usage("document declares no decomposition".into()))?,
    };
    let out = convex_decompose(dec).map_err(decompose_err)?;
    Ok(json!({
        "decomposition": name,
        "moves": out.ledger.entries.len(),
        "totals_before": dec.totals(),
        "totals_after": out.totals(),
        "ledger": out.ledger,
        "gluing": out.gluing,
        "side1": { "invariants": invariants("side1", &out.side1), "certificate": defect("side1", &out.side1) },
        "side2": { "invariants": invariants("side2", &out.side2), "certificate": defect("side2", &out.side2) },
    }))
}

fn corks(ws: &Workspace, params: &RunParams) -> Result<Value, RunError> {
    let find = |t: &str| {
        ws.corks
            .iter()
            .find(|(n, _)| n == t)
            .ok_or_else(|| RunError::Usage(format!("no cork triple named `{t}`")))
    };
    let (a, b) = match params.target.as_deref() {
        Some(t) => match t.split_once(',') {
            Some((x, y)) => (find(x)?, find(y)?),
            None => (find(t)?, find(t)?),
        },
        None => {
            let first = ws.corks.first().ok_or_else(|| RunError::Usage("document declares no cork triple".into()))?;
            (first, ws.corks.get(1).unwrap_or(first))
        }
    };
    let (o1, o2, report) = cork_pseudoconvexify(&a.1, &b.1, params.budget).map_err(decompose_err)?;
    let triple = |label: &str, t: &crate::decompose::CorkTriple| {
        json!({
            "name": label,
            "defect_totals": t.defect_totals(),
            "N": invariants("N", &t.n),
            "A1": invariants("A1", &t.a1),
            "A2": invariants("A2", &t.a2),
            "phi1": t.phi1,
            "phi2": t.phi2,
        })
    };
    Ok(json!({
        "triples": [triple(&a.0, &o1), triple(&b.0, &o2)],
        "audit": report.triples,
    }))
}
