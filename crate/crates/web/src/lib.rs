//! Browser bindings for the demo page in `www/`.
//!
//! Graphs cross the boundary as an order `n` plus a flat edge array
//! `[u0, v0, u1, v1, ...]`; results come back as JSON strings. Failures are
//! reported as `{"error": "..."}` so the page only ever parses JSON.

use domkit::constructions::{certify, ConstructionTheorem};
use domkit::families::{generate, FamilySpec};
use domkit::graph::{graph6_decode, parse_edge_list};
use domkit::solvers::{compute, ParameterKind};
use domkit::verifier::check_all;
use domkit::Graph;
use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

#[derive(Serialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
    graph6: String,
}

fn graph_doc(g: &Graph) -> GraphDoc {
    GraphDoc {
        n: g.order(),
        edges: g.edges(),
        graph6: g.to_graph6(),
    }
}

fn build(n: usize, edges: &[u32]) -> Result<Graph, String> {
    if !edges.len().is_multiple_of(2) {
        return Err("edge array has odd length".into());
    }
    let pairs: Vec<(usize, usize)> = edges
        .chunks(2)
        .map(|p| (p[0] as usize, p[1] as usize))
        .collect();
    Graph::from_edge_list(n, &pairs).map_err(|e| e.to_string())
}

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// `spec` is a family description such as `{"family":"h","t":4,"r":2}`.
pub fn family_graph(spec: &str) -> String {
    respond((|| {
        let spec: FamilySpec = serde_json::from_str(spec).map_err(|e| e.to_string())?;
        let (g, expected) = generate(spec).map_err(|e| e.to_string())?;
        Ok(json!({ "name": spec.to_string(), "graph": graph_doc(&g), "expected": expected }))
    })())
}

/// Graph6 or edge-list text; `#` comment lines are ignored.
pub fn parse_graph(text: &str) -> String {
    respond((|| {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or("no graph in input")?;
        let g = if first.starts_with(|c: char| c.is_ascii_digit()) {
            parse_edge_list(text)
        } else {
            graph6_decode(first)
        }
        .map_err(|e| e.to_string())?;
        Ok(json!({ "graph": graph_doc(&g) }))
    })())
}

/// Value and lexicographically least witness of one parameter
/// (`gamma`, `gamma2`, `x2`, `gammat`, `i`, `alpha`, `beta`, ...).
pub fn compute_parameter(n: usize, edges: &[u32], param: &str) -> String {
    respond((|| {
        let g = build(n, edges)?;
        let kind: ParameterKind = param.parse()?;
        let r = compute(kind, &g).map_err(|e| e.to_string())?;
        Ok(json!({
            "parameter": kind,
            "symbol": kind.to_string(),
            "value": r.value,
            "witness": r.witness,
        }))
    })())
}

/// Runs one construction (`alpha-gamma`, `beta-gamma`, `gamma2-gamma`,
/// `total-gamma`) and validates the resulting set.
pub fn certify_graph(n: usize, edges: &[u32], theorem: &str) -> String {
    respond((|| {
        let g = build(n, edges)?;
        let theorem: ConstructionTheorem = theorem.parse()?;
        let cert = certify(theorem, &g).map_err(|e| e.to_string())?;
        let verdict = cert.validate(&g).map_err(|e| e.to_string());
        let mut doc = serde_json::to_value(&cert).map_err(|e| e.to_string())?;
        doc["valid"] = json!(verdict.is_ok());
        if let Err(e) = verdict {
            doc["failure"] = json!(e);
        }
        Ok(doc)
    })())
}

/// Every bound evaluated on the graph.
pub fn check_bounds(n: usize, edges: &[u32]) -> String {
    respond((|| {
        let g = build(n, edges)?;
        let checks = check_all(&g).map_err(|e| e.to_string())?;
        let rows: Vec<Value> = checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "statement": c.id.statement(),
                    "applicable": c.applicable,
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                    "tight": c.tight,
                    "violated": c.violated(),
                })
            })
            .collect();
        Ok(json!({ "checks": rows }))
    })())
}

#[wasm_bindgen(js_name = familyGraph)]
pub fn family_graph_js(spec: &str) -> String {
    family_graph(spec)
}

#[wasm_bindgen(js_name = parseGraph)]
pub fn parse_graph_js(text: &str) -> String {
    parse_graph(text)
}

#[wasm_bindgen(js_name = computeParameter)]
pub fn compute_parameter_js(n: usize, edges: &[u32], param: &str) -> String {
    compute_parameter(n, edges, param)
}

#[wasm_bindgen(js_name = certifyGraph)]
pub fn certify_graph_js(n: usize, edges: &[u32], theorem: &str) -> String {
    certify_graph(n, edges, theorem)
}

#[wasm_bindgen(js_name = checkBounds)]
pub fn check_bounds_js(n: usize, edges: &[u32]) -> String {
    check_bounds(n, edges)
}
