//! Browser bindings for the graph explorer page in `www/`.
//!
//! Three operations are exposed: render an error set's avoidance graph,
//! overlay a code's LUC graph with the avoidance graph (plus the full
//! verdict report), and search for a code correcting the error set. Inputs
//! use the same text formats as the CLI; outputs are JSON consumed by the
//! page's vanilla-JS renderer.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use reflexqec::graph::{build_avoidance_graph, build_luc_graph, QeccGraph};
use reflexqec::io;
use reflexqec::reflexive::build_codewords;
use reflexqec::search::{heuristic_search, RequireRule, SearchConfig};
use reflexqec::verify::{
    check_corollary, check_general_theorem, check_knill_symbolic, check_main_theorem, kl_numeric,
};
use reflexqec::{Error, Result};

/// Vertex cap for interactive rendering.
const DEMO_VERTEX_CAP: u64 = 1 << 10;

#[derive(Serialize)]
struct GraphJson {
    d: u64,
    n: usize,
    labels: Vec<String>,
    edges: Vec<(u64, u64)>,
    loops: Vec<u64>,
}

#[derive(Serialize)]
struct OverlayJson {
    d: u64,
    n: usize,
    k: usize,
    labels: Vec<String>,
    luc_edges: Vec<(u64, u64)>,
    luc_loops: Vec<u64>,
    avoid_edges: Vec<(u64, u64)>,
    avoid_loops: Vec<u64>,
    common_edges: Vec<(u64, u64)>,
    common_loops: Vec<u64>,
    report: String,
}

fn labels_of(g: &QeccGraph) -> Result<Vec<String>> {
    if g.vertex_count() > DEMO_VERTEX_CAP {
        return Err(Error::DimensionCap {
            what: "demo vertices",
            needed: g.vertex_count(),
            cap: DEMO_VERTEX_CAP,
        });
    }
    Ok((0..g.vertex_count())
        .map(|ix| {
            // base-d digits, most significant first
            let mut digits = vec![0u64; g.n()];
            let mut v = ix;
            for d in digits.iter_mut().rev() {
                *d = v % g.d();
                v /= g.d();
            }
            digits
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect())
}

fn graph_json(g: &QeccGraph) -> Result<String> {
    let out = GraphJson {
        d: g.d(),
        n: g.n(),
        labels: labels_of(g)?,
        edges: g.simple_edges().iter().copied().collect(),
        loops: g.loops().iter().copied().collect(),
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

pub fn avoidance_graph_json(error_text: &str) -> Result<String> {
    let parsed = io::parse_error_set_file(error_text)?;
    let g = build_avoidance_graph(&parsed.field, &parsed.errors)?;
    graph_json(&g)
}

pub fn luc_overlay_json(code_text: &str, error_text: &str) -> Result<String> {
    let code = io::parse_code_file(code_text)?;
    let errors = io::parse_error_set_file(error_text)?;
    if code.field != errors.field || code.n != errors.n {
        return Err(Error::ConsistencyError(
            "code and error inputs declare different spaces".into(),
        ));
    }
    let f = &code.field;
    let luc_graph = build_luc_graph(f, &code.luc)?;
    let avoid = build_avoidance_graph(f, &errors.errors)?;
    let common = luc_graph.edge_intersection(&avoid)?;

    let mut verdicts = vec![
        check_corollary(f, &code.luc, &errors.errors)?,
        check_main_theorem(f, &code.luc, &errors.errors)?,
        check_general_theorem(f, &code.luc, &errors.errors)?,
        check_knill_symbolic(f, &code.luc, &errors.errors)?,
    ];
    if (f.order() as u128).pow(code.n as u32) <= 1 << 10 {
        let built = build_codewords(f, &code.luc)?;
        verdicts.push(kl_numeric(f, &built, &errors.errors, None)?);
    }

    let out = OverlayJson {
        d: f.order(),
        n: code.n,
        k: code.luc.logical_dimension(),
        labels: labels_of(&luc_graph)?,
        luc_edges: luc_graph.simple_edges().iter().copied().collect(),
        luc_loops: luc_graph.loops().iter().copied().collect(),
        avoid_edges: avoid.simple_edges().iter().copied().collect(),
        avoid_loops: avoid.loops().iter().copied().collect(),
        common_edges: common.simple_edges().iter().copied().collect(),
        common_loops: common.loops().iter().copied().collect(),
        report: io::format_report(&verdicts),
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

pub fn search_code_text(error_text: &str, rule: &str) -> Result<String> {
    let parsed = io::parse_error_set_file(error_text)?;
    let require = match rule {
        "corollary" => RequireRule::Corollary,
        "main" => RequireRule::MainTheorem,
        "general" => RequireRule::GeneralTheorem,
        other => {
            return Err(Error::DomainError(format!(
                "unknown rule {other:?}; expected corollary, main, or general"
            )))
        }
    };
    let result = heuristic_search(
        &parsed.field,
        &parsed.errors,
        &SearchConfig::greedy(require),
    )?;
    let mut comments = vec![format!("search result: k={} rule={rule}", result.k)];
    comments.extend(result.trace.iter().cloned());
    Ok(io::format_code_file(&parsed.field, &result.luc, &comments))
}

fn to_js<T>(r: Result<T>) -> std::result::Result<T, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

/// JSON for the avoidance graph of an error-set file.
#[wasm_bindgen]
pub fn avoidance_graph(error_text: &str) -> std::result::Result<String, JsValue> {
    to_js(avoidance_graph_json(error_text))
}

/// JSON overlay of a code's LUC graph with an error set's avoidance graph,
/// including the verdict report.
#[wasm_bindgen]
pub fn luc_overlay(code_text: &str, error_text: &str) -> std::result::Result<String, JsValue> {
    to_js(luc_overlay_json(code_text, error_text))
}

/// Run the heuristic search and return the resulting code description file.
#[wasm_bindgen]
pub fn search_code(error_text: &str, rule: &str) -> std::result::Result<String, JsValue> {
    to_js(search_code_text(error_text, rule))
}
