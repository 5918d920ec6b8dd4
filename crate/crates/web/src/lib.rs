//! wasm-bindgen bindings behind `www/index.html`. Every export returns a
//! JSON string, or throws a string error.

use edgeideal::constructions::{check_prediction, Family};
use edgeideal::enumerate::{scan, ScanOptions};
use edgeideal::{Field, Graph, InvariantReport, Settings};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest `n` the page may enumerate; n = 7 already takes a moment.
pub const MAX_TABLE_N: usize = 7;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GraphView {
    graph6: String,
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphView {
    fn of(g: &Graph) -> Self {
        GraphView { graph6: g.to_graph6(), n: g.vertex_count(), edges: g.edges().collect() }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct InvariantsView {
    graph: GraphView,
    report: InvariantReport,
    hilbert: String,
    betti: String,
}

fn to_json(value: &impl Serialize) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn invariants_json(graph6: &str, field: &str) -> Result<String, String> {
    let g = Graph::from_graph6(graph6.trim()).map_err(|e| e.to_string())?;
    let field: Field = field.parse().map_err(|e: edgeideal::Error| e.to_string())?;
    let report = InvariantReport::compute(&g, &Settings::with_field(field)).map_err(|e| e.to_string())?;
    to_json(&InvariantsView {
        graph: GraphView::of(&g),
        hilbert: report.hilbert.to_string(),
        betti: report.betti.to_string(),
        report,
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ConstructView {
    graph: GraphView,
    expected_reg: Option<usize>,
    expected_deg_h: Option<usize>,
    expected_series: Option<String>,
    reg: usize,
    deg_h: usize,
    series: String,
    passed: bool,
}

fn family(name: &str, a: usize, b: usize) -> Result<Family, String> {
    Ok(match name {
        "kdd" => Family::Kdd { d: a },
        "star" => Family::Star { n: a },
        "matching" => Family::Matching { m: a },
        "ribbon" => Family::Ribbon,
        "gr" => Family::GFamily { r: a },
        "realize" => Family::Realize { r: a, d: b },
        other => return Err(format!("unknown family {other:?}")),
    })
}

/// Builds a family member and checks it against its expected invariants.
/// `a` and `b` are the family's parameters in CLI order (`realize` takes
/// `r` then `d`; the others use `a` only).
pub fn construct_json(name: &str, a: usize, b: usize) -> Result<String, String> {
    let fam = family(name, a, b)?;
    let g = fam.build().map_err(|e| e.to_string())?;
    let prediction = fam.prediction().map_err(|e| e.to_string())?;
    let settings = Settings::default();
    let check = check_prediction(&g, &prediction, &settings).map_err(|e| e.to_string())?;
    to_json(&ConstructView {
        graph: GraphView::of(&g),
        expected_reg: prediction.reg,
        expected_deg_h: prediction.deg_h,
        expected_series: prediction.series.as_ref().map(ToString::to_string),
        reg: check.reg,
        deg_h: check.deg_h,
        series: check.series.to_string(),
        passed: check.passed(),
    })
}

pub fn table_json(n: usize, connected_only: bool) -> Result<String, String> {
    if n > MAX_TABLE_N {
        return Err(format!("the page enumerates up to n = {MAX_TABLE_N}; use the CLI beyond that"));
    }
    let opts = ScanOptions { connected_only, ..ScanOptions::default() };
    let table = scan(n, &opts, &|_, _| {}).map_err(|e| e.to_string())?;
    to_json(&table)
}

#[wasm_bindgen]
pub fn invariants(graph6: &str, field: &str) -> Result<String, JsValue> {
    invariants_json(graph6, field).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn construct(family: &str, a: u32, b: u32) -> Result<String, JsValue> {
    construct_json(family, a as usize, b as usize).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = realizabilityTable)]
pub fn realizability_table(n: u32, connected_only: bool) -> Result<String, JsValue> {
    table_json(n as usize, connected_only).map_err(|e| JsValue::from_str(&e))
}
