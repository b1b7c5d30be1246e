//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export takes a complex as text (JSON, line format or a family
//! literal such as `cycle:6`) and returns a JSON string, or throws a string
//! error. The `*_json` functions hold the logic and are plain Rust.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use nf_core::families::{knm, knm_dimension_formula, knm_facets_closed_form, BlockSplit};
use nf_core::format::{parse_complex, to_line, ComplexDocument};
use nf_core::orbit::{orbit_trace_with, OrbitConfig};
use nf_core::{literal, minimal_vertex_covers, nf_step, SimplicialComplex};

/// Orbits shown in the page are cut off here.
pub const MAX_DEMO_STEPS: u64 = 2000;

fn load(input: &str) -> Result<SimplicialComplex, String> {
    let input = input.trim();
    if let Some(result) = literal::parse_family(input) {
        return result.map_err(|e| e.to_string());
    }
    parse_complex(input).map(|(c, _)| c).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct StepView {
    input: String,
    covers: Vec<String>,
    output: String,
    output_json: ComplexDocument,
    dim_before: i64,
    dim_after: i64,
}

pub fn step_json(input: &str) -> Result<String, String> {
    let c = load(input)?;
    let covers = if c.is_empty_face() {
        Vec::new()
    } else {
        minimal_vertex_covers(&c).map_err(|e| e.to_string())?.ideal_components()
    };
    let next = nf_step(&c);
    let view = StepView {
        input: to_line(&c),
        covers,
        output: to_line(&next),
        output_json: ComplexDocument::from_complex(&next),
        dim_before: c.dimension(),
        dim_after: next.dimension(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct OrbitView {
    n: usize,
    nf_number: Option<u64>,
    period: Option<u64>,
    dims: Vec<i64>,
    facet_counts: Vec<usize>,
    iso: Vec<bool>,
    complexes: Vec<String>,
}

pub fn orbit_json(input: &str, limit: u64) -> Result<String, String> {
    let c = load(input)?;
    let limit = limit.clamp(1, MAX_DEMO_STEPS);
    let trace = orbit_trace_with(&c, limit, &OrbitConfig::default());
    let view = OrbitView {
        n: c.n(),
        nf_number: trace.nf_number,
        period: trace.period,
        dims: trace.dimensions(),
        facet_counts: trace.steps.iter().map(|s| s.complex.facet_count()).collect(),
        iso: trace.steps.iter().map(|s| s.isomorphic_to_start).collect(),
        complexes: trace.steps.iter().map(|s| s.complex.to_string()).collect(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct KnmRow {
    k: usize,
    dim_iterated: i64,
    dim_formula: Option<i64>,
    facets: usize,
    closed_form_matches: bool,
}

/// Iterated orbit of `K_n ⊔ K_m` next to the closed-form facets and the
/// dimension formula, one row per `k` in `0..=n+m+2`. Blocks are ordered
/// so the smaller one comes first.
pub fn knm_json(n: usize, m: usize) -> Result<String, String> {
    let (lo, hi) = (n.min(m), n.max(m));
    if lo < 2 || (lo, hi) == (2, 2) || hi > 8 {
        return Err("need 2 <= n, m <= 8 and (n,m) != (2,2)".into());
    }
    let split = BlockSplit::new(lo, hi).map_err(|e| e.to_string())?;
    let mut cur = knm(lo, hi).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for k in 0..=lo + hi + 2 {
        let closed = knm_facets_closed_form(split, k).map_err(|e| e.to_string())?;
        rows.push(KnmRow {
            k,
            dim_iterated: cur.dimension(),
            dim_formula: knm_dimension_formula(split, k).ok(),
            facets: cur.facet_count(),
            closed_form_matches: closed == cur,
        });
        cur = nf_step(&cur);
    }
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn step(input: &str) -> Result<String, JsValue> {
    step_json(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn orbit(input: &str, limit: u32) -> Result<String, JsValue> {
    orbit_json(input, u64::from(limit)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn knm_table(n: u32, m: u32) -> Result<String, JsValue> {
    knm_json(n as usize, m as usize).map_err(|e| JsValue::from_str(&e))
}
