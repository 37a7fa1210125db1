//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Each exported function takes plain strings or numbers and returns a JSON
//! string, so the page needs no generated TypeScript types.

use intdisc::forms::parse_form;
use intdisc::invariants::{compute_invariants, discriminant};
use intdisc::jnr::{classify_exact, eval_exact, Branch};
use intdisc::scalar::{format_q, q_to_f64};
use intdisc::specfun::{gauss_2f1, route_of, Hyp2F1Params};
use intdisc::Q;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn finite(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!(x.to_string())
    }
}

/// Exact invariants and discriminant of a form in the text format.
pub fn invariants_json(text: &str) -> Result<String, String> {
    let f = parse_form(text).map_err(|e| e.to_string())?;
    let inv = compute_invariants(&f).map_err(|e| e.to_string())?;
    let d = discriminant(&inv);
    let values: Vec<Value> = inv
        .values
        .iter()
        .map(|(name, v)| json!({ "name": name, "exact": format_q(v), "approx": finite(q_to_f64(v)) }))
        .collect();
    Ok(json!({
        "case": inv.case.to_string(),
        "invariants": values,
        "D": format_q(&d),
        "singular": d == Q::from_integer(0.into()),
    })
    .to_string())
}

/// Closed-form integral discriminant of a form; `branch` is "1" or "2".
pub fn evaluate_json(text: &str, branch: &str) -> Result<String, String> {
    let b = match branch {
        "1" => Branch::One,
        "2" => Branch::Two,
        other => return Err(format!("unknown branch `{other}`")),
    };
    let f = parse_form(text).map_err(|e| e.to_string())?;
    let v = eval_exact(&f, b).map_err(|e| e.to_string())?;
    let regime = classify_exact(&f).map_err(|e| e.to_string())?.regime;
    Ok(json!({
        "case": v.case.to_string(),
        "branch": v.branch.to_string(),
        "value": finite(v.value),
        "regime": regime.to_string(),
        "near_singular": v.near_singular,
    })
    .to_string())
}

/// ₂F₁(a, b; c; t) with the evaluation route.
pub fn hyp2f1_json(a: f64, b: f64, c: f64, t: f64) -> Result<String, String> {
    let value = gauss_2f1(Hyp2F1Params::new(a, b, c, t)).map_err(|e| e.to_string())?;
    Ok(json!({ "value": finite(value), "route": route_of(t).to_string() }).to_string())
}

#[wasm_bindgen]
pub fn invariants(text: &str) -> Result<String, JsValue> {
    invariants_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn evaluate(text: &str, branch: &str) -> Result<String, JsValue> {
    evaluate_json(text, branch).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn hyp2f1(a: f64, b: f64, c: f64, t: f64) -> Result<String, JsValue> {
    hyp2f1_json(a, b, c, t).map_err(|e| JsValue::from_str(&e))
}
