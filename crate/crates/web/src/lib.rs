//! JavaScript bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string, either `{"ok": ...}` or
//! `{"error": "..."}`, so the same functions run unchanged in native tests.

use braidcover::surface::{table, SurfaceData};
use braidcover::verify::{run_suite, Check};
use braidcover::{BraidWord, Params, Representation, Suite};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Keeps a stray click from freezing the tab.
const LETTER_BUDGET: usize = 200_000;

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
enum Reply<T> {
    Ok(T),
    Error(String),
}

fn reply<T: Serialize>(result: braidcover::Result<T>) -> String {
    let r = match result {
        Ok(v) => Reply::Ok(v),
        Err(e) => Reply::Error(e.to_string()),
    };
    serde_json::to_string(&r).expect("replies serialize")
}

fn params(d: u32, n: u32) -> braidcover::Result<Params> {
    Ok(Params::new(d as usize, n as usize)?.with_letter_budget(LETTER_BUDGET))
}

/// Surface data for `n = 1..=n_max`.
#[wasm_bindgen]
pub fn surface_table(d: u32, n_max: u32) -> String {
    reply::<Vec<SurfaceData>>(table(d as u64, n_max as u64))
}

#[derive(Serialize)]
pub struct Evaluation {
    pub generators: Vec<String>,
    pub images: Vec<String>,
    /// Row `s` holds the exponent sums of the image of generator `s`.
    pub matrix: Vec<Vec<i64>>,
    pub determinant: String,
    pub longest_image: usize,
}

pub fn evaluate(d: u32, n: u32, word: &str) -> braidcover::Result<Evaluation> {
    let q = params(d, n)?;
    let w = BraidWord::parse(q, word)?;
    let f = Representation::new(q)?.evaluate(&w)?;
    let m = f.abelianize();
    Ok(Evaluation {
        generators: f.images().map(|(s, _)| s.to_string()).collect(),
        images: f.images().map(|(_, w)| w.to_string()).collect(),
        determinant: m.determinant().to_string(),
        matrix: m.rows(),
        longest_image: f.images().map(|(_, w)| w.len()).max().unwrap_or(0),
    })
}

/// Automorphism and abelianized matrix of a braid word such as `"1 2 -1"`.
#[wasm_bindgen]
pub fn evaluate_braid(d: u32, n: u32, word: &str) -> String {
    reply(evaluate(d, n, word))
}

#[derive(Serialize)]
pub struct Verification {
    pub passed: usize,
    pub total: usize,
    pub checks: Vec<Check>,
}

pub fn verify(d: u32, n: u32, suite: &str) -> braidcover::Result<Verification> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(params(d, n)?, suite);
    Ok(Verification {
        passed: report.checks.iter().filter(|c| c.passed).count(),
        total: report.checks.len(),
        checks: report.checks,
    })
}

/// Runs one of `relations`, `dehn`, `lift`, `cross`, `all`.
#[wasm_bindgen]
pub fn verify_suite(d: u32, n: u32, suite: &str) -> String {
    reply(verify(d, n, suite))
}
