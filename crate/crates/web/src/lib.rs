//! Browser bindings for the demo page in `www/`. Every call takes database
//! text in the usual `code <n> <k>` format and returns a JSON string.

use fixglue::codes::{fixed_subcode, min_distance, pi_project, weight_enumerator, DistanceMode};
use fixglue::io::{parse_db_str, ReportDoc};
use fixglue::perm::Permutation;
use fixglue::pipeline::{run_pipeline, PipelineConfig};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Distribution {
    name: String,
    n: usize,
    k: usize,
    d: Option<usize>,
    self_dual: bool,
    weights: Vec<u64>,
}

#[derive(Serialize)]
struct Projection {
    name: String,
    automorphism: bool,
    fixed_dim: usize,
    projection: Vec<String>,
    projection_self_dual: bool,
}

fn name_of(i: usize, name: &Option<String>) -> String {
    name.clone().unwrap_or_else(|| format!("#{}", i + 1))
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

/// Weight distribution and minimum distance of every code.
pub fn weight_distribution_json(db: &str) -> Result<String, String> {
    let recs = parse_db_str(db).map_err(|e| e.to_string())?;
    let out = recs
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let we = weight_enumerator(&r.code).map_err(|e| e.to_string())?;
            let d = if r.code.dim() == 0 {
                None
            } else {
                Some(min_distance(&r.code, DistanceMode::Auto, None).map_err(|e| e.to_string())?)
            };
            Ok(Distribution {
                name: name_of(i, &r.name),
                n: r.code.len(),
                k: r.code.dim(),
                d,
                self_dual: r.code.is_self_dual(),
                weights: we.counts().to_vec(),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json(&out))
}

/// Fixed subcode of `perm` (1-based cycles) and, for a fixed-point-free
/// involution, its projection onto one coordinate per orbit.
pub fn fixed_projection_json(db: &str, perm: &str) -> Result<String, String> {
    let recs = parse_db_str(db).map_err(|e| e.to_string())?;
    let out = recs
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let sigma = Permutation::parse(perm, r.code.len()).map_err(|e| e.to_string())?;
            let automorphism = r.code.is_automorphism(&sigma);
            let f = fixed_subcode(&r.code, &sigma).map_err(|e| e.to_string())?;
            let (projection, projection_self_dual) = if sigma.is_involution() && sigma.is_fixed_point_free() {
                let p = pi_project(&f, &sigma).map_err(|e| e.to_string())?;
                (p.generator().rows().iter().map(|x| x.to_string()).collect(), p.is_self_dual())
            } else {
                (Vec::new(), false)
            };
            Ok(Projection {
                name: name_of(i, &r.name),
                automorphism,
                fixed_dim: f.dim(),
                projection,
                projection_self_dual,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json(&out))
}

/// The full gluing search; the database holds codes of length `n / 2`.
pub fn glue_search_json(db: &str, n: usize, target_d: usize) -> Result<String, String> {
    let codes: Vec<_> = parse_db_str(db)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|r| r.code)
        .collect();
    let run = run_pipeline(&codes, &PipelineConfig::new(n, target_d)).map_err(|e| e.to_string())?;
    Ok(ReportDoc::new(&run, 1, None).to_json())
}

#[wasm_bindgen]
pub fn weight_distribution(db: &str) -> Result<String, JsError> {
    weight_distribution_json(db).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn fixed_projection(db: &str, perm: &str) -> Result<String, JsError> {
    fixed_projection_json(db, perm).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn glue_search(db: &str, n: usize, target_d: usize) -> Result<String, JsError> {
    glue_search_json(db, n, target_d).map_err(|e| JsError::new(&e))
}
