//! Browser bindings. Every export returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use serde::Serialize;
use star_anagrams::numtheory::{modular_inverse, perfect_path, valid_perfect_edge_lengths};
use star_anagrams::render::{render_polygon, FigureSpec, RenderOptions};
use star_anagrams::shapes::{enumerate_star_shapes, representative_path};
use star_anagrams::{classify_anagram, AnagramPair, Path, StarClass};
use wasm_bindgen::prelude::*;

/// Largest census the page will run; larger N blocks the tab for too long.
pub const MAX_DEMO_CENSUS: usize = 9;
/// Paths explored per classification before giving up.
pub const DEMO_CAP: u64 = 200_000;

#[derive(Serialize)]
struct Failure {
    error: String,
}

#[derive(Serialize)]
struct ClassifyResult {
    first: String,
    second: String,
    class: StarClass,
    summary: String,
    o_rot: Option<u32>,
    o_ref: Option<u32>,
    perfect_step: Option<i32>,
    path: Vec<usize>,
    steps: Vec<i32>,
    svg: String,
}

#[derive(Serialize)]
struct PerfectResult {
    n: usize,
    step: i32,
    inverse_step: i32,
    valid_edge_lengths: Vec<u32>,
    path: Vec<usize>,
    svg: String,
}

#[derive(Serialize)]
struct CensusShape {
    key: String,
    class: StarClass,
    o_rot: u32,
    o_ref: u32,
    svg: String,
}

#[derive(Serialize)]
struct CensusResult {
    n: usize,
    asymmetric: usize,
    symmetric: usize,
    perfect: usize,
    total: usize,
    shapes: Vec<CensusShape>,
}

fn to_json<T: Serialize>(result: Result<T, String>) -> String {
    let out = match result {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&Failure { error }),
    };
    out.unwrap_or_else(|e| format!("{{\"error\":\"{e}\"}}"))
}

/// Letters `A, B, ...` for a figure that has no words of its own.
fn synthetic_pair(path: &Path) -> Result<AnagramPair, String> {
    if path.len() > 26 {
        return Err(format!(
            "at most 26 points can be labelled, got {}",
            path.len()
        ));
    }
    let first: String = (0..path.len()).map(|i| (b'A' + i as u8) as char).collect();
    let second: String = path
        .nodes()
        .iter()
        .map(|&i| (b'A' + i as u8) as char)
        .collect();
    AnagramPair::new(first, second).map_err(|e| e.to_string())
}

fn figure(
    pair: AnagramPair,
    path: Path,
    caption: Option<String>,
    steps: bool,
) -> Result<String, String> {
    let spec = FigureSpec::new(
        pair,
        path,
        RenderOptions {
            show_steps: steps,
            caption,
            ..RenderOptions::default()
        },
    )
    .map_err(|e| e.to_string())?;
    Ok(render_polygon(&spec))
}

/// Classifies `first -> second` and draws the selected path.
#[wasm_bindgen]
pub fn classify(first: &str, second: &str) -> String {
    to_json((|| {
        let pair = AnagramPair::parse(first, second).map_err(|e| e.to_string())?;
        let c = classify_anagram(&pair, Some(DEMO_CAP)).map_err(|e| e.to_string())?;
        let svg = figure(pair.clone(), c.path.clone(), None, true)?;
        Ok(ClassifyResult {
            first: pair.first().to_string(),
            second: pair.second().to_string(),
            class: c.class,
            summary: c.to_string(),
            o_rot: c.o_rot(),
            o_ref: c.o_ref(),
            perfect_step: c.perfect_step,
            steps: c.path.steps().into_vec(),
            path: c.path.into_nodes(),
            svg,
        })
    })())
}

/// The regular star `{n/|step|}` drawn from node 0.
#[wasm_bindgen]
pub fn perfect_star(n: usize, step: i32) -> String {
    to_json((|| {
        let path = perfect_path(n, step, 0).map_err(|e| e.to_string())?;
        let inverse_step = modular_inverse(step, n).map_err(|e| e.to_string())?;
        let caption = format!("{{{n}/{}}}", step.unsigned_abs());
        let svg = figure(synthetic_pair(&path)?, path.clone(), Some(caption), true)?;
        Ok(PerfectResult {
            n,
            step,
            inverse_step,
            valid_edge_lengths: valid_perfect_edge_lengths(n),
            path: path.into_nodes(),
            svg,
        })
    })())
}

/// Every star polygon on `n` points, one small figure per shape.
#[wasm_bindgen]
pub fn shape_census(n: usize) -> String {
    to_json((|| {
        if n > MAX_DEMO_CENSUS {
            return Err(format!("the demo stops at N = {MAX_DEMO_CENSUS}"));
        }
        let census = enumerate_star_shapes(n).map_err(|e| e.to_string())?;
        let (asymmetric, symmetric, perfect, total) = census.row();
        let mut shapes = Vec::with_capacity(total);
        for shape in census.shapes {
            let path = representative_path(&shape.key).ok_or("shape cannot be traced")?;
            let svg = figure(synthetic_pair(&path)?, path, None, false)?;
            shapes.push(CensusShape {
                key: shape.key.to_key_string(),
                class: shape.class,
                o_rot: shape.symmetry.rotational,
                o_ref: shape.symmetry.reflective,
                svg,
            });
        }
        // most symmetric first
        shapes.sort_by(|a, b| {
            b.class
                .cmp(&a.class)
                .then((b.o_rot + b.o_ref).cmp(&(a.o_rot + a.o_ref)))
        });
        Ok(CensusResult {
            n,
            asymmetric,
            symmetric,
            perfect,
            total,
            shapes,
        })
    })())
}
