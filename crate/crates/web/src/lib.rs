//! Browser bindings: family and graph polynomials, rational evaluation and coefficient grids.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::json;
use tutte::engines::{tutte_dc_graph, DEFAULT_BUDGET_NODES};
use tutte::matroid::Graph;
use tutte::{catalog, families, BiPoly, Error};
use wasm_bindgen::prelude::*;

fn err(e: Error) -> String {
    e.to_string()
}

fn positive(v: u32, name: &str) -> Result<usize, String> {
    if v == 0 {
        Err(format!("{name} must be positive"))
    } else {
        Ok(v as usize)
    }
}

/// Names accepted by [`family_polynomial`].
#[wasm_bindgen]
pub fn family_names() -> Vec<String> {
    [
        "uniform",
        "cycle",
        "wheel",
        "whirl",
        "grid2",
        "complete",
        "complete-bipartite",
        "pg",
        "ag",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

/// Tutte polynomial of a named family with parameters `a` and `b`, as text.
///
/// uniform(r=a, n=b), cycle(n=a), wheel(n=a), whirl(n=a), grid2(n=a), complete(n=a),
/// complete-bipartite(a, b), pg(dim=a, q=b), ag(dim=a, q=b).
#[wasm_bindgen]
pub fn family_polynomial(family: &str, a: u32, b: u32) -> Result<String, String> {
    let t = match family {
        "uniform" => families::uniform(a as usize, positive(b, "n")?),
        "cycle" => families::cycle(positive(a, "n")?),
        "wheel" => families::wheel(positive(a, "n")?),
        "whirl" => families::whirl(positive(a, "n")?),
        "grid2" => families::grid2(positive(a, "n")?),
        "complete" => families::complete_graph(positive(a, "n")?),
        "complete-bipartite" => families::complete_bipartite(positive(a, "n")?, positive(b, "m")?),
        "pg" => families::projective(a, b as u64),
        "ag" => families::affine(a, b as u64),
        other => return Err(format!("unknown family {other:?}")),
    }
    .map_err(err)?;
    Ok(t.to_text())
}

/// Tutte polynomial of a graph given as one `u v` edge per line.
#[wasm_bindgen]
pub fn graph_polynomial(edges: &str) -> Result<String, String> {
    let mut list = Vec::new();
    for (i, line) in edges.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ends: Vec<usize> = line
            .split(|c: char| c.is_whitespace() || c == ',' || c == '-')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| format!("line {}: bad vertex {t:?}", i + 1)))
            .collect::<Result<_, _>>()?;
        match ends[..] {
            [u, v] => list.push((u, v)),
            _ => return Err(format!("line {}: expected two vertices", i + 1)),
        }
    }
    let vertices = list.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let g = Graph::new(vertices, list).map_err(err)?;
    Ok(tutte_dc_graph(&g, DEFAULT_BUDGET_NODES).map_err(err)?.to_text())
}

/// Printed polynomial of a catalog entry.
#[wasm_bindgen]
pub fn catalog_polynomial(name: &str) -> Result<String, String> {
    Ok(catalog::lookup(name).map_err(err)?.ground_truth.to_text())
}

/// Names of all catalog entries.
#[wasm_bindgen]
pub fn catalog_names() -> Vec<String> {
    catalog::names().iter().map(|s| s.to_string()).collect()
}

fn parse_poly(poly: &str) -> Result<BiPoly, String> {
    poly.parse::<BiPoly>().map_err(err)
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.trim().parse().map_err(|_| format!("invalid rational {s:?}"))
}

/// Exact value of `poly` at rationals `x` and `y` written as integers or `p/q`.
#[wasm_bindgen]
pub fn evaluate(poly: &str, x: &str, y: &str) -> Result<String, String> {
    let t = parse_poly(poly)?;
    Ok(t.eval(&parse_rational(x)?, &parse_rational(y)?).to_string())
}

/// Coefficient grid as JSON: `{"rows": dx+1, "cols": dy+1, "coefficients": [[...]], "log": [[...]]}`.
/// Row i, column j holds the coefficient of x^i y^j as a decimal string; `log` holds log10(1 + c).
#[wasm_bindgen]
pub fn coefficient_grid(poly: &str) -> Result<String, String> {
    let t = parse_poly(poly)?;
    let (rows, cols) = (t.x_degree() + 1, t.y_degree() + 1);
    let mut coeffs = Vec::new();
    let mut logs = Vec::new();
    for i in 0..rows {
        let row: Vec<_> = (0..cols).map(|j| t.coeff(i, j)).collect();
        logs.push(
            row.iter()
                .map(|c| (1.0 + c.to_f64().unwrap_or(f64::MAX).abs()).log10())
                .collect::<Vec<f64>>(),
        );
        coeffs.push(row.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    Ok(json!({ "rows": rows, "cols": cols, "coefficients": coeffs, "log": logs }).to_string())
}
