//! Browser bindings: compatibility degree, cluster expansion and the rank-3 fan picture.

use affine_clusters::cartan::catalog_context;
use affine_clusters::cluster;
use affine_clusters::compat;
use affine_clusters::coxeter::CoxeterContext;
use affine_clusters::linalg::{self, fmt_q, QVec};
use affine_clusters::svg;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn context(label: &str, word: &str) -> Result<CoxeterContext, String> {
    let (ctx, default_word) = catalog_context(label).map_err(|e| e.to_string())?;
    let word = if word.trim().is_empty() {
        default_word
    } else {
        word.split(',')
            .map(|x| match x.trim().parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(format!("bad Coxeter word '{word}'")),
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    CoxeterContext::build(&ctx, &word).map_err(|e| e.to_string())
}

fn vector(s: &str, n: usize) -> Result<QVec, String> {
    let v = linalg::parse_vec(s).map_err(|e| e.to_string())?;
    if v.len() != n {
        return Err(format!("vector has length {}, expected {n}", v.len()));
    }
    Ok(v)
}

/// JSON `{degree, branch, forward, backward}`.
pub fn compat_json(label: &str, word: &str, alpha: &str, beta: &str) -> Result<String, String> {
    let cc = context(label, word)?;
    let (a, b) = (vector(alpha, cc.n())?, vector(beta, cc.n())?);
    let v = compat::compatibility_degree(&cc, &a, &b).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&v).expect("serializable"))
}

/// JSON `{text, terms: [{root, multiplicity}]}`.
pub fn expand_json(label: &str, word: &str, v: &str) -> Result<String, String> {
    let cc = context(label, word)?;
    let v = vector(v, cc.n())?;
    let e = cluster::cluster_expansion(&cc, &v).map_err(|e| e.to_string())?;
    let terms: Vec<_> = e.iter().rev().map(|(r, m)| json!({ "root": linalg::fmt_vec(r), "multiplicity": fmt_q(m) })).collect();
    Ok(json!({ "text": cluster::format_expansion(&e), "terms": terms }).to_string())
}

pub fn fan_svg_text(label: &str, word: &str, depth: usize) -> Result<String, String> {
    let cc = context(label, word)?;
    let set = cluster::enumerate_clusters(&cc, depth.min(8)).map_err(|e| e.to_string())?;
    svg::render_fan_svg(&cc, &set, &svg::Projection::default()).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn compat(label: &str, word: &str, alpha: &str, beta: &str) -> Result<String, JsError> {
    compat_json(label, word, alpha, beta).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn expand(label: &str, word: &str, v: &str) -> Result<String, JsError> {
    expand_json(label, word, v).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn fan_svg(label: &str, word: &str, depth: usize) -> Result<String, JsError> {
    fan_svg_text(label, word, depth).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bindings() {
        let c = compat_json("D3(2)", "1,2,3", "2,1,0", "0,1,0").unwrap();
        assert!(c.contains("\"degree\":\"1\""));
        let e = expand_json("A1(1)", "", "1,-1").unwrap();
        assert!(e.contains("1·(1,0) + 1·(0,-1)"));
        assert!(fan_svg_text("D3(2)", "", 3).unwrap().ends_with("</svg>\n"));
        assert!(fan_svg_text("A1(1)", "", 3).is_err());
        assert!(expand_json("A1(1)", "", "1").is_err());
    }
}
