//! Rank-3 fan pictures: cones meet the unit sphere, which is projected stereographically
//! from the direction of δ, so δ sits at infinity.

use std::fmt::Write as _;

use crate::almost_positive;
use crate::cluster::ClusterSet;
use crate::coxeter::CoxeterContext;
use crate::error::{Error, Result};
use crate::linalg;

#[derive(Clone, Debug)]
pub struct Projection {
    /// Canvas side in pixels.
    pub size: f64,
    /// Pixels per unit of the projected plane.
    pub scale: f64,
    /// Samples per cone edge.
    pub arc_samples: usize,
}

impl Default for Projection {
    fn default() -> Self {
        Projection { size: 800.0, scale: 120.0, arc_samples: 24 }
    }
}

type P3 = [f64; 3];

fn vec_f64(v: &[linalg::Q]) -> Vec<f64> {
    v.iter().map(linalg::to_f64).collect()
}

fn unit(v: &[f64]) -> P3 {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn dot(a: &P3, b: &P3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &P3, b: &P3) -> P3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

struct Stereo {
    pole: P3,
    e1: P3,
    e2: P3,
}

impl Stereo {
    fn new(pole: P3) -> Stereo {
        let helper = if pole[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
        let e1 = unit(&cross(&pole, &helper));
        let e2 = cross(&pole, &e1);
        Stereo { pole, e1, e2 }
    }

    /// None at the pole.
    fn project(&self, x: &P3) -> Option<(f64, f64)> {
        let x = unit(x);
        let t = 1.0 - dot(&x, &self.pole);
        if t < 1e-12 {
            return None;
        }
        Some((dot(&x, &self.e1) / t, dot(&x, &self.e2) / t))
    }
}

#[derive(Clone, Debug)]
pub struct ProjectedCone {
    pub cluster: usize,
    /// Projected generators.
    pub vertices: Vec<(f64, f64)>,
    /// Boundary polyline (sampled great-circle arcs).
    pub outline: Vec<(f64, f64)>,
}

impl ProjectedCone {
    pub fn contains(&self, p: (f64, f64)) -> bool {
        let mut inside = false;
        let pts = &self.outline;
        let mut j = pts.len() - 1;
        for i in 0..pts.len() {
            let (xi, yi) = pts[i];
            let (xj, yj) = pts[j];
            if (yi > p.1) != (yj > p.1) && p.0 < (xj - xi) * (p.1 - yi) / (yj - yi) + xi {
                inside = !inside;
            }
            j = i;
        }
        inside
    }

    pub fn area(&self) -> f64 {
        let pts = &self.outline;
        let mut a = 0.0;
        for i in 0..pts.len() {
            let (x0, y0) = pts[i];
            let (x1, y1) = pts[(i + 1) % pts.len()];
            a += x0 * y1 - x1 * y0;
        }
        a.abs() / 2.0
    }
}

/// Projected real cones, in the order of `clusters.real`.
pub fn project_real_cones(cc: &CoxeterContext, clusters: &ClusterSet, p: &Projection) -> Result<Vec<ProjectedCone>> {
    if cc.n() != 3 {
        return Err(Error::RankNot3(cc.n()));
    }
    let st = Stereo::new(unit(&vec_f64(cc.ctx.delta())));
    let mut out = Vec::new();
    for (ci, c) in clusters.real.iter().enumerate() {
        let g: Vec<P3> = c.roots.iter().map(|r| unit(&vec_f64(r))).collect();
        let vertices: Option<Vec<(f64, f64)>> = g.iter().map(|x| st.project(x)).collect();
        let Some(vertices) = vertices else { continue };
        let mut outline = Vec::new();
        for k in 0..3 {
            let (a, b) = (&g[k], &g[(k + 1) % 3]);
            for s in 0..p.arc_samples {
                let t = s as f64 / p.arc_samples as f64;
                let x = [a[0] * (1.0 - t) + b[0] * t, a[1] * (1.0 - t) + b[1] * t, a[2] * (1.0 - t) + b[2] * t];
                if let Some(y) = st.project(&x) {
                    outline.push(y);
                }
            }
        }
        out.push(ProjectedCone { cluster: ci, vertices, outline });
    }
    Ok(out)
}

const PALETTE: [&str; 10] =
    ["#d62728", "#2ca02c", "#1f77b4", "#17becf", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#bcbd22", "#7f7f7f"];

pub fn render_fan_svg(cc: &CoxeterContext, clusters: &ClusterSet, p: &Projection) -> Result<String> {
    let cones = project_real_cones(cc, clusters, p)?;
    let st = Stereo::new(unit(&vec_f64(cc.ctx.delta())));
    let half = p.size / 2.0;
    let px = |(x, y): (f64, f64)| (half + p.scale * x, half - p.scale * y);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        p.size
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(s, r##"<g fill="none" stroke="#000000" stroke-width="0.8">"##);
    for c in &cones {
        let pts: Vec<String> = c
            .outline
            .iter()
            .map(|&q| {
                let (x, y) = px(q);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(s, r#"<polygon data-cluster="{}" points="{}"/>"#, c.cluster, pts.join(" "));
    }
    let _ = writeln!(s, "</g>");
    // imaginary cones {tube root, δ}: arcs running off to infinity
    let _ = writeln!(s, r##"<g fill="none" stroke="#555555" stroke-dasharray="4 3">"##);
    let delta = unit(&vec_f64(cc.ctx.delta()));
    for im in &clusters.imaginary {
        for r in im.roots.iter().filter(|r| *r != cc.ctx.delta()) {
            let a = unit(&vec_f64(r));
            let pts: Vec<String> = (0..p.arc_samples * 4)
                .filter_map(|k| {
                    let t = k as f64 / (p.arc_samples * 4) as f64;
                    let x = [a[0] * (1.0 - t) + delta[0] * t, a[1] * (1.0 - t) + delta[1] * t, a[2] * (1.0 - t) + delta[2] * t];
                    let q = st.project(&x)?;
                    let (x, y) = px(q);
                    (x.abs() < 4.0 * p.size && y.abs() < 4.0 * p.size).then(|| format!("{x:.2},{y:.2}"))
                })
                .collect();
            let _ = writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" "));
        }
    }
    let _ = writeln!(s, "</g>");
    let mut drawn = std::collections::BTreeSet::new();
    let _ = writeln!(s, "<g stroke=\"#000000\" stroke-width=\"0.5\">");
    for (ci, c) in clusters.real.iter().enumerate() {
        let Some(cone) = cones.iter().find(|k| k.cluster == ci) else { continue };
        for (r, &v) in c.roots.iter().zip(&cone.vertices) {
            if !drawn.insert(r.clone()) {
                continue;
            }
            let color = almost_positive::orbit_color_index(cc, r).map_or("#000000", |i| PALETTE[i % PALETTE.len()]);
            let (x, y) = px(v);
            let _ = writeln!(
                s,
                r#"<circle data-root="{}" cx="{x:.2}" cy="{y:.2}" r="4" fill="{color}"/>"#,
                linalg::fmt_vec(r)
            );
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::catalog_context;
    use crate::cluster::enumerate_clusters;

    #[test]
    fn rank_checks() {
        let (ctx, w) = catalog_context("A1(1):k=1").unwrap();
        let cc = CoxeterContext::build(&ctx, &w).unwrap();
        let cs = enumerate_clusters(&cc, 1).unwrap();
        assert_eq!(render_fan_svg(&cc, &cs, &Projection::default()), Err(Error::RankNot3(2)));
    }

    #[test]
    fn central_triangle() {
        let (ctx, w) = catalog_context("D3(2)").unwrap();
        let cc = CoxeterContext::build(&ctx, &w).unwrap();
        let cs = enumerate_clusters(&cc, 4).unwrap();
        let cones = project_real_cones(&cc, &cs, &Projection::default()).unwrap();
        let center: Vec<usize> = cones.iter().filter(|c| c.contains((0.0, 0.0))).map(|c| c.cluster).collect();
        assert_eq!(center, vec![0]);
        let a0 = cones[0].area();
        assert!(cones.iter().skip(1).all(|c| c.area() > a0));
    }
}
