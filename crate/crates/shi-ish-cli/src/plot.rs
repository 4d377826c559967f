//! Plot data for the three-dimensional arrangements: everything is
//! restricted to the plane x1 + x2 + x3 = 0 and written in the orthonormal
//! coordinates u = (x1 - x2)/sqrt(2), v = (x1 + x2 - 2 x3)/sqrt(6). Each
//! hyperplane becomes a clipped line segment, each region contributes its
//! witness point with its labels.

use shi_ish::arrangement::Arrangement;
use shi_ish::geometry::{enumerate_regions, region_stats};

use crate::Failure;

const RADIUS: f64 = 4.0;

fn plane_basis() -> [[f64; 3]; 2] {
    let s2 = 2f64.sqrt();
    let s6 = 6f64.sqrt();
    [
        [1.0 / s2, -1.0 / s2, 0.0],
        [1.0 / s6, 1.0 / s6, -2.0 / s6],
    ]
}

fn project(point: &[f64; 3]) -> [f64; 2] {
    let [f1, f2] = plane_basis();
    let mean = (point[0] + point[1] + point[2]) / 3.0;
    let centered = [point[0] - mean, point[1] - mean, point[2] - mean];
    let dot = |f: &[f64; 3]| f[0] * centered[0] + f[1] * centered[1] + f[2] * centered[2];
    [dot(&f1), dot(&f2)]
}

pub fn plot_data(arr: &Arrangement, guard: usize) -> Result<serde_json::Value, Failure> {
    assert_eq!(arr.n(), 3);
    let [f1, f2] = plane_basis();
    let mut lines = Vec::new();
    for h in arr.hyperplanes() {
        let a: Vec<f64> = h.coeffs.iter().map(|&c| c as f64).collect();
        let alpha = a[0] * f1[0] + a[1] * f1[1] + a[2] * f1[2];
        let beta = a[0] * f2[0] + a[1] * f2[1] + a[2] * f2[2];
        let norm_sq = alpha * alpha + beta * beta;
        let anchor = [alpha * h.rhs as f64 / norm_sq, beta * h.rhs as f64 / norm_sq];
        let norm = norm_sq.sqrt();
        let dir = [-beta / norm, alpha / norm];
        lines.push(serde_json::json!({
            "hyperplane": h.to_string(),
            "points": [
                [anchor[0] - RADIUS * dir[0], anchor[1] - RADIUS * dir[1]],
                [anchor[0] + RADIUS * dir[0], anchor[1] + RADIUS * dir[1]],
            ],
        }));
    }
    let mut regions = Vec::new();
    for region in enumerate_regions(arr, guard)? {
        let w = region.witness_approx();
        let point = [w[0], w[1], w[2]];
        let stats = region_stats(arr, &region);
        regions.push(serde_json::json!({
            "signs": region.signs_string(),
            "point": project(&point),
            "c": stats.ceilings.len(),
            "d": stats.dof,
            "dominant": stats.dominant,
        }));
    }
    Ok(serde_json::json!({
        "arrangement": arr.kind().to_string(),
        "projection": "plane x1+x2+x3=0; u=(x1-x2)/sqrt2, v=(x1+x2-2x3)/sqrt6",
        "lines": lines,
        "regions": regions,
    }))
}
