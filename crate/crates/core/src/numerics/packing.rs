//! Separated direction families on projective space.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// A family of unit vectors with verified pairwise projective separation.
#[derive(Debug, Clone)]
pub struct PackedDirections {
    pub d: usize,
    pub n_param: usize,
    pub dirs: Vec<Vec<f64>>,
    /// min over pairs of min(|ω_i - ω_j|, |ω_i + ω_j|)
    pub min_separation: f64,
    /// achieved constant c in separation ≥ c / N
    pub separation_constant: f64,
}

impl PackedDirections {
    pub fn count(&self) -> usize {
        self.dirs.len()
    }
}

/// Projective distance min(|a-b|, |a+b|).
pub fn projective_distance(a: &[f64], b: &[f64]) -> f64 {
    let mut dm = 0.0;
    let mut dp = 0.0;
    for (x, y) in a.iter().zip(b) {
        dm += (x - y) * (x - y);
        dp += (x + y) * (x + y);
    }
    dm.min(dp).sqrt()
}

fn min_pairwise_separation(dirs: &[Vec<f64>]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..dirs.len() {
        for j in (i + 1)..dirs.len() {
            best = best.min(projective_distance(&dirs[i], &dirs[j]));
        }
    }
    best
}

/// N^{d-1} directions with pairwise projective separation ≥ c/N, c > 0
/// recorded on the output.
///
/// d = 2 uses the equiangular half-circle; d = 3 a golden-angle spiral on a
/// hemisphere with a small equatorial gap (z ≥ 0.7/N) so that near-equator
/// points cannot collide with the antipodes of their neighbours.
pub fn projective_packing(d: usize, n_param: usize) -> Result<PackedDirections> {
    if d > 3 {
        return Err(Error::UnsupportedDimension(d));
    }
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    if n_param < 2 {
        return Err(Error::invalid("separation parameter N must be at least 2"));
    }
    let dirs: Vec<Vec<f64>> = match d {
        2 => (0..n_param)
            .map(|p| {
                let th = p as f64 * PI / n_param as f64;
                vec![th.cos(), th.sin()]
            })
            .collect(),
        3 => {
            let m = n_param * n_param;
            let golden_angle = PI * (3.0 - 5.0f64.sqrt());
            let z0 = 0.7 / n_param as f64;
            (0..m)
                .map(|i| {
                    let z = z0 + (1.0 - z0) * (i as f64 + 0.5) / m as f64;
                    let r = (1.0 - z * z).sqrt();
                    let phi = golden_angle * i as f64;
                    vec![r * phi.cos(), r * phi.sin(), z]
                })
                .collect()
        }
        _ => unreachable!(),
    };

    let min_separation = min_pairwise_separation(&dirs);
    let c = min_separation * n_param as f64;
    if !(c > 0.0) {
        return Err(Error::ConstructionFailed {
            reason: format!("projective packing d={d} N={n_param} degenerate"),
            achieved_c: c,
        });
    }
    Ok(PackedDirections {
        d,
        n_param,
        dirs,
        min_separation,
        separation_constant: c,
    })
}
