//! Seeded Monte Carlo integration over the unit ball.
//!
//! The sample budget is cut into fixed-size batches, each driven by its own
//! ChaCha stream derived from (seed, batch index). Batches are merged in
//! index order, so parallel and serial execution produce identical output.

use crate::error::{Error, Result};
use crate::numerics::weights::{ball_volume, MeasureWeight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const BATCH: usize = 8192;

#[derive(Debug, Clone, Copy)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: usize,
}

#[derive(Clone, Copy, Default)]
struct Welford {
    mean: f64,
    m2: f64,
    count: usize,
}

impl Welford {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let d = x - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: Welford) -> Welford {
        if other.count == 0 {
            return self;
        }
        if self.count == 0 {
            return other;
        }
        let n1 = self.count as f64;
        let n2 = other.count as f64;
        let n = n1 + n2;
        let d = other.mean - self.mean;
        Welford {
            mean: (n1 * self.mean + n2 * other.mean) / n,
            m2: self.m2 + other.m2 + d * d * n1 * n2 / n,
            count: self.count + other.count,
        }
    }
}

/// Uniform rejection sample in the unit ball of R^d.
fn sample_ball(rng: &mut ChaCha8Rng, d: usize, buf: &mut [f64]) {
    loop {
        let mut norm_sq = 0.0;
        for v in buf.iter_mut().take(d) {
            *v = rng.random_range(-1.0..1.0);
            norm_sq += *v * *v;
        }
        if norm_sq <= 1.0 {
            return;
        }
    }
}

/// Monte Carlo estimate of ∫_{B₁^d} f dμ, with μ Lebesgue or Bochner-Riesz.
///
/// Returns the estimate and its standard error; deterministic per seed.
pub fn ball_monte_carlo(
    d: usize,
    integrand: impl Fn(&[f64]) -> f64 + Sync,
    weight: MeasureWeight,
    samples: usize,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if d == 0 {
        return Err(Error::UnsupportedDimension(0));
    }
    if samples < 100 {
        return Err(Error::invalid("need at least 100 samples"));
    }
    let n_batches = samples.div_ceil(BATCH);
    let stats: Vec<Welford> = (0..n_batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b as u64);
            let count = if b + 1 == n_batches { samples - b * BATCH } else { BATCH };
            let mut x = vec![0.0f64; d];
            let mut w = Welford::default();
            for _ in 0..count {
                sample_ball(&mut rng, d, &mut x);
                let norm_sq: f64 = x.iter().map(|v| v * v).sum();
                w.push(integrand(&x) * weight.density(d, norm_sq));
            }
            w
        })
        .collect();

    let total = stats.into_iter().fold(Welford::default(), Welford::merge);
    let vol = ball_volume(d);
    let var = if total.count > 1 { total.m2 / (total.count as f64 - 1.0) } else { 0.0 };
    Ok(MonteCarloEstimate {
        estimate: vol * total.mean,
        std_error: vol * (var / total.count as f64).sqrt(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn ball_volume_in_2d() {
        let est = ball_monte_carlo(2, |_| 1.0, MeasureWeight::Lebesgue, 200_000, 42).unwrap();
        // constant integrand: stderr is 0, the estimate is exact
        assert!((est.estimate - PI).abs() <= 3.0 * est.std_error + 1e-12);
    }

    #[test]
    fn bochner_riesz_radial_value() {
        // ∫_{B²} (1-|x|²) dx = 2π ∫₀¹ (1-r²) r dr = π/2
        let est = ball_monte_carlo(2, |_| 1.0, MeasureWeight::BochnerRiesz, 400_000, 1).unwrap();
        assert!((est.estimate - PI / 2.0).abs() <= 3.0 * est.std_error, "{est:?}");
    }

    #[test]
    fn odd_integrand_vanishes() {
        let est = ball_monte_carlo(2, |x| x[0], MeasureWeight::Lebesgue, 200_000, 3).unwrap();
        assert!(est.estimate.abs() <= 3.0 * est.std_error);
    }

    #[test]
    fn deterministic_per_seed() {
        let a = ball_monte_carlo(3, |x| x[0] * x[0], MeasureWeight::Lebesgue, 50_000, 9).unwrap();
        let b = ball_monte_carlo(3, |x| x[0] * x[0], MeasureWeight::Lebesgue, 50_000, 9).unwrap();
        assert_eq!(a.estimate.to_bits(), b.estimate.to_bits());
        assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    }

    #[test]
    fn seeds_agree_within_four_sigma() {
        let f = |x: &[f64]| (1.0 + x[0]).sqrt() * x[1] * x[1];
        let a = ball_monte_carlo(2, f, MeasureWeight::Lebesgue, 150_000, 10).unwrap();
        let b = ball_monte_carlo(2, f, MeasureWeight::Lebesgue, 150_000, 11).unwrap();
        let combined = (a.std_error.powi(2) + b.std_error.powi(2)).sqrt();
        assert!((a.estimate - b.estimate).abs() <= 4.0 * combined);
    }

    #[test]
    fn sample_floor_enforced() {
        assert!(ball_monte_carlo(2, |_| 1.0, MeasureWeight::Lebesgue, 10, 0).is_err());
    }
}
