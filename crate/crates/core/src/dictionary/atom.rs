//! Dictionary atoms: ReLU^k ridge functions and decay-weighted exponentials.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// σ_k(t) = max(0, t)^k, with σ₀ the right-continuous Heaviside (σ₀(0) = 1).
pub fn relu_power(t: f64, k: u32) -> f64 {
    if k == 0 {
        return if t >= 0.0 { 1.0 } else { 0.0 };
    }
    if t <= 0.0 {
        0.0
    } else {
        t.powi(k as i32)
    }
}

/// One ridge atom σ_k(ω·x + b) with ω on the unit sphere and b ∈ [-2, 2].
#[derive(Debug, Clone, PartialEq)]
pub struct RidgeAtom {
    direction: Vec<f64>,
    offset: f64,
    power: u32,
}

impl RidgeAtom {
    pub fn new(direction: Vec<f64>, offset: f64, power: u32) -> Result<Self> {
        if direction.is_empty() {
            return Err(Error::invalid("ridge atom needs a direction"));
        }
        let norm: f64 = direction.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(norm.is_finite() && (norm - 1.0).abs() < 1e-6) {
            return Err(Error::invalid(format!(
                "ridge direction must be a unit vector (|ω| = {norm})"
            )));
        }
        let direction = direction.iter().map(|x| x / norm).collect();
        if !offset.is_finite() || offset.abs() > 2.0 + 1e-9 {
            return Err(Error::invalid(format!("ridge offset b = {offset} outside [-2, 2]")));
        }
        let offset = offset.clamp(-2.0, 2.0);
        Ok(RidgeAtom { direction, offset, power })
    }

    pub fn dim(&self) -> usize {
        self.direction.len()
    }

    pub fn direction(&self) -> &[f64] {
        &self.direction
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim());
        let t: f64 = self.direction.iter().zip(x).map(|(w, v)| w * v).sum();
        relu_power(t + self.offset, self.power)
    }
}

/// One spectral atom (1+|ω|)^{-s} e^{2πi ω·x}.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralAtom {
    frequency: Vec<f64>,
    decay: f64,
}

impl SpectralAtom {
    pub fn new(frequency: Vec<f64>, decay: f64) -> Result<Self> {
        if frequency.is_empty() {
            return Err(Error::invalid("spectral atom needs a frequency vector"));
        }
        if !(decay.is_finite() && decay >= 0.0) {
            return Err(Error::invalid("spectral decay s must be nonnegative"));
        }
        Ok(SpectralAtom { frequency, decay })
    }

    pub fn dim(&self) -> usize {
        self.frequency.len()
    }

    pub fn frequency(&self) -> &[f64] {
        &self.frequency
    }

    pub fn decay(&self) -> f64 {
        self.decay
    }

    pub fn frequency_norm(&self) -> f64 {
        self.frequency.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn amplitude(&self) -> f64 {
        (1.0 + self.frequency_norm()).powf(-self.decay)
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        debug_assert_eq!(x.len(), self.dim());
        let phase: f64 = self.frequency.iter().zip(x).map(|(w, v)| w * v).sum();
        self.amplitude() * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * phase)
    }
}
