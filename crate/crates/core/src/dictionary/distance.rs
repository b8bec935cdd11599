//! L² distances between sparse combinations, via pairwise reduced integrals.

use crate::dictionary::atom::{RidgeAtom, SpectralAtom};
use crate::dictionary::combo::SparseCombo;
use crate::dictionary::profile::RidgeFunction;
use crate::dictionary::reduced::{cached_rule, reduced_ridge_inner_product};
use crate::error::{Error, Result};
use crate::numerics::eigen::SymmetricMatrix;
use crate::numerics::quadrature::QuadratureRule;
use crate::numerics::weights::{slice_weight_parallel, MeasureWeight};
use num_complex::Complex64;
use rayon::prelude::*;

/// ⟨e_{ω}, e_{ω'}⟩ over L²(B₁^d, dμ): the ball reduces the complex
/// exponential pair to a single oscillatory slice integral at frequency
/// |ω - ω'|, which is real by symmetry of the slice weight.
pub fn spectral_pair_inner_product(
    a: &SpectralAtom,
    b: &SpectralAtom,
    weight: MeasureWeight,
    rule: &QuadratureRule,
) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::invalid("spectral atoms must share the ambient dimension"));
    }
    let d = a.dim();
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    let zeta: f64 = a
        .frequency()
        .iter()
        .zip(b.frequency())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt();
    // enough panels to resolve the oscillation
    let panels = (4.0 * zeta).ceil().max(8.0) as usize;
    let nodes = cached_rule(rule.len().clamp(12, 32));
    let mut acc = 0.0;
    for i in 0..panels {
        let lo = -1.0 + 2.0 * i as f64 / panels as f64;
        let hi = -1.0 + 2.0 * (i + 1) as f64 / panels as f64;
        let h = |y: f64| {
            (2.0 * std::f64::consts::PI * zeta * y).cos() * slice_weight_parallel(weight, d, y)
        };
        // endpoint panels get the sqrt substitution for the half powers
        if i == 0 {
            let vmax = (hi + 1.0).sqrt();
            acc += nodes.integrate_on(0.0, vmax, |v| 2.0 * v * h(v * v - 1.0));
        } else if i + 1 == panels {
            let vmax = (1.0 - lo).sqrt();
            acc += nodes.integrate_on(0.0, vmax, |v| 2.0 * v * h(1.0 - v * v));
        } else {
            acc += nodes.integrate_on(lo, hi, h);
        }
    }
    Ok(a.amplitude() * b.amplitude() * acc)
}

/// L²(weight) norm of a single ridge atom.
pub fn ridge_atom_norm(atom: &RidgeAtom, weight: MeasureWeight, rule: &QuadratureRule) -> Result<f64> {
    let f = RidgeFunction::from_atom(atom);
    let v = reduced_ridge_inner_product(&f, &f, weight, rule)?;
    Ok(v.max(0.0).sqrt())
}

/// Uniform bound K_D = sup ‖σ_k(ω·x + b)‖ over the dictionary; the norm is
/// monotone in b, so the supremum sits at b = 2.
pub fn dictionary_norm_bound(d: usize, k: u32, weight: MeasureWeight) -> Result<f64> {
    let mut dir = vec![0.0; d];
    dir[0] = 1.0;
    let atom = RidgeAtom::new(dir, 2.0, k)?;
    ridge_atom_norm(&atom, weight, cached_rule(32))
}

/// Cached pairwise Gram of a fixed ridge atom list; distances between
/// combinations supported on the list become coefficient algebra.
#[derive(Debug, Clone)]
pub struct DictionaryGram {
    pub gram: SymmetricMatrix,
}

impl DictionaryGram {
    pub fn ridge(atoms: &[RidgeAtom], weight: MeasureWeight, rule: &QuadratureRule) -> Result<Self> {
        let n = atoms.len();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..=i).map(move |j| (i, j))).collect();
        let entries: Vec<Result<f64>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                reduced_ridge_inner_product(
                    &RidgeFunction::from_atom(&atoms[i]),
                    &RidgeFunction::from_atom(&atoms[j]),
                    weight,
                    rule,
                )
            })
            .collect();
        let mut gram = SymmetricMatrix::zeros(n);
        for (&(i, j), e) in pairs.iter().zip(entries) {
            gram.set(i, j, e?);
        }
        Ok(DictionaryGram { gram })
    }

    /// Quadratic form vᵀ G v for a sparse coefficient vector.
    pub fn quadratic_form(&self, v: &[(usize, f64)]) -> f64 {
        let mut acc = 0.0;
        for &(i, a) in v {
            for &(j, b) in v {
                acc += a * b * self.gram.get(i, j);
            }
        }
        acc
    }

    /// ‖Σ aᵢ dᵢ - Σ bⱼ dⱼ‖ for coefficient vectors on the cached atom list.
    pub fn distance(&self, a: &[(usize, f64)], b: &[(usize, f64)]) -> f64 {
        let mut diff: std::collections::BTreeMap<usize, f64> = Default::default();
        for &(i, c) in a {
            *diff.entry(i).or_insert(0.0) += c;
        }
        for &(j, c) in b {
            *diff.entry(j).or_insert(0.0) -= c;
        }
        let v: Vec<(usize, f64)> = diff.into_iter().filter(|(_, c)| *c != 0.0).collect();
        self.quadratic_form(&v).max(0.0).sqrt()
    }
}

/// L²(weight) distance between two sparse combinations of the same kind.
pub fn combo_distance(
    c1: &SparseCombo,
    c2: &SparseCombo,
    weight: MeasureWeight,
    rule: &QuadratureRule,
) -> Result<f64> {
    match (c1, c2) {
        (SparseCombo::Ridge(a), SparseCombo::Ridge(b)) => {
            let atoms: Vec<RidgeAtom> = a.atoms.iter().chain(b.atoms.iter()).cloned().collect();
            let gram = DictionaryGram::ridge(&atoms, weight, rule)?;
            let va: Vec<(usize, f64)> = a.coeffs.iter().cloned().enumerate().collect();
            let vb: Vec<(usize, f64)> =
                b.coeffs.iter().cloned().enumerate().map(|(j, c)| (a.len() + j, c)).collect();
            Ok(gram.distance(&va, &vb))
        }
        (SparseCombo::Spectral(a), SparseCombo::Spectral(b)) => {
            let atoms: Vec<&SpectralAtom> = a.atoms.iter().chain(b.atoms.iter()).collect();
            let coeffs: Vec<Complex64> = a
                .coeffs
                .iter()
                .cloned()
                .chain(b.coeffs.iter().map(|c| -c))
                .collect();
            let n = atoms.len();
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (0..=i).map(move |j| (i, j))).collect();
            let entries: Vec<Result<f64>> = pairs
                .par_iter()
                .map(|&(i, j)| spectral_pair_inner_product(atoms[i], atoms[j], weight, rule))
                .collect();
            let mut dist_sq = 0.0;
            for (&(i, j), e) in pairs.iter().zip(entries) {
                let g = e?;
                let term = (coeffs[i] * coeffs[j].conj()).re * g;
                dist_sq += if i == j { term } else { 2.0 * term };
            }
            Ok(dist_sq.max(0.0).sqrt())
        }
        _ => Err(Error::MixedAtomKinds),
    }
}
