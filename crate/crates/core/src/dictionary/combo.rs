//! Sparse signed combinations of dictionary atoms with tracked ℓ1 budget.

use crate::dictionary::atom::{RidgeAtom, SpectralAtom};
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const L1_SLACK: f64 = 1e-12;

/// Finite combination Σ aᵢ σ_k(ωᵢ·x + bᵢ).
#[derive(Debug, Clone)]
pub struct RidgeCombo {
    pub atoms: Vec<RidgeAtom>,
    pub coeffs: Vec<f64>,
    pub l1_budget: f64,
}

impl RidgeCombo {
    /// Budget set to the exact coefficient ℓ1 norm.
    pub fn from_atoms(atoms: Vec<RidgeAtom>, coeffs: Vec<f64>) -> Result<Self> {
        let budget = coeffs.iter().map(|c| c.abs()).sum();
        Self::with_budget(atoms, coeffs, budget)
    }

    pub fn with_budget(atoms: Vec<RidgeAtom>, coeffs: Vec<f64>, l1_budget: f64) -> Result<Self> {
        if atoms.len() != coeffs.len() {
            return Err(Error::invalid("atoms and coefficients must have equal length"));
        }
        let l1: f64 = coeffs.iter().map(|c| c.abs()).sum();
        if l1 > l1_budget + L1_SLACK {
            return Err(Error::invalid(format!(
                "coefficient ℓ1 norm {l1} exceeds budget {l1_budget}"
            )));
        }
        if let Some(d) = atoms.first().map(|a| a.dim()) {
            if atoms.iter().any(|a| a.dim() != d) {
                return Err(Error::invalid("atoms must share the ambient dimension"));
            }
        }
        Ok(RidgeCombo { atoms, coeffs, l1_budget })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.atoms.first().map(|a| a.dim())
    }

    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.atoms
            .iter()
            .zip(&self.coeffs)
            .map(|(a, c)| c * a.eval(x))
            .sum()
    }
}

/// Finite combination of spectral atoms with complex coefficients.
#[derive(Debug, Clone)]
pub struct SpectralCombo {
    pub atoms: Vec<SpectralAtom>,
    pub coeffs: Vec<Complex64>,
    pub l1_budget: f64,
}

impl SpectralCombo {
    pub fn from_atoms(atoms: Vec<SpectralAtom>, coeffs: Vec<Complex64>) -> Result<Self> {
        let budget = coeffs.iter().map(|c| c.norm()).sum();
        Self::with_budget(atoms, coeffs, budget)
    }

    pub fn with_budget(
        atoms: Vec<SpectralAtom>,
        coeffs: Vec<Complex64>,
        l1_budget: f64,
    ) -> Result<Self> {
        if atoms.len() != coeffs.len() {
            return Err(Error::invalid("atoms and coefficients must have equal length"));
        }
        let l1: f64 = coeffs.iter().map(|c| c.norm()).sum();
        if l1 > l1_budget + L1_SLACK {
            return Err(Error::invalid(format!(
                "coefficient ℓ1 norm {l1} exceeds budget {l1_budget}"
            )));
        }
        Ok(SpectralCombo { atoms, coeffs, l1_budget })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        self.atoms
            .iter()
            .zip(&self.coeffs)
            .map(|(a, c)| c * a.eval(x))
            .sum()
    }
}

/// A sparse combination of either atom kind.
#[derive(Debug, Clone)]
pub enum SparseCombo {
    Ridge(RidgeCombo),
    Spectral(SpectralCombo),
}

impl SparseCombo {
    pub fn kind(&self) -> &'static str {
        match self {
            SparseCombo::Ridge(_) => "ridge",
            SparseCombo::Spectral(_) => "spectral",
        }
    }

    pub fn len(&self) -> usize {
        match self {
            SparseCombo::Ridge(c) => c.len(),
            SparseCombo::Spectral(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn l1_norm(&self) -> f64 {
        match self {
            SparseCombo::Ridge(c) => c.l1_norm(),
            SparseCombo::Spectral(c) => c.l1_norm(),
        }
    }
}

// --- JSON wire format ---
//
// {kind, d, k|s, atoms: [{omega: [...], b} | {omega_freq: [...]}],
//  coeffs: [...] | [[re, im], ...], l1_budget}
//
// Round trips are bit-exact for finite doubles (shortest-roundtrip float
// formatting on both sides).

#[derive(Serialize, Deserialize)]
struct WireRidgeAtom {
    omega: Vec<f64>,
    b: f64,
}

#[derive(Serialize, Deserialize)]
struct WireSpectralAtom {
    omega_freq: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WireCombo {
    Ridge {
        d: usize,
        k: u32,
        atoms: Vec<WireRidgeAtom>,
        coeffs: Vec<f64>,
        l1_budget: f64,
    },
    Spectral {
        d: usize,
        s: f64,
        atoms: Vec<WireSpectralAtom>,
        coeffs: Vec<[f64; 2]>,
        l1_budget: f64,
    },
}

impl SparseCombo {
    pub fn to_json(&self) -> Result<String> {
        let wire = match self {
            SparseCombo::Ridge(c) => {
                let k = c.atoms.first().map(|a| a.power()).unwrap_or(0);
                if c.atoms.iter().any(|a| a.power() != k) {
                    return Err(Error::invalid("wire format requires a uniform atom power"));
                }
                let d = c.dim().unwrap_or(0);
                WireCombo::Ridge {
                    d,
                    k,
                    atoms: c
                        .atoms
                        .iter()
                        .map(|a| WireRidgeAtom { omega: a.direction().to_vec(), b: a.offset() })
                        .collect(),
                    coeffs: c.coeffs.clone(),
                    l1_budget: c.l1_budget,
                }
            }
            SparseCombo::Spectral(c) => {
                let s = c.atoms.first().map(|a| a.decay()).unwrap_or(0.0);
                if c.atoms.iter().any(|a| a.decay() != s) {
                    return Err(Error::invalid("wire format requires a uniform decay order"));
                }
                let d = c.atoms.first().map(|a| a.dim()).unwrap_or(0);
                WireCombo::Spectral {
                    d,
                    s,
                    atoms: c
                        .atoms
                        .iter()
                        .map(|a| WireSpectralAtom { omega_freq: a.frequency().to_vec() })
                        .collect(),
                    coeffs: c.coeffs.iter().map(|z| [z.re, z.im]).collect(),
                    l1_budget: c.l1_budget,
                }
            }
        };
        Ok(serde_json::to_string(&wire)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: WireCombo = serde_json::from_str(text)?;
        match wire {
            WireCombo::Ridge { d, k, atoms, coeffs, l1_budget } => {
                let atoms = atoms
                    .into_iter()
                    .map(|a| {
                        if a.omega.len() != d {
                            return Err(Error::invalid("atom dimension mismatch"));
                        }
                        RidgeAtom::new(a.omega, a.b, k)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(SparseCombo::Ridge(RidgeCombo::with_budget(atoms, coeffs, l1_budget)?))
            }
            WireCombo::Spectral { d, s, atoms, coeffs, l1_budget } => {
                let atoms = atoms
                    .into_iter()
                    .map(|a| {
                        if a.omega_freq.len() != d {
                            return Err(Error::invalid("atom dimension mismatch"));
                        }
                        SpectralAtom::new(a.omega_freq, s)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let coeffs = coeffs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect();
                Ok(SparseCombo::Spectral(SpectralCombo::with_budget(atoms, coeffs, l1_budget)?))
            }
        }
    }
}
