//! Ridge profiles: the one-dimensional shape a ridge function applies to its
//! linear coordinate.

use crate::dictionary::atom::{relu_power, RidgeAtom};
use crate::piecewise::PiecewisePoly;

/// Profile f in a ridge function f(ω·x).
#[derive(Debug, Clone)]
pub enum RidgeProfile<'a> {
    /// σ_k(y + b)
    ReluPower { offset: f64, power: u32 },
    Piecewise(&'a PiecewisePoly),
}

impl RidgeProfile<'_> {
    pub fn eval(&self, y: f64) -> f64 {
        match self {
            RidgeProfile::ReluPower { offset, power } => relu_power(y + offset, *power),
            RidgeProfile::Piecewise(p) => p.eval(y),
        }
    }

    /// Natural support in y (unclipped; the ball clips to [-1, 1]).
    pub fn support(&self) -> (f64, f64) {
        match self {
            RidgeProfile::ReluPower { offset, .. } => (-offset, f64::INFINITY),
            RidgeProfile::Piecewise(p) => p.support().unwrap_or((0.0, 0.0)),
        }
    }

    /// Interior kink / breakpoint locations.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            RidgeProfile::ReluPower { offset, .. } => vec![-offset],
            RidgeProfile::Piecewise(p) => p.breakpoints(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            RidgeProfile::ReluPower { power, .. } => *power as usize,
            RidgeProfile::Piecewise(p) => p.max_degree(),
        }
    }
}

/// A ridge function: direction on the unit sphere plus a profile.
#[derive(Debug, Clone)]
pub struct RidgeFunction<'a> {
    pub direction: &'a [f64],
    pub profile: RidgeProfile<'a>,
}

impl<'a> RidgeFunction<'a> {
    pub fn from_atom(atom: &'a RidgeAtom) -> Self {
        RidgeFunction {
            direction: atom.direction(),
            profile: RidgeProfile::ReluPower { offset: atom.offset(), power: atom.power() },
        }
    }

    pub fn piecewise(direction: &'a [f64], profile: &'a PiecewisePoly) -> Self {
        RidgeFunction { direction, profile: RidgeProfile::Piecewise(profile) }
    }

    pub fn dim(&self) -> usize {
        self.direction.len()
    }
}
