//! Radial reduction weights for integrals over the unit ball.
//!
//! A ridge integrand on B₁^d depends on one or two linear coordinates; the
//! remaining directions integrate out into the weights below. `rho_weight`
//! and `gamma_weight` expose the one- and two-direction reductions of the
//! Bochner-Riesz measure (1-|x|²)_+^{d/2}; the `slice_*` functions carry the
//! angular surface factors so that they reproduce the honest inner products,
//! which is what Monte Carlo cross-checks see.

use crate::error::{Error, Result};
use crate::numerics::quadrature::gauss_legendre_rule;
use std::f64::consts::PI;

/// Volume of the unit ball in R^d (vol(B⁰) := 1).
pub fn ball_volume(d: usize) -> f64 {
    match d {
        0 => 1.0,
        1 => 2.0,
        _ => ball_volume(d - 2) * 2.0 * PI / d as f64,
    }
}

/// Surface area of the unit sphere S^m ⊂ R^{m+1} (|S⁰| = 2).
pub fn sphere_area(m: usize) -> f64 {
    (m as f64 + 1.0) * ball_volume(m + 1)
}

/// K_d = ∫₀¹ (1-r²)^{d/2} r^{d-2} dr.
///
/// Evaluated as ∫₀^{π/2} cos^{d+1}θ sin^{d-2}θ dθ with a 64-node
/// Gauss-Legendre rule; the substitution makes the integrand analytic, so the
/// value is exact to machine precision for every d.
pub fn radial_constant_k(d: usize) -> f64 {
    debug_assert!(d >= 2);
    trig_moment(d + 1, d as i32 - 2)
}

/// K'_d = ∫₀¹ (1-r²)^{d/2} r^{d-3} dr for d ≥ 3; K'_2 := 1.
pub fn radial_constant_k_prime(d: usize) -> f64 {
    debug_assert!(d >= 2);
    if d == 2 {
        1.0
    } else {
        trig_moment(d + 1, d as i32 - 3)
    }
}

/// ∫₀^{π/2} cos^a θ sin^b θ dθ via 64-node Gauss-Legendre.
fn trig_moment(a: usize, b: i32) -> f64 {
    let rule = gauss_legendre_rule(64).expect("static node count");
    rule.integrate_on(0.0, PI / 2.0, |th| {
        th.cos().powi(a as i32) * th.sin().powi(b)
    })
}

/// ρ_d(y) = K_d (1-y²)_+^{d-1/2}: the one-direction radial reduction weight.
pub fn rho_weight(d: usize, y: f64) -> f64 {
    debug_assert!(d >= 2);
    let t = 1.0 - y * y;
    if t <= 0.0 {
        return 0.0;
    }
    radial_constant_k(d) * t.powf(d as f64 - 0.5)
}

/// γ_d(y) = K'_d (1-y²)_+^{d-1}: the two-direction reduction weight
/// (with the d = 2 convention K'_2 = 1).
pub fn gamma_weight(d: usize, y: f64) -> f64 {
    debug_assert!(d >= 2);
    let t = 1.0 - y * y;
    if t <= 0.0 {
        return 0.0;
    }
    radial_constant_k_prime(d) * t.powi(d as i32 - 1)
}

/// Which measure an inner product is taken against on the unit ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureWeight {
    Lebesgue,
    BochnerRiesz,
}

impl MeasureWeight {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "lebesgue" => Ok(MeasureWeight::Lebesgue),
            "bochner_riesz" | "bochner-riesz" => Ok(MeasureWeight::BochnerRiesz),
            other => Err(Error::invalid(format!("unknown weight '{other}'"))),
        }
    }

    /// Pointwise density on the ball (1 for Lebesgue).
    pub fn density(&self, d: usize, x_norm_sq: f64) -> f64 {
        match self {
            MeasureWeight::Lebesgue => 1.0,
            MeasureWeight::BochnerRiesz => {
                let t = 1.0 - x_norm_sq;
                if t <= 0.0 {
                    0.0
                } else {
                    t.powf(d as f64 / 2.0)
                }
            }
        }
    }
}

/// Full one-direction slice weight: for f, g ridge profiles along the same
/// axis, ⟨f, g⟩ = ∫ f(y) g(y) w(y) dy with this w.
pub fn slice_weight_parallel(weight: MeasureWeight, d: usize, y: f64) -> f64 {
    let t = 1.0 - y * y;
    if t <= 0.0 {
        return 0.0;
    }
    match weight {
        // volume of the (d-1)-ball cross-section of radius sqrt(1-y²)
        MeasureWeight::Lebesgue => ball_volume(d - 1) * t.powf((d as f64 - 1.0) / 2.0),
        MeasureWeight::BochnerRiesz => {
            if d == 2 {
                sphere_area(0) * rho_weight(d, y)
            } else {
                sphere_area(d - 2) * rho_weight(d, y)
            }
        }
    }
}

/// Full two-direction slice weight as a function of the dual-coordinate
/// quadratic q = |y₁b₁' + y₂b₂'|²; the inner product of ridge profiles along
/// independent directions ω, ω' is det(D)^{-1/2} ∬ f(y₁) g(y₂) τ(q) dy₁ dy₂.
pub fn slice_weight_independent(weight: MeasureWeight, d: usize, q: f64) -> f64 {
    let t = 1.0 - q;
    if t <= 0.0 {
        return 0.0;
    }
    match weight {
        MeasureWeight::Lebesgue => {
            // volume of the (d-2)-dimensional perpendicular section
            ball_volume(d - 2) * t.powf((d as f64 - 2.0) / 2.0)
        }
        MeasureWeight::BochnerRiesz => {
            if d == 2 {
                // no perpendicular directions: the density itself
                t.powf(d as f64 / 2.0)
            } else {
                sphere_area(d - 3) * radial_constant_k_prime(d) * t.powi(d as i32 - 1)
            }
        }
    }
}

/// Smoothness of τ at the cone boundary q = 1: the number of continuous
/// derivatives is d-2 for Bochner-Riesz; the exponent drives panel handling.
pub fn independent_weight_exponent(weight: MeasureWeight, d: usize) -> f64 {
    match weight {
        MeasureWeight::Lebesgue => (d as f64 - 2.0) / 2.0,
        MeasureWeight::BochnerRiesz => {
            if d == 2 {
                1.0
            } else {
                d as f64 - 1.0
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_closed_forms() {
        // K_2 = ∫₀¹ (1-r²) dr = 2/3
        assert!((rho_weight(2, 0.0) - 2.0 / 3.0).abs() < 1e-14);
        // K_3 = ∫₀¹ (1-r²)^{3/2} r dr = 1/5
        assert!((rho_weight(3, 0.0) - 0.2).abs() < 1e-14);
        // support boundary
        assert_eq!(rho_weight(2, 1.0), 0.0);
        assert_eq!(rho_weight(5, -1.0), 0.0);
        assert_eq!(rho_weight(3, 1.7), 0.0);
    }

    #[test]
    fn gamma_closed_forms() {
        // d = 2 convention
        assert!((gamma_weight(2, 0.0) - 1.0).abs() < 1e-14);
        // K'_3 = ∫₀¹ (1-r²)^{3/2} dr = 3π/16
        assert!((gamma_weight(3, 0.0) - 3.0 * PI / 16.0).abs() < 1e-14);
        assert_eq!(gamma_weight(4, -1.0), 0.0);
    }

    #[test]
    fn weights_even_nonnegative_zero_outside() {
        for d in 2..=5 {
            for i in 0..40 {
                let y = -1.2 + 2.4 * (i as f64) / 39.0;
                let r = rho_weight(d, y);
                let g = gamma_weight(d, y);
                assert!(r >= 0.0 && g >= 0.0);
                assert!((r - rho_weight(d, -y)).abs() < 1e-15);
                assert!((g - gamma_weight(d, -y)).abs() < 1e-15);
                if y.abs() >= 1.0 {
                    assert_eq!(r, 0.0);
                    assert_eq!(g, 0.0);
                }
            }
        }
    }

    #[test]
    fn volumes_and_areas() {
        assert!((ball_volume(2) - PI).abs() < 1e-15);
        assert!((ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-14);
        assert!((sphere_area(0) - 2.0).abs() < 1e-15);
        assert!((sphere_area(1) - 2.0 * PI).abs() < 1e-15);
        assert!((sphere_area(2) - 4.0 * PI).abs() < 1e-14);
    }

    #[test]
    fn parallel_slice_weight_matches_cross_section() {
        // d=2 Lebesgue: chord length 2*sqrt(1-y²)
        let y = 0.3;
        let want = 2.0 * (1.0f64 - y * y).sqrt();
        assert!((slice_weight_parallel(MeasureWeight::Lebesgue, 2, y) - want).abs() < 1e-14);
        // d=2 Bochner-Riesz: ∫ (1-y²-t²) dt over the chord = (4/3)(1-y²)^{3/2}
        let want = 4.0 / 3.0 * (1.0f64 - y * y).powf(1.5);
        assert!((slice_weight_parallel(MeasureWeight::BochnerRiesz, 2, y) - want).abs() < 1e-14);
    }
}
