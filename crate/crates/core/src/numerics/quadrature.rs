//! Gauss-Legendre quadrature on [-1, 1].

use crate::error::{Error, Result};

/// Nodes and positive weights of a quadrature rule on `[-1, 1]`, together
/// with its polynomial degree of exactness.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Monomials t^j with j ≤ order are integrated exactly.
    pub order: usize,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// ∫_{-1}^{1} f.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// ∫_a^b f, by affine transport of the rule.
    pub fn integrate_on(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        half * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
    }
}

/// Legendre P_m(x) and its derivative, by upward recurrence.
fn legendre_pair(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if m == 0 {
        return (1.0, 0.0);
    }
    for j in 1..m {
        let jf = j as f64;
        let p2 = ((2.0 * jf + 1.0) * x * p1 - jf * p0) / (jf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// The m-point Gauss-Legendre rule: exact for polynomials of degree 2m-1.
///
/// Nodes are the roots of P_m found by Newton iteration from the Chebyshev
/// initial guess; weights are 2 / ((1-x²) P'_m(x)²).
pub fn gauss_legendre_rule(m: usize) -> Result<QuadratureRule> {
    if m == 0 {
        return Err(Error::invalid("Gauss-Legendre rule needs at least one node"));
    }
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..m.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(m, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        if m % 2 == 1 && i == m / 2 {
            x = 0.0;
        }
        let (_, dp) = legendre_pair(m, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x.abs();
        nodes[m - 1 - i] = x.abs();
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    Ok(QuadratureRule { nodes, weights, order: 2 * m - 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_rule() {
        let r = gauss_legendre_rule(1).unwrap();
        assert_eq!(r.nodes, vec![0.0]);
        assert_eq!(r.weights, vec![2.0]);
    }

    #[test]
    fn two_point_rule_from_moment_equations() {
        // Independent derivation: a symmetric 2-point rule {±x, w} must match
        // moments ∫1 = 2 and ∫t² = 2/3, giving w = 1, x = 1/√3.
        let x_expected = (1.0f64 / 3.0).sqrt();
        let r = gauss_legendre_rule(2).unwrap();
        assert!((r.nodes[0] + x_expected).abs() < 1e-15);
        assert!((r.nodes[1] - x_expected).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-15);
        assert!((r.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn five_point_rule_integrates_t8() {
        // ∫_{-1}^{1} t^8 dt = 2/9
        let r = gauss_legendre_rule(5).unwrap();
        let got = r.integrate(|t| t.powi(8));
        assert!((got - 2.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn zero_nodes_rejected() {
        assert!(gauss_legendre_rule(0).is_err());
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for m in 1..=64 {
            let r = gauss_legendre_rule(m).unwrap();
            let s: f64 = r.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-12, "m={m} sum={s}");
            assert!(r.weights.iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn exactness_up_to_order() {
        for m in [1usize, 2, 3, 5, 8, 13, 20] {
            let r = gauss_legendre_rule(m).unwrap();
            for j in 0..=r.order {
                let got = r.integrate(|t| t.powi(j as i32));
                let want = if j % 2 == 0 { 2.0 / (j as f64 + 1.0) } else { 0.0 };
                assert!((got - want).abs() < 1e-12, "m={m} j={j}: {got} vs {want}");
            }
        }
    }
}
