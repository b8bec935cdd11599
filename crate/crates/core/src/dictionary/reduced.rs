//! Reduced integrals: L² inner products of ridge functions over the unit
//! ball, computed as one- or two-dimensional integrals in the ridge
//! coordinates.
//!
//! Parallel (or antiparallel) directions reduce to a single slice integral
//! against `slice_weight_parallel`. Independent directions reduce to a 2D
//! integral of f(y₁) g(y₂) against the conic weight τ(q); panels are split at
//! profile breakpoints and at the cone boundary q = 1, where τ has limited
//! smoothness. Panels touching y = ±1 are integrated under the substitution
//! y = ±(1 - v²), which removes the half-power endpoint behaviour of the
//! weights.

use crate::dictionary::profile::RidgeFunction;
use crate::error::{Error, Result};
use crate::numerics::quadrature::{gauss_legendre_rule, QuadratureRule};
use crate::numerics::weights::{
    slice_weight_independent, slice_weight_parallel, MeasureWeight,
};
use std::sync::OnceLock;

const MAX_CACHED_NODES: usize = 96;

/// Shared Gauss-Legendre rules; node generation is cheap but the inner loops
/// here run hundreds of thousands of times during Gram assembly.
pub(crate) fn cached_rule(m: usize) -> &'static QuadratureRule {
    static CACHE: OnceLock<Vec<OnceLock<QuadratureRule>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| (0..=MAX_CACHED_NODES).map(|_| OnceLock::new()).collect());
    let m = m.clamp(1, MAX_CACHED_NODES);
    cache[m].get_or_init(|| gauss_legendre_rule(m).expect("m >= 1"))
}

#[derive(Debug, Clone, Copy)]
pub struct ReducedOpts {
    /// Gauss-Legendre nodes per outer panel.
    pub outer_nodes: usize,
    /// Minimum Gauss-Legendre nodes per inner panel (raised to the exactness
    /// requirement of the integrand degree).
    pub inner_nodes: usize,
    /// Absolute tolerance for adaptive refinement of outer panels;
    /// `None` runs at fixed effort.
    pub adaptive_tol: Option<f64>,
    pub max_depth: usize,
}

impl Default for ReducedOpts {
    fn default() -> Self {
        ReducedOpts { outer_nodes: 24, inner_nodes: 12, adaptive_tol: None, max_depth: 20 }
    }
}

impl ReducedOpts {
    pub fn from_rule(rule: &QuadratureRule) -> Self {
        ReducedOpts { outer_nodes: rule.len().max(12), ..Default::default() }
    }

    pub fn adaptive(tol: f64) -> Self {
        ReducedOpts { adaptive_tol: Some(tol), ..Default::default() }
    }
}

fn unit_dot(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::invalid("ridge functions must share the ambient dimension"));
    }
    for v in [a, b] {
        let n: f64 = v.iter().map(|x| x * x).sum();
        if (n - 1.0).abs() > 1e-9 {
            return Err(Error::invalid("ridge directions must be unit vectors"));
        }
    }
    Ok(a.iter().zip(b).map(|(x, y)| x * y).sum())
}

/// ⟨f, g⟩ over L²(B₁^d, dμ_weight) for two ridge functions.
pub fn reduced_ridge_inner_product(
    f: &RidgeFunction,
    g: &RidgeFunction,
    weight: MeasureWeight,
    rule: &QuadratureRule,
) -> Result<f64> {
    reduced_inner_product_opts(f, g, weight, &ReducedOpts::from_rule(rule))
}

pub fn reduced_inner_product_opts(
    f: &RidgeFunction,
    g: &RidgeFunction,
    weight: MeasureWeight,
    opts: &ReducedOpts,
) -> Result<f64> {
    let d = f.dim();
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    let dot = unit_dot(f.direction, g.direction)?;
    if 1.0 - dot.abs() < 1e-12 {
        Ok(parallel_inner_product(f, g, dot.signum(), weight, d, opts))
    } else {
        independent_inner_product(f, g, dot, weight, d, opts)
    }
}

/// Merge, sort and dedupe panel edges within (lo, hi).
fn panel_edges(lo: f64, hi: f64, interior: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let mut edges = vec![lo];
    for x in interior {
        if x > lo + 1e-14 && x < hi - 1e-14 {
            edges.push(x);
        }
    }
    edges.push(hi);
    edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
    edges.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    edges
}

/// ∫_a^b h(y) dy with the substitution y = ±(1 - v²) when the panel touches
/// the corresponding ball boundary.
fn panel_integral(a: f64, b: f64, nodes: usize, h: &impl Fn(f64) -> f64) -> f64 {
    let rule = cached_rule(nodes);
    let touches_hi = (b - 1.0).abs() < 1e-14;
    let touches_lo = (a + 1.0).abs() < 1e-14;
    if touches_hi && touches_lo {
        let m = 0.5 * (a + b);
        return panel_integral(a, m, nodes, h) + panel_integral(m, b, nodes, h);
    }
    if touches_hi {
        let vmax = (1.0 - a).max(0.0).sqrt();
        return rule.integrate_on(0.0, vmax, |v| 2.0 * v * h(1.0 - v * v));
    }
    if touches_lo {
        let vmax = (1.0 + b).max(0.0).sqrt();
        return rule.integrate_on(0.0, vmax, |v| 2.0 * v * h(v * v - 1.0));
    }
    rule.integrate_on(a, b, h)
}

fn adaptive_panel(
    a: f64,
    b: f64,
    nodes: usize,
    h: &impl Fn(f64) -> f64,
    tol: f64,
    depth: usize,
) -> Result<f64> {
    let coarse = panel_integral(a, b, nodes, h);
    let m = 0.5 * (a + b);
    let fine = panel_integral(a, m, nodes, h) + panel_integral(m, b, nodes, h);
    if (fine - coarse).abs() <= tol.max(1e-15 * fine.abs()) {
        return Ok(fine);
    }
    if depth == 0 {
        return Err(Error::AccuracyFailure(format!(
            "panel [{a}, {b}] did not converge (residual {:.3e} > {tol:.3e})",
            (fine - coarse).abs()
        )));
    }
    Ok(adaptive_panel(a, m, nodes, h, 0.5 * tol, depth - 1)?
        + adaptive_panel(m, b, nodes, h, 0.5 * tol, depth - 1)?)
}

fn integrate_panels(
    edges: &[f64],
    nodes: usize,
    h: &impl Fn(f64) -> f64,
    opts: &ReducedOpts,
) -> Result<f64> {
    let total_width: f64 = edges.last().unwrap() - edges.first().unwrap();
    let mut acc = 0.0;
    for w in edges.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b - a < 1e-14 {
            continue;
        }
        acc += match opts.adaptive_tol {
            None => panel_integral(a, b, nodes, h),
            Some(tol) => {
                let share = tol * ((b - a) / total_width).max(1e-3);
                adaptive_panel(a, b, nodes, h, share, opts.max_depth)?
            }
        };
    }
    Ok(acc)
}

fn parallel_inner_product(
    f: &RidgeFunction,
    g: &RidgeFunction,
    sign: f64,
    weight: MeasureWeight,
    d: usize,
    opts: &ReducedOpts,
) -> f64 {
    let (flo, fhi) = f.profile.support();
    let (glo, ghi) = g.profile.support();
    // y must satisfy sign·y ∈ supp g
    let (rlo, rhi) = if sign > 0.0 { (glo, ghi) } else { (-ghi, -glo) };
    let lo = flo.max(rlo).max(-1.0);
    let hi = fhi.min(rhi).min(1.0);
    if hi <= lo {
        return 0.0;
    }
    let mut interior = f.profile.breakpoints();
    interior.extend(g.profile.breakpoints().into_iter().map(|b| sign * b));
    let edges = panel_edges(lo, hi, interior);
    let h = |y: f64| {
        f.profile.eval(y) * g.profile.eval(sign * y) * slice_weight_parallel(weight, d, y)
    };
    // the slice weight is analytic away from ±1; fixed panels suffice
    integrate_panels(&edges, opts.outer_nodes, &h, &ReducedOpts { adaptive_tol: None, ..*opts })
        .expect("fixed-effort panels cannot fail")
}

fn independent_inner_product(
    f: &RidgeFunction,
    g: &RidgeFunction,
    c: f64,
    weight: MeasureWeight,
    d: usize,
    opts: &ReducedOpts,
) -> Result<f64> {
    let det = 1.0 - c * c;
    let s = det.sqrt();
    let (flo, fhi) = f.profile.support();
    let (flo, fhi) = (flo.max(-1.0), fhi.min(1.0));
    if fhi <= flo {
        return Ok(0.0);
    }
    let (glo, ghi) = g.profile.support();
    let (glo, ghi) = (glo.max(-1.0), ghi.min(1.0));
    if ghi <= glo {
        return Ok(0.0);
    }

    // Outer kinks: f breakpoints plus the y₁ where the cone boundary crosses
    // a g breakpoint: c·B ± s·sqrt(1-B²) solves y₂±(y₁) = B.
    let mut interior = f.profile.breakpoints();
    let mut g_marks = g.profile.breakpoints();
    g_marks.push(glo);
    g_marks.push(ghi);
    for b in g_marks {
        if b.abs() <= 1.0 {
            let root = s * (1.0 - b * b).sqrt();
            interior.push(c * b + root);
            interior.push(c * b - root);
        }
    }
    let edges = panel_edges(flo, fhi, interior);

    // Lebesgue weight in odd dimension has a half-power at the cone boundary.
    let half_power_at_cone =
        matches!(weight, MeasureWeight::Lebesgue) && d % 2 == 1;
    let inner_degree = g.profile.degree() + 2 * (d - 1) + 2;
    let inner_nodes = opts.inner_nodes.max(inner_degree / 2 + 2);

    let q_of = |y1: f64, y2: f64| (y1 * y1 - 2.0 * c * y1 * y2 + y2 * y2) / det;

    let inner = |y1: f64| -> f64 {
        if y1.abs() >= 1.0 {
            return 0.0;
        }
        let half = s * (1.0 - y1 * y1).sqrt();
        let root_lo = c * y1 - half;
        let root_hi = c * y1 + half;
        let lo = glo.max(root_lo);
        let hi = ghi.min(root_hi);
        if hi <= lo {
            return 0.0;
        }
        let edges = panel_edges(lo, hi, g.profile.breakpoints());
        let rule = cached_rule(inner_nodes);
        let mut acc = 0.0;
        for w in edges.windows(2) {
            let (u, v) = (w[0], w[1]);
            if v - u < 1e-15 {
                continue;
            }
            let integrand = |y2: f64| {
                g.profile.eval(y2) * slice_weight_independent(weight, d, q_of(y1, y2))
            };
            let touch_lo = half_power_at_cone && (u - root_lo).abs() < 1e-14;
            let touch_hi = half_power_at_cone && (v - root_hi).abs() < 1e-14;
            acc += if touch_lo && touch_hi {
                let m = 0.5 * (u + v);
                sqrt_sub_panel(u, m, rule, &integrand, true)
                    + sqrt_sub_panel(m, v, rule, &integrand, false)
            } else if touch_lo {
                sqrt_sub_panel(u, v, rule, &integrand, true)
            } else if touch_hi {
                sqrt_sub_panel(u, v, rule, &integrand, false)
            } else {
                rule.integrate_on(u, v, integrand)
            };
        }
        acc
    };

    let h = |y1: f64| f.profile.eval(y1) * inner(y1);
    let total = integrate_panels(&edges, opts.outer_nodes, &h, opts)?;
    Ok(total / s)
}

/// ∫_u^v h with a square-root substitution at the indicated end.
fn sqrt_sub_panel(
    u: f64,
    v: f64,
    rule: &QuadratureRule,
    h: &impl Fn(f64) -> f64,
    at_lower: bool,
) -> f64 {
    let wmax = (v - u).sqrt();
    if at_lower {
        rule.integrate_on(0.0, wmax, |w| 2.0 * w * h(u + w * w))
    } else {
        rule.integrate_on(0.0, wmax, |w| 2.0 * w * h(v - w * w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::atom::RidgeAtom;
    use crate::numerics::ball_monte_carlo;

    fn rule() -> QuadratureRule {
        gauss_legendre_rule(24).unwrap()
    }

    #[test]
    fn parallel_disjoint_supports_vanish() {
        // profiles supported on disjoint slabs: σ₀(y - 0.6) vs 1 - σ₀(y + ... )
        // use two heavisides with flipped direction so the supports miss
        let a = RidgeAtom::new(vec![1.0, 0.0], -0.6, 0).unwrap(); // supp y ≥ 0.6
        let b = RidgeAtom::new(vec![-1.0, 0.0], -0.6, 0).unwrap(); // supp -y ≥ 0.6
        let v = reduced_ridge_inner_product(
            &RidgeFunction::from_atom(&a),
            &RidgeFunction::from_atom(&b),
            MeasureWeight::Lebesgue,
            &rule(),
        )
        .unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn self_inner_product_nonnegative() {
        let atoms = [
            RidgeAtom::new(vec![0.6, 0.8], 0.3, 0).unwrap(),
            RidgeAtom::new(vec![0.0, 1.0], -0.2, 1).unwrap(),
            RidgeAtom::new(vec![1.0, 0.0], 1.5, 2).unwrap(),
        ];
        for a in &atoms {
            for w in [MeasureWeight::Lebesgue, MeasureWeight::BochnerRiesz] {
                let v = reduced_ridge_inner_product(
                    &RidgeFunction::from_atom(a),
                    &RidgeFunction::from_atom(a),
                    w,
                    &rule(),
                )
                .unwrap();
                assert!(v >= 0.0, "{v}");
            }
        }
    }

    #[test]
    fn parallel_heaviside_overlap_area() {
        // d=2 Lebesgue, same direction: ⟨σ₀(y+b1), σ₀(y+b2)⟩ is the area of the
        // smaller cap {y ≥ max(-b1,-b2)} ∩ B².
        let a = RidgeAtom::new(vec![1.0, 0.0], 0.0, 0).unwrap();
        let b = RidgeAtom::new(vec![1.0, 0.0], -0.5, 0).unwrap();
        let v = reduced_ridge_inner_product(
            &RidgeFunction::from_atom(&a),
            &RidgeFunction::from_atom(&b),
            MeasureWeight::Lebesgue,
            &rule(),
        )
        .unwrap();
        // cap area beyond y = 0.5: ∫_{0.5}^{1} 2 sqrt(1-y²) dy
        let t: f64 = 0.5;
        let want = std::f64::consts::PI / 2.0 - (t * (1.0 - t * t).sqrt() + t.asin());
        assert!((v - want).abs() < 1e-10, "{v} vs {want}");
    }

    #[test]
    fn independent_pair_matches_monte_carlo() {
        let a = RidgeAtom::new(vec![1.0, 0.0], 0.2, 0).unwrap();
        let th: f64 = 1.1;
        let b = RidgeAtom::new(vec![th.cos(), th.sin()], -0.4, 0).unwrap();
        for w in [MeasureWeight::Lebesgue, MeasureWeight::BochnerRiesz] {
            let exact = reduced_ridge_inner_product(
                &RidgeFunction::from_atom(&a),
                &RidgeFunction::from_atom(&b),
                w,
                &rule(),
            )
            .unwrap();
            let mc = ball_monte_carlo(2, |x| a.eval(x) * b.eval(x), w, 400_000, 77).unwrap();
            assert!(
                (exact - mc.estimate).abs() <= 3.0 * mc.std_error,
                "{w:?}: exact {exact} mc {} ± {}",
                mc.estimate,
                mc.std_error
            );
        }
    }

    #[test]
    fn bilinearity_in_scaling() {
        use crate::piecewise::PiecewisePoly;
        use crate::poly::Poly;
        let bump = PiecewisePoly::from_global(vec![(-0.4, 0.6, Poly::new(vec![0.24, 0.2, -1.0]))]);
        let scaled = bump.scale(3.5);
        let dir1 = [1.0, 0.0];
        let th: f64 = 0.7;
        let dir2 = [th.cos(), th.sin()];
        let f1 = RidgeFunction::piecewise(&dir1, &bump);
        let f2 = RidgeFunction::piecewise(&dir1, &scaled);
        let g = RidgeAtom::new(dir2.to_vec(), 0.1, 1).unwrap();
        let v1 = reduced_ridge_inner_product(&f1, &RidgeFunction::from_atom(&g), MeasureWeight::BochnerRiesz, &rule()).unwrap();
        let v2 = reduced_ridge_inner_product(&f2, &RidgeFunction::from_atom(&g), MeasureWeight::BochnerRiesz, &rule()).unwrap();
        assert!((v2 - 3.5 * v1).abs() <= 1e-10 * v1.abs().max(1.0), "{v2} vs {}", 3.5 * v1);
    }

    #[test]
    fn bochner_riesz_dominated_by_lebesgue() {
        // nonnegative profiles: the Bochner-Riesz density is ≤ 1 pointwise
        let a = RidgeAtom::new(vec![1.0, 0.0], 0.7, 1).unwrap();
        let th: f64 = 0.9;
        let b = RidgeAtom::new(vec![th.cos(), th.sin()], 0.1, 1).unwrap();
        let leb = reduced_ridge_inner_product(
            &RidgeFunction::from_atom(&a),
            &RidgeFunction::from_atom(&b),
            MeasureWeight::Lebesgue,
            &rule(),
        )
        .unwrap();
        let br = reduced_ridge_inner_product(
            &RidgeFunction::from_atom(&a),
            &RidgeFunction::from_atom(&b),
            MeasureWeight::BochnerRiesz,
            &rule(),
        )
        .unwrap();
        assert!(br.abs() <= leb + 1e-12, "br {br} leb {leb}");
    }

    #[test]
    fn antiparallel_directions_use_reflected_profile() {
        // ⟨σ₀(y+b), σ₀(-y+b')⟩ over the strip where both are 1
        let a = RidgeAtom::new(vec![1.0, 0.0], 0.3, 0).unwrap();
        let b = RidgeAtom::new(vec![-1.0, 0.0], 0.5, 0).unwrap();
        let v = reduced_ridge_inner_product(
            &RidgeFunction::from_atom(&a),
            &RidgeFunction::from_atom(&b),
            MeasureWeight::Lebesgue,
            &rule(),
        )
        .unwrap();
        let mc = ball_monte_carlo(2, |x| a.eval(x) * b.eval(x), MeasureWeight::Lebesgue, 400_000, 5)
            .unwrap();
        assert!((v - mc.estimate).abs() <= 3.0 * mc.std_error);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = RidgeAtom::new(vec![1.0, 0.0], 0.0, 0).unwrap();
        let b = RidgeAtom::new(vec![1.0, 0.0, 0.0], 0.0, 0).unwrap();
        assert!(reduced_ridge_inner_product(
            &RidgeFunction::from_atom(&a),
            &RidgeFunction::from_atom(&b),
            MeasureWeight::Lebesgue,
            &rule(),
        )
        .is_err());
    }

    #[test]
    fn non_unit_direction_rejected() {
        use crate::piecewise::PiecewisePoly;
        use crate::poly::Poly;
        let bump = PiecewisePoly::from_global(vec![(-0.5, 0.5, Poly::constant(1.0))]);
        let bad = [0.5, 0.5];
        let good = [1.0, 0.0];
        let f = RidgeFunction::piecewise(&bad, &bump);
        let g = RidgeFunction::piecewise(&good, &bump);
        assert!(reduced_ridge_inner_product(&f, &g, MeasureWeight::Lebesgue, &rule()).is_err());
    }
}
