//! Exact piecewise polynomials with compact support.
//!
//! Each piece stores its polynomial in the normalized local variable
//! `s = (2y - lo - hi) / (hi - lo) ∈ [-1, 1]`. Affine substitutions then leave
//! the stored coefficients untouched (up to a sign flip), which keeps narrow
//! pieces far from the origin — the dilated packing profiles — numerically
//! exact instead of blowing coefficients up like `width^{-degree}`.
//!
//! Convolution is computed symbolically: with both operands pre-split to
//! comparable piece widths the bivariate expansion is well conditioned, and
//! the result is again an exact piecewise polynomial.

use crate::poly::Poly;

#[derive(Debug, Clone)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    /// Polynomial in the normalized local variable.
    pub poly: Poly,
}

impl Piece {
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }

    pub fn to_local(&self, y: f64) -> f64 {
        (y - self.mid()) / self.half_width()
    }

    pub fn eval(&self, y: f64) -> f64 {
        self.poly.eval(self.to_local(y))
    }

    /// Restriction to `[a, b] ⊆ [lo, hi]`, re-normalized.
    fn restrict(&self, a: f64, b: f64) -> Piece {
        let (mu, h) = (0.5 * (a + b), 0.5 * (b - a));
        // s_old = (mu + h s_new - mid) / half_width
        let scale = h / self.half_width();
        let shift = (mu - self.mid()) / self.half_width();
        Piece {
            lo: a,
            hi: b,
            poly: self.poly.compose_affine(scale, shift),
        }
    }
}

/// Compactly supported piecewise polynomial; zero outside its pieces.
#[derive(Debug, Clone, Default)]
pub struct PiecewisePoly {
    /// Sorted, non-overlapping pieces.
    pub pieces: Vec<Piece>,
}

impl PiecewisePoly {
    pub fn new(pieces: Vec<Piece>) -> Self {
        let mut pieces: Vec<Piece> = pieces
            .into_iter()
            .filter(|p| p.hi > p.lo && !p.poly.is_zero())
            .collect();
        pieces.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap());
        PiecewisePoly { pieces }
    }

    /// Build from pieces whose polynomials are in the global variable `y`.
    pub fn from_global(pieces: Vec<(f64, f64, Poly)>) -> Self {
        PiecewisePoly::new(
            pieces
                .into_iter()
                .map(|(lo, hi, p)| {
                    let (mu, h) = (0.5 * (lo + hi), 0.5 * (hi - lo));
                    Piece {
                        lo,
                        hi,
                        poly: p.compose_affine(h, mu),
                    }
                })
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn support(&self) -> Option<(f64, f64)> {
        if self.pieces.is_empty() {
            None
        } else {
            Some((self.pieces[0].lo, self.pieces.last().unwrap().hi))
        }
    }

    /// All piece edges, ascending.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut b = Vec::with_capacity(self.pieces.len() + 1);
        for p in &self.pieces {
            if b.last().map_or(true, |&x: &f64| p.lo > x) {
                b.push(p.lo);
            }
            b.push(p.hi);
        }
        b
    }

    pub fn max_degree(&self) -> usize {
        self.pieces.iter().map(|p| p.poly.degree()).max().unwrap_or(0)
    }

    pub fn eval(&self, y: f64) -> f64 {
        // Binary search for the piece containing y.
        let mut lo = 0usize;
        let mut hi = self.pieces.len();
        while lo < hi {
            let m = (lo + hi) / 2;
            let p = &self.pieces[m];
            if y < p.lo {
                hi = m;
            } else if y > p.hi {
                lo = m + 1;
            } else {
                return p.eval(y);
            }
        }
        0.0
    }

    pub fn scale(&self, c: f64) -> PiecewisePoly {
        PiecewisePoly {
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece {
                    lo: p.lo,
                    hi: p.hi,
                    poly: p.poly.scale(c),
                })
                .collect(),
        }
    }

    /// g(y) = f(α y + β) with α ≠ 0, exact.
    pub fn affine_arg(&self, alpha: f64, beta: f64) -> PiecewisePoly {
        assert!(alpha != 0.0);
        let mut pieces: Vec<Piece> = self
            .pieces
            .iter()
            .map(|p| {
                let (a, b) = ((p.lo - beta) / alpha, (p.hi - beta) / alpha);
                if alpha > 0.0 {
                    Piece { lo: a, hi: b, poly: p.poly.clone() }
                } else {
                    // Orientation flips: s ↦ -s.
                    let flipped = Poly::new(
                        p.poly
                            .coeffs
                            .iter()
                            .enumerate()
                            .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
                            .collect(),
                    );
                    Piece { lo: b, hi: a, poly: flipped }
                }
            })
            .collect();
        pieces.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap());
        PiecewisePoly { pieces }
    }

    pub fn derivative(&self) -> PiecewisePoly {
        PiecewisePoly::new(
            self.pieces
                .iter()
                .map(|p| Piece {
                    lo: p.lo,
                    hi: p.hi,
                    poly: p.poly.derivative().scale(1.0 / p.half_width()),
                })
                .collect(),
        )
    }

    pub fn integral(&self) -> f64 {
        self.pieces
            .iter()
            .map(|p| p.half_width() * p.poly.integrate(-1.0, 1.0))
            .sum()
    }

    /// ∫ y^r f(y) dy, exact.
    pub fn moment(&self, r: usize) -> f64 {
        let mut xr = vec![0.0; r + 1];
        xr[r] = 1.0;
        let xr = Poly::new(xr);
        self.pieces
            .iter()
            .map(|p| {
                let yr = xr.compose_affine(p.half_width(), p.mid());
                p.half_width() * yr.mul(&p.poly).integrate(-1.0, 1.0)
            })
            .sum()
    }

    /// ∫ |f(y)| dy, exact (splits each piece at its sign changes).
    pub fn l1_norm(&self) -> f64 {
        self.pieces
            .iter()
            .map(|p| p.half_width() * p.poly.l1_norm(-1.0, 1.0))
            .sum()
    }

    pub fn l2_norm_sq(&self) -> f64 {
        self.pieces
            .iter()
            .map(|p| p.half_width() * p.poly.mul(&p.poly).integrate(-1.0, 1.0))
            .sum()
    }

    /// Jump discontinuities `(location, f(x+) - f(x-))`, skipping jumps below
    /// `tol`.
    pub fn jumps(&self, tol: f64) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        let mut prev_hi = f64::NEG_INFINITY;
        let mut prev_val = 0.0f64;
        for p in &self.pieces {
            let left_val = if (p.lo - prev_hi).abs() < 1e-14 { prev_val } else { 0.0 };
            if (p.lo - prev_hi).abs() >= 1e-14 && prev_hi > f64::NEG_INFINITY && prev_val.abs() > tol {
                // gap after previous piece: drop to zero
                out.push((prev_hi, -prev_val));
            }
            let enter = p.poly.eval(-1.0);
            let jump = enter - left_val;
            if jump.abs() > tol {
                out.push((p.lo, jump));
            }
            prev_hi = p.hi;
            prev_val = p.poly.eval(1.0);
        }
        if prev_hi > f64::NEG_INFINITY && prev_val.abs() > tol {
            out.push((prev_hi, -prev_val));
        }
        out
    }

    /// Split every piece into subpieces no wider than `w`.
    fn split_to_width(&self, w: f64) -> PiecewisePoly {
        let mut pieces = Vec::new();
        for p in &self.pieces {
            let width = p.hi - p.lo;
            let parts = (width / w).ceil().max(1.0) as usize;
            let step = width / parts as f64;
            for i in 0..parts {
                let a = p.lo + i as f64 * step;
                let b = if i + 1 == parts { p.hi } else { p.lo + (i + 1) as f64 * step };
                pieces.push(p.restrict(a, b));
            }
        }
        PiecewisePoly { pieces }
    }

    fn refine_to(&self, cuts: &[f64]) -> PiecewisePoly {
        let mut pieces = Vec::new();
        for p in &self.pieces {
            let mut edges = vec![p.lo];
            for &c in cuts {
                if c > p.lo + 1e-15 && c < p.hi - 1e-15 {
                    edges.push(c);
                }
            }
            edges.push(p.hi);
            edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for w in edges.windows(2) {
                if w[1] > w[0] {
                    pieces.push(p.restrict(w[0], w[1]));
                }
            }
        }
        PiecewisePoly { pieces }
    }

    pub fn add(&self, other: &PiecewisePoly) -> PiecewisePoly {
        self.combine(other, |a, b| match (a, b) {
            (Some(p), Some(q)) => p.add(q),
            (Some(p), None) => p.clone(),
            (None, Some(q)) => q.clone(),
            (None, None) => Poly::zero(),
        })
    }

    pub fn product(&self, other: &PiecewisePoly) -> PiecewisePoly {
        self.combine(other, |a, b| match (a, b) {
            (Some(p), Some(q)) => p.mul(q),
            _ => Poly::zero(),
        })
    }

    fn combine(
        &self,
        other: &PiecewisePoly,
        op: impl Fn(Option<&Poly>, Option<&Poly>) -> Poly,
    ) -> PiecewisePoly {
        let mut cuts = self.breakpoints();
        cuts.extend(other.breakpoints());
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
        let lhs = self.refine_to(&cuts);
        let rhs = other.refine_to(&cuts);
        let mut pieces = Vec::new();
        for w in cuts.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b - a < 1e-15 {
                continue;
            }
            let m = 0.5 * (a + b);
            let pl = lhs.pieces.iter().find(|p| p.lo <= m && m <= p.hi);
            let pr = rhs.pieces.iter().find(|p| p.lo <= m && m <= p.hi);
            if pl.is_none() && pr.is_none() {
                continue;
            }
            let poly = op(pl.map(|p| &p.poly), pr.map(|p| &p.poly));
            if !poly.is_zero() {
                pieces.push(Piece { lo: a, hi: b, poly });
            }
        }
        PiecewisePoly::new(pieces)
    }

    /// Exact convolution `(f * g)(x) = ∫ f(τ) g(x - τ) dτ`.
    pub fn convolve(&self, other: &PiecewisePoly) -> PiecewisePoly {
        if self.is_zero() || other.is_zero() {
            return PiecewisePoly::default();
        }
        // Pre-split to comparable widths so the bivariate expansion below has
        // bounded coefficient growth.
        let wmin = self
            .pieces
            .iter()
            .chain(other.pieces.iter())
            .map(|p| p.hi - p.lo)
            .fold(f64::INFINITY, f64::min);
        let f = self.split_to_width(1.25 * wmin);
        let g = other.split_to_width(1.25 * wmin);

        let mut xs: Vec<f64> = Vec::new();
        for p in &f.pieces {
            for q in &g.pieces {
                xs.push(p.lo + q.lo);
                xs.push(p.lo + q.hi);
                xs.push(p.hi + q.lo);
                xs.push(p.hi + q.hi);
            }
        }
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let span = xs.last().unwrap() - xs.first().unwrap();
        xs.dedup_by(|a, b| (*a - *b).abs() < 1e-14 * (1.0 + span));

        let mut pieces = Vec::new();
        for w in xs.windows(2) {
            let (xl, xu) = (w[0], w[1]);
            if xu - xl < 1e-14 * (1.0 + span) {
                continue;
            }
            let (mux, hx) = (0.5 * (xl + xu), 0.5 * (xu - xl));
            let mut acc = Poly::zero();
            for p in &f.pieces {
                for q in &g.pieces {
                    if mux < p.lo + q.lo || mux > p.hi + q.hi {
                        continue;
                    }
                    let contrib = convolve_pair(p, q, mux, hx);
                    acc = acc.add(&contrib);
                }
            }
            if !acc.is_zero() {
                pieces.push(Piece { lo: xl, hi: xu, poly: acc });
            }
        }
        PiecewisePoly::new(pieces)
    }
}

/// Contribution of the piece pair `(p, q)` to the convolution on the result
/// interval with center `mux` and half-width `hx`, as a polynomial in the
/// normalized result variable ξ.
fn convolve_pair(p: &Piece, q: &Piece, mux: f64, hx: f64) -> Poly {
    let (mp, hp) = (p.mid(), p.half_width());
    let (mq, hq) = (q.mid(), q.half_width());

    // τ-limits: max(p.lo, x - q.hi) .. min(p.hi, x - q.lo). Which branch is
    // active is constant on the interval because the result grid refines all
    // pairwise breakpoints; decide at the midpoint.
    let lo_is_const = mux - q.hi <= p.lo;
    let hi_is_const = mux - q.lo >= p.hi;
    let tau_lo_mid = p.lo.max(mux - q.hi);
    let tau_hi_mid = p.hi.min(mux - q.lo);
    if tau_hi_mid - tau_lo_mid <= 0.0 {
        return Poly::zero();
    }

    // ρ = (x - τ - mq)/hq = A + B ξ + C σ with τ = mp + hp σ, x = mux + hx ξ.
    let a = (mux - mp - mq) / hq;
    let b = hx / hq;
    let c = -hp / hq;

    let dq = q.poly.degree();
    let dp = p.poly.degree();
    // T[u][v]: coefficient of ξ^u σ^v for q(ρ), built by Horner in ρ.
    let mut t = vec![vec![0.0f64; dp + dq + 2]; dq + 1];
    t[0][0] = *q.poly.coeffs.last().unwrap_or(&0.0);
    for &qc in q.poly.coeffs.iter().rev().skip(1) {
        // t ← t * (A + Bξ + Cσ) + qc
        let mut nt = vec![vec![0.0f64; dp + dq + 2]; dq + 1];
        for (u, row) in t.iter().enumerate() {
            for (v, &val) in row.iter().enumerate() {
                if val == 0.0 {
                    continue;
                }
                nt[u][v] += a * val;
                if u + 1 < nt.len() {
                    nt[u + 1][v] += b * val;
                }
                nt[u][v + 1] += c * val;
            }
        }
        nt[0][0] += qc;
        t = nt;
    }
    // Multiply by p(σ).
    let mut tp = vec![vec![0.0f64; dp + dq + 2]; dq + 1];
    for (u, row) in t.iter().enumerate() {
        for (v, &val) in row.iter().enumerate() {
            if val == 0.0 {
                continue;
            }
            for (i, &pc) in p.poly.coeffs.iter().enumerate() {
                tp[u][v + i] += val * pc;
            }
        }
    }
    // Antiderivative in σ.
    let vmax = dp + dq + 2;
    let mut ti = vec![vec![0.0f64; vmax + 1]; dq + 1];
    for (u, row) in tp.iter().enumerate() {
        for (v, &val) in row.iter().enumerate() {
            if val != 0.0 {
                ti[u][v + 1] = val / (v + 1) as f64;
            }
        }
    }

    // σ-limits as affine functions of ξ.
    let sigma_hi = if hi_is_const {
        (1.0, 0.0)
    } else {
        ((mux - q.lo - mp) / hp, hx / hp)
    };
    let sigma_lo = if lo_is_const {
        (-1.0, 0.0)
    } else {
        ((mux - q.hi - mp) / hp, hx / hp)
    };

    let eval_at = |limit: (f64, f64)| -> Poly {
        let (c0, c1) = limit;
        let base = Poly::new(vec![c0, c1]);
        // powers of (c0 + c1 ξ)
        let mut powers = Vec::with_capacity(vmax + 2);
        powers.push(Poly::constant(1.0));
        for v in 1..=vmax {
            let prev = powers[v - 1].clone();
            powers.push(prev.mul(&base));
        }
        let mut acc = Poly::zero();
        for (u, row) in ti.iter().enumerate() {
            for (v, &val) in row.iter().enumerate() {
                if val == 0.0 {
                    continue;
                }
                let mut xi_u = vec![0.0; u + 1];
                xi_u[u] = val;
                acc = acc.add(&Poly::new(xi_u).mul(&powers[v]));
            }
        }
        acc
    };

    eval_at(sigma_hi).add(&eval_at(sigma_lo).scale(-1.0)).scale(hp)
}
