//! Dense univariate polynomials in the power basis.
//!
//! Degrees stay small (≤ ~20) throughout the crate, so a plain coefficient
//! vector is the right representation. Root finding only needs to locate sign
//! changes: tangential roots do not affect any of the L¹/total-variation
//! integrals computed from them.

/// Polynomial `c[0] + c[1] x + c[2] x² + …`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    pub coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: f64) -> Self {
        Poly::new(vec![c])
    }

    fn trim(&mut self) {
        while let Some(&c) = self.coeffs.last() {
            if c == 0.0 {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: f64) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0.0; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i] += a;
        }
        for (i, &b) in other.coeffs.iter().enumerate() {
            c[i] += b;
        }
        Poly::new(c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i + 1) as f64)
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly {
        let mut c = vec![0.0; self.coeffs.len() + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i + 1] = a / (i + 1) as f64;
        }
        Poly::new(c)
    }

    pub fn integrate(&self, lo: f64, hi: f64) -> f64 {
        let f = self.antiderivative();
        f.eval(hi) - f.eval(lo)
    }

    /// p(a x + b), expanded exactly.
    pub fn compose_affine(&self, a: f64, b: f64) -> Poly {
        let mut acc = Poly::zero();
        // Horner in the affine argument: ((c_n (ax+b) + c_{n-1}) (ax+b) + ...)
        let arg = Poly::new(vec![b, a]);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(&arg).add(&Poly::constant(c));
        }
        acc
    }

    /// Sign-change roots in `[lo, hi]`, sorted ascending.
    ///
    /// Locates roots between critical points of the polynomial (found
    /// recursively), refining each bracketed sign change by bisection.
    pub fn sign_change_roots(&self, lo: f64, hi: f64) -> Vec<f64> {
        if self.is_zero() || self.degree() == 0 {
            return vec![];
        }
        let mut pts = vec![lo];
        if self.degree() >= 2 {
            pts.extend(self.derivative().sign_change_roots(lo, hi));
        }
        pts.push(hi);
        let mut roots = Vec::new();
        for w in pts.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b <= a {
                continue;
            }
            let (fa, fb) = (self.eval(a), self.eval(b));
            if fa == 0.0 {
                if roots.last().map_or(true, |&r: &f64| (a - r) > 1e-15) {
                    roots.push(a);
                }
                continue;
            }
            if fa * fb < 0.0 {
                roots.push(self.bisect(a, b));
            } else if fb == 0.0 && (b - hi).abs() < 1e-300 {
                roots.push(b);
            }
        }
        roots
    }

    fn bisect(&self, mut a: f64, mut b: f64) -> f64 {
        let mut fa = self.eval(a);
        for _ in 0..128 {
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                break;
            }
            let fm = self.eval(m);
            if fm == 0.0 {
                return m;
            }
            if fa * fm < 0.0 {
                b = m;
            } else {
                a = m;
                fa = fm;
            }
        }
        0.5 * (a + b)
    }

    /// ∫ |p| over `[lo, hi]`, exact up to roundoff (splits at sign changes).
    pub fn l1_norm(&self, lo: f64, hi: f64) -> f64 {
        if self.is_zero() || hi <= lo {
            return 0.0;
        }
        let mut pts = vec![lo];
        pts.extend(self.sign_change_roots(lo, hi));
        pts.push(hi);
        let mut total = 0.0;
        for w in pts.windows(2) {
            if w[1] > w[0] {
                total += self.integrate(w[0], w[1]).abs();
            }
        }
        total
    }
}

/// Coefficients of the Legendre polynomial of degree `n` on `[-1, 1]`.
pub fn legendre(n: usize) -> Poly {
    let mut p0 = Poly::constant(1.0);
    if n == 0 {
        return p0;
    }
    let mut p1 = Poly::new(vec![0.0, 1.0]);
    let x = Poly::new(vec![0.0, 1.0]);
    for m in 1..n {
        // (m+1) P_{m+1} = (2m+1) x P_m - m P_{m-1}
        let mf = m as f64;
        let next = x
            .mul(&p1)
            .scale(2.0 * mf + 1.0)
            .add(&p0.scale(-mf))
            .scale(1.0 / (mf + 1.0));
        p0 = p1;
        p1 = next;
    }
    p1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_arith() {
        let p = Poly::new(vec![1.0, -2.0, 3.0]); // 1 - 2x + 3x^2
        assert_eq!(p.eval(2.0), 1.0 - 4.0 + 12.0);
        let q = p.derivative();
        assert_eq!(q.coeffs, vec![-2.0, 6.0]);
        assert!((p.integrate(0.0, 1.0) - (1.0 - 1.0 + 1.0)).abs() < 1e-15);
    }

    #[test]
    fn affine_composition() {
        let p = Poly::new(vec![0.0, 0.0, 1.0]); // x^2
        let q = p.compose_affine(2.0, -1.0); // (2x-1)^2 = 1 - 4x + 4x^2
        assert!((q.eval(0.3) - (2.0 * 0.3f64 - 1.0).powi(2)).abs() < 1e-15);
    }

    #[test]
    fn roots_of_legendre() {
        // P_3 has roots 0, ±sqrt(3/5)
        let p = legendre(3);
        let r = p.sign_change_roots(-1.0, 1.0);
        assert_eq!(r.len(), 3);
        let s = (3.0f64 / 5.0).sqrt();
        assert!((r[0] + s).abs() < 1e-12);
        assert!(r[1].abs() < 1e-12);
        assert!((r[2] - s).abs() < 1e-12);
    }

    #[test]
    fn l1_of_linear() {
        // |x| over [-1, 1] integrates to 1
        let p = Poly::new(vec![0.0, 1.0]);
        assert!((p.l1_norm(-1.0, 1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn legendre_orthogonality_to_lower_monomials() {
        for n in 1..=7 {
            let p = legendre(n);
            for r in 0..n {
                let mut xr = vec![0.0; r + 1];
                xr[r] = 1.0;
                let m = p.mul(&Poly::new(xr)).integrate(-1.0, 1.0);
                assert!(m.abs() < 1e-13, "n={n} r={r} moment={m}");
            }
        }
    }
}
