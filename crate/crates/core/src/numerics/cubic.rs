use super::Complex;
use crate::error::{Error, Result};

/// Relative magnitude below which the leading coefficient is treated as zero.
pub const DEGENERACY_THRESHOLD: f64 = 1e-14;

/// Cubic `c3 x^3 + c2 x^2 + c1 x + c0` with complex coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicPolynomial {
    pub c3: Complex,
    pub c2: Complex,
    pub c1: Complex,
    pub c0: Complex,
}

impl CubicPolynomial {
    pub fn new(c3: Complex, c2: Complex, c1: Complex, c0: Complex) -> Self {
        Self { c3, c2, c1, c0 }
    }

    pub fn eval(&self, x: Complex) -> Complex {
        ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0
    }

    pub fn eval_derivative(&self, x: Complex) -> Complex {
        (3.0 * self.c3 * x + 2.0 * self.c2) * x + self.c1
    }

    pub fn max_coefficient_norm(&self) -> f64 {
        self.c3
            .norm()
            .max(self.c2.norm())
            .max(self.c1.norm())
            .max(self.c0.norm())
    }
}

/// Principal cube root: magnitude^(1/3) at a third of the principal argument.
fn cbrt(z: Complex) -> Complex {
    if z == Complex::ZERO {
        return Complex::ZERO;
    }
    Complex::from_polar(z.norm().cbrt(), z.arg() / 3.0)
}

/// Roots of a genuinely cubic polynomial, with multiplicity.
///
/// Closed form on the depressed cubic using the principal cube root, then a
/// single Newton step per root. The polish keeps residuals near machine
/// precision across branch cuts, where naive Cardano loses digits.
pub fn solve_cubic(p: &CubicPolynomial) -> Result<[Complex; 3]> {
    let scale = p.max_coefficient_norm();
    if p.c3.norm() < DEGENERACY_THRESHOLD * scale.max(1.0) {
        return Err(Error::DegenerateCubic {
            leading: p.c3.norm(),
            threshold: DEGENERACY_THRESHOLD * scale.max(1.0),
        });
    }

    // Monic form x^3 + a2 x^2 + a1 x + a0, then depress with x = t - a2/3.
    let a2 = p.c2 / p.c3;
    let a1 = p.c1 / p.c3;
    let a0 = p.c0 / p.c3;
    let shift = a2 / 3.0;
    let q = a1 - a2 * a2 / 3.0;
    let r = a0 - a2 * a1 / 3.0 + 2.0 * a2 * a2 * a2 / 27.0;

    // t^3 + q t + r = 0; t = u + v with u^3 v^3 = -q^3/27, u^3 + v^3 = -r.
    let disc = (r * r / 4.0 + q * q * q / 27.0).sqrt();
    // Pick the larger-magnitude branch for u^3 to avoid cancellation.
    let u3a = -r / 2.0 + disc;
    let u3b = -r / 2.0 - disc;
    let u3 = if u3a.norm() >= u3b.norm() { u3a } else { u3b };

    let mut roots = [Complex::ZERO; 3];
    if u3.norm() == 0.0 {
        // q and r both vanish: triple root at the shift point.
        roots = [-shift; 3];
    } else {
        let u = cbrt(u3);
        let omega = Complex::new(-0.5, 0.75_f64.sqrt());
        let mut uk = u;
        for root in roots.iter_mut() {
            // v = -q/(3u) pairs each cube-root branch correctly.
            let vk = -q / (3.0 * uk);
            *root = uk + vk - shift;
            uk *= omega;
        }
    }

    // One Newton step per root; skipped near multiple roots where p' ~ 0.
    for root in roots.iter_mut() {
        let dp = p.eval_derivative(*root);
        if dp.norm() > 1e-8 * scale.max(1.0) {
            let step = p.eval(*root) / dp;
            if step.norm().is_finite() {
                *root -= step;
            }
        }
    }

    Ok(roots)
}
