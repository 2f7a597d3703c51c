//! Upper incomplete gamma function by its Legendre continued fraction.

use num_complex::Complex64;

use crate::error::{Error, Result};

const TINY: f64 = 1e-300;
const MAX_ITER: usize = 20_000;

/// e^w w^(-a) Gamma(a, w), evaluated by modified Lentz. Valid off the
/// negative real w-axis; converges fastest for large |w|.
pub fn scaled_upper_gamma_cf(a: Complex64, w: Complex64, tol: f64) -> Result<Complex64> {
    if w.re < 0.0 && w.im == 0.0 {
        return Err(Error::domain("continued fraction needs w off the negative real axis"));
    }
    if w.norm() == 0.0 {
        return Err(Error::domain("continued fraction needs w != 0"));
    }
    let tiny = Complex64::new(TINY, 0.0);
    let mut b = w + 1.0 - a;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = if b.norm() < TINY { tiny.inv() } else { b.inv() };
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (Complex64::new(i as f64, 0.0) - a);
        b += 2.0;
        d = an * d + b;
        if d.norm() < TINY {
            d = tiny;
        }
        c = b + an / c;
        if c.norm() < TINY {
            c = tiny;
        }
        d = d.inv();
        let del = d * c;
        h *= del;
        if (del - 1.0).norm() < tol {
            return Ok(h);
        }
    }
    Err(Error::NoConvergence(MAX_ITER))
}

/// Gamma(a, w) for complex a and w off the negative real axis.
pub fn upper_gamma(a: Complex64, w: Complex64) -> Result<Complex64> {
    let h = scaled_upper_gamma_cf(a, w, 1e-16)?;
    Ok((a * w.ln() - w).exp() * h)
}

/// Integral of r^c exp(-omega r) over [r0, infinity) for r0 > 0 and
/// Re omega >= 0, continued analytically in c where the integral diverges.
pub fn exp_power_tail(c: Complex64, r0: f64, omega: Complex64) -> Result<Complex64> {
    let w = omega * r0;
    let h = scaled_upper_gamma_cf(c + 1.0, w, 1e-16)?;
    Ok((-w).exp() * Complex64::new(r0, 0.0).powc(c + 1.0) * h)
}
