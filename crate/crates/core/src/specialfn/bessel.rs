//! Order-zero Bessel functions and integrals of their large-argument
//! expansions.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::incgamma::exp_power_tail;
use crate::error::Result;

/// Coefficient a_k of the Hankel expansion of K_0:
/// K_0(z) ~ sqrt(pi/(2z)) e^(-z) sum_k a_k z^(-k).
pub fn hankel_coefficient(k: usize) -> f64 {
    let mut a = 1.0;
    for j in 1..=k {
        let m = (2 * j - 1) as f64;
        a *= -m * m / (8.0 * j as f64);
    }
    a
}

/// J_0(x) for real x.
pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x <= 40.0 {
        // Trapezoidal rule on the periodic integral (1/2pi) int cos(x sin t) dt,
        // exact up to J_n(x) aliasing terms.
        let n = (1.25 * x) as usize + 40;
        let h = 2.0 * PI / n as f64;
        (0..n).map(|j| (x * (h * j as f64).sin()).cos()).sum::<f64>() / n as f64
    } else {
        // J_0(x) = Re[H_0^(1)(x)] with H_0^(1)(x) ~ sqrt(2/(pi x)) e^{i(x - pi/4)} sum i^k a_k / x^k.
        let mut sum = Complex64::new(0.0, 0.0);
        let mut ik = Complex64::new(1.0, 0.0);
        let mut prev = f64::INFINITY;
        for k in 0..60 {
            let term = ik * hankel_coefficient(k) / x.powi(k as i32);
            if term.norm() > prev {
                break;
            }
            prev = term.norm();
            sum += term;
            if prev < 1e-17 {
                break;
            }
            ik *= Complex64::new(0.0, 1.0);
        }
        let phase = Complex64::new(0.0, x - PI / 4.0).exp();
        ((2.0 / (PI * x)).sqrt() * phase * sum).re
    }
}

/// Integral of r^(1-2u) K_0(2 q r) over [1, infinity) from the Hankel
/// expansion of K_0, for Re q >= 0 and |q| large. Each term is an
/// incomplete gamma function, which also supplies the analytic
/// continuation in u where the integral itself diverges.
/// Returns the value and the magnitude of the smallest omitted term.
pub fn k0_moment_tail(u: Complex64, q: Complex64, tol: f64) -> Result<(Complex64, f64, usize)> {
    let two_q = q * 2.0;
    let pre = (Complex64::new(PI, 0.0) / (q * 4.0)).sqrt();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut scale = Complex64::new(1.0, 0.0);
    let mut prev = f64::INFINITY;
    let mut terms = 0;
    let mut err = f64::INFINITY;
    for k in 0..200 {
        let c = Complex64::new(0.5, 0.0) - u * 2.0 - k as f64;
        let term = scale * hankel_coefficient(k) * exp_power_tail(c, 1.0, two_q)?;
        let size = term.norm();
        if size > prev {
            // Asymptotic series: stop at the smallest term.
            err = prev;
            break;
        }
        sum += term;
        terms = k + 1;
        prev = size;
        if size <= tol * sum.norm() {
            err = size;
            break;
        }
        scale /= two_q;
    }
    Ok((pre * sum, (pre * err).norm(), terms))
}
