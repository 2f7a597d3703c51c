//! Zagier's function A(x) and its higher analogues A_m(x).

use num_complex::Complex64;

use super::params::{EvalResult, Flag, SeriesParams};
use super::quad::integrate_real;
use crate::error::{Error, Result};

/// A(x): integral of log(4/(1+t^2))/(1+t^2) over [0, x]. Odd in x.
pub fn zagier_a(x: f64, p: &SeriesParams) -> Result<EvalResult> {
    if !x.is_finite() {
        return Err(Error::domain("zagier_a needs finite x"));
    }
    let sign = x.signum();
    let x = x.abs();
    let f = |t: f64| (4.0f64.ln() - (t * t).ln_1p()) / (1.0 + t * t);
    let tol = p.tolerance.max(1e-15);
    // Split at 1 where the integrand changes sign, then geometrically.
    let mut cuts = vec![0.0];
    let mut c = 1.0;
    while c < x {
        cuts.push(c);
        c *= 4.0;
    }
    cuts.push(x);
    let mut value = 0.0;
    let mut err = 0.0;
    let mut pieces = 0;
    for w in cuts.windows(2) {
        let (v, e) = integrate_real(f, w[0], w[1], 1e-17, tol, 200);
        value += v;
        err += e;
        pieces += 1;
    }
    Ok(EvalResult::new(Complex64::new(sign * value, 0.0), err, pieces))
}

/// A_m(x) = 2^(2m-1)/(2m-1)! * integral over t > 0 of
/// t^(2m-1) / (x sinh^2 t + x^(-1) cosh^2 t), for m >= 1 and x > 0.
pub fn zagier_a_m(m: u32, x: f64, p: &SeriesParams) -> Result<EvalResult> {
    if m == 0 {
        return Err(Error::domain("zagier_a_m needs m >= 1"));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain("zagier_a_m needs x > 0"));
    }
    let k = (2 * m - 1) as i32;
    // With e = exp(-2t) the integrand is 4 t^k e / (x (1-e)^2 + (1+e)^2 / x).
    let f = |t: f64| {
        if t == 0.0 {
            return 0.0;
        }
        let e = (-2.0 * t).exp();
        let one_minus = -(-2.0 * t).exp_m1();
        4.0 * t.powi(k) * e / (x * one_minus * one_minus + (1.0 + e) * (1.0 + e) / x)
    };
    let prefactor = 2f64.powi(k) / (1..=k).map(f64::from).product::<f64>();
    // Beyond T the integrand is below 4 t^k e^(-2t) / (x + 1/x) * 2.
    let scale = 4.0 / (x + 1.0 / x);
    let mut t_end = (k as f64).max(1.0);
    let tail_bound = |t: f64| scale * 2.0 * t.powi(k) * (-2.0 * t).exp() * (1.0 + k as f64 / t);
    while tail_bound(t_end) > 1e-18 * scale {
        t_end += 1.0;
    }
    let tol = p.tolerance.max(1e-15);
    let mut value = 0.0;
    let mut err = tail_bound(t_end);
    let cuts = [0.0, 0.5 * t_end.min(4.0), t_end.min(4.0), 0.5 * (t_end + 4.0).max(4.0), t_end.max(4.0)];
    let mut pieces = 0;
    for w in cuts.windows(2) {
        if w[1] > w[0] {
            let (v, e) = integrate_real(f, w[0], w[1], 1e-18, tol, 200);
            value += v;
            err += e;
            pieces += 1;
        }
    }
    let mut result = EvalResult::new(Complex64::new(prefactor * value, 0.0), prefactor * err, pieces);
    if err > tol * value.abs() {
        result.flags.insert(Flag::Truncated);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Clausen function Cl_2 by its Fourier series, summed with a
    /// tail correction.
    fn clausen(theta: f64) -> f64 {
        let n = 200_000;
        let mut s = 0.0;
        for k in (1..=n).rev() {
            let k = k as f64;
            s += (k * theta).sin() / (k * k);
        }
        s
    }

    #[test]
    fn a_matches_clausen() {
        // A(tan phi) = Cl_2(pi - 2 phi).
        let p = SeriesParams::default();
        for phi in [0.2, 0.7, 1.1, 1.45] {
            let a = zagier_a(f64::tan(phi), &p).unwrap().value.re;
            let cl = clausen(std::f64::consts::PI - 2.0 * phi);
            assert!((a - cl).abs() < 1e-9, "phi={phi}: {a} vs {cl}");
        }
    }

    #[test]
    fn a1_equals_a() {
        let p = SeriesParams::default();
        for x in [0.3, 1.0, 2.5, 7.0] {
            let a = zagier_a(x, &p).unwrap().value.re;
            let a1 = zagier_a_m(1, x, &p).unwrap().value.re;
            assert!((a - a1).abs() < 1e-11, "x={x}: {a} vs {a1}");
        }
    }
}
