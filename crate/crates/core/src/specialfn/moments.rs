//! Truncated Bessel moments and sine tail integrals.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bessel::k0_moment_tail;
use super::gamma::{digamma_int, gamma, rgamma};
use super::incgamma::exp_power_tail;
use super::params::{EvalResult, Flag, Flags, SeriesParams};
use crate::error::{Error, Result};

/// Beyond this X the alternating power series cancels too badly and the
/// complementary tail integral is used instead.
const MOMENT_CROSSOVER: f64 = 36.0;

fn positive_integer(u: Complex64) -> Option<u64> {
    if u.im == 0.0 && u.re >= 1.0 && u.re == u.re.round() {
        Some(u.re as u64)
    } else {
        None
    }
}

fn factorial_f64(n: u64) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Integral of t^(-u) J_0(2 sqrt t) over [0, X]. At positive integer u the
/// integral diverges at t = 0 and the Hadamard finite part is returned,
/// flagged `Regularized`.
pub fn bessel_moment(u: Complex64, x: f64, p: &SeriesParams) -> Result<EvalResult> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("bessel_moment needs X > 0, got {x}")));
    }
    if x <= MOMENT_CROSSOVER {
        moment_series(u, x, p)
    } else {
        moment_from_tail(u, x, p)
    }
}

fn moment_series(u: Complex64, x: f64, p: &SeriesParams) -> Result<EvalResult> {
    let pole = positive_integer(u).map(|n| (n - 1) as usize);
    let mut weight = Complex64::new(x, 0.0).powc(1.0 - u);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let mut flags = Flags::empty();
    let mut tail = f64::INFINITY;
    let mut terms = 0;
    for k in 0..p.max_terms {
        let term = if Some(k) == pole {
            flags.insert(Flag::Regularized);
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::new(sign * x.ln() / factorial_f64(k as u64).powi(2), 0.0)
        } else {
            weight / (1.0 + k as f64 - u)
        };
        sum += term;
        magnitude += term.norm();
        terms = k + 1;
        let kk = (k + 1) as f64;
        let r = x / (kk * kk);
        if r < 0.5 && pole.is_none_or(|k0| k > k0) {
            let bound = 2.0 * term.norm().max(weight.norm() * r / (kk + 1.0 - u.re).abs().max(1.0)) * r / (1.0 - r);
            if bound <= p.tolerance * sum.norm() || bound <= 1e-17 * magnitude {
                tail = bound;
                break;
            }
        }
        weight *= -x / (kk * kk);
    }
    if !tail.is_finite() {
        flags.insert(Flag::Truncated);
    }
    Ok(EvalResult {
        value: sum,
        abs_error_estimate: tail + 4.0 * f64::EPSILON * magnitude,
        terms_used: terms,
        flags,
    })
}

/// Gamma(1-u)/Gamma(u), the integral over the whole half-line; its finite
/// part at positive integers u.
fn full_moment(u: Complex64) -> Result<(Complex64, bool)> {
    match positive_integer(u) {
        Some(n) => {
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let f = factorial_f64(n - 1);
            Ok((Complex64::new(2.0 * digamma_int(n) * sign / (f * f), 0.0), true))
        }
        None => Ok((gamma(1.0 - u)? * rgamma(u), false)),
    }
}

/// Integral of t^(-u) J_0(2 sqrt t) over [X, infinity), continued
/// analytically in u, from J_0(y) = (K_0(-iy) - K_0(iy)) / (i pi).
pub fn bessel_tail_j0(u: Complex64, x: f64, tol: f64) -> Result<(Complex64, f64, usize)> {
    let root = x.sqrt();
    let (a, ea, na) = k0_moment_tail(u, Complex64::new(0.0, -root), tol)?;
    let (b, eb, nb) = k0_moment_tail(u, Complex64::new(0.0, root), tol)?;
    let pre = Complex64::new(x, 0.0).powc(1.0 - u) * 2.0 / Complex64::new(0.0, PI);
    Ok((pre * (a - b), pre.norm() * (ea + eb), na + nb))
}

fn moment_from_tail(u: Complex64, x: f64, p: &SeriesParams) -> Result<EvalResult> {
    let (full, regularized) = full_moment(u)?;
    let (tail, err, terms) = bessel_tail_j0(u, x, p.tolerance.max(1e-17))?;
    let value = full - tail;
    let mut result = EvalResult::new(value, err + 8.0 * f64::EPSILON * (full.norm() + tail.norm()), terms);
    if regularized {
        result.flags.insert(Flag::Regularized);
    }
    Ok(result)
}

/// G^{0,2}_{3,1}(1, u, u; 0 | x), which equals the J_0 moment tail over
/// [1/x, infinity); finite part at positive integer u.
pub fn meijer_g_0231(u: Complex64, x: f64, p: &SeriesParams) -> Result<EvalResult> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("Meijer G needs x > 0, got {x}")));
    }
    let (full, regularized) = full_moment(u)?;
    let m = bessel_moment(u, 1.0 / x, p)?;
    let mut result = EvalResult {
        value: full - m.value,
        abs_error_estimate: m.abs_error_estimate + 4.0 * f64::EPSILON * full.norm(),
        ..m
    };
    if regularized {
        result.flags.insert(Flag::Regularized);
    }
    Ok(result)
}

/// Integral of x^(-u-1) sin x over [a, infinity), for a > 0 and Re u > -1.
pub fn sine_tail_integral(u: Complex64, a: f64, p: &SeriesParams) -> Result<EvalResult> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::domain(format!("sine_tail_integral needs a > 0, got {a}")));
    }
    if u.re <= -1.0 {
        return Err(Error::domain("sine_tail_integral needs Re u > -1"));
    }
    if a >= 1.0 {
        return sine_tail_cf(u, a);
    }
    // Continued fractions converge slowly near 0: integrate the sine
    // series over [a, 1] and add the tail from 1.
    let head = sine_tail_cf(u, 1.0)?;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut coef = 1.0;
    let mut flags = head.flags;
    let mut terms = 0;
    let mut converged = false;
    for j in 0..p.max_terms.max(40) {
        let e = Complex64::new((2 * j + 1) as f64, 0.0) - u;
        let piece = if e.norm() < 1e-300 {
            Complex64::new(-a.ln(), 0.0)
        } else {
            (1.0 - Complex64::new(a, 0.0).powc(e)) / e
        };
        let term = piece * coef;
        sum += term;
        terms = j + 1;
        if term.norm() < 1e-17 * sum.norm().max(1e-300) && j > 2 {
            converged = true;
            break;
        }
        coef *= -1.0 / (((2 * j + 2) * (2 * j + 3)) as f64);
    }
    if !converged {
        flags.insert(Flag::Truncated);
    }
    Ok(EvalResult {
        value: head.value + sum,
        abs_error_estimate: head.abs_error_estimate + 4.0 * f64::EPSILON * sum.norm(),
        terms_used: head.terms_used + terms,
        flags,
    })
}

fn sine_tail_cf(u: Complex64, a: f64) -> Result<EvalResult> {
    let c = -u - 1.0;
    let plus = exp_power_tail(c, a, Complex64::new(0.0, -1.0))?;
    let minus = exp_power_tail(c, a, Complex64::new(0.0, 1.0))?;
    let value = (plus - minus) / Complex64::new(0.0, 2.0);
    let err = 1e-15 * (plus.norm() + minus.norm());
    Ok(EvalResult::new(value, err, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn order_zero_moment() {
        // sqrt(X) J_1(2 sqrt X) at X = 4 is 2 J_1(4).
        let p = SeriesParams::default();
        let m = bessel_moment(c(0.0), 4.0, &p).unwrap();
        assert!((m.value.re - 2.0 * (-0.066_043_328_023_549_14)).abs() < 1e-13, "{}", m.value);
    }

    #[test]
    fn routes_agree_at_crossover() {
        let p = SeriesParams::default();
        for u in [0.5, 1.0, 2.0, 2.5, 3.0] {
            for x in [30.0, 45.0] {
                let s = moment_series(c(u), x, &p).unwrap();
                let t = moment_from_tail(c(u), x, &p).unwrap();
                assert!((s.value - t.value).norm() < 1e-9, "u={u} X={x}: {} {}", s.value, t.value);
            }
        }
    }

    #[test]
    fn sine_tail_at_pi() {
        // pi/2 - Si(pi)
        let p = SeriesParams::default();
        let s = sine_tail_integral(c(0.0), PI, &p).unwrap();
        assert!((s.value.re - (PI / 2.0 - 1.851_937_051_982_466_2)).abs() < 1e-14, "{}", s.value);
        let small = sine_tail_integral(c(0.0), 0.3, &p).unwrap();
        let si_03 = 0.298_504_043_807_043_15;
        assert!((small.value.re - (PI / 2.0 - si_03)).abs() < 1e-13, "{}", small.value);
    }
}
