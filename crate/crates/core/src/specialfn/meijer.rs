//! The Meijer G-function G^{0,3}_{3,1}(1, u, u; 0 | z) on the three sheets
//! z = x e^{i pi theta}, theta in {-1, 0, 1}, and the combination that
//! appears in the real-quadratic Wilton identity.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bessel::k0_moment_tail;
use super::gamma::{digamma_int, ln_gamma, trigamma_int, EULER_GAMMA};
use super::params::{EvalResult, Flag, Flags, SeriesParams};
use super::quad::integrate;
use crate::error::{Error, Result};

/// Above this 1/x the residue series cancels too badly and the Bessel
/// tail representation takes over.
const CROSSOVER_PHASED: f64 = 36.0;
const CROSSOVER_REAL: f64 = 20.0;
/// Points on the perturbation circle around an integer parameter.
const CIRCLE_POINTS: usize = 64;

fn check_args(x: f64, phase: i8) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("Meijer G needs x > 0, got {x}")));
    }
    if !(-1..=1).contains(&phase) {
        return Err(Error::domain(format!("phase must be -1, 0 or 1, got {phase}")));
    }
    Ok(())
}

fn log_z(x: f64, phase: i8) -> Complex64 {
    Complex64::new(x.ln(), PI * phase as f64)
}

/// Nearest positive integer to u, if u lies within `radius` of it.
fn near_integer(u: Complex64, radius: f64) -> Option<u32> {
    let n = u.re.round();
    if n >= 1.0 && (u - n).norm() < radius {
        Some(n as u32)
    } else {
        None
    }
}

/// G^{0,3}_{3,1}(1, u, u; 0 | x e^{i pi phase}).
pub fn meijer_g_0331(u: Complex64, x: f64, phase: i8, p: &SeriesParams) -> Result<EvalResult> {
    check_args(x, phase)?;
    let crossover = if phase == 0 { CROSSOVER_REAL } else { CROSSOVER_PHASED };
    if 1.0 / x > crossover {
        return bessel_tail_route(u, x, phase, p);
    }
    let radius = p.epsilon_perturb;
    match near_integer(u, 0.5 * radius) {
        Some(n) => perturbed(u, n, radius, x, phase, p),
        None => residue_series(u, x, phase, p),
    }
}

/// Sum of residues at s = 0 (simple pole) and at the double poles
/// s = u - 1 - k. Requires u away from the positive integers.
pub fn residue_series(u: Complex64, x: f64, phase: i8, p: &SeriesParams) -> Result<EvalResult> {
    check_args(x, phase)?;
    let one = Complex64::new(1.0, 0.0);
    let l = log_z(x, phase);
    let lead = (ln_gamma(one - u)? * 2.0).exp();
    let mut sum = lead;
    let mut magnitude = lead.norm();
    let mut weight = ((u - 1.0) * l).exp();
    let step = (-l).exp();
    let mut psi = -EULER_GAMMA;
    let ratio_bound = 1.0 / x;
    let mut flags = Flags::empty();
    let mut terms = 0;
    let mut tail = f64::INFINITY;
    for k in 0..p.max_terms {
        let s0 = u - 1.0 - k as f64;
        let term = weight * (l / s0 - 1.0 / (s0 * s0) + 2.0 * psi / s0);
        sum += term;
        magnitude += term.norm();
        terms = k + 1;
        let kk = (k + 1) as f64;
        let r = 1.5 * ratio_bound / ((kk + 1.0) * (kk + 1.0));
        if r < 0.5 {
            let bound = term.norm() * r / (1.0 - r);
            if bound <= p.tolerance * sum.norm() || bound <= 1e-17 * magnitude {
                tail = bound;
                break;
            }
        }
        weight *= step / (kk * kk);
        psi += 1.0 / kk;
    }
    if !tail.is_finite() {
        flags.insert(Flag::Truncated);
    }
    let err = tail + 4.0 * f64::EPSILON * magnitude * (terms as f64).sqrt().max(1.0);
    Ok(EvalResult {
        value: sum,
        abs_error_estimate: err,
        terms_used: terms,
        flags,
    })
}

/// Value at a positive integer u = n, where the k = n - 1 double pole
/// merges with the pole at s = 0 into a triple pole.
pub fn meijer_g_0331_integer(n: u32, x: f64, phase: i8, p: &SeriesParams) -> Result<EvalResult> {
    check_args(x, phase)?;
    if n == 0 {
        return Err(Error::domain("integer parameter must be positive"));
    }
    let l = log_z(x, phase);
    let k0 = (n - 1) as usize;
    let fact_sq: f64 = (1..=k0).map(|j| (j * j) as f64).product();
    let psi_n = digamma_int(n as u64);
    let triple = (l * l / 2.0 + 2.0 * psi_n * l + 2.0 * psi_n * psi_n - trigamma_int(n as u64) + PI * PI / 3.0) / fact_sq;
    let mut sum = triple;
    let mut magnitude = triple.norm();
    let mut weight = ((n as f64 - 1.0) * l).exp();
    let step = (-l).exp();
    let mut psi = -EULER_GAMMA;
    let mut terms = 1;
    let mut tail = f64::INFINITY;
    for k in 0..p.max_terms {
        let kk = (k + 1) as f64;
        if k != k0 {
            let s0 = n as f64 - 1.0 - k as f64;
            let term = weight * (l / s0 - 1.0 / (s0 * s0) + 2.0 * psi / s0);
            sum += term;
            magnitude += term.norm();
            terms += 1;
            let r = 1.5 / x / ((kk + 1.0) * (kk + 1.0));
            if k > k0 && r < 0.5 {
                let bound = term.norm() * r / (1.0 - r);
                if bound <= p.tolerance * sum.norm() || bound <= 1e-17 * magnitude {
                    tail = bound;
                    break;
                }
            }
        }
        weight *= step / (kk * kk);
        psi += 1.0 / kk;
    }
    let mut result = EvalResult::new(sum, tail + 4.0 * f64::EPSILON * magnitude, terms);
    if !tail.is_finite() {
        result.flags.insert(Flag::Truncated);
    }
    Ok(result)
}

/// G is entire in u, so near a positive integer n it is recovered from
/// evaluations on the circle |u - n| = radius by the Cauchy formula. At
/// u = n this is the plain average of the perturbed evaluations.
fn perturbed(u: Complex64, n: u32, radius: f64, x: f64, phase: i8, p: &SeriesParams) -> Result<EvalResult> {
    let delta = u - n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut terms = 0;
    let mut flags = Flags::from(Flag::Perturbed);
    for j in 0..CIRCLE_POINTS {
        let angle = 2.0 * PI * (j as f64 + 0.5) / CIRCLE_POINTS as f64;
        let zeta = Complex64::from_polar(radius, angle);
        let g = residue_series(zeta + n as f64, x, phase, p)?;
        let w = zeta / (zeta - delta) / CIRCLE_POINTS as f64;
        sum += g.value * w;
        err += g.abs_error_estimate * w.norm();
        terms += g.terms_used;
        flags = flags.union(g.flags);
    }
    // Trapezoidal error on the circle decays like (|delta|/radius)^points.
    let ratio = delta.norm() / radius;
    err += sum.norm() * ratio.powi(CIRCLE_POINTS as i32) / (1.0 - ratio);
    Ok(EvalResult {
        value: sum,
        abs_error_estimate: err,
        terms_used: terms,
        flags,
    })
}

/// Small-x route: G = 4 z^(u-1) * integral over r >= 1 of r^(1-2u) K_0(2 r z^(-1/2)).
fn bessel_tail_route(u: Complex64, x: f64, phase: i8, p: &SeriesParams) -> Result<EvalResult> {
    let l = log_z(x, phase);
    let q = (-l * 0.5).exp();
    let (tail, err, terms) = k0_moment_tail(u, q, p.tolerance.max(1e-17))?;
    let pre = ((u - 1.0) * l).exp() * 4.0;
    let value = pre * tail;
    let err = pre.norm() * err + 8.0 * f64::EPSILON * value.norm();
    Ok(EvalResult::new(value, err, terms))
}

/// -e^{i pi u} G(x e^{-i pi}) - e^{-i pi u} G(x e^{i pi}) - 2 G(x).
pub fn wilton_g_combo(u: Complex64, x: f64, p: &SeriesParams) -> Result<EvalResult> {
    let minus = meijer_g_0331(u, x, -1, p)?;
    let plus = meijer_g_0331(u, x, 1, p)?;
    let real = meijer_g_0331(u, x, 0, p)?;
    let e = (Complex64::new(0.0, PI) * u).exp();
    let value = -e * minus.value - plus.value / e - 2.0 * real.value;
    let err = e.norm() * minus.abs_error_estimate + plus.abs_error_estimate / e.norm() + 2.0 * real.abs_error_estimate;
    Ok(EvalResult {
        value,
        abs_error_estimate: err,
        terms_used: minus.terms_used + plus.terms_used + real.terms_used,
        flags: minus.flags.union(plus.flags).union(real.flags),
    })
}

/// Independent evaluation of the phase-0 function by integrating the
/// Mellin-Barnes integrand along Re s = abscissa.
pub fn meijer_g_0331_contour(u: Complex64, x: f64, p: &SeriesParams) -> Result<EvalResult> {
    check_args(x, 0)?;
    let abscissa = p.contour_abscissa.unwrap_or_else(|| (u.re - 0.5).max(0.25));
    if abscissa <= 0.0 || abscissa <= u.re - 1.0 {
        return Err(Error::domain("contour must pass right of s = 0 and s = u - 1"));
    }
    let one = Complex64::new(1.0, 0.0);
    let lx = x.ln();
    let integrand = |t: f64| -> Complex64 {
        let s = Complex64::new(abscissa, t);
        match ln_gamma(one - u + s) {
            Ok(lg) => (lg * 2.0 + s * lx - s.ln()).exp(),
            Err(_) => Complex64::new(f64::NAN, f64::NAN),
        }
    };
    // |Gamma|^2 decays like exp(-pi |t|); 60 leaves nothing measurable.
    let half = 60.0;
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut intervals = 0;
    let cuts = [-half, -20.0, -5.0, 0.0, 5.0, 20.0, half];
    for w in cuts.windows(2) {
        let q = integrate(integrand, w[0], w[1], 1e-16, p.tolerance.max(1e-15), 400);
        value += q.value;
        err += q.error;
        intervals += q.intervals;
    }
    Ok(EvalResult::new(value / (2.0 * PI), err / (2.0 * PI), intervals))
}
