//! Hurwitz zeta function by Euler-Maclaurin summation.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::exactnum::{bernoulli_number, to_f64};

const HEAD_TERMS: usize = 30;
const MAX_CORRECTIONS: usize = 30;

/// B_{2j}/(2j)! for j = 1..=MAX_CORRECTIONS.
fn scaled_bernoulli() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut fact = 1.0f64;
        let mut out = Vec::with_capacity(MAX_CORRECTIONS);
        for j in 1..=MAX_CORRECTIONS {
            fact *= ((2 * j - 1) * (2 * j)) as f64;
            out.push(to_f64(&bernoulli_number(2 * j)) / fact);
        }
        out
    })
}

/// x^(-s)/2 + sum_j B_2j/(2j)! (s)_(2j-1) x^(-s-2j+1), with an estimate
/// of the first omitted correction.
fn correction(s: Complex64, x: f64, tol: f64) -> (Complex64, f64) {
    let xs = Complex64::new(x, 0.0).powc(-s);
    let mut sum = xs * 0.5;
    let mut rising = s;
    let mut power = xs / x;
    let mut last = f64::INFINITY;
    for (j, b) in scaled_bernoulli().iter().enumerate() {
        let term = rising * power * *b;
        let size = term.norm();
        if size > last {
            return (sum, last);
        }
        sum += term;
        last = size;
        if size <= tol * sum.norm() {
            break;
        }
        let k = (2 * j + 1) as f64;
        rising = rising * (s + k) * (s + k + 1.0);
        power /= x * x;
    }
    (sum, last)
}

fn head(s: Complex64, a: f64, n: usize) -> (Complex64, f64) {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    for k in 0..n {
        let t = Complex64::new(k as f64 + a, 0.0).powc(-s);
        sum += t;
        magnitude += t.norm();
    }
    (sum, magnitude)
}

fn head_terms(s: Complex64) -> usize {
    HEAD_TERMS + s.norm().ceil() as usize
}

/// zeta(s, a) for a > 0 and s != 1. Returns the value and an error estimate.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> (Complex64, f64) {
    let n = head_terms(s);
    let (h, mag) = head(s, a, n);
    let x = n as f64 + a;
    let pole = Complex64::new(x, 0.0).powc(1.0 - s) / (s - 1.0);
    let (c, err) = correction(s, x, 1e-17);
    let value = h + pole + c;
    (value, 2.0 * err + 4.0 * f64::EPSILON * (mag + pole.norm()))
}

/// (e^w - 1)/w, accurate near w = 0.
fn exprel(w: Complex64) -> Complex64 {
    if w.norm() < 1e-3 {
        1.0 + w / 2.0 + w * w / 6.0 + w * w * w / 24.0
    } else {
        (w.exp() - 1.0) / w
    }
}

/// Sum over a = 1..=f of chi(a) zeta(s, a/f), where the chi values sum to
/// zero so the pole at s = 1 cancels; valid for every s.
pub fn character_hurwitz_sum(s: Complex64, chi: &[i8]) -> (Complex64, f64) {
    let f = chi.len();
    let n = head_terms(s);
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for a in 1..=f {
        let c = chi[a % f];
        if c == 0 {
            continue;
        }
        let alpha = a as f64 / f as f64;
        let (h, mag) = head(s, alpha, n);
        let x = n as f64 + alpha;
        // (x^(1-s) - 1)/(s - 1) = -ln x * exprel((1-s) ln x).
        let lx = x.ln();
        let pole = -exprel((1.0 - s) * lx) * lx;
        let (corr, e) = correction(s, x, 1e-17);
        total += (h + pole + corr) * c as f64;
        err += 2.0 * e + 4.0 * f64::EPSILON * (mag + pole.norm());
    }
    (total, err)
}
