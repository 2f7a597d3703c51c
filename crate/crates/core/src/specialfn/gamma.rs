use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn pole_index(z: Complex64) -> Option<i64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        Some(z.re as i64)
    } else {
        None
    }
}

/// A logarithm of Gamma(z); its exponential is Gamma(z) but the imaginary
/// part is not normalised to the principal branch.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if pole_index(z).is_some() {
        return Err(Error::GammaPole(z));
    }
    if z.re < 0.5 {
        // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
        let s = (z * PI).sin();
        return Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(Complex64::new(1.0, 0.0) - z)?);
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok(Complex64::new(0.5 * (2.0 * PI).ln(), 0.0) + (z + 0.5) * t.ln() - t + x.ln())
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re > 0.0 && z.re == z.re.round() && z.re <= 20.0 {
        let n = z.re as u32;
        return Ok(Complex64::new((1..n).map(f64::from).product(), 0.0));
    }
    Ok(ln_gamma(z)?.exp())
}

/// 1/Gamma(z), which vanishes at the poles of Gamma.
pub fn rgamma(z: Complex64) -> Complex64 {
    match gamma(z) {
        Ok(g) => 1.0 / g,
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// psi(n) for a positive integer n.
pub fn digamma_int(n: u64) -> f64 {
    let h: f64 = (1..n).map(|k| 1.0 / k as f64).sum();
    h - EULER_GAMMA
}

/// psi'(n) for a positive integer n.
pub fn trigamma_int(n: u64) -> f64 {
    let s: f64 = (1..n).map(|k| 1.0 / (k as f64 * k as f64)).sum();
    PI * PI / 6.0 - s
}

/// psi(x) for real x > 0.
pub fn digamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut shift = 0.0;
    let mut y = x;
    while y < 12.0 {
        shift -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    // Asymptotic series with B_2 .. B_12.
    let tail = inv2
        * (1.0 / 12.0
            - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * 691.0 / 32760.0)))));
    shift + y.ln() - 0.5 / y - tail
}
