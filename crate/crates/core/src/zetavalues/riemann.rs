use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::One;

use super::hurwitz::hurwitz_zeta;
use super::{Route, ZetaValue, CLOSED_FORM_ROUNDING};
use crate::error::{Error, Result};
use crate::exactnum::{bernoulli_number, factorial, integer, to_f64, ExactRational};
use crate::specialfn::SeriesParams;

/// zeta(2n) and the exact rational c with zeta(2n) = c pi^(2n).
pub fn riemann_zeta_even(n: u32) -> Result<(ZetaValue, ExactRational)> {
    if n == 0 {
        return Err(Error::domain("riemann_zeta_even needs n >= 1"));
    }
    let k = 2 * n as usize;
    let sign = if n % 2 == 1 { integer(1) } else { integer(-1) };
    let coef = sign * bernoulli_number(k) * num_traits::pow(integer(2), k)
        / (integer(2) * ExactRational::from_integer(factorial(k as u64)));
    let value = to_f64(&coef) * PI.powi(k as i32);
    Ok((ZetaValue::real(value, Route::ClosedForm, CLOSED_FORM_ROUNDING * value), coef))
}

/// zeta(s) for Re s > 1 by Euler-Maclaurin summation.
pub fn riemann_zeta_direct(s: Complex64, _p: &SeriesParams) -> Result<ZetaValue> {
    if s.re <= 1.0 {
        return Err(Error::domain("riemann_zeta_direct needs Re s > 1"));
    }
    let (value, err) = hurwitz_zeta(s, 1.0);
    Ok(ZetaValue::new(value, Route::DirectSeries, err))
}

/// zeta(s) for any s != 1 (analytic continuation through the same
/// Euler-Maclaurin formula).
pub fn riemann_zeta(s: Complex64) -> Result<ZetaValue> {
    if (s - Complex64::one()).norm() == 0.0 {
        return Err(Error::domain("zeta(s) has a pole at s = 1"));
    }
    let (value, err) = hurwitz_zeta(s, 1.0);
    Ok(ZetaValue::new(value, Route::DirectSeries, err))
}
