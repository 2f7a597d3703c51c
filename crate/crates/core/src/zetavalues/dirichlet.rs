use std::f64::consts::PI;

use num_complex::Complex64;

use super::hurwitz::character_hurwitz_sum;
use super::{Route, ZetaValue, CLOSED_FORM_ROUNDING};
use crate::arithmetic::{CharacterTable, Discriminant};
use crate::error::{Error, Result};
use crate::exactnum::{factorial, gauss_sum, generalized_bernoulli, rational, to_f64, ExactRational};
use crate::specialfn::gamma::digamma;
use crate::specialfn::SeriesParams;

/// L(1, chi) = -(1/f) sum_a chi(a) psi(a/f).
pub fn dirichlet_l_at_one(table: &CharacterTable) -> f64 {
    let f = table.modulus() as f64;
    let s: f64 = (1..table.modulus() as i64)
        .map(|a| {
            let c = table.get(a);
            if c == 0 {
                0.0
            } else {
                c as f64 * digamma(a as f64 / f)
            }
        })
        .sum();
    -s / f
}

/// L(s, chi_D) = f^(-s) sum_a chi(a) zeta(s, a/f), valid for Re s > 0
/// (and, by continuation, everywhere).
pub fn dirichlet_l_direct(d: Discriminant, s: Complex64, _p: &SeriesParams) -> Result<ZetaValue> {
    if s.re <= 0.0 {
        return Err(Error::domain("dirichlet_l_direct needs Re s > 0"));
    }
    Ok(dirichlet_l_any(d, s))
}

pub(crate) fn dirichlet_l_any(d: Discriminant, s: Complex64) -> ZetaValue {
    let table = CharacterTable::new(d);
    let (sum, err) = character_hurwitz_sum(s, table.values());
    let scale = Complex64::new(d.modulus() as f64, 0.0).powc(-s);
    ZetaValue::new(sum * scale, Route::DirectSeries, err * scale.norm())
}

/// L(2n, chi) for an even character, with the exact rational c such that
/// L = c tau(chi) pi^(2n).
pub fn dirichlet_l_even_closed(d: Discriminant, n: u32) -> Result<(ZetaValue, ExactRational)> {
    if !d.is_real() {
        return Err(Error::domain("dirichlet_l_even_closed needs D > 0 (even character)"));
    }
    if n == 0 {
        return Err(Error::domain("dirichlet_l_even_closed needs n >= 1"));
    }
    let k = 2 * n as usize;
    let c = leopoldt_coefficient(d, k, n % 2 == 1);
    let tau = gauss_sum(d).exact_value().re;
    let value = to_f64(&c) * tau * PI.powi(k as i32);
    Ok((ZetaValue::real(value, Route::ClosedForm, CLOSED_FORM_ROUNDING * value.abs()), c))
}

/// L(2n+1, chi) for an odd character, with the exact rational c such that
/// L = c (tau(chi)/i) pi^(2n+1).
pub fn dirichlet_l_odd_closed(d: Discriminant, n: u32) -> Result<(ZetaValue, ExactRational)> {
    if d.is_real() {
        return Err(Error::domain("dirichlet_l_odd_closed needs D < 0 (odd character)"));
    }
    let k = 2 * n as usize + 1;
    let c = leopoldt_coefficient(d, k, n % 2 == 1);
    let tau_over_i = gauss_sum(d).exact_value().im;
    let value = to_f64(&c) * tau_over_i * PI.powi(k as i32);
    Ok((ZetaValue::real(value, Route::ClosedForm, CLOSED_FORM_ROUNDING * value.abs()), c))
}

/// (+-1/2) (2/f)^k B_{k,chi} / k!.
fn leopoldt_coefficient(d: Discriminant, k: usize, positive: bool) -> ExactRational {
    let f = d.modulus() as i64;
    let sign = if positive { rational(1, 2) } else { rational(-1, 2) };
    sign * num_traits::pow(rational(2, f), k) * generalized_bernoulli(d, k)
        / ExactRational::from_integer(factorial(k as u64))
}
