use std::f64::consts::PI;

use num_complex::Complex64;

use super::dirichlet::{dirichlet_l_any, dirichlet_l_odd_closed};
use super::ramanujan::zeta_odd_closed;
use super::riemann::riemann_zeta;
use super::{Route, ZetaValue, CLOSED_FORM_ROUNDING};
use crate::arithmetic::{ideal_counts, CharacterTable, Discriminant};
use crate::error::{Error, Result};
use crate::exactnum::{bernoulli_number, factorial, gauss_sum, generalized_bernoulli, to_f64, ExactRational};
use crate::specialfn::SeriesParams;

/// Upper bound for the sum over m > M of d(m) m^(-sigma), from
/// sum_{m <= t} d(m) <= t (ln t + 1) and partial summation.
pub(crate) fn divisor_tail_bound(m: f64, sigma: f64) -> f64 {
    let e = sigma - 1.0;
    sigma * m.powf(-e) * (m.ln() / e + 1.0 / (e * e) + 1.0 / e)
}

/// Truncated sum of v_K(m) m^(-s) for m <= p.max_terms, plus an average-order
/// tail correction; the error estimate is the divisor-envelope bound on the
/// omitted tail plus the size of the correction.
pub fn dedekind_zeta_direct(d: Discriminant, s: Complex64, p: &SeriesParams) -> Result<ZetaValue> {
    if s.re <= 1.0 {
        return Err(Error::domain("dedekind_zeta_direct needs Re s > 1"));
    }
    let m = p.max_terms.max(10);
    let v = ideal_counts(&CharacterTable::new(d), m);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut count = 0u64;
    for (k, &vk) in v.iter().enumerate().skip(1) {
        if vk != 0 {
            sum += Complex64::new(k as f64, 0.0).powc(-s) * vk as f64;
            count += vk as u64;
        }
    }
    let mf = m as f64;
    let density = count as f64 / mf;
    let correction = Complex64::new(mf, 0.0).powc(1.0 - s) / (s - 1.0) * density;
    let err = divisor_tail_bound(mf, s.re) + correction.norm() + 4.0 * f64::EPSILON * sum.norm() * (mf).sqrt();
    Ok(ZetaValue::new(sum + correction, Route::DirectSeries, err))
}

/// zeta(s) L(s, chi_D); any s != 1.
pub fn dedekind_zeta_factored(d: Discriminant, s: Complex64) -> Result<ZetaValue> {
    let z = riemann_zeta(s)?;
    let l = dirichlet_l_any(d, s);
    let value = z.value * l.value;
    let err = z.value.norm() * l.error_estimate + l.value.norm() * z.error_estimate;
    Ok(ZetaValue::new(value, Route::Factored, err))
}

/// zeta_K(2n) = tau (2 pi)^(4n) B_2n B_{2n,chi} / (4 ((2n)!)^2 D^(2n)) for real K.
pub fn dedekind_zeta_even_real_closed(d: Discriminant, n: u32) -> Result<ZetaValue> {
    if !d.is_real() {
        return Err(Error::domain("dedekind_zeta_even_real_closed needs D > 0"));
    }
    if n == 0 {
        return Err(Error::domain("dedekind_zeta_even_real_closed needs n >= 1"));
    }
    let value = even_real_closed_value(d, 2 * n as usize);
    Ok(ZetaValue::real(value, Route::ClosedForm, CLOSED_FORM_ROUNDING * value.abs()))
}

/// tau (2 pi)^(2k) B_k B_{k,chi} / (4 (k!)^2 D^k) for even k.
pub(crate) fn even_real_closed_value(d: Discriminant, k: usize) -> f64 {
    let fact = ExactRational::from_integer(factorial(k as u64));
    let q = bernoulli_number(k) * generalized_bernoulli(d, k) / (fact.clone() * fact);
    let tau = gauss_sum(d).exact_value().re;
    let dk = (d.value() as f64).powi(k as i32);
    tau * (2.0 * PI).powi(2 * k as i32) * to_f64(&q) / (4.0 * dk)
}

/// zeta_K(n) = zeta(n) L(n, chi_D) for imaginary K and odd n >= 3, both
/// factors in closed form.
pub fn dedekind_zeta_odd_imaginary(d: Discriminant, n: u32) -> Result<ZetaValue> {
    if d.is_real() {
        return Err(Error::domain("dedekind_zeta_odd_imaginary needs D < 0"));
    }
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::domain("dedekind_zeta_odd_imaginary needs odd n >= 3"));
    }
    let z = zeta_odd_closed(n)?;
    let (l, _) = dirichlet_l_odd_closed(d, (n - 1) / 2)?;
    let value = z.value * l.value;
    let err = z.error_estimate * l.value.norm() + z.value.norm() * l.error_estimate;
    Ok(ZetaValue::new(value, Route::ClosedForm, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disc(d: i64) -> Discriminant {
        Discriminant::new(d).unwrap()
    }

    #[test]
    fn reference_values_factored() {
        let z = dedekind_zeta_factored(disc(-7), Complex64::new(2.0, 0.0)).unwrap();
        assert!((z.value.re - 1.894_841_448_97).abs() < 1e-9);
        let z = dedekind_zeta_factored(disc(-3), Complex64::new(2.0, 0.0)).unwrap();
        assert!((z.value.re - 1.285_190_955_484_149_4).abs() < 1e-9);
    }

    #[test]
    fn direct_within_its_estimate() {
        let p = SeriesParams::default().with_max_terms(20_000);
        for d in [-4, 5, -23] {
            let s = Complex64::new(2.0, 0.0);
            let direct = dedekind_zeta_direct(disc(d), s, &p).unwrap();
            let factored = dedekind_zeta_factored(disc(d), s).unwrap();
            assert!((direct.value - factored.value).norm() < direct.error_estimate);
        }
    }

    #[test]
    fn even_closed_matches_factored() {
        let z = dedekind_zeta_even_real_closed(disc(5), 1).unwrap();
        let f = dedekind_zeta_factored(disc(5), Complex64::new(2.0, 0.0)).unwrap();
        assert!((z.value - f.value).norm() < 1e-12);
    }
}
