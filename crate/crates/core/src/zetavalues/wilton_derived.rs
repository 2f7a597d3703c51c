//! Closed-form recipes obtained by specialising the quadratic Wilton
//! identities at integer arguments.
//!
//! Real fields, (u, v) = (2, 2n+1): the right-hand side, assembled term by term, is
//!   zeta_K(2n+1) = C/zeta_K(2) (1 + 1/(2n)) tau (2pi)^(4n+4) B_{2n+2} B_{2n+2,chi} / ((2n+2)!^2 D^(2n+2))
//!     + 2 (2pi)^2 / zeta_K(2) D^(-3/2) sum_m m s(m) {P(2) + Q(2) + 2R(2)}
//!     + 2 (2pi)^(4n) / zeta_K(2) D^((-1-4n)/2) sum_m m^(2n) s(m) {P(2n+1) + Q(2n+1) + 2R(2n+1)}
//! with C = hR/(w sqrt D), s = sigma'_{-2n-2}, and P, Q, R the Meijer G-function
//! at D/(4 pi^2 m) on the sheets e^{-i pi}, e^{i pi} and 1.
//!
//! Imaginary fields, (u, v) = (2, 2n): solving the identity for zeta_K(2n),
//!   zeta_K(2n) = [ c_K (1 + 1/(2n-1)) zeta_K(2n+1)
//!     - (2pi)^3 |D|^(-3/2) sum_m s(m) m M(2, X_m)
//!     - (2pi)^(4n-1) |D|^((1-4n)/2) sum_m s(m) m^(2n-1) M(2n, X_m) ] / zeta_K(2)
//! with c_K = 2 pi h/(w sqrt|D|), s = sigma'_{-1-2n}, X_m = 4 pi^2 m/|D| and M the
//! (regularized) Bessel moment.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::dedekind::{dedekind_zeta_odd_imaginary, even_real_closed_value};
use super::zagier::zagier_zeta2_imaginary;
use super::{dedekind_zeta_factored, Route, ZetaValue};
use crate::arithmetic::{field_invariants, Discriminant};
use crate::error::{Error, Result};
use crate::specialfn::{bessel_moment, meijer_g_0331, Flag, Flags, SeriesParams};
use crate::wilton::{sigma_prime_table, Field};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The three summands of the real-field formula, each already divided by
/// zeta_K(2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddRealWiltonParts {
    pub constant_term: Complex64,
    pub first_sum: Complex64,
    pub second_sum: Complex64,
    pub zeta_k2: Complex64,
    pub truncation_m: usize,
    pub inner_error: f64,
    pub flags: Flags,
}

impl OddRealWiltonParts {
    pub fn total(&self) -> Complex64 {
        self.constant_term + self.first_sum + self.second_sum
    }

    /// Evaluates the formula for m <= max_terms; `with_sums = false`
    /// leaves both m-sums at zero.
    pub fn compute(d: Discriminant, n: u32, p: &SeriesParams, with_sums: bool) -> Result<Self> {
        if !d.is_real() {
            return Err(Error::domain("dedekind_zeta_odd_real_wilton needs D > 0"));
        }
        if n == 0 {
            return Err(Error::domain("dedekind_zeta_odd_real_wilton needs n >= 1"));
        }
        let inv = field_invariants(d)?;
        let df = d.value() as f64;
        let zeta_k2 = dedekind_zeta_factored(d, c(2.0))?.value;
        let cc = inv.class_number as f64 * inv.regulator / (inv.w as f64 * df.sqrt());
        let k = 2 * n as usize + 2;
        // even_real_closed_value carries the factor 1/4 of the zeta_K(2n+2) formula.
        let bernoulli_factor = 4.0 * even_real_closed_value(d, k);
        let constant_term = c(cc * (1.0 + 1.0 / (2.0 * n as f64)) * bernoulli_factor) / zeta_k2;

        let m_max = p.max_terms.max(1);
        let mut first = c(0.0);
        let mut second = c(0.0);
        let mut err = 0.0;
        let mut flags = Flags::empty();
        flags.insert(Flag::NonConvergent);
        if with_sums {
            let sigma = sigma_prime_table(Field::Quadratic(d), c(-(k as f64)), m_max);
            let a = c(2.0);
            let b = c(2.0 * n as f64 + 1.0);
            for m in 1..=m_max {
                if sigma[m] == c(0.0) {
                    continue;
                }
                let x = df / (4.0 * PI * PI * m as f64);
                let (ga, ea, fa) = pqr(a, x, p)?;
                let (gb, eb, fb) = pqr(b, x, p)?;
                let mf = m as f64;
                first += sigma[m] * mf * ga;
                second += sigma[m] * mf.powi(2 * n as i32) * gb;
                err += sigma[m].norm() * (mf * ea + mf.powi(2 * n as i32) * eb);
                flags = flags.union(fa).union(fb);
            }
        }
        let pre1 = 2.0 * (2.0 * PI).powi(2) * df.powf(-1.5);
        let pre2 = 2.0 * (2.0 * PI).powi(4 * n as i32) * df.powf((-1.0 - 4.0 * n as f64) / 2.0);
        Ok(OddRealWiltonParts {
            constant_term,
            first_sum: first * pre1 / zeta_k2,
            second_sum: second * pre2 / zeta_k2,
            zeta_k2,
            truncation_m: m_max,
            inner_error: err * pre1.max(pre2) / zeta_k2.norm(),
            flags,
        })
    }
}

/// P + Q + 2R at parameter a and argument x, with the summed error estimates.
fn pqr(a: Complex64, x: f64, p: &SeriesParams) -> Result<(Complex64, f64, Flags)> {
    let gp = meijer_g_0331(a, x, -1, p)?;
    let gq = meijer_g_0331(a, x, 1, p)?;
    let gr = meijer_g_0331(a, x, 0, p)?;
    Ok((
        gp.value + gq.value + 2.0 * gr.value,
        gp.abs_error_estimate + gq.abs_error_estimate + 2.0 * gr.abs_error_estimate,
        gp.flags.union(gq.flags).union(gr.flags),
    ))
}

/// zeta_K(2n+1) for real K from the specialised identity, m-sums truncated at
/// p.max_terms. The sums are not known to converge, so the error estimate
/// is infinite and the value is flagged `NonConvergent`.
pub fn dedekind_zeta_odd_real_wilton(d: Discriminant, n: u32, p: &SeriesParams) -> Result<ZetaValue> {
    let parts = OddRealWiltonParts::compute(d, n, p, true)?;
    let mut z = ZetaValue::new(parts.total(), Route::WiltonDerived, f64::INFINITY);
    z.flags = parts.flags;
    Ok(z)
}

/// zeta_K(2n) for imaginary K and n >= 2 from the specialised identity,
/// m-sums truncated at p.max_terms.
pub fn dedekind_zeta_even_imaginary_wilton(d: Discriminant, n: u32, p: &SeriesParams) -> Result<ZetaValue> {
    if d.is_real() {
        return Err(Error::domain("dedekind_zeta_even_imaginary_wilton needs D < 0"));
    }
    if n < 2 {
        return Err(Error::domain("dedekind_zeta_even_imaginary_wilton needs n >= 2"));
    }
    let inv = field_invariants(d)?;
    let df = d.modulus() as f64;
    let zeta_k2 = zagier_zeta2_imaginary(d)?.value;
    let zeta_odd = dedekind_zeta_odd_imaginary(d, 2 * n + 1)?.value;
    let nf = n as f64;
    let constant = zeta_odd * inv.residue * (1.0 + 1.0 / (2.0 * nf - 1.0));
    let m_max = p.max_terms.max(1);
    let sigma = sigma_prime_table(Field::Quadratic(d), c(-1.0 - 2.0 * nf), m_max);
    let mut first = c(0.0);
    let mut second = c(0.0);
    let mut flags = Flags::empty();
    flags.insert(Flag::NonConvergent);
    for m in 1..=m_max {
        if sigma[m] == c(0.0) {
            continue;
        }
        let mf = m as f64;
        let x = 4.0 * PI * PI * mf / df;
        let a = bessel_moment(c(2.0), x, p)?;
        let b = bessel_moment(c(2.0 * nf), x, p)?;
        first += sigma[m] * mf * a.value;
        second += sigma[m] * mf.powi(2 * n as i32 - 1) * b.value;
        flags = flags.union(a.flags).union(b.flags);
    }
    let pre1 = (2.0 * PI).powi(3) * df.powf(-1.5);
    let pre2 = (2.0 * PI).powi(4 * n as i32 - 1) * df.powf((1.0 - 4.0 * nf) / 2.0);
    let value = (constant - first * pre1 - second * pre2) / zeta_k2;
    let mut z = ZetaValue::new(value, Route::WiltonDerived, f64::INFINITY);
    z.flags = flags;
    Ok(z)
}
