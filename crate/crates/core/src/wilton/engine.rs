use std::f64::consts::PI;

use num_complex::Complex64;

use super::{check_hypotheses, sigma_prime_table, Field};
use crate::arithmetic::{field_invariants, Discriminant};
use crate::error::{Error, Result};
use crate::specialfn::{bessel_moment, sine_tail_integral, wilton_g_combo, EvalResult, Flag, Flags, SeriesParams};
use crate::zetavalues::{dedekind_zeta_factored, riemann_zeta};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Everything needed to sum the two m-series of one identity.
pub(crate) struct Engine {
    pub field: Field,
    pub u: Complex64,
    pub v: Complex64,
    pub constant: Complex64,
    pub constant_err: f64,
    sigma: Vec<Complex64>,
    pre_u: Complex64,
    pre_v: Complex64,
    p: SeriesParams,
}

/// Running state of the m-sums.
pub(crate) struct Partial {
    pub m: usize,
    pub sum_u: Complex64,
    pub sum_v: Complex64,
    pub inner_err: f64,
    pub flags: Flags,
    pub last_term: f64,
}

impl Engine {
    pub fn new(field: Field, u: Complex64, v: Complex64, m_max: usize, p: &SeriesParams) -> Result<Engine> {
        check_hypotheses(u, v)?;
        if m_max == 0 {
            return Err(Error::domain("truncation M must be positive"));
        }
        let bracket = 1.0 / (u - 1.0) + 1.0 / (v - 1.0);
        let (constant, constant_err, pre_u, pre_v) = match field {
            Field::Rational => {
                let z = riemann_zeta(u + v - 1.0)?;
                let pre = |a: Complex64| c(2.0) * c(2.0 * PI).powc(a - 1.0);
                (z.value * bracket, z.error_estimate * bracket.norm(), pre(u), pre(v))
            }
            Field::Quadratic(d) => {
                let residue = field_invariants(d)?.residue;
                let z = dedekind_zeta_factored(d, u + v - 1.0)?;
                let df = d.modulus() as f64;
                let pre = |a: Complex64| {
                    if d.is_real() {
                        -2.0 * c(2.0 * PI).powc(2.0 * (a - 1.0)) * c(df).powc((1.0 - 2.0 * a) / 2.0)
                    } else {
                        -c(2.0 * PI).powc(2.0 * a - 1.0) * c(df).powc((1.0 - 2.0 * a) / 2.0)
                    }
                };
                (z.value * bracket * residue, z.error_estimate * (bracket * residue).norm(), pre(u), pre(v))
            }
        };
        Ok(Engine {
            field,
            u,
            v,
            constant,
            constant_err,
            sigma: sigma_prime_table(field, 1.0 - u - v, m_max),
            pre_u,
            pre_v,
            p: *p,
        })
    }

    pub fn start(&self) -> Partial {
        Partial {
            m: 0,
            sum_u: c(0.0),
            sum_v: c(0.0),
            inner_err: 0.0,
            flags: Flags::empty(),
            last_term: 0.0,
        }
    }

    /// m^(a-1) times the special-function kernel of the identity.
    fn kernel(&self, a: Complex64, m: usize) -> Result<EvalResult> {
        let mf = m as f64;
        let power = c(mf).powc(a - 1.0);
        let k = match self.field {
            Field::Rational => {
                let s = sine_tail_integral(a, 2.0 * PI * mf, &self.p)?;
                EvalResult { value: s.value * a, abs_error_estimate: s.abs_error_estimate * a.norm(), ..s }
            }
            Field::Quadratic(d) if d.is_real() => wilton_g_combo(a, d.modulus() as f64 / (4.0 * PI * PI * mf), &self.p)?,
            Field::Quadratic(d) => bessel_moment(a, 4.0 * PI * PI * mf / d.modulus() as f64, &self.p)?,
        };
        Ok(EvalResult {
            value: k.value * power,
            abs_error_estimate: k.abs_error_estimate * power.norm(),
            ..k
        })
    }

    /// Adds the terms m = state.m + 1 ..= upto.
    pub fn advance(&self, state: &mut Partial, upto: usize) -> Result<()> {
        for m in (state.m + 1)..=upto {
            let s = self.sigma[m];
            if s == c(0.0) {
                state.m = m;
                state.last_term = 0.0;
                continue;
            }
            let ku = self.kernel(self.u, m)?;
            let kv = self.kernel(self.v, m)?;
            let tu = self.pre_u * s * ku.value;
            let tv = self.pre_v * s * kv.value;
            state.sum_u += tu;
            state.sum_v += tv;
            state.inner_err += (self.pre_u * s).norm() * ku.abs_error_estimate + (self.pre_v * s).norm() * kv.abs_error_estimate;
            state.flags = state.flags.union(ku.flags).union(kv.flags);
            state.last_term = (tu + tv).norm();
            state.m = m;
        }
        Ok(())
    }

    /// Model of the omitted tail (zero where none is known) and an upper
    /// bound on the omitted tail itself.
    pub fn tail(&self, state: &Partial) -> Result<(Complex64, f64)> {
        match self.field {
            Field::Rational => rational_tail(self, state),
            Field::Quadratic(_) => Ok((c(0.0), f64::INFINITY)),
        }
    }
}

/// Tail of the rational identity. Each kernel is smooth in n,
/// w_a(n) ~ (2a/(4 pi^2)) (n^-2 - q_a n^-4 + r_a n^-6), and the divisor sums have
/// mean zeta(u+v) with constant term -zeta(u+v-1)/2 in their summatory
/// function; partial summation against that average order gives the model.
/// The bound is the divisor-envelope estimate of the whole omitted tail.
fn rational_tail(e: &Engine, state: &Partial) -> Result<(Complex64, f64)> {
    let mf = state.m as f64;
    let (u, v) = (e.u, e.v);
    let four_pi2 = 4.0 * PI * PI;
    let coef = |a: Complex64| {
        let q = (a + 1.0) * (a + 2.0) / four_pi2;
        let r = q * (a + 3.0) * (a + 4.0) / four_pi2;
        (a * 2.0 / four_pi2, q, r)
    };
    let point = |a: Complex64| {
        let (k, q, _) = coef(a);
        k * (1.0 / (mf * mf) - q / mf.powi(4))
    };
    let integral = |a: Complex64| {
        let (k, q, r) = coef(a);
        k * (1.0 / mf - q / (3.0 * mf.powi(3)) + r / (5.0 * mf.powi(5)))
    };
    let s = u + v;
    let model = if s.re > 2.0 {
        let mean = riemann_zeta(s)?.value;
        let offset = -riemann_zeta(s - 1.0)?.value / 2.0;
        let partial: Complex64 = e.sigma[1..=state.m].iter().sum();
        let excess = partial - mean * mf;
        mean * (integral(u) + integral(v)) - (excess - offset) * (point(u) + point(v))
    } else {
        c(0.0)
    };
    // |w_a(n)| <= K_a n^-2 from two integrations by parts of the sine tail.
    let k_bound = |a: Complex64| 2.0 * a.norm() * (1.0 + (a + 1.0).norm() / (a.re + 1.0)) / four_pi2;
    let sigma_exp = (1.0 - s.re).max(0.0);
    let bound = (k_bound(u) + k_bound(v)) * crate::zetavalues::divisor_tail_bound(mf, 2.0 - sigma_exp);
    Ok((model, bound))
}

fn rhs(field: Field, u: Complex64, v: Complex64, m: usize, p: &SeriesParams) -> Result<EvalResult> {
    let engine = Engine::new(field, u, v, m, p)?;
    let mut state = engine.start();
    engine.advance(&mut state, m)?;
    let (model, bound) = engine.tail(&state)?;
    let mut flags = state.flags;
    if !bound.is_finite() {
        flags.insert(Flag::NonConvergent);
    }
    Ok(EvalResult {
        value: engine.constant + state.sum_u + state.sum_v + model,
        abs_error_estimate: bound + state.inner_err + engine.constant_err,
        terms_used: m,
        flags,
    })
}

/// Right-hand side of Wilton's formula over Q truncated at M, with the
/// average-order tail model added.
pub fn wilton_rhs_rational(u: Complex64, v: Complex64, m: usize) -> Result<EvalResult> {
    rhs(Field::Rational, u, v, m, &SeriesParams::default())
}

pub fn wilton_rhs_real_quadratic(d: Discriminant, u: Complex64, v: Complex64, m: usize, p: &SeriesParams) -> Result<EvalResult> {
    if !d.is_real() {
        return Err(Error::domain("wilton_rhs_real_quadratic needs D > 0"));
    }
    rhs(Field::Quadratic(d), u, v, m, p)
}

pub fn wilton_rhs_imaginary_quadratic(d: Discriminant, u: Complex64, v: Complex64, m: usize, p: &SeriesParams) -> Result<EvalResult> {
    if d.is_real() {
        return Err(Error::domain("wilton_rhs_imaginary_quadratic needs D < 0"));
    }
    rhs(Field::Quadratic(d), u, v, m, p)
}
