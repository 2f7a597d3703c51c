//! Ramanujan's formula for odd zeta values and the closed forms built on it.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::riemann::riemann_zeta_direct;
use super::{Route, ZetaValue};
use crate::error::{Error, Result};
use crate::exactnum::{bernoulli_number, factorial, integer, rational, to_f64, ExactRational};
use crate::specialfn::{Flag, SeriesParams};

/// S_n(r) = sum_k 1/(k^n (e^(pi r k) - 1)).
pub fn ramanujan_s(n: u32, r: f64, p: &SeriesParams) -> Result<ZetaValue> {
    if n == 0 {
        return Err(Error::domain("ramanujan_s needs n >= 1"));
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain("ramanujan_s needs r > 0"));
    }
    let ratio = (-PI * r).exp();
    let mut sum = 0.0;
    let mut converged = false;
    let mut bound = f64::INFINITY;
    for k in 1..=p.max_terms.max(1) {
        let kf = k as f64;
        let term = 1.0 / (kf.powi(n as i32) * (PI * r * kf).exp_m1());
        sum += term;
        // Later terms shrink at least geometrically by e^(-pi r).
        bound = term * ratio / (1.0 - ratio);
        if bound <= p.tolerance * sum || term == 0.0 {
            converged = true;
            break;
        }
    }
    let mut z = ZetaValue::real(sum, Route::DirectSeries, bound + 2.0 * f64::EPSILON * sum);
    if !converged {
        z.flags.insert(Flag::Truncated);
    }
    Ok(z)
}

fn c_k(n: usize, k: usize) -> ExactRational {
    let j = 2 * n + 2 - 2 * k;
    bernoulli_number(2 * k) * bernoulli_number(j)
        / ExactRational::from_integer(factorial(2 * k as u64) * factorial(j as u64))
}

/// |LHS - RHS| of Ramanujan's identity at (n, alpha), beta = pi^2/alpha,
/// with zeta(2n+1) from the direct series. The Lambert sums use the
/// argument convention S_(2n+1)(2 alpha / pi) of `ramanujan_s`.
pub fn ramanujan_identity_check(n: u32, alpha: f64) -> Result<f64> {
    if n == 0 || !(alpha > 0.0) {
        return Err(Error::domain("ramanujan_identity_check needs n >= 1 and alpha > 0"));
    }
    let p = SeriesParams::default().with_tolerance(1e-17);
    let beta = PI * PI / alpha;
    let big_n = 2 * n + 1;
    let zeta = riemann_zeta_direct(Complex64::new(big_n as f64, 0.0), &p)?.value.re;
    let s_alpha = ramanujan_s(big_n, 2.0 * alpha / PI, &p)?.value.re;
    let s_beta = ramanujan_s(big_n, 2.0 * beta / PI, &p)?.value.re;
    let nn = n as i32;
    let lhs = alpha.powi(-nn) * (0.5 * zeta + s_alpha);
    let mut poly = 0.0;
    for k in 0..=(n as usize + 1) {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        poly += sign * to_f64(&c_k(n as usize, k)) * alpha.powi(nn + 1 - k as i32) * beta.powi(k as i32);
    }
    let rhs = (-beta).powi(-nn) * (0.5 * zeta + s_beta) - 4f64.powi(nn) * poly;
    Ok((lhs - rhs).abs())
}

/// Chamberland-Lopatto coefficient block for index m.
#[derive(Debug, Clone, PartialEq)]
pub struct ClCoefficients {
    pub index_m: u32,
    /// F_{2m-1}.
    pub f: ExactRational,
    /// G_{2m-1}.
    pub g: ExactRational,
    /// G_{2m}.
    pub g_even: ExactRational,
    pub d_m: ExactRational,
    pub k_m: ExactRational,
    pub e_m: ExactRational,
    pub h_m: ExactRational,
}

fn weighted_bernoulli_sum(m: usize, weight: i64) -> ExactRational {
    let mut acc = ExactRational::zero();
    let mut w = ExactRational::one();
    for k in 0..=(m + 1) {
        acc += w.clone() * c_k(m, k);
        w *= integer(weight);
    }
    acc
}

/// F_m = sum_{k=0}^{m+1} (-1)^k B_2k B_{2m+2-2k} / ((2k)! (2m+2-2k)!).
pub fn cl_f(m: usize) -> ExactRational {
    weighted_bernoulli_sum(m, -1)
}

/// G_m, as F_m with weights (-4)^k.
pub fn cl_g(m: usize) -> ExactRational {
    weighted_bernoulli_sum(m, -4)
}

pub fn cl_coefficients(m: u32) -> Result<ClCoefficients> {
    if m == 0 {
        return Err(Error::domain("cl_coefficients needs m >= 1"));
    }
    let mu = m as usize;
    let f = cl_f(2 * mu - 1);
    let g = cl_g(2 * mu - 1);
    let g_even = cl_g(2 * mu);
    let four = integer(4);
    let p4 = num_traits::pow(four.clone(), 2 * mu - 1);
    let d_m = p4.clone() * ((p4.clone() + integer(1)) * f.clone() - g.clone()) / integer(2);
    let k_m = rational(1, 2) * (integer(1) - num_traits::pow(four.clone(), 2 * mu))
        / (integer(1) + num_traits::pow(integer(-4), mu) - num_traits::pow(integer(2), 4 * mu + 1));
    let mut h_m = ExactRational::zero();
    for k in 0..=mu {
        let num = num_traits::pow(integer(-4), mu + k) * bernoulli_number(4 * mu) * bernoulli_number(4 * mu + 2 - 4 * k);
        h_m += num / ExactRational::from_integer(factorial(4 * k as u64) * factorial((4 * mu + 2 - 4 * k) as u64));
    }
    let e_m = num_traits::pow(four, 2 * mu) / integer(2) * g_even.clone()
        - num_traits::pow(integer(2), 4 * mu + 1) * k_m.clone() * h_m.clone()
        - num_traits::pow(integer(2), 4 * mu) * k_m.clone() * g_even.clone();
    Ok(ClCoefficients {
        index_m: m,
        f,
        g,
        g_even,
        d_m,
        k_m,
        e_m,
        h_m,
    })
}

/// Exact weights with zeta(n) = w1 S_n(1) + w2 S_n(2) + w4 S_n(4).
#[derive(Debug, Clone, PartialEq)]
pub struct OddZetaWeights {
    pub n: u32,
    pub w1: ExactRational,
    pub w2: ExactRational,
    pub w4: ExactRational,
}

/// The n = 4m - 1 weights of the Chamberland-Lopatto formula.
fn cl_weights(n: u32) -> OddZetaWeights {
    let m = (n + 1) / 4;
    let c = cl_coefficients(m).expect("m >= 1");
    let mu = m as usize;
    let four = integer(4);
    OddZetaWeights {
        n,
        w1: -c.f.clone() * num_traits::pow(four.clone(), 4 * mu - 2) / c.d_m.clone(),
        w2: c.g.clone() * num_traits::pow(four.clone(), 2 * mu - 1) / c.d_m.clone(),
        w4: -c.f * num_traits::pow(four, 2 * mu - 1) / c.d_m,
    }
}

/// Gaussian rational a + b i.
#[derive(Debug, Clone, PartialEq)]
struct Gq {
    re: ExactRational,
    im: ExactRational,
}

impl Gq {
    fn new(re: ExactRational, im: ExactRational) -> Self {
        Gq { re, im }
    }

    fn real(re: ExactRational) -> Self {
        Gq::new(re, ExactRational::zero())
    }

    fn inv(&self) -> Gq {
        let n = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        Gq::new(self.re.clone() / n.clone(), -self.im.clone() / n)
    }

    fn powi(&self, e: i64) -> Gq {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Gq::real(integer(1));
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }

    fn scale(&self, q: &ExactRational) -> Gq {
        Gq::new(self.re.clone() * q.clone(), self.im.clone() * q.clone())
    }
}

impl Add for Gq {
    type Output = Gq;
    fn add(self, o: Gq) -> Gq {
        Gq::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Gq {
    type Output = Gq;
    fn sub(self, o: Gq) -> Gq {
        Gq::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq::new(-self.re, -self.im)
    }
}

impl Mul for Gq {
    type Output = Gq;
    fn mul(self, o: Gq) -> Gq {
        Gq::new(
            self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            self.re * o.im + self.im * o.re,
        )
    }
}

/// One instance of Ramanujan's identity with alpha = a pi, beta = b pi,
/// multiplied by pi^n, as coefficients of (zeta, S1, S2, S4, pi^(2n+1)).
fn relation(n: usize, a: Gq, b: Gq, s_alpha: [ExactRational; 3], s_beta: [ExactRational; 3]) -> [Gq; 5] {
    let nn = n as i64;
    let a_pow = a.powi(-nn);
    let b_pow = (-b.clone()).powi(-nn);
    let half = rational(1, 2);
    let zeta = (a_pow.clone() - b_pow.clone()).scale(&half);
    let mut s = [Gq::real(integer(0)), Gq::real(integer(0)), Gq::real(integer(0))];
    for i in 0..3 {
        s[i] = a_pow.scale(&s_alpha[i]) - b_pow.scale(&s_beta[i]);
    }
    let mut poly = Gq::real(integer(0));
    for k in 0..=(n + 1) {
        let sign = if k % 2 == 0 { integer(1) } else { integer(-1) };
        let term = a.powi((n + 1 - k) as i64) * b.powi(k as i64);
        poly = poly + term.scale(&(sign * c_k(n, k)));
    }
    let pi_coef = poly.scale(&num_traits::pow(integer(4), n));
    let [s1, s2, s4] = s;
    [zeta, s1, s2, s4, pi_coef]
}

/// Weights for zeta(n), n odd >= 3, obtained by eliminating pi^n between
/// instances of Ramanujan's identity at alpha = pi/2, pi, and pi(1+i)/2.
pub fn odd_zeta_weights(n: u32) -> Result<OddZetaWeights> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::domain("odd_zeta_weights needs odd n >= 3"));
    }
    let half_n = ((n - 1) / 2) as usize;
    let z = || integer(0);
    let one = integer(1);
    let two_pow = num_traits::pow(rational(1, 2), n as usize - 1);
    let rows_complex = [
        // alpha = pi/2: S(1) against S(4).
        relation(
            half_n,
            Gq::real(rational(1, 2)),
            Gq::real(integer(2)),
            [one.clone(), z(), z()],
            [z(), z(), one.clone()],
        ),
        // alpha = beta = pi.
        relation(half_n, Gq::real(one.clone()), Gq::real(one.clone()), [z(), one.clone(), z()], [z(), one.clone(), z()]),
        // alpha = pi(1+i)/2: the Lambert sum at complex argument reduces to
        // -S(1) + (2 + 2^(1-n)) S(2) - 2^(1-n) S(4).
        relation(
            half_n,
            Gq::new(rational(1, 2), rational(1, 2)),
            Gq::new(one.clone(), integer(-1)),
            [-one.clone(), integer(2) + two_pow.clone(), -two_pow],
            [z(), one.clone(), z()],
        ),
    ];
    let mut rows: Vec<[ExactRational; 5]> = Vec::new();
    for r in &rows_complex {
        rows.push([r[0].re.clone(), r[1].re.clone(), r[2].re.clone(), r[3].re.clone(), r[4].re.clone()]);
        rows.push([r[0].im.clone(), r[1].im.clone(), r[2].im.clone(), r[3].im.clone(), r[4].im.clone()]);
    }
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let (r, s) = (&rows[i], &rows[j]);
            let det = r[0].clone() * s[4].clone() - s[0].clone() * r[4].clone();
            if det.is_zero() {
                continue;
            }
            let w = |c: usize| -(r[c].clone() * s[4].clone() - s[c].clone() * r[4].clone()) / det.clone();
            return Ok(OddZetaWeights {
                n,
                w1: w(1),
                w2: w(2),
                w4: w(3),
            });
        }
    }
    Err(Error::Inconsistent(format!("no independent pair of relations for zeta({n})")))
}

/// zeta(n) for odd n >= 3 from Lambert sums at r = 1, 2, 4. For n = 4m - 1
/// the Chamberland-Lopatto weights are used; for n = 4m + 1 the
/// weights come from `odd_zeta_weights`.
pub fn zeta_odd_closed(n: u32) -> Result<ZetaValue> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::domain("zeta_odd_closed needs odd n >= 3"));
    }
    let w = if n % 4 == 3 { cl_weights(n) } else { odd_zeta_weights(n)? };
    let p = SeriesParams::default().with_tolerance(1e-17);
    let s1 = ramanujan_s(n, 1.0, &p)?;
    let s2 = ramanujan_s(n, 2.0, &p)?;
    let s4 = ramanujan_s(n, 4.0, &p)?;
    let (a, b, c) = (to_f64(&w.w1), to_f64(&w.w2), to_f64(&w.w4));
    let value = a * s1.value.re + b * s2.value.re + c * s4.value.re;
    let err = a.abs() * s1.error_estimate + b.abs() * s2.error_estimate + c.abs() * s4.error_estimate
        + 4.0 * f64::EPSILON * (a * s1.value.re).abs().max((b * s2.value.re).abs());
    Ok(ZetaValue::real(value, Route::ClosedForm, err))
}
