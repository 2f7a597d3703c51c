//! Exact rational arithmetic: Bernoulli numbers, Bernoulli polynomials,
//! generalized Bernoulli numbers, and quadratic Gauss sums.

mod bernoulli;
mod gauss;

pub use bernoulli::{bernoulli_number, bernoulli_polynomial, generalized_bernoulli};
pub use gauss::{gauss_sum, GaussForm, GaussSumValue};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Exact rational in lowest terms with positive denominator.
pub type ExactRational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// Nearest double, robust to numerators and denominators beyond f64 range.
pub fn to_f64(q: &ExactRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 64).max(0) as u64;
    let shift_d = (db - 64).max(0) as u64;
    let n = (q.numer() >> shift_n).to_f64().unwrap();
    let d = (q.denom() >> shift_d).to_f64().unwrap();
    n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}
