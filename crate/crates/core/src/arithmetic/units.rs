use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, ToPrimitive, Zero};

use super::Discriminant;
use crate::error::{Error, Result};

/// The fundamental unit (x + y sqrt D)/2 with x, y > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalUnit {
    pub x: BigInt,
    pub y: BigInt,
    /// Norm of the unit, +1 or -1.
    pub norm: i8,
}

impl FundamentalUnit {
    /// Natural logarithm of the unit, accurate for arbitrarily large x.
    pub fn ln(&self, d: Discriminant) -> f64 {
        let sqrt_d = (d.value() as f64).sqrt();
        match (self.x.to_f64(), self.y.to_f64()) {
            (Some(x), Some(y)) if x < 1e150 => ((x + y * sqrt_d) / 2.0).ln(),
            _ => {
                // x and y sqrt D agree to relative order 1/x^2 here.
                big_ln(&self.x)
            }
        }
    }
}

fn big_ln(n: &BigInt) -> f64 {
    let bits = n.bits();
    let shift = bits.saturating_sub(60);
    let top: BigInt = n >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Fundamental unit of a real quadratic field from the continued fraction
/// of omega = (b + sqrt D)/2, b = D mod 2.
pub fn fundamental_unit(d: Discriminant) -> Result<FundamentalUnit> {
    if !d.is_real() {
        return Err(Error::domain("fundamental_unit needs D > 0"));
    }
    let dv = d.value();
    let b = dv.rem_euclid(2);
    let s = dv.sqrt();
    let big_d = BigInt::from(dv);
    let big_b = BigInt::from(b);

    // Complete quotients (P + sqrt D)/Q with Q | D - P^2.
    let (mut p_cf, mut q_cf) = (b, 2i64);
    let (mut p_prev, mut p_cur) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q_cur) = (BigInt::one(), BigInt::zero());
    for _ in 0..100_000 {
        let a = (p_cf + s).div_euclid(q_cf);
        let p_next = BigInt::from(a) * &p_cur + &p_prev;
        let q_next = BigInt::from(a) * &q_cur + &q_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);

        // Norm of p - q omega.
        let norm4 = BigInt::from(4) * &p_cur * &p_cur - BigInt::from(4) * &big_b * &p_cur * &q_cur
            + &q_cur * &q_cur * (&big_b * &big_b - &big_d);
        let norm: BigInt = norm4 / 4;
        if norm.is_one() || norm == -BigInt::one() {
            let x = BigInt::from(2) * &p_cur - &big_b * &q_cur;
            return Ok(FundamentalUnit {
                x,
                y: q_cur,
                norm: if norm.is_one() { 1 } else { -1 },
            });
        }

        p_cf = a * q_cf - p_cf;
        q_cf = (dv - p_cf * p_cf) / q_cf;
    }
    Err(Error::NoConvergence(100_000))
}

pub fn regulator(d: Discriminant) -> Result<f64> {
    Ok(fundamental_unit(d)?.ln(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(d: i64) -> (i64, i64, i8) {
        let u = fundamental_unit(Discriminant::new(d).unwrap()).unwrap();
        (u.x.to_i64().unwrap(), u.y.to_i64().unwrap(), u.norm)
    }

    #[test]
    fn small_units() {
        assert_eq!(unit(5), (1, 1, -1));
        assert_eq!(unit(8), (2, 1, -1));
        assert_eq!(unit(12), (4, 1, 1));
        assert_eq!(unit(13), (3, 1, -1));
        assert_eq!(unit(21), (5, 1, 1));
    }

    #[test]
    fn regulator_of_five() {
        let r = regulator(Discriminant::new(5).unwrap()).unwrap();
        assert!((r - 0.481_211_825_059_603_4).abs() < 1e-15);
    }

    #[test]
    fn large_unit_log() {
        // D = 661 has a large fundamental unit; both log paths must agree.
        let d = Discriminant::new(661).unwrap();
        let u = fundamental_unit(d).unwrap();
        let exact = u.ln(d);
        assert!((big_ln(&u.x) - exact).abs() < 1e-9 * exact);
    }
}
