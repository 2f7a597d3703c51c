//! Numerical harness for Wilton's formula over Q and its analogues for
//! quadratic fields: both sides are assembled independently and compared.

mod engine;
mod report;

pub use engine::{wilton_rhs_imaginary_quadratic, wilton_rhs_rational, wilton_rhs_real_quadratic};
pub use report::{classify_trend, convergence_sweep, verify, Trend, WiltonReport};

use num_complex::Complex64;

use crate::arithmetic::{ideal_counts, CharacterTable, Discriminant};
use crate::error::{Error, Result, Violation};

/// Checks the hypotheses shared by all Wilton-type identities.
pub fn check_hypotheses(u: Complex64, v: Complex64) -> Result<()> {
    let violation = if u.re <= -1.0 {
        Some(Violation::URealPart)
    } else if v.re <= -1.0 {
        Some(Violation::VRealPart)
    } else if (u + v).re <= 0.0 {
        Some(Violation::SumRealPart)
    } else if u == Complex64::new(1.0, 0.0) {
        Some(Violation::UIsOne)
    } else if v == Complex64::new(1.0, 0.0) {
        Some(Violation::VIsOne)
    } else if u + v == Complex64::new(2.0, 0.0) {
        Some(Violation::SumIsTwo)
    } else {
        None
    };
    match violation {
        Some(v) => Err(Error::Hypothesis(v)),
        None => Ok(()),
    }
}

/// The field of a Wilton identity: 0 encodes Q, otherwise a fundamental
/// discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Rational,
    Quadratic(Discriminant),
}

impl Field {
    pub fn from_disc(disc: i64) -> Result<Field> {
        if disc == 0 {
            Ok(Field::Rational)
        } else {
            Ok(Field::Quadratic(Discriminant::new(disc)?))
        }
    }

    pub fn disc(self) -> i64 {
        match self {
            Field::Rational => 0,
            Field::Quadratic(d) => d.value(),
        }
    }
}

/// sum over t | n of t^z v(t) v(n/t) for n = 0..=n_max (entry 0 unused), by
/// Dirichlet convolution; `counts` holds v(0..=n_max).
pub fn sigma_table(counts: &[u32], z: Complex64, n_max: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n_max + 1];
    for t in 1..=n_max {
        if counts[t] == 0 {
            continue;
        }
        let w = Complex64::new(t as f64, 0.0).powc(z) * counts[t] as f64;
        for k in 1..=(n_max / t) {
            if counts[k] != 0 {
                out[t * k] += w * counts[k] as f64;
            }
        }
    }
    out
}

/// sigma'_{z, v_K}(n) for n = 0..=n_max.
pub fn sigma_prime_table(field: Field, z: Complex64, n_max: usize) -> Vec<Complex64> {
    match field {
        Field::Rational => {
            // sigma_z(n) = sum over d | n of d^z.
            let mut out = vec![Complex64::new(0.0, 0.0); n_max + 1];
            for d in 1..=n_max {
                let w = Complex64::new(d as f64, 0.0).powc(z);
                for k in (d..=n_max).step_by(d) {
                    out[k] += w;
                }
            }
            out
        }
        Field::Quadratic(d) => {
            let counts = ideal_counts(&CharacterTable::new(d), n_max);
            sigma_table(&counts, z, n_max)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::sigma_prime;

    #[test]
    fn hypotheses() {
        let c = |x: f64| Complex64::new(x, 0.0);
        assert_eq!(check_hypotheses(c(1.0), c(2.0)), Err(Error::Hypothesis(Violation::UIsOne)));
        assert_eq!(check_hypotheses(c(0.5), c(1.5)), Err(Error::Hypothesis(Violation::SumIsTwo)));
        assert_eq!(check_hypotheses(c(-1.5), c(3.0)), Err(Error::Hypothesis(Violation::URealPart)));
        assert!(check_hypotheses(c(2.3), c(2.4)).is_ok());
    }

    #[test]
    fn table_matches_pointwise() {
        let d = Discriminant::new(-7).unwrap();
        let z = Complex64::new(-2.5, 0.3);
        let t = sigma_prime_table(Field::Quadratic(d), z, 60);
        for n in 1..=60u64 {
            let direct = sigma_prime(d, z, n).unwrap();
            assert!((t[n as usize] - direct).norm() < 1e-12 * (1.0 + direct.norm()));
        }
    }
}
