//! Discriminants, characters and arithmetic invariants of quadratic fields.

mod character;
mod invariants;
mod units;

pub use character::{ideal_count, ideal_counts, kronecker, kronecker_symbol, sigma_prime, CharacterTable};
pub use invariants::{class_number, field_invariants, roots_of_unity, FieldInvariants};
pub use units::{fundamental_unit, regulator, FundamentalUnit};

use crate::error::{Error, Result};

/// A validated fundamental discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(value: i64) -> Result<Self> {
        match fundamental_failure(value) {
            None => Ok(Discriminant(value)),
            Some(reason) => Err(Error::NotFundamental { value, reason }),
        }
    }

    pub fn value(self) -> i64 {
        self.0
    }

    /// The conductor |D|.
    pub fn modulus(self) -> u64 {
        self.0.unsigned_abs()
    }

    pub fn is_real(self) -> bool {
        self.0 > 0
    }
}

impl TryFrom<i64> for Discriminant {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        Discriminant::new(value)
    }
}

impl std::fmt::Display for Discriminant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_fundamental(n: i64) -> bool {
    fundamental_failure(n).is_none()
}

fn fundamental_failure(n: i64) -> Option<&'static str> {
    if n == 0 || n == 1 {
        return Some("0 and 1 are excluded");
    }
    if n.unsigned_abs() > (1u64 << 40) {
        return Some("magnitude too large");
    }
    let abs = n.unsigned_abs();
    match n.rem_euclid(16) {
        r if r % 4 == 1 => {
            if is_squarefree(abs) {
                None
            } else {
                Some("not squarefree")
            }
        }
        8 | 12 => {
            if is_squarefree(abs / 4) {
                None
            } else {
                Some("D/4 not squarefree")
            }
        }
        _ => Some("wrong residue mod 4"),
    }
}

pub(crate) fn is_squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}
