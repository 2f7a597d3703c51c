use std::fmt;

use num_complex::Complex64;

pub type Result<T> = std::result::Result<T, Error>;

/// A hypothesis of the Wilton-type identities that an input failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    URealPart,
    VRealPart,
    SumRealPart,
    UIsOne,
    VIsOne,
    SumIsTwo,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Violation::URealPart => "Re u > -1",
            Violation::VRealPart => "Re v > -1",
            Violation::SumRealPart => "Re(u+v) > 0",
            Violation::UIsOne => "u ≠ 1",
            Violation::VIsOne => "v ≠ 1",
            Violation::SumIsTwo => "u+v ≠ 2",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{value} is not a fundamental discriminant ({reason})")]
    NotFundamental { value: i64, reason: &'static str },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("Gamma function pole at {0}")]
    GammaPole(Complex64),
    #[error("class number estimate {estimate} is {distance} away from an integer")]
    ClassNumberPrecision { estimate: f64, distance: f64 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(Violation),
    #[error("no convergence after {0} terms")]
    NoConvergence(usize),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
