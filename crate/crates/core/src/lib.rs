//! Special values of Dedekind zeta functions and Dirichlet L-functions of
//! quadratic fields, computed along several independent routes, together
//! with a numerical harness for Wilton-type product identities.

pub mod arithmetic;
pub mod error;
pub mod exactnum;
pub mod specialfn;
pub mod wilton;
pub mod zetavalues;

pub use error::{Error, Result, Violation};
