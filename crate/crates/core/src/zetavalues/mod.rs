//! Riemann, Dirichlet and Dedekind zeta values along independent routes.

mod dedekind;
mod dirichlet;
mod hurwitz;
mod ramanujan;
mod riemann;
mod wilton_derived;
mod zagier;

pub use dedekind::{
    dedekind_zeta_direct, dedekind_zeta_even_real_closed, dedekind_zeta_factored, dedekind_zeta_odd_imaginary,
};
pub use dirichlet::{dirichlet_l_at_one, dirichlet_l_direct, dirichlet_l_even_closed, dirichlet_l_odd_closed};
pub use hurwitz::hurwitz_zeta;
pub use ramanujan::{
    cl_coefficients, cl_f, cl_g, odd_zeta_weights, ramanujan_identity_check, ramanujan_s, zeta_odd_closed, ClCoefficients,
    OddZetaWeights,
};
pub use riemann::{riemann_zeta, riemann_zeta_direct, riemann_zeta_even};
pub use wilton_derived::{
    dedekind_zeta_even_imaginary_wilton, dedekind_zeta_odd_real_wilton, OddRealWiltonParts,
};
pub use zagier::zagier_zeta2_imaginary;

pub(crate) use dedekind::divisor_tail_bound;

use num_complex::Complex64;

use crate::specialfn::Flags;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    DirectSeries,
    Factored,
    ClosedForm,
    Zagier,
    WiltonDerived,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::DirectSeries => "direct",
            Route::Factored => "factored",
            Route::ClosedForm => "closed",
            Route::Zagier => "zagier",
            Route::WiltonDerived => "wilton",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaValue {
    pub value: Complex64,
    pub route: Route,
    pub error_estimate: f64,
    pub flags: Flags,
}

impl ZetaValue {
    pub(crate) fn new(value: Complex64, route: Route, error_estimate: f64) -> Self {
        ZetaValue {
            value,
            route,
            error_estimate,
            flags: Flags::empty(),
        }
    }

    pub(crate) fn real(value: f64, route: Route, error_estimate: f64) -> Self {
        ZetaValue::new(Complex64::new(value, 0.0), route, error_estimate)
    }
}

/// Relative rounding allowance for closed forms evaluated in floating point.
pub(crate) const CLOSED_FORM_ROUNDING: f64 = 1e-14;
