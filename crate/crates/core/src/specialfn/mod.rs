//! Special functions needed by the zeta-value routes: complex Gamma,
//! incomplete gamma, Bessel tails, the Meijer G-functions of the Wilton
//! identities, Bessel moments, and Zagier's A-functions.

pub mod bessel;
pub mod gamma;
pub mod incgamma;
pub mod meijer;
pub mod moments;
mod params;
pub mod quad;
pub mod zagier;

pub use meijer::{meijer_g_0331, meijer_g_0331_contour, meijer_g_0331_integer, wilton_g_combo};
pub use moments::{bessel_moment, meijer_g_0231, sine_tail_integral};
pub use params::{EvalResult, Flag, Flags, SeriesParams};
pub use zagier::{zagier_a, zagier_a_m};
