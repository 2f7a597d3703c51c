use std::f64::consts::PI;

use super::{Route, ZetaValue};
use crate::arithmetic::{CharacterTable, Discriminant};
use crate::error::{Error, Result};
use crate::specialfn::{zagier_a, SeriesParams};

/// zeta_K(2) = pi^2/(6 sqrt|D|) sum_{0<n<|D|} chi(n) A(cot(pi n/|D|)) for
/// imaginary K.
pub fn zagier_zeta2_imaginary(d: Discriminant) -> Result<ZetaValue> {
    if d.is_real() {
        return Err(Error::domain("zagier_zeta2_imaginary needs D < 0"));
    }
    let table = CharacterTable::new(d);
    let f = d.modulus();
    let p = SeriesParams::default();
    let mut sum = 0.0;
    let mut err = 0.0;
    // chi is odd and A is odd, so n and f - n contribute equally.
    for n in 1..=(f - 1) / 2 {
        let c = table.get(n as i64);
        if c == 0 {
            continue;
        }
        let cot = 1.0 / (PI * n as f64 / f as f64).tan();
        let a = zagier_a(cot, &p)?;
        sum += 2.0 * c as f64 * a.value.re;
        err += 2.0 * a.abs_error_estimate;
    }
    let scale = PI * PI / (6.0 * (f as f64).sqrt());
    Ok(ZetaValue::real(scale * sum, Route::Zagier, scale * err + 4.0 * f64::EPSILON * (scale * sum).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let z = zagier_zeta2_imaginary(Discriminant::new(-7).unwrap()).unwrap();
        assert!((z.value.re - 1.894_841_448_97).abs() < 1e-8);
        let z = zagier_zeta2_imaginary(Discriminant::new(-3).unwrap()).unwrap();
        assert!((z.value.re - 1.285_190_955_484_149_4).abs() < 1e-8);
    }
}
