use std::f64::consts::PI;

use num_complex::Complex64;

use crate::arithmetic::{CharacterTable, Discriminant};

/// Closed form recognised for a Gauss sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussForm {
    /// sqrt(D) for D > 0.
    SqrtD(i64),
    /// i sqrt(|D|) for D < 0.
    ISqrtAbsD(i64),
    /// Numerical value only.
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussSumValue {
    pub value: Complex64,
    pub exact_form: GaussForm,
}

/// tau(chi_D) = sum_{a mod |D|} chi(a) exp(2 pi i a / |D|), summed directly.
pub fn gauss_sum(d: Discriminant) -> GaussSumValue {
    let table = CharacterTable::new(d);
    let f = d.modulus();
    let mut value = Complex64::new(0.0, 0.0);
    for a in 1..f {
        let c = table.get(a as i64);
        if c != 0 {
            let theta = 2.0 * PI * a as f64 / f as f64;
            value += Complex64::new(theta.cos(), theta.sin()) * c as f64;
        }
    }
    let root = (f as f64).sqrt();
    let tol = 1e-9 * root;
    let exact_form = if d.is_real() && (value.re - root).abs() < tol && value.im.abs() < tol {
        GaussForm::SqrtD(d.value())
    } else if !d.is_real() && value.re.abs() < tol && (value.im - root).abs() < tol {
        GaussForm::ISqrtAbsD(d.value())
    } else {
        GaussForm::Numeric
    };
    GaussSumValue { value, exact_form }
}

impl GaussSumValue {
    /// The closed-form value when one was recognised, else the numerical sum.
    pub fn exact_value(&self) -> Complex64 {
        match self.exact_form {
            GaussForm::SqrtD(d) => Complex64::new((d as f64).sqrt(), 0.0),
            GaussForm::ISqrtAbsD(d) => Complex64::new(0.0, (d.unsigned_abs() as f64).sqrt()),
            GaussForm::Numeric => self.value,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = gauss_sum(Discriminant::new(-4).unwrap());
        assert!((g.value - Complex64::new(0.0, 2.0)).norm() < 1e-12);
        assert_eq!(g.exact_form, GaussForm::ISqrtAbsD(-4));
        let g = gauss_sum(Discriminant::new(5).unwrap());
        assert!((g.value.re - 5f64.sqrt()).abs() < 1e-12);
        let g = gauss_sum(Discriminant::new(-3).unwrap());
        assert!((g.value.im - 3f64.sqrt()).abs() < 1e-12);
    }
}
