use std::f64::consts::PI;

use super::{regulator, CharacterTable, Discriminant};
use crate::error::{Error, Result};
use crate::zetavalues::dirichlet_l_at_one;

#[derive(Debug, Clone, PartialEq)]
pub struct FieldInvariants {
    pub disc: Discriminant,
    pub r1: u32,
    pub r2: u32,
    pub w: u32,
    pub class_number: u64,
    /// ln of the fundamental unit for real fields, 1 for imaginary ones.
    pub regulator: f64,
    /// Residue of the Dedekind zeta function at s = 1, equal to L(1, chi_D).
    pub residue: f64,
}

/// Number of roots of unity in the field.
pub fn roots_of_unity(d: Discriminant) -> u32 {
    match d.value() {
        -4 => 4,
        -3 => 6,
        _ => 2,
    }
}

pub fn class_number(d: Discriminant) -> Result<u64> {
    let table = CharacterTable::new(d);
    if d.is_real() {
        let l1 = dirichlet_l_at_one(&table);
        let estimate = (d.value() as f64).sqrt() * l1 / (2.0 * regulator(d)?);
        let nearest = estimate.round();
        let distance = (estimate - nearest).abs();
        if distance >= 0.25 || nearest < 1.0 {
            return Err(Error::ClassNumberPrecision { estimate, distance });
        }
        Ok(nearest as u64)
    } else {
        let f = d.modulus() as i64;
        let s: i64 = (1..f).map(|a| table.get(a) as i64 * a).sum();
        let num = roots_of_unity(d) as i64 * s.abs();
        if num % (2 * f) != 0 {
            return Err(Error::Inconsistent(format!(
                "character sum {s} gives a non-integral class number for D = {}",
                d.value()
            )));
        }
        Ok((num / (2 * f)) as u64)
    }
}

pub fn field_invariants(d: Discriminant) -> Result<FieldInvariants> {
    let h = class_number(d)?;
    let w = roots_of_unity(d);
    let (r1, r2, reg, residue) = if d.is_real() {
        let reg = regulator(d)?;
        (2, 0, reg, 2.0 * h as f64 * reg / (d.value() as f64).sqrt())
    } else {
        (0, 1, 1.0, 2.0 * PI * h as f64 / (w as f64 * (d.modulus() as f64).sqrt()))
    };
    let l1 = dirichlet_l_at_one(&CharacterTable::new(d));
    if (l1 - residue).abs() > 1e-8 * residue.max(1.0) {
        return Err(Error::Inconsistent(format!(
            "residue {residue} disagrees with L(1, chi) = {l1}"
        )));
    }
    Ok(FieldInvariants {
        disc: d,
        r1,
        r2,
        w,
        class_number: h,
        regulator: reg,
        residue,
    })
}
