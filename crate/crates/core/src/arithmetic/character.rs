use num_complex::Complex64;

use super::Discriminant;
use crate::error::{Error, Result};

/// Kronecker symbol (d/n) for arbitrary integers.
pub fn kronecker(d: i64, n: i64) -> i8 {
    if n == 0 {
        return if d.abs() == 1 { 1 } else { 0 };
    }
    let mut result: i8 = 1;
    if n < 0 && d < 0 {
        result = -result;
    }
    let mut m = n.unsigned_abs();
    let twos = m.trailing_zeros();
    if twos > 0 {
        if d % 2 == 0 {
            return 0;
        }
        m >>= twos;
        if twos % 2 == 1 && matches!(d.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    result * jacobi(d.rem_euclid(m as i64) as u64, m)
}

/// Jacobi symbol (a/m) for odd m > 0.
fn jacobi(mut a: u64, mut m: u64) -> i8 {
    debug_assert!(m % 2 == 1);
    a %= m;
    let mut t: i8 = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(m % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            t = -t;
        }
        a %= m;
    }
    if m == 1 {
        t
    } else {
        0
    }
}

pub fn kronecker_symbol(d: Discriminant, n: i64) -> i8 {
    kronecker(d.value(), n)
}

/// Values of the primitive character chi_D on a full residue system mod |D|.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    disc: Discriminant,
    values: Vec<i8>,
}

impl CharacterTable {
    pub fn new(disc: Discriminant) -> Self {
        let f = disc.modulus() as i64;
        let values = (0..f).map(|a| kronecker(disc.value(), a)).collect();
        CharacterTable { disc, values }
    }

    pub fn discriminant(&self) -> Discriminant {
        self.disc
    }

    pub fn modulus(&self) -> u64 {
        self.disc.modulus()
    }

    pub fn get(&self, n: i64) -> i8 {
        self.values[n.rem_euclid(self.values.len() as i64) as usize]
    }

    /// chi(a) for a = 0, ..., |D| - 1.
    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// +1 for real fields, -1 for imaginary ones.
    pub fn parity(&self) -> i8 {
        self.get(-1)
    }
}

/// Number of integral ideals of norm m.
pub fn ideal_count(d: Discriminant, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::domain("ideal_count needs m >= 1"));
    }
    let table = CharacterTable::new(d);
    let mut total: i64 = 0;
    let mut t = 1u64;
    while t * t <= m {
        if m.is_multiple_of(t) {
            total += table.get(t as i64) as i64;
            if t * t != m {
                total += table.get((m / t) as i64) as i64;
            }
        }
        t += 1;
    }
    Ok(total as u64)
}

/// Ideal counts v(0..=n_max) by a divisor sieve; v(0) = 0.
pub fn ideal_counts(table: &CharacterTable, n_max: usize) -> Vec<u32> {
    let mut acc = vec![0i64; n_max + 1];
    for d in 1..=n_max {
        let c = table.get(d as i64) as i64;
        if c != 0 {
            for k in (d..=n_max).step_by(d) {
                acc[k] += c;
            }
        }
    }
    acc.into_iter().map(|x| x as u32).collect()
}

/// Sum over t | n of t^z v(t) v(n/t).
pub fn sigma_prime(d: Discriminant, z: Complex64, n: u64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::domain("sigma_prime needs n >= 1"));
    }
    let mut total = Complex64::new(0.0, 0.0);
    let mut t = 1u64;
    while t * t <= n {
        if n.is_multiple_of(t) {
            let s = n / t;
            let vt = ideal_count(d, t)? as f64;
            let vs = ideal_count(d, s)? as f64;
            if vt * vs != 0.0 {
                total += Complex64::new(t as f64, 0.0).powc(z) * (vt * vs);
                if s != t {
                    total += Complex64::new(s as f64, 0.0).powc(z) * (vt * vs);
                }
            }
        }
        t += 1;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(8, 7), 1);
        assert_eq!(kronecker(-3, -1), -1);
        assert_eq!(kronecker(12, 5), -1);
        assert_eq!(kronecker(-7, 2), 1);
    }

    #[test]
    fn ideal_count_examples() {
        let d = Discriminant::new(-4).unwrap();
        assert_eq!(ideal_count(d, 5).unwrap(), 2);
        assert_eq!(ideal_count(d, 3).unwrap(), 0);
        assert_eq!(ideal_count(d, 9).unwrap(), 1);
        assert!(ideal_count(d, 0).is_err());
    }

    #[test]
    fn sieve_matches_divisor_sums() {
        let d = Discriminant::new(-23).unwrap();
        let table = CharacterTable::new(d);
        let v = ideal_counts(&table, 200);
        for m in 1..=200u64 {
            assert_eq!(v[m as usize] as u64, ideal_count(d, m).unwrap());
        }
    }
}
