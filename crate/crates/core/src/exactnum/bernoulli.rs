use std::sync::RwLock;

use num_traits::{One, Zero};

use super::{binomial, integer, ExactRational};
use crate::arithmetic::{CharacterTable, Discriminant};

static TABLE: RwLock<Vec<ExactRational>> = RwLock::new(Vec::new());

/// Bernoulli number B_n with the convention B_1 = -1/2.
pub fn bernoulli_number(n: usize) -> ExactRational {
    if let Some(b) = TABLE.read().unwrap().get(n) {
        return b.clone();
    }
    let mut table = TABLE.write().unwrap();
    if table.len() <= n {
        let upto = n.max(2 * table.len()).max(32);
        *table = akiyama_tanigawa(upto);
    }
    table[n].clone()
}

fn akiyama_tanigawa(upto: usize) -> Vec<ExactRational> {
    let mut a: Vec<ExactRational> = Vec::with_capacity(upto + 1);
    let mut out = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        a.push(ExactRational::new(One::one(), (m as i64 + 1).into()));
        for j in (1..=m).rev() {
            let diff = &a[j - 1] - &a[j];
            a[j - 1] = diff * integer(j as i64);
        }
        out.push(a[0].clone());
    }
    // The recurrence yields B_1 = +1/2.
    if upto >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// B_n(x) = sum_k C(n, k) B_k x^(n-k).
pub fn bernoulli_polynomial(n: usize, x: &ExactRational) -> ExactRational {
    let mut acc = ExactRational::zero();
    let mut power = ExactRational::one();
    // Horner-free evaluation from the top coefficient down keeps this simple.
    for k in (0..=n).rev() {
        let c = ExactRational::from_integer(binomial(n as u64, k as u64)) * bernoulli_number(k);
        acc += c * &power;
        power *= x;
    }
    acc
}

/// Generalized Bernoulli number B_{n,chi_D} = f^(n-1) sum_a chi(a) B_n(a/f).
pub fn generalized_bernoulli(d: Discriminant, n: usize) -> ExactRational {
    let table = CharacterTable::new(d);
    let f = d.modulus() as i64;
    let mut acc = ExactRational::zero();
    for a in 1..=f {
        let c = table.get(a);
        if c != 0 {
            let b = bernoulli_polynomial(n, &ExactRational::new(a.into(), f.into()));
            acc += b * integer(c as i64);
        }
    }
    let scale = num_traits::pow(ExactRational::from_integer(f.into()), n) / integer(f);
    acc * scale
}
