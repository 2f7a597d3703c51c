use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;
use zetaforge::arithmetic::{
    class_number, field_invariants, fundamental_unit, ideal_count, ideal_counts, is_fundamental, kronecker,
    kronecker_symbol, roots_of_unity, sigma_prime, CharacterTable, Discriminant,
};
use zetaforge::specialfn::SeriesParams;
use zetaforge::zetavalues::dirichlet_l_direct;

fn fundamentals(bound: i64) -> Vec<Discriminant> {
    (-bound..=bound).filter_map(|d| Discriminant::new(d).ok()).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

fn pow_mod(mut b: i64, mut e: i64, m: i64) -> i64 {
    let mut r = 1;
    b = b.rem_euclid(m);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Legendre symbol by Euler's criterion.
fn legendre(a: i64, p: i64) -> i8 {
    match pow_mod(a, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Primitive reduced forms (a, b, c) of discriminant d < 0.
fn reduced_forms(d: i64) -> Vec<(i64, i64, i64)> {
    let mut forms = Vec::new();
    let mut a = 1;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            let g = gcd(gcd(a as u64, b.unsigned_abs()), c as u64);
            if g == 1 {
                forms.push((a, b, c));
            }
        }
        a += 1;
    }
    forms
}

/// Number of ideals of norm m in an imaginary field, from representation
/// counts of the reduced forms.
fn ideal_count_by_forms(d: i64, m: i64) -> u64 {
    let w = match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    };
    let bound = (4 * m) as f64 / (-d) as f64;
    let ybound = bound.sqrt().ceil() as i64 + 1;
    let mut reps = 0;
    for (a, b, c) in reduced_forms(d) {
        let xbound = ((4 * c * m) as f64 / (-d) as f64).sqrt().ceil() as i64 + ybound * b.abs() + 2;
        for x in -xbound..=xbound {
            for y in -ybound * 2..=ybound * 2 {
                if a * x * x + b * x * y + c * y * y == m {
                    reps += 1;
                }
            }
        }
    }
    reps / w
}

#[test]
fn kronecker_matches_euler_criterion_at_odd_primes() {
    for d in fundamentals(120) {
        for p in (3..200).filter(|&p| is_prime(p)) {
            let expect = legendre(d.value(), p);
            assert_eq!(kronecker_symbol(d, p), expect, "D={d} p={p}");
        }
    }
}

#[test]
fn kronecker_at_two() {
    for d in fundamentals(120) {
        let expect = match d.value().rem_euclid(8) {
            1 => 1,
            5 => -1,
            _ => 0,
        };
        assert_eq!(kronecker_symbol(d, 2), expect, "D={d}");
    }
}

#[test]
fn character_parity() {
    for d in fundamentals(200) {
        let f = d.modulus() as i64;
        let expect = if d.is_real() { 1 } else { -1 };
        assert_eq!(kronecker_symbol(d, f - 1), expect, "D={d}");
        assert_eq!(CharacterTable::new(d).parity(), expect);
    }
}

#[test]
fn ideal_counts_match_reduced_forms() {
    for d in fundamentals(60).into_iter().filter(|d| !d.is_real()) {
        for m in 1..=60 {
            assert_eq!(ideal_count(d, m).unwrap(), ideal_count_by_forms(d.value(), m as i64), "D={d} m={m}");
        }
    }
}

#[test]
fn class_numbers_match_reduced_forms() {
    for d in fundamentals(400).into_iter().filter(|d| !d.is_real()) {
        assert_eq!(class_number(d).unwrap(), reduced_forms(d.value()).len() as u64, "D={d}");
    }
}

/// Narrow class number of d > 0 from cycles of reduced indefinite forms.
fn narrow_class_number(d: i64) -> usize {
    let r = (d as f64).sqrt();
    let reduced = |a: i64, b: i64| b > 0 && (b as f64) < r && r - (b as f64) < (2 * a.abs()) as f64 && (2 * a.abs()) as f64 <= r + b as f64;
    let mut forms = Vec::new();
    for b in 1..=(r as i64) {
        if (b * b - d) % 4 != 0 {
            continue;
        }
        let ac = (b * b - d) / 4;
        for a in 1..=ac.abs() {
            if ac % a != 0 {
                continue;
            }
            for a in [a, -a] {
                let c = ac / a;
                if reduced(a, b) && gcd(gcd(a.unsigned_abs(), b as u64), c.unsigned_abs()) == 1 {
                    forms.push((a, b, c));
                }
            }
        }
    }
    let step = |(_, b, c): (i64, i64, i64)| {
        let m = 2 * c.abs();
        let mut b2 = (-b).rem_euclid(m);
        while (b2 as f64) < r - m as f64 {
            b2 += m;
        }
        while b2 as f64 > r {
            b2 -= m;
        }
        (c, b2, (b2 * b2 - d) / (4 * c))
    };
    let mut seen = std::collections::HashSet::new();
    let mut cycles = 0;
    for f in forms {
        if seen.contains(&f) {
            continue;
        }
        cycles += 1;
        let mut g = f;
        while seen.insert(g) {
            g = step(g);
        }
    }
    cycles
}

#[test]
fn real_class_numbers_match_form_cycles() {
    for d in fundamentals(600).into_iter().filter(|d| d.is_real()) {
        let narrow = narrow_class_number(d.value());
        let expect = if fundamental_unit(d).unwrap().norm == -1 { narrow } else { narrow / 2 };
        assert_eq!(class_number(d).unwrap(), expect as u64, "D={d}");
    }
    for (d, h) in [(40, 2), (136, 2), (229, 3), (328, 4), (401, 5)] {
        assert_eq!(class_number(Discriminant::new(d).unwrap()).unwrap(), h, "D={d}");
    }
}

#[test]
fn sieve_matches_pointwise_counts() {
    for d in fundamentals(40) {
        let table = CharacterTable::new(d);
        let counts = ideal_counts(&table, 300);
        for m in 1..=300u64 {
            assert_eq!(counts[m as usize] as u64, ideal_count(d, m).unwrap());
        }
    }
}

#[test]
fn ideal_counts_nonnegative() {
    for d in [Discriminant::new(-4).unwrap(), Discriminant::new(5).unwrap(), Discriminant::new(-87).unwrap()] {
        let counts = ideal_counts(&CharacterTable::new(d), 10_000);
        let sum: i64 = (1..=10_000).map(|m| {
            let mut s = 0i64;
            for t in 1..=m {
                if m % t == 0 && t * t <= m {
                    s += kronecker(d.value(), t) as i64;
                    if t * t != m {
                        s += kronecker(d.value(), m / t) as i64;
                    }
                }
            }
            assert!(s >= 0);
            assert_eq!(s as u32, counts[m as usize]);
            s
        }).sum();
        assert!(sum > 0);
    }
}

/// Smallest y >= 1 with D y^2 +- 4 a square, giving eps = (x + y sqrt D)/2.
fn brute_force_unit(d: i64) -> (i64, i64, i8) {
    for y in 1i64.. {
        for (sign, norm) in [(-4i64, -1i8), (4, 1)] {
            let t = d * y * y + sign;
            if t > 0 {
                let x = (t as f64).sqrt().round() as i64;
                if x * x == t {
                    return (x, y, norm);
                }
            }
        }
    }
    unreachable!()
}

#[test]
fn units_match_brute_force() {
    for d in fundamentals(150).into_iter().filter(|d| d.is_real()) {
        let unit = fundamental_unit(d).unwrap();
        let (x, y, norm) = brute_force_unit(d.value());
        assert_eq!(unit.x, BigInt::from(x), "D={d}");
        assert_eq!(unit.y, BigInt::from(y), "D={d}");
        assert_eq!(unit.norm, norm, "D={d}");
    }
}

#[test]
fn pell_equation_holds_exactly() {
    for d in fundamentals(2000).into_iter().filter(|d| d.is_real()) {
        let u = fundamental_unit(d).unwrap();
        let lhs = &u.x * &u.x - BigInt::from(d.value()) * &u.y * &u.y;
        assert_eq!(lhs, BigInt::from(4 * u.norm as i64), "D={d}");
    }
}

#[test]
fn residue_matches_l_at_one() {
    let p = SeriesParams::default();
    for d in fundamentals(50) {
        let inv = field_invariants(d).unwrap();
        let l = dirichlet_l_direct(d, Complex64::new(1.0, 0.0), &p).unwrap().value.re;
        assert!((inv.residue - l).abs() < 1e-8, "D={d}: {} vs {l}", inv.residue);
    }
}

#[test]
fn field_invariant_examples() {
    let inv = field_invariants(Discriminant::new(-4).unwrap()).unwrap();
    assert_eq!((inv.r1, inv.r2, inv.w, inv.class_number), (0, 1, 4, 1));
    assert!((inv.residue - std::f64::consts::FRAC_PI_4).abs() < 1e-14);
    let inv = field_invariants(Discriminant::new(-3).unwrap()).unwrap();
    assert_eq!((inv.w, inv.class_number), (6, 1));
    let inv = field_invariants(Discriminant::new(5).unwrap()).unwrap();
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((inv.residue - 2.0 * golden.ln() / 5f64.sqrt()).abs() < 1e-14);
    assert_eq!(roots_of_unity(Discriminant::new(-7).unwrap()), 2);
}

#[test]
fn fundamental_discriminant_lists() {
    let negative: Vec<i64> = (-50..0).filter(|&d| is_fundamental(d)).collect();
    assert_eq!(
        negative,
        vec![-47, -43, -40, -39, -35, -31, -24, -23, -20, -19, -15, -11, -8, -7, -4, -3]
    );
    let positive: Vec<i64> = (0..50).filter(|&d| is_fundamental(d)).collect();
    assert_eq!(positive, vec![5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 40, 41, 44]);
    assert!(Discriminant::new(9).is_err());
    assert!(Discriminant::new(1).is_err());
}

proptest! {
    #[test]
    fn kronecker_is_periodic(di in 0usize..40, n in -500i64..500) {
        let ds = fundamentals(100);
        let d = ds[di % ds.len()];
        let f = d.modulus() as i64;
        prop_assert_eq!(kronecker_symbol(d, n), kronecker_symbol(d, n + f));
    }

    #[test]
    fn kronecker_is_completely_multiplicative(di in 0usize..40, m in 1i64..300, n in 1i64..300) {
        let ds = fundamentals(100);
        let d = ds[di % ds.len()];
        prop_assert_eq!(kronecker_symbol(d, m * n), kronecker_symbol(d, m) * kronecker_symbol(d, n));
    }

    #[test]
    fn ideal_count_is_multiplicative(di in 0usize..100, m in 1u64..=500, n in 1u64..=500) {
        prop_assume!(gcd(m, n) == 1);
        let ds = fundamentals(100);
        let d = ds[di % ds.len()];
        prop_assert_eq!(ideal_count(d, m * n).unwrap(), ideal_count(d, m).unwrap() * ideal_count(d, n).unwrap());
    }

    #[test]
    fn sigma_prime_symmetry(di in 0usize..40, n in 1u64..400, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let ds = fundamentals(60);
        let d = ds[di % ds.len()];
        let z = Complex64::new(re, im);
        let a = sigma_prime(d, z, n).unwrap();
        let b = Complex64::new(n as f64, 0.0).powc(z) * sigma_prime(d, -z, n).unwrap();
        prop_assert!((a - b).norm() < 1e-12 * (1.0 + a.norm()), "{} vs {}", a, b);
    }
}
