//! Coefficient rules for the built-in problems.

use crate::num;
use crate::series::PowerSeries;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

fn from_rationals(prec: u32, r: &[Rational]) -> PowerSeries {
    PowerSeries::new(r.iter().map(|q| Float::with_val(prec, q)).collect()).expect("nonempty")
}

fn x(prec: u32, order: usize) -> PowerSeries {
    PowerSeries::monomial(num::one(prec), 1, order)
}

fn one(prec: u32, order: usize) -> PowerSeries {
    PowerSeries::constant(num::one(prec), order)
}

/// `erfc(x) exp(x^2)`: `c_n = (-1)^n / Gamma(n/2 + 1)`.
pub fn mittag_leffler(order: usize, prec: u32) -> PowerSeries {
    let c = (0..=order)
        .map(|n| {
            let g = Float::with_val(prec, n as f64 / 2.0 + 1.0).gamma();
            let v = g.recip();
            if n % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    PowerSeries::new(c).expect("nonempty")
}

/// Ground-state energy coefficients of `p^2 + x^2 + g x^4` (halved), exact.
///
/// Writes the wave function as `exp(-x^2/2) sum_n g^n sum_j B_{n,j} x^{2j}`
/// and solves the order-by-order equations from the top power down.
pub fn quartic_rationals(order: usize) -> Vec<Rational> {
    let mut e = vec![Rational::from((1, 2))];
    // b[n][j]
    let mut b: Vec<Vec<Rational>> = vec![vec![Rational::from(1)]];
    let get = |b: &Vec<Vec<Rational>>, n: usize, j: isize| -> Rational {
        if j < 0 {
            return Rational::new();
        }
        b.get(n).and_then(|row| row.get(j as usize)).cloned().unwrap_or_default()
    };
    for n in 1..=order {
        let mut row = vec![Rational::new(); 2 * n + 2];
        b.push(row.clone());
        for j in (1..=2 * n).rev() {
            let mut rhs = Rational::new();
            for (k, ek) in e.iter().enumerate().take(n).skip(1) {
                rhs += Rational::from(ek * &get(&b, n - k, j as isize));
            }
            let up = Rational::from((((2 * j + 2) * (2 * j + 1) / 2) as i64, 1));
            rhs += up * get(&b, n, j as isize + 1);
            rhs -= get(&b, n - 1, j as isize - 2);
            row[j] = rhs / Rational::from((2 * j) as i64);
            b[n] = row.clone();
        }
        e.push(-row[1].clone());
    }
    e
}

pub fn quartic_oscillator(order: usize, prec: u32) -> PowerSeries {
    from_rationals(prec, &quartic_rationals(order))
}

/// `sqrt(x^2 + 4) - x`.
pub fn correlation(order: usize, prec: u32) -> PowerSeries {
    let z2 = PowerSeries::monomial(num::ratio(prec, 1, 4), 2, order);
    let root = (&one(prec, order) + &z2).pow(&num::ratio(prec, 1, 2)).expect("positive");
    &root.scale(&num::int(prec, 2)) - &x(prec, order)
}

/// `2/x - 2(1 - exp(-x))/x^2`: `c_n = 2 (-1)^n / (n+2)!`.
pub fn debye_huckel(order: usize, prec: u32) -> PowerSeries {
    let mut fact = Integer::from(2);
    let mut c = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let v = Float::with_val(prec, 2) / Float::with_val(prec, &fact);
        c.push(if n % 2 == 1 { -v } else { v });
        fact *= n as u64 + 3;
    }
    PowerSeries::new(c).expect("nonempty")
}

/// `1F1(1; 3/2; -3x/2)`: `a_n = (-3/2)^n Gamma(3/2)/Gamma(n + 3/2) = (-3)^n / (2n+1)!!`.
pub fn branched_polymer(order: usize, prec: u32) -> PowerSeries {
    let mut r = Vec::with_capacity(order + 1);
    let mut a = Rational::from(1);
    for n in 0..=order {
        r.push(a.clone());
        a *= Rational::from((-3i64, (2 * n + 3) as i64));
    }
    from_rationals(prec, &r)
}

/// `8 pi^2 g^2 f(g) = 1 + pi^4 g^2/32 + (pi^2 g/4) sqrt(1 + pi^4 g^2/64)`.
pub fn particle_in_box(order: usize, prec: u32) -> PowerSeries {
    let pi2 = num::pi(prec).square();
    let pi4 = Float::with_val(prec, pi2.square_ref());
    let inner = &one(prec, order) + &PowerSeries::monomial(Float::with_val(prec, &pi4 / 64u32), 2, order);
    let root = inner.pow(&num::ratio(prec, 1, 2)).expect("positive");
    let tail = (&root * &x(prec, order)).scale(&Float::with_val(prec, &pi2 / 4u32));
    let quad = PowerSeries::monomial(Float::with_val(prec, &pi4 / 32u32), 2, order);
    &(&one(prec, order) + &quad) + &tail
}

/// `(sqrt(x^2 + 1) + x)^a`:
/// `a_n = 2^n (a/2 - n/2 + 1)^{rising n} / (n! (n/a + 1))`.
pub fn generating_function(order: usize, prec: u32, a: &Float) -> PowerSeries {
    let mut c = Vec::with_capacity(order + 1);
    let mut fact = num::one(prec);
    for n in 0..=order {
        if n > 0 {
            fact *= n as u64;
        }
        let m = Float::with_val(prec, a / 2u32) - Float::with_val(prec, n as u64) / 2u32 + 1u32;
        let mut rising = num::one(prec);
        for i in 0..n {
            rising *= Float::with_val(prec, &m + i as u64);
        }
        let two_n = Float::with_val(prec, 2).pow(n as u32);
        let denom = Float::with_val(prec, &fact * (Float::with_val(prec, n as u64) / a + 1u32));
        c.push(two_n * rising / denom);
    }
    PowerSeries::new(c).expect("nonempty")
}

/// `int_0^x (sin t/t^3 - cos t/t^2)^2 dt`.
pub fn scattering(order: usize, prec: u32) -> PowerSeries {
    // integrand before squaring, in u = t^2: g_k = (-1)^k 2(k+1)/(2k+3)!
    let half = order / 2;
    let mut g = Vec::with_capacity(half + 1);
    let mut fact = Integer::from(6);
    for k in 0..=half {
        let v = Float::with_val(prec, 2 * (k as u64 + 1)) / Float::with_val(prec, &fact);
        g.push(if k % 2 == 1 { -v } else { v });
        fact *= (2 * k as u64 + 4) * (2 * k as u64 + 5);
    }
    let g = PowerSeries::new(g).expect("nonempty");
    let sq = &g * &g;
    let mut c = vec![num::zero(prec); order + 1];
    for j in 0..=half {
        let p = 2 * j + 1;
        if p <= order {
            c[p] = Float::with_val(prec, sq.coeff(j) / p as u64);
        }
    }
    PowerSeries::new(c).expect("nonempty")
}

/// `2 exp(-x) I_1(x) / x`.
pub fn wilson_loop(order: usize, prec: u32) -> PowerSeries {
    let mut bessel = vec![num::zero(prec); order + 1];
    let mut kf = Integer::from(1);
    for k in 0..=order / 2 {
        if k > 0 {
            kf *= k as u64;
        }
        let k1 = Integer::from(&kf * (k as u64 + 1));
        let den = Integer::from(&kf * &k1) << (2 * k as u32);
        bessel[2 * k] = Float::with_val(prec, 1) / Float::with_val(prec, &den);
    }
    let bessel = PowerSeries::new(bessel).expect("nonempty");
    let decay = (-&x(prec, order)).exp();
    &bessel * &decay
}

/// `int_0^x exp(-u^2) du`.
pub fn error_function(order: usize, prec: u32) -> PowerSeries {
    let mut c = vec![num::zero(prec); order + 1];
    let mut fact = Integer::from(1);
    let mut n = 0u64;
    while (2 * n + 1) as usize <= order {
        if n > 0 {
            fact *= n;
        }
        let v = Float::with_val(prec, 1) / Float::with_val(prec, Integer::from(&fact * (2 * n + 1)));
        c[(2 * n + 1) as usize] = if n % 2 == 1 { -v } else { v };
        n += 1;
    }
    PowerSeries::new(c).expect("nonempty")
}

/// Bernoulli numbers `B_0 ... B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::from(1)];
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(Rational::new());
            continue;
        }
        let mut s = Rational::new();
        let mut binom = Integer::from(1);
        for (k, bk) in b.iter().enumerate() {
            s += Rational::from(bk * &binom);
            binom = binom * (m as u64 + 1 - k as u64) / (k as u64 + 1);
        }
        b.push(-s / Rational::from(m as u64 + 1));
    }
    b
}

/// `(1/x) int_0^x y/(e^y - 1) dy`: `c_n = B_n / (n! (n+1))`.
pub fn debye(order: usize, prec: u32) -> PowerSeries {
    let b = bernoulli(order);
    let mut fact = Integer::from(1);
    let mut r = Vec::with_capacity(order + 1);
    for (n, bn) in b.iter().enumerate() {
        if n > 0 {
            fact *= n as u64;
        }
        let den = Integer::from(&fact * (n as u64 + 1));
        r.push(bn / Rational::from(den));
    }
    from_rationals(prec, &r)
}

/// Connected-moments generating function of the harmonic oscillator with
/// `u = exp(-4t)`.
pub fn connected_moments(order: usize, prec: u32) -> PowerSeries {
    let t = x(prec, order);
    let u = t.scale(&num::int(prec, -4)).exp();
    let c = |v: i64| PowerSeries::constant(num::int(prec, v), order);
    let u2 = &u * &u;
    let u3 = &u2 * &u;
    let numer = &(&(&u3.scale(&num::int(prec, 121)) + &u2.scale(&num::int(prec, 189199)))
        + &u.scale(&num::int(prec, 8180919)))
        + &c(6561);
    let left = &c(81) - &u;
    let right = &(&u2.scale(&num::int(prec, 121)) + &u.scale(&num::int(prec, 20198))) + &c(81);
    numer.div(&(&left * &right)).expect("denominator is 1632000 at t = 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    fn assert_coeff(f: &PowerSeries, k: usize, want: &Float) {
        assert!(num::close(f.coeff(k), want, 1e-60), "c_{k} = {} want {}", f.coeff(k), want);
    }

    fn q(s: &str) -> Float {
        num::parse(P, s).unwrap()
    }

    #[test]
    fn quartic_low_orders_exact() {
        let e = quartic_rationals(4);
        let want = [(1, 2), (3, 4), (-21, 8), (333, 16), (-30885, 128)];
        for (got, (n, d)) in e.iter().zip(want) {
            assert_eq!(*got, Rational::from((n, d)));
        }
    }

    #[test]
    fn mittag_leffler_printed() {
        let f = mittag_leffler(4, P);
        let sp = num::pi(P).sqrt();
        assert_coeff(&f, 1, &(Float::with_val(P, -2) / &sp));
        assert_coeff(&f, 2, &q("1"));
        assert_coeff(&f, 3, &(Float::with_val(P, -4) / (Float::with_val(P, 3) * &sp)));
        assert_coeff(&f, 4, &q("1/2"));
    }

    #[test]
    fn correlation_printed() {
        let f = correlation(6, P);
        for (k, v) in [(0, "2"), (1, "-1"), (2, "1/4"), (3, "0"), (4, "-1/64"), (5, "0")] {
            assert!(num::close(f.coeff(k), &q(v), 1e-60) || (f.coeff(k).is_zero() && v == "0"));
        }
    }

    #[test]
    fn debye_huckel_printed() {
        let f = debye_huckel(4, P);
        for (k, v) in [(0, "1"), (1, "-1/3"), (2, "1/12"), (3, "-1/60"), (4, "1/360")] {
            assert_coeff(&f, k, &q(v));
        }
    }

    #[test]
    fn branched_polymer_first() {
        let f = branched_polymer(3, P);
        assert_coeff(&f, 1, &q("-1"));
        assert_coeff(&f, 2, &q("3/5"));
    }

    #[test]
    fn box_printed() {
        let f = particle_in_box(6, P);
        let pi = num::pi(P);
        let p = |k: u32| Float::with_val(P, pi.clone().pow(k));
        assert_coeff(&f, 0, &q("1"));
        assert_coeff(&f, 1, &(p(2) / 4u32));
        assert_coeff(&f, 2, &(p(4) / 32u32));
        assert_coeff(&f, 3, &(p(6) / 512u32));
        assert!(f.coeff(4).is_zero());
        assert_coeff(&f, 5, &(-p(10) / 131072u32));
        assert!(f.coeff(6).is_zero());
    }

    #[test]
    fn generating_function_third() {
        let f = generating_function(4, P, &q("1/3"));
        assert_coeff(&f, 0, &q("1"));
        assert_coeff(&f, 1, &q("1/3"));
        assert_coeff(&f, 2, &q("1/18"));
        // direct expansion of exp(a asinh x) for the next term: a(a^2 - 1)/6
        let a = q("1/3");
        let want = Float::with_val(P, &a * (Float::with_val(P, a.square_ref()) - 1u32)) / 6u32;
        assert_coeff(&f, 3, &want);
    }

    #[test]
    fn scattering_printed() {
        let f = scattering(9, P);
        for (k, v) in [(1, "1/9"), (3, "-1/135"), (5, "1/2625"), (7, "-4/297675"), (9, "2/5893965")] {
            assert_coeff(&f, k, &q(v));
        }
        assert!(f.coeff(2).is_zero());
    }

    #[test]
    fn wilson_printed() {
        let f = wilson_loop(4, P);
        for (k, v) in [(0, "1"), (1, "-1"), (2, "5/8"), (3, "-7/24"), (4, "7/64")] {
            assert_coeff(&f, k, &q(v));
        }
    }

    #[test]
    fn erf_printed() {
        let f = error_function(5, P);
        for (k, v) in [(1, "1"), (3, "-1/3"), (5, "1/10")] {
            assert_coeff(&f, k, &q(v));
        }
    }

    #[test]
    fn debye_printed() {
        let f = debye(6, P);
        for (k, v) in [(0, "1"), (1, "-1/4"), (2, "1/36"), (4, "-1/3600"), (6, "1/211680")] {
            assert_coeff(&f, k, &q(v));
        }
        assert!(f.coeff(3).is_zero());
        assert_eq!(bernoulli(12)[12], Rational::from((-691, 2730)));
    }

    #[test]
    fn connected_moments_value_at_zero() {
        let f = connected_moments(3, P);
        assert_coeff(&f, 0, &q("8376800/1632000"));
    }

    #[test]
    fn generators_are_stable_under_order() {
        let a = debye_huckel(10, P);
        let b = debye_huckel(6, P);
        assert_eq!(a.truncate(6), b);
        assert_eq!(scattering(11, P).truncate(7), scattering(7, P));
    }
}
