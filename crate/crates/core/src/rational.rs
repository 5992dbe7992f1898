//! Big-rational helpers: small constructors, factorials, generalized binomial
//! coefficients, and elementary number-theoretic utilities used everywhere.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

use crate::error::{Error, Result};

/// `a/b` as a `BigRational`. Panics if `b == 0`; intended for literals.
pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// `n` as a `BigRational`.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `j!` as a `BigInt`.
pub fn factorial(j: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=j as u64 {
        acc *= k;
    }
    acc
}

/// Generalized binomial coefficient `C(s, j) = s(s-1)...(s-j+1)/j!` over the
/// rationals; `C(s, 0) = 1`.
pub fn gen_binomial(s: &BigRational, j: u32) -> BigRational {
    let mut num = BigRational::one();
    for k in 0..j as i64 {
        num *= s - rat_int(k);
    }
    num / BigRational::from_integer(factorial(j))
}

/// Ordinary binomial coefficient `C(n, j)` for integer `n >= 0`.
pub fn binomial(n: u32, j: u32) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    // multiply ascending, divide as we go: stays integral
    for k in 0..j as u64 {
        acc = acc * (n as u64 - k) / (k + 1);
    }
    acc
}

/// Euler's totient of `m >= 1`.
pub fn euler_phi(m: u64) -> u64 {
    let mut phi = 1u64;
    for (p, e) in factorize(m) {
        phi *= (p - 1) * p.pow(e - 1);
    }
    phi
}

/// Prime factorization by trial division; fine at the scales used here.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Divisors of `m` in ascending order.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(m) {
        let snapshot = divs.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            divs.extend(snapshot.iter().map(|d| d * pe));
        }
    }
    divs.sort_unstable();
    divs
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd_u64(b, a % b) }
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

/// `v_p` of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// `v_p(j!)` by Legendre's formula.
pub fn factorial_valuation(j: u32, p: u64) -> u32 {
    let mut v = 0u64;
    let mut pk = p;
    while pk <= j as u64 {
        v += j as u64 / pk;
        match pk.checked_mul(p) {
            Some(next) => pk = next,
            None => break,
        }
    }
    v as u32
}

/// Writes `r = p^t * u/w` with `u, w` coprime to `p`; returns `(t, u, w)`.
/// `t` may be negative.
pub fn split_p_power(r: &BigRational, p: u64) -> (i64, BigInt, BigInt) {
    assert!(!r.is_zero());
    let vn = int_valuation(r.numer(), p) as i64;
    let vd = int_valuation(r.denom(), p) as i64;
    let pe = |e: i64| BigInt::from(p).pow(e as u32);
    let u = r.numer() / pe(vn);
    let w = r.denom() / pe(vd);
    (vn - vd, u, w)
}

/// Modular inverse of `a` mod `m` (`m > 1`), if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Result<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let (mut r0, mut r1) = (m.clone(), a.clone() % &m);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if !r0.is_one() {
        return Err(Error::NotInvertible(format!("gcd({a}, {m}) = {r0}")));
    }
    let inv = ((t0 % &m) + &m) % &m;
    Ok(inv.to_biguint().expect("nonnegative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_binomial_examples() {
        // (3, 2) -> 3 and (-1, 2) -> 1
        assert_eq!(gen_binomial(&rat_int(3), 2), rat_int(3));
        assert_eq!(gen_binomial(&rat_int(-1), 2), rat_int(1));
        // (1/2, 2) -> -1/8, by the product formula (1/2)(-1/2)/2
        assert_eq!(gen_binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(gen_binomial(&rat(7, 3), 0), rat_int(1));
    }

    #[test]
    fn gen_binomial_pascal_rule() {
        // C(s, j) = C(s-1, j) + C(s-1, j-1) on a rational sample grid
        for (a, b) in [(3i64, 7i64), (-5, 2), (22, 9), (-1, 13), (0, 1)] {
            let s = rat(a, b);
            let sm1 = &s - rat_int(1);
            for j in 1..=20u32 {
                assert_eq!(
                    gen_binomial(&s, j),
                    gen_binomial(&sm1, j) + gen_binomial(&sm1, j - 1),
                    "pascal fails at s={a}/{b}, j={j}"
                );
            }
        }
    }

    #[test]
    fn phi_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(101), 100);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert!(is_prime(7) && !is_prime(15) && !is_prime(1));
    }

    #[test]
    fn factorial_valuation_legendre() {
        assert_eq!(factorial_valuation(10, 5), 2);
        assert_eq!(factorial_valuation(25, 5), 6);
        assert_eq!(factorial_valuation(4, 5), 0);
        assert_eq!(int_valuation(&BigInt::from(250), 5), 3);
    }

    #[test]
    fn modular_inverse() {
        let inv = mod_inverse(&BigUint::from(6u32), &BigUint::from(125u32)).unwrap();
        assert_eq!(inv, BigUint::from(21u32));
        assert!(mod_inverse(&BigUint::from(5u32), &BigUint::from(125u32)).is_err());
    }
}
