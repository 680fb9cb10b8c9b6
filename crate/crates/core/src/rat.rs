//! Exact scalar types used throughout: arbitrary-precision rationals and integers.
//!
//! Every verdict the engine produces (ranks, invariant values, isotropy
//! dimensions) is computed over `Q`; floating point never appears.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use rand::Rng;

/// Exact rational scalar.
pub type Q = BigRational;
/// Exact integer scalar.
pub type Z = BigInt;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

/// Rational a/b.
pub fn qr(a: i64, b: i64) -> Q {
    Q::new(Z::from(a), Z::from(b))
}

pub fn qzero() -> Q {
    Q::zero()
}

pub fn qone() -> Q {
    Q::one()
}

/// Draw a rational with |numerator| <= height and 1 <= denominator <= height.
pub fn random_rational<R: Rng>(rng: &mut R, height: i64) -> Q {
    let h = height.max(1);
    let num = rng.gen_range(-h..=h);
    let den = rng.gen_range(1..=h);
    Q::new(Z::from(num), Z::from(den))
}

/// Draw a vector of such rationals.
pub fn random_vector<R: Rng>(rng: &mut R, len: usize, height: i64) -> Vec<Q> {
    (0..len).map(|_| random_rational(rng, height)).collect()
}

/// Least common multiple of the denominators of a slice.
pub fn denominator_lcm(xs: &[Q]) -> Z {
    let mut l = Z::one();
    for x in xs {
        let d = x.denom();
        if !d.is_one() {
            let g = num::integer::gcd(l.clone(), d.clone());
            l = l / g * d;
        }
    }
    l
}

/// Scale a rational row to integers by the lcm of its denominators.
pub fn clear_denominators(row: &[Q]) -> Vec<Z> {
    let l = denominator_lcm(row);
    row.iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect()
}

/// Divide out the gcd of a row of integers (content), preserving sign of the
/// leading nonzero entry only implicitly; used to keep fraction-free
/// elimination rows small.
pub fn divide_content(row: &mut [Z]) {
    let mut g = Z::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = num::integer::gcd(g, x.abs());
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// Reduce a rational modulo a u64 prime, mapping a/b to a * b^-1.
/// Returns None if the denominator vanishes mod p (cannot happen for the
/// small denominators produced by the constructions, but guarded anyway).
pub fn mod_p(x: &Q, p: u64) -> Option<u64> {
    let n = bigint_mod(x.numer(), p);
    let d = bigint_mod(x.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mulmod(n, inv_mod(d, p), p))
}

fn bigint_mod(x: &Z, p: u64) -> u64 {
    let m = x.magnitude() % p;
    let m = m.to_u64_digits().first().copied().unwrap_or(0);
    if x.sign() == Sign::Minus && m != 0 {
        p - m
    } else {
        m
    }
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

/// Modular inverse by Fermat (p prime).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_p_of_fraction() {
        let p = (1u64 << 61) - 1;
        let x = qr(3, 4);
        let m = mod_p(&x, p).unwrap();
        assert_eq!(mulmod(m, 4, p), 3);
    }

    #[test]
    fn content_division() {
        let mut row = vec![Z::from(6), Z::from(-9), Z::from(12)];
        divide_content(&mut row);
        assert_eq!(row, vec![Z::from(2), Z::from(-3), Z::from(4)]);
    }
}
