//! Exact arithmetic in the prime field F_p.
//!
//! Coefficients in the cohomology formulas are rationals such as `5/12` or
//! `1/480`; they are evaluated here by reducing numerator and denominator
//! and inverting the denominator. A denominator divisible by `p` is an
//! error, never a silent zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A prime number, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(value: u64) -> Result<Prime> {
        if is_prime(value) {
            Ok(Prime(value))
        } else {
            Err(Error::NotPrime(value))
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// Fails with [`Error::EvenPrime`] for `p = 2`.
    pub fn require_odd(self) -> Result<Prime> {
        if self.is_odd() {
            Ok(self)
        } else {
            Err(Error::EvenPrime)
        }
    }

    /// Least non-negative residue of a signed integer.
    #[inline]
    pub fn reduce(self, value: i64) -> u64 {
        value.rem_euclid(self.0 as i64) as u64
    }

    pub fn element(self, value: i64) -> FpElement {
        FpElement {
            residue: self.reduce(value),
            modulus: self,
        }
    }

    pub fn zero(self) -> FpElement {
        FpElement {
            residue: 0,
            modulus: self,
        }
    }

    pub fn one(self) -> FpElement {
        self.element(1)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial division; primes in this domain are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes in `[lo, hi)`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..hi).filter(|&n| is_prime(n)).collect()
}

/// An element of F_p stored as its least non-negative residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    residue: u64,
    modulus: Prime,
}

impl FpElement {
    #[inline]
    pub fn residue(self) -> u64 {
        self.residue
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn inv(self) -> Result<FpElement> {
        fp_inv(self)
    }

    pub fn pow(self, mut e: u64) -> FpElement {
        let p = self.modulus.value();
        let mut base = self.residue;
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        FpElement {
            residue: acc,
            modulus: self.modulus,
        }
    }

    /// Symmetric representative in `(-p/2, p/2]`, handy for display.
    pub fn signed(self) -> i64 {
        let p = self.modulus.value();
        if self.residue > p / 2 {
            self.residue as i64 - p as i64
        } else {
            self.residue as i64
        }
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: FpElement) -> FpElement {
        debug_assert_eq!(self.modulus, rhs.modulus);
        FpElement {
            residue: add_mod(self.residue, rhs.residue, self.modulus.value()),
            modulus: self.modulus,
        }
    }
}

impl Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: FpElement) -> FpElement {
        debug_assert_eq!(self.modulus, rhs.modulus);
        FpElement {
            residue: sub_mod(self.residue, rhs.residue, self.modulus.value()),
            modulus: self.modulus,
        }
    }
}

impl Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: FpElement) -> FpElement {
        debug_assert_eq!(self.modulus, rhs.modulus);
        FpElement {
            residue: self.residue * rhs.residue % self.modulus.value(),
            modulus: self.modulus,
        }
    }
}

impl Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        FpElement {
            residue: sub_mod(0, self.residue, self.modulus.value()),
            modulus: self.modulus,
        }
    }
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// Inverse of a residue via the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % p as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(p as i128) as u64)
}

pub fn fp_inv(a: FpElement) -> Result<FpElement> {
    let p = a.modulus.value();
    inv_mod(a.residue, p)
        .map(|residue| FpElement {
            residue,
            modulus: a.modulus,
        })
        .ok_or(Error::ZeroInverse(a.residue, p))
}

/// Evaluates `num / den` in F_p.
pub fn rational_to_fp(num: i64, den: i64, p: Prime) -> Result<FpElement> {
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    let d = p.element(den);
    if d.is_zero() {
        return Err(Error::DenominatorDivisibleByP {
            num: num.to_string(),
            den: den.to_string(),
            p: p.value(),
            context: String::from("literal coefficient"),
        });
    }
    Ok(p.element(num) * fp_inv(d)?)
}

/// Big-integer variant used by the closed-form Wu formulas, where factorials
/// overflow machine words. The fraction is reduced before testing `p | den`.
pub(crate) fn big_rational_to_fp(
    num: &BigInt,
    den: &BigInt,
    p: Prime,
    context: impl FnOnce() -> String,
) -> Result<FpElement> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let g = num.gcd(den);
    let (n, d) = if g.is_zero() {
        (num.clone(), den.clone())
    } else {
        (num / &g, den / &g)
    };
    let pb = BigInt::from(p.value());
    let reduce = |x: &BigInt| -> u64 {
        let r = x.mod_floor(&pb);
        r.abs().to_u64().expect("residue fits in u64")
    };
    let dr = reduce(&d);
    if dr == 0 {
        return Err(Error::DenominatorDivisibleByP {
            num: n.to_string(),
            den: d.to_string(),
            p: p.value(),
            context: context(),
        });
    }
    let nr = reduce(&n);
    let inv = inv_mod(dr, p.value()).expect("nonzero residue is invertible");
    Ok(FpElement {
        residue: nr * inv % p.value(),
        modulus: p,
    })
}
