use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::RngCore;

use crate::Error;

/// Which ground field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, Error> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec::Prime(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field. Implementors are small handles; elements are plain values.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `y += a * x`, elementwise. The hot loop of every elimination.
    fn axpy(&self, y: &mut [Self::Elem], a: &Self::Elem, x: &[Self::Elem]) {
        debug_assert_eq!(y.len(), x.len());
        for (yi, xi) in y.iter_mut().zip(x) {
            if !self.is_zero(xi) {
                *yi = self.add(yi, &self.mul(a, xi));
            }
        }
    }

    /// `y *= a`, elementwise.
    fn scale(&self, y: &mut [Self::Elem], a: &Self::Elem) {
        for yi in y.iter_mut() {
            *yi = self.mul(yi, a);
        }
    }

    /// Uniform over F_p; small integers over Q.
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    /// Cardinality of a finite field.
    fn size(&self) -> Option<u64>;

    /// The `index`-th element in a fixed enumeration of a finite field.
    fn element(&self, index: u64) -> Self::Elem {
        self.from_i64(index as i64)
    }

    fn parse(&self, s: &str) -> Option<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;
}

/// The prime field F_p, p < 2^31.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    p: u32,
    // floor(2^64 / p), for Barrett reduction
    magic: u64,
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl Fp {
    pub fn new(p: u64) -> Result<Self, Error> {
        FieldSpec::prime(p)?;
        Ok(Fp { p: p as u32, magic: u64::MAX / p })
    }

    pub fn modulus(&self) -> u64 {
        self.p as u64
    }

    #[inline(always)]
    fn reduce(&self, x: u64) -> u32 {
        let q = ((x as u128 * self.magic as u128) >> 64) as u64;
        let mut r = x - q * self.p as u64;
        while r >= self.p as u64 {
            r -= self.p as u64;
        }
        r as u32
    }

    fn pow(&self, mut b: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.reduce(acc as u64 * b as u64);
            }
            b = self.reduce(b as u64 * b as u64);
            e >>= 1;
        }
        acc
    }
}

impl Field for Fp {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p as u64)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    #[inline(always)]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline(always)]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline(always)]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline(always)]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 * *b as u64)
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p as u64 - 2))
        }
    }
    #[inline(always)]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn axpy(&self, y: &mut [u32], a: &u32, x: &[u32]) {
        debug_assert_eq!(y.len(), x.len());
        if *a == 0 {
            return;
        }
        let a = *a as u64;
        for (yi, xi) in y.iter_mut().zip(x) {
            if *xi != 0 {
                *yi = self.reduce(*yi as u64 + a * *xi as u64);
            }
        }
    }

    fn scale(&self, y: &mut [u32], a: &u32) {
        let a = *a as u64;
        for yi in y.iter_mut() {
            *yi = self.reduce(*yi as u64 * a);
        }
    }

    fn random(&self, rng: &mut dyn RngCore) -> u32 {
        (rng.next_u64() % self.p as u64) as u32
    }

    fn size(&self) -> Option<u64> {
        Some(self.p as u64)
    }

    fn element(&self, index: u64) -> u32 {
        (index % self.p as u64) as u32
    }

    fn parse(&self, s: &str) -> Option<u32> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            let d = self.inv(&self.from_i64(d))?;
            return Some(self.mul(&self.from_i64(n), &d));
        }
        s.parse::<i64>().ok().map(|n| self.from_i64(n))
    }

    fn render(&self, a: &u32) -> String {
        a.to_string()
    }
}

/// The rationals, with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        self.from_i64((rng.next_u64() % 21) as i64 - 10)
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn parse(&self, s: &str) -> Option<BigRational> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            return Some(BigRational::new(n, d));
        }
        s.parse::<BigInt>().ok().map(BigRational::from_integer)
    }

    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Small integers that survive the trip through i64, used when printing
/// rational structure constants back to files.
pub fn rational_to_i64(a: &BigRational) -> Option<i64> {
    if a.denom().is_one() && a.numer().abs() < BigInt::from(i64::MAX) {
        a.numer().to_i64()
    } else {
        None
    }
}
