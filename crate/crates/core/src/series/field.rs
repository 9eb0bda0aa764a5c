//! Exact coefficient fields for truncated power series.

use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num};
use rand::Rng;

use crate::error::{Error, Result};

/// Field operations carried by a value, so that runtime-parameterized fields
/// (a prime chosen on the command line) and static ones share one interface.
#[allow(clippy::wrong_self_convention)]
pub trait CoefficientField: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Exact rendering: integers, `"p/q"` rationals or residues.
    fn render(&self, a: &Self::Elem) -> String;
    fn descriptor(&self) -> FieldKind;
    /// All elements, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn random<R: Rng>(&self, rng: &mut R) -> Self::Elem;

    fn from_ratio(&self, num: i64, den: i64) -> Result<Self::Elem> {
        let d = self
            .inv(&self.from_i64(den))
            .ok_or_else(|| Error::InvalidField(format!("denominator {den} is not invertible")))?;
        Ok(self.mul(&self.from_i64(num), &d))
    }
}

/// Exact scalar types usable as coefficients through [`ExactField`].
/// Floating-point types are deliberately not members.
pub trait ExactScalar:
    Num + Clone + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync
{
}

impl ExactScalar for BigRational {}
impl ExactScalar for Ratio<i64> {}
impl ExactScalar for Ratio<i128> {}

/// The field of fractions of a `num-traits` exact scalar type.
pub struct ExactField<T>(PhantomData<T>);

impl<T> ExactField<T> {
    pub fn new() -> Self {
        ExactField(PhantomData)
    }
}

impl<T> Default for ExactField<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for ExactField<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> PartialEq for ExactField<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> fmt::Debug for ExactField<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")
    }
}

impl<T: ExactScalar> CoefficientField for ExactField<T> {
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn from_i64(&self, n: i64) -> T {
        T::from_i64(n).expect("integer fits the scalar type")
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }
    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }
    fn neg(&self, a: &T) -> T {
        T::zero() - a.clone()
    }
    fn inv(&self, a: &T) -> Option<T> {
        if a.is_zero() {
            None
        } else {
            Some(T::one() / a.clone())
        }
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &T) -> String {
        a.to_string()
    }
    fn descriptor(&self) -> FieldKind {
        FieldKind::Rational
    }
    fn elements(&self) -> Option<Vec<T>> {
        None
    }
    fn random<R: Rng>(&self, rng: &mut R) -> T {
        self.from_i64(rng.gen_range(-9..=9))
    }
}

/// `ℚ` with arbitrary-precision numerators and denominators.
pub type Rationals = ExactField<BigRational>;

/// `GF(p)` for a prime `p < 2³¹`; elements are residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p)
            || (2..)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::InvalidField(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl CoefficientField for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if (*a).is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        (*a).is_multiple_of(self.p)
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn descriptor(&self) -> FieldKind {
        FieldKind::Prime(self.p)
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn random<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// Field selector as written on the command line: `q` or `p:<prime>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" => Ok(FieldKind::Rational),
            other => {
                let p = other
                    .strip_prefix("p:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| {
                        Error::InvalidField(format!("expected q or p:<prime>, got {other:?}"))
                    })?;
                PrimeField::new(p)?;
                Ok(FieldKind::Prime(p))
            }
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "q"),
            FieldKind::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

/// Exact rational from a `BigInt` pair, used by literal parsing.
pub fn big_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
