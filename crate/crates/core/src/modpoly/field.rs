use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::Result;
use crate::intpoly::check_prime;

/// Minimal field interface for dense polynomial arithmetic.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` only for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of an integer under `Z -> field`.
    fn from_u64(&self, n: u64) -> Self::Elem;
}

/// A prime field `F_p`.
pub trait PrimeField: Field {
    fn characteristic(&self) -> BigInt;
    /// `p` as a machine word when it fits.
    fn small_characteristic(&self) -> Option<u64>;
    fn reduce(&self, n: &BigInt) -> Self::Elem;
    /// Canonical representative in `[0, p)`.
    fn lift(&self, a: &Self::Elem) -> BigInt;
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
}

/// `F_p` for `p < 2^64`, elements stored as reduced `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WordField {
    p: u64,
}

impl WordField {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(&BigInt::from(p))?;
        Ok(WordField { p })
    }

    pub(crate) fn new_unchecked(p: u64) -> Self {
        WordField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl fmt::Debug for WordField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl Field for WordField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let (s, overflow) = a.overflowing_add(*b);
        if overflow || s >= self.p {
            s.wrapping_sub(self.p)
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let e = (*a as i128).extended_gcd(&(self.p as i128));
        debug_assert_eq!(e.gcd, 1);
        Some(e.x.rem_euclid(self.p as i128) as u64)
    }
    fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }
}

impl PrimeField for WordField {
    fn characteristic(&self) -> BigInt {
        BigInt::from(self.p)
    }
    fn small_characteristic(&self) -> Option<u64> {
        Some(self.p)
    }
    fn reduce(&self, n: &BigInt) -> u64 {
        if let Some(v) = n.to_i64() {
            return (v as i128).rem_euclid(self.p as i128) as u64;
        }
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
    fn lift(&self, a: &u64) -> BigInt {
        BigInt::from(*a)
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// `F_p` for arbitrary-precision `p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BigField {
    p: Arc<BigInt>,
}

impl BigField {
    pub fn new(p: BigInt) -> Result<Self> {
        check_prime(&p)?;
        Ok(BigField { p: Arc::new(p) })
    }

    pub(crate) fn new_unchecked(p: BigInt) -> Self {
        BigField { p: Arc::new(p) }
    }
}

impl fmt::Debug for BigField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl Field for BigField {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let s = a + b;
        if s >= *self.p {
            s - &*self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        if a >= b {
            a - b
        } else {
            a - b + &*self.p
        }
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        if a.is_zero() {
            BigInt::zero()
        } else {
            &*self.p - a
        }
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) % &*self.p
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        if a.is_zero() {
            return None;
        }
        let e = a.extended_gcd(&self.p);
        debug_assert!(e.gcd.is_one());
        Some(e.x.mod_floor(&self.p))
    }
    fn from_u64(&self, n: u64) -> BigInt {
        BigInt::from(n) % &*self.p
    }
}

impl PrimeField for BigField {
    fn characteristic(&self) -> BigInt {
        (*self.p).clone()
    }
    fn small_characteristic(&self) -> Option<u64> {
        self.p.to_u64()
    }
    fn reduce(&self, n: &BigInt) -> BigInt {
        n.mod_floor(&self.p)
    }
    fn lift(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> BigInt {
        let bound = self.p.magnitude();
        BigInt::from_biguint(Sign::Plus, rng.gen_biguint_below(bound))
    }
}

/// Runs `visit` with the cheapest field representation able to hold `F_p`.
pub trait FieldVisitor {
    type Output;
    fn visit<F: PrimeField + Send + Sync>(self, field: F) -> Self::Output
    where
        F::Elem: Send + Sync;
}

/// Dispatches on the size of `p`; `p` must already be known prime.
pub(crate) fn with_prime_field<V: FieldVisitor>(p: &BigInt, visitor: V) -> V::Output {
    match p.to_u64() {
        Some(small) => visitor.visit(WordField::new_unchecked(small)),
        None => visitor.visit(BigField::new_unchecked(p.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_field_arithmetic() {
        let f = WordField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.reduce(&BigInt::from(-1)), 6);
        assert_eq!(f.reduce(&BigInt::from(-15)), 6);
        assert!(WordField::new(9).is_err());
    }

    #[test]
    fn word_field_near_word_size() {
        let p = u64::MAX - 58; // largest 64-bit prime
        let f = WordField::new(p).unwrap();
        assert_eq!(f.add(&(p - 1), &(p - 1)), p - 2);
        assert_eq!(f.reduce(&BigInt::from(-1)), p - 1);
        let a = 123_456_789u64;
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
    }

    #[test]
    fn big_field_arithmetic() {
        let p: BigInt = "170141183460469231731687303715884105727".parse().unwrap();
        let f = BigField::new(p.clone()).unwrap();
        let a = BigInt::from(987_654_321u64);
        assert!(f.mul(&a, &f.inv(&a).unwrap()).is_one());
        assert_eq!(f.reduce(&BigInt::from(-1)), &p - 1);
    }
}
