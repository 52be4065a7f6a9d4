use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use super::field::Field;

/// Dense polynomial over a field `K`, trailing zeros trimmed.
#[derive(Clone, PartialEq)]
pub struct Poly<K: Field> {
    field: K,
    coeffs: Vec<K::Elem>,
}

impl<K: Field> Poly<K> {
    pub fn new(field: K, mut coeffs: Vec<K::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: K) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: K) -> Self {
        let one = field.one();
        Poly::new(field, vec![one])
    }

    pub fn constant(field: K, c: K::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn x(field: K) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn coeffs(&self) -> &[K::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn leading_coefficient(&self) -> Option<&K::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient() == Some(&self.field.one())
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let k = &self.field;
        Poly::new(k.clone(), self.coeffs.iter().map(|a| k.mul(a, c)).collect())
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self) -> Self {
        let k = &self.field;
        Poly::new(
            k.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| k.mul(&k.from_u64(i as u64), c))
                .collect(),
        )
    }

    pub fn eval(&self, x: &K::Elem) -> K::Elem {
        let k = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let k = &self.field;
        let dd = divisor.degree().expect("division by zero polynomial");
        if self.coeffs.len() <= dd {
            return (Poly::zero(k.clone()), self.clone());
        }
        let lc_inv = k.inv(divisor.leading_coefficient().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![k.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = k.mul(&rem[i + dd], &lc_inv);
            if k.is_zero(&c) {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = k.sub(&rem[i + j], &k.mul(&c, dc));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(k.clone(), quot), Poly::new(k.clone(), rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient (the remainder is discarded).
    pub fn quo(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let k = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(k.clone()), Poly::zero(k.clone()));
        let (mut t0, mut t1) = (Poly::zero(k.clone()), Poly::one(k.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading_coefficient().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = k.inv(&lc).unwrap();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        (self * other).rem(modulus)
    }

    pub fn pow_mod(&self, exp: &BigUint, modulus: &Self) -> Self {
        let mut acc = Poly::one(self.field.clone()).rem(modulus);
        let base = self.rem(modulus);
        for i in (0..exp.bits()).rev() {
            acc = acc.mul_mod(&acc, modulus);
            if exp.bit(i) {
                acc = acc.mul_mod(&base, modulus);
            }
        }
        acc
    }

    /// `gcd(f, f') = 1`. Constants count as separable.
    pub fn is_separable(&self) -> bool {
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{:?}]{:?}", self.field, self.coeffs)
    }
}

impl<K: Field> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        let k = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(k.clone(), (0..n).map(|i| k.add(&self.coeff(i), &rhs.coeff(i))).collect())
    }
}

impl<K: Field> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        let k = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(k.clone(), (0..n).map(|i| k.sub(&self.coeff(i), &rhs.coeff(i))).collect())
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        let k = &self.field;
        Poly::new(k.clone(), self.coeffs.iter().map(|c| k.neg(c)).collect())
    }
}

impl<K: Field> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        let k = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(k.clone());
        }
        let mut out = vec![k.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        Poly::new(k.clone(), out)
    }
}
