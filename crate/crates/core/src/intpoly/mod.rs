//! Exact polynomial arithmetic over `Z` and `Q`, plus the integer number theory
//! (factorization, square-free tests) the rest of the crate leans on.

mod factor;
mod poly;
mod ratpoly;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use factor::{
    factor_int, is_prime, is_squarefree, odd_part_squarefree, primes_below, small_primes,
    valuation, Factorization, TRIAL_DIVISION_BOUND,
};
pub use poly::IntPoly;
pub use ratpoly::{rational, RatPoly, Rational};

/// A p-adic valuation; `Infinite` is the valuation of zero and compares above
/// every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Serializes an integer as its decimal string, so JSON consumers never lose precision.
pub(crate) fn bigint_as_string<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

pub fn check_prime(p: &BigInt) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.clone()))
    }
}

/// `v_p` of an integer; `Infinite` for zero.
pub fn vp_int(n: &BigInt, p: &BigInt) -> Valuation {
    if n.is_zero() {
        Valuation::Infinite
    } else {
        Valuation::Finite(valuation(n, p))
    }
}

/// Minimum coefficient valuation, i.e. the Gauss valuation; `p` is checked for primality.
pub fn vp_poly(g: &IntPoly, p: &BigInt) -> Result<Valuation> {
    check_prime(p)?;
    Ok(vp_poly_unchecked(g, p))
}

pub(crate) fn vp_poly_unchecked(g: &IntPoly, p: &BigInt) -> Valuation {
    g.coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| Valuation::Finite(valuation(c, p)))
        .min()
        .unwrap_or(Valuation::Infinite)
}

/// Resultant `lc(f)^deg g * prod g(alpha_i)` over the roots `alpha_i` of `f`,
/// computed with the subresultant pseudo-remainder sequence.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = BigInt::one();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign = -sign;
        }
    }
    let (ca, cb) = (a.content(), b.content());
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    let t = num_traits::pow(ca.clone(), db) * num_traits::pow(cb.clone(), da);
    a = a.exact_div_scalar(&ca);
    b = b.exact_div_scalar(&cb);
    if db == 0 {
        // res(a, const) = const^deg a; the content is already in t.
        return Ok(sign * t);
    }
    let mut g_acc = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (deg_a, deg_b) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = deg_a - deg_b;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        let divisor = &g_acc * num_traits::pow(h.clone(), delta);
        b = r.exact_div_scalar(&divisor);
        g_acc = a.leading_coefficient().unwrap().clone();
        // h <- g^delta / h^(delta - 1), exact
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g_acc.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.degree() == Some(0) {
            let deg_a = a.degree().unwrap();
            let lb = b.leading_coefficient().unwrap();
            let hh = if deg_a == 0 {
                h
            } else {
                num_traits::pow(lb.clone(), deg_a) / num_traits::pow(h, deg_a - 1)
            };
            return Ok(sign * t * hh);
        }
    }
}

/// `(-1)^(n(n-1)/2) res(h, h') / lc(h)` for monic `h` of degree at least 2.
pub fn discriminant(h: &IntPoly) -> Result<BigInt> {
    let n = h.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { expected: 2, actual: n });
    }
    if !h.is_monic() {
        return Err(Error::NotMonic);
    }
    let r = resultant(h, &h.derivative())?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// All rational roots, ascending, by the rational root test.
pub fn rational_roots(h: &IntPoly) -> Result<Vec<Rational>> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let low = h.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let coeffs = &h.coeffs()[low..];
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(roots);
    }
    let a0 = &coeffs[0];
    let lead = &coeffs[n];
    let nums = factor_int(a0)?.divisors();
    let dens = factor_int(lead)?.divisors();
    // w^n h(u/w) = sum c_i u^i w^(n-i)
    let vanishes = |u: &BigInt, w: &BigInt| {
        let mut acc = BigInt::zero();
        let mut upow = BigInt::one();
        let wpows: Vec<BigInt> = (0..=n).map(|k| num_traits::pow(w.clone(), k)).collect();
        for (i, c) in coeffs.iter().enumerate() {
            acc += c * &upow * &wpows[n - i];
            upow *= u;
        }
        acc.is_zero()
    };
    for w in &dens {
        for u in &nums {
            if !u.gcd(w).is_one() {
                continue;
            }
            for s in [u.clone(), -u.clone()] {
                if vanishes(&s, w) {
                    roots.push(Rational::new(s, w.clone()));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Exact integer square root test for non-negative integers.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = num_integer::Roots::sqrt(n);
    &r * &r == *n
}

/// Whether `r` is the square of a rational number.
pub fn is_rational_square(r: &Rational) -> bool {
    !r.is_negative() && is_perfect_square(r.numer()) && is_perfect_square(r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn vp_poly_examples() {
        let three = BigInt::from(3);
        assert_eq!(vp_poly(&p(&[27, 9, 3]), &three), Ok(Valuation::Finite(1)));
        assert_eq!(vp_poly(&p(&[1, 0, 0, 0, 1]), &BigInt::from(2)), Ok(Valuation::Finite(0)));
        assert_eq!(vp_poly(&IntPoly::zero(), &BigInt::from(5)), Ok(Valuation::Infinite));
        assert_eq!(
            vp_poly(&p(&[1, 1]), &BigInt::from(4)),
            Err(Error::NotPrime(BigInt::from(4)))
        );
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])), Ok(BigInt::from(3)));
        assert_eq!(resultant(&p(&[-3, 1]), &p(&[-7, 1])), Ok(BigInt::from(-4)));
        assert_eq!(resultant(&p(&[1, 1, 0, 0, 1]), &p(&[1, 0, 0, 4])), Ok(BigInt::from(229)));
        assert_eq!(resultant(&p(&[1, 1]), &IntPoly::zero()), Err(Error::ZeroPolynomial));
        // common root
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[1, 1])), Ok(BigInt::zero()));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p(&[1, 1, 0, 0, 1])), Ok(BigInt::from(229)));
        assert_eq!(discriminant(&p(&[2, 0, 0, 1, 1])), Ok(BigInt::from(1940)));
        assert_eq!(discriminant(&p(&[2, 2, 0, 0, 1])), Ok(BigInt::from(1616)));
        assert_eq!(discriminant(&p(&[-8, -2, -1, 1])), Ok(BigInt::from(-2012)));
        assert_eq!(discriminant(&p(&[1, 2])), Err(Error::DegreeTooSmall { expected: 2, actual: 1 }));
        assert_eq!(discriminant(&p(&[1, 0, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_roots(&p(&[-2, 0, 0, 1, 1])).unwrap(), vec![rational(1, 1)]);
        assert_eq!(rational_roots(&p(&[-9, -12, 0, 1])).unwrap(), vec![rational(-3, 1)]);
        assert!(rational_roots(&p(&[1, 1, 0, 0, 1])).unwrap().is_empty());
        assert_eq!(
            rational_roots(&p(&[0, -3, 2])).unwrap(),
            vec![rational(0, 1), rational(3, 2)]
        );
        assert_eq!(rational_roots(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rational_squares() {
        assert!(is_rational_square(&rational(4, 9)));
        assert!(!is_rational_square(&rational(-4, 9)));
        assert!(!is_rational_square(&rational(2, 1)));
    }
}
