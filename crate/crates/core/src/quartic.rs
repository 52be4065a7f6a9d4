//! Monic quartics: resolvent cubics, depression, irreducibility over `Q`, and
//! the Galois group read off from the discriminant and the resolvent.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intpoly::{
    bigint_as_string, discriminant, factor_int, is_perfect_square, is_rational_square,
    rational_roots, small_primes, valuation, IntPoly, RatPoly, Rational,
};

/// `x^4 + a3 x^3 + a2 x^2 + a1 x + a0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticShape {
    pub a3: BigInt,
    pub a2: BigInt,
    pub a1: BigInt,
    pub a0: BigInt,
}

impl QuarticShape {
    pub fn new(a3: BigInt, a2: BigInt, a1: BigInt, a0: BigInt) -> Self {
        QuarticShape { a3, a2, a1, a0 }
    }

    pub fn from_i64s(a3: i64, a2: i64, a1: i64, a0: i64) -> Self {
        QuarticShape::new(a3.into(), a2.into(), a1.into(), a0.into())
    }

    pub fn from_poly(h: &IntPoly) -> Result<Self> {
        let actual = h.degree().ok_or(Error::ZeroPolynomial)?;
        if actual != 4 {
            return Err(Error::WrongDegree { expected: 4, actual });
        }
        if !h.is_monic() {
            return Err(Error::NotMonic);
        }
        Ok(QuarticShape::new(h.coeff(3), h.coeff(2), h.coeff(1), h.coeff(0)))
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(vec![
            self.a0.clone(),
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            BigInt::one(),
        ])
    }
}

impl fmt::Display for QuarticShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}

/// `y^3 - a2 y^2 + (a3 a1 - 4 a0) y - a3^2 a0 - a1^2 + 4 a2 a0`, whose roots are
/// `r1 r2 + r3 r4` and its conjugates.
pub fn resolvent_cubic(h: &QuarticShape) -> IntPoly {
    let QuarticShape { a3, a2, a1, a0 } = h;
    let four = BigInt::from(4);
    IntPoly::new(vec![
        -(a3 * a3 * a0) - a1 * a1 + &four * a2 * a0,
        a3 * a1 - &four * a0,
        -a2.clone(),
        BigInt::one(),
    ])
}

/// `X^4 + b2 X^2 + b1 X + b0`, the image of a quartic under `x = X - a3/4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepressedQuartic {
    pub b2: Rational,
    pub b1: Rational,
    pub b0: Rational,
}

impl DepressedQuartic {
    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(vec![
            self.b0.clone(),
            self.b1.clone(),
            self.b2.clone(),
            Rational::zero(),
            Rational::one(),
        ])
    }
}

pub fn depress(h: &QuarticShape) -> DepressedQuartic {
    let q = |n: &BigInt| Rational::from_integer(n.clone());
    let (a3, a2, a1, a0) = (q(&h.a3), q(&h.a2), q(&h.a1), q(&h.a0));
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let a3_2 = &a3 * &a3;
    let b2 = &a3_2 * r(-3, 8) + &a2;
    let b1 = &a3_2 * &a3 * r(1, 8) - &a3 * &a2 * r(1, 2) + &a1;
    let b0 = &a3_2 * &a3_2 * r(-3, 256) + &a3_2 * &a2 * r(1, 16) - &a3 * &a1 * r(1, 4) + &a0;
    DepressedQuartic { b2, b1, b0 }
}

/// `z^3 + 2 b2 z^2 + (b2^2 - 4 b0) z - b1^2`.
pub fn resolvent_cubic_depressed(dep: &DepressedQuartic) -> RatPoly {
    let DepressedQuartic { b2, b1, b0 } = dep;
    let four = Rational::from_integer(4.into());
    RatPoly::new(vec![
        -(b1 * b1),
        b2 * b2 - &four * b0,
        b2 + b2,
        Rational::one(),
    ])
}

/// Checks that `y = z - a3^2/4 + a2` carries [`resolvent_cubic`] to
/// [`resolvent_cubic_depressed`].
pub fn check_resolvent_shift(h: &QuarticShape) -> bool {
    let a3 = Rational::from_integer(h.a3.clone());
    let shift = Rational::from_integer(h.a2.clone()) - &a3 * &a3 / Rational::from_integer(4.into());
    let y = RatPoly::new(vec![shift, Rational::one()]);
    RatPoly::from(&resolvent_cubic(h)).compose(&y) == resolvent_cubic_depressed(&depress(h))
}

/// Whether the quartic is a product of two rational quadratics, for input
/// without a rational root.
pub fn splits_into_quadratics(h: &QuarticShape) -> bool {
    let dep = depress(h);
    let cubic = resolvent_cubic_depressed(&dep).clear_denominators();
    let roots = rational_roots(&cubic).expect("monic cubic is nonzero");
    if roots.iter().any(|r| !r.is_zero() && is_rational_square(r)) {
        return true;
    }
    let four = Rational::from_integer(4.into());
    dep.b1.is_zero() && is_rational_square(&(&dep.b2 * &dep.b2 - four * &dep.b0))
}

/// What decided irreducibility over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// Eisenstein at `p`.
    Eisenstein(BigInt),
    /// Factorization patterns modulo these primes leave no room for a linear
    /// or a quadratic factor.
    FactorPatterns(Vec<u64>),
    /// No rational root and no splitting into quadratics.
    NoRootNoSplit,
    RationalRoot(Rational),
    QuadraticSplit,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(
            self,
            Irreducibility::Eisenstein(_)
                | Irreducibility::FactorPatterns(_)
                | Irreducibility::NoRootNoSplit
        )
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Irreducibility::Eisenstein(_) => "EISENSTEIN",
            Irreducibility::FactorPatterns(_) => "FACTOR_PATTERNS",
            Irreducibility::NoRootNoSplit => "NO_ROOT_NO_SPLIT",
            Irreducibility::RationalRoot(_) => "RATIONAL_ROOT",
            Irreducibility::QuadraticSplit => "QUADRATIC_SPLIT",
        }
    }
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irreducibility::Eisenstein(p) => write!(f, "Eisenstein at {p}"),
            Irreducibility::FactorPatterns(ps) => {
                let list: Vec<String> = ps.iter().map(u64::to_string).collect();
                write!(f, "factorization patterns mod {}", list.join(", "))
            }
            Irreducibility::NoRootNoSplit => f.write_str("no rational root and no quadratic splitting"),
            Irreducibility::RationalRoot(r) => write!(f, "rational root {r}"),
            Irreducibility::QuadraticSplit => f.write_str("product of two rational quadratics"),
        }
    }
}

impl Serialize for Irreducibility {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}: {}", self.tag(), self))
    }
}

/// Primes tried by [`irreducibility`] before falling back to the exact test.
const PATTERN_PRIMES: usize = 12;

/// Tries Eisenstein and mod-p factorization patterns, then the exact test.
pub fn irreducibility(h: &QuarticShape) -> Irreducibility {
    if let Some(p) = eisenstein_prime(h) {
        return Irreducibility::Eisenstein(p);
    }
    if let Some(primes) = pattern_certificate(h) {
        return Irreducibility::FactorPatterns(primes);
    }
    irreducibility_exact(h)
}

/// Rational root test, then the quadratic-splitting test.
pub fn irreducibility_exact(h: &QuarticShape) -> Irreducibility {
    let roots = rational_roots(&h.to_poly()).expect("monic quartic is nonzero");
    if let Some(r) = roots.into_iter().next() {
        return Irreducibility::RationalRoot(r);
    }
    if splits_into_quadratics(h) {
        Irreducibility::QuadraticSplit
    } else {
        Irreducibility::NoRootNoSplit
    }
}

pub fn is_irreducible_quartic(h: &QuarticShape) -> bool {
    irreducibility(h).is_irreducible()
}

/// A prime `p` with `p | a_i` for all `i < 4` and `p^2 ∤ a0`.
pub fn eisenstein_prime(h: &QuarticShape) -> Option<BigInt> {
    if h.a0.is_zero() {
        return None;
    }
    let g = h.a3.gcd(&h.a2).gcd(&h.a1).gcd(&h.a0);
    if g.is_one() {
        return None;
    }
    let fac = factor_int(&g).ok()?;
    fac.factors().iter().map(|(p, _)| p).find(|p| valuation(&h.a0, p) == 1).cloned()
}

/// Over `Z`, a factorization `f = g h` survives reduction, so the degrees of
/// the factors mod `p` (with multiplicity) split into `deg g` and `deg h`.
fn pattern_certificate(h: &QuarticShape) -> Option<Vec<u64>> {
    let mut no_linear = None;
    let mut no_quadratic = None;
    for &p in small_primes().iter().take(PATTERN_PRIMES) {
        let p = p as u64;
        let residue = |c: &BigInt| c.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let pattern = QuarticPattern::of([residue(&h.a0), residue(&h.a1), residue(&h.a2), residue(&h.a3)], p);
        if no_linear.is_none() && pattern.linear == 0 {
            no_linear = Some(p);
        }
        if no_quadratic.is_none() && pattern.linear < 2 && !pattern.quadratic {
            no_quadratic = Some(p);
        }
        if let (Some(a), Some(b)) = (no_linear, no_quadratic) {
            let mut primes = vec![a, b];
            primes.dedup();
            return Some(primes);
        }
    }
    None
}

/// What the factorization of a monic quartic mod a small prime says about
/// factors over `Z`: linear factors counted with multiplicity, and whether an
/// irreducible quadratic factor occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct QuarticPattern {
    linear: usize,
    quadratic: bool,
}

impl QuarticPattern {
    /// `low` holds `a0, a1, a2, a3` reduced mod `p`; `p` must be prime and
    /// small enough that `p^2` fits in a word.
    fn of(low: [u64; 4], p: u64) -> Self {
        let mut f = vec![low[0], low[1], low[2], low[3], 1];
        let mut linear = 0;
        for r in 0..p {
            while f.len() > 1 && small::eval(&f, r, p) == 0 {
                f = small::div_linear(&f, r, p);
                linear += 1;
            }
        }
        let quadratic = match f.len() - 1 {
            2 => true,
            // A quartic without roots: a quadratic factor exists iff
            // gcd(x^(p^2) - x, f) is nontrivial.
            4 => {
                let mut t = small::powmod_x(p * p, &f, p);
                if t.len() < 2 {
                    t.resize(2, 0);
                }
                t[1] = (t[1] + p - 1) % p;
                small::gcd(small::trim(t), f.clone(), p).len() > 1
            }
            _ => false,
        };
        QuarticPattern { linear, quadratic }
    }
}

/// Dense polynomials over `F_p` for small `p`, lowest coefficient first.
mod small {
    pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn eval(f: &[u64], r: u64, p: u64) -> u64 {
        f.iter().rev().fold(0, |acc, &c| (acc * r + c) % p)
    }

    /// `f / (x - r)` for a root `r` of monic `f`.
    pub fn div_linear(f: &[u64], r: u64, p: u64) -> Vec<u64> {
        let n = f.len() - 1;
        let mut q = vec![0; n];
        let mut carry = 0;
        for i in (1..=n).rev() {
            carry = (f[i] + carry * r) % p;
            q[i - 1] = carry;
        }
        q
    }

    fn inverse(a: u64, p: u64) -> u64 {
        let (mut base, mut e, mut out) = (a % p, p - 2, 1);
        while e > 0 {
            if e & 1 == 1 {
                out = out * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        out
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inverse(m[dm], p);
        while a.len() > dm {
            let k = a.len() - 1 - dm;
            let c = a[a.len() - 1] * lead_inv % p;
            for (i, &mi) in m.iter().enumerate() {
                a[k + i] = (a[k + i] + p - c * mi % p) % p;
            }
            a = trim(a);
        }
        a
    }

    fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    /// `x^e mod m`.
    pub fn powmod_x(mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut base = rem(&[0, 1], m, p);
        let mut out = rem(&[1], m, p);
        while e > 0 {
            if e & 1 == 1 {
                out = mulmod(&out, &base, m, p);
            }
            base = mulmod(&base, &base, m, p);
            e >>= 1;
        }
        out
    }

    pub fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaloisGroup {
    S4,
    A4,
    /// Dihedral of order 8 or cyclic of order 4; the table does not separate them.
    D8OrC4,
    V4,
    NotIrreducible,
}

impl GaloisGroup {
    pub fn tag(self) -> &'static str {
        match self {
            GaloisGroup::S4 => "S4",
            GaloisGroup::A4 => "A4",
            GaloisGroup::D8OrC4 => "D8_or_C4",
            GaloisGroup::V4 => "V4",
            GaloisGroup::NotIrreducible => "NOT_IRREDUCIBLE",
        }
    }
}

impl fmt::Display for GaloisGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaloisGroup::S4 => "S4",
            GaloisGroup::A4 => "A4",
            GaloisGroup::D8OrC4 => "D8 or Z/4Z",
            GaloisGroup::V4 => "Z/2Z x Z/2Z",
            GaloisGroup::NotIrreducible => "not irreducible",
        })
    }
}

impl Serialize for GaloisGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisReport {
    pub irreducible: bool,
    pub irreducibility: Irreducibility,
    #[serde(serialize_with = "bigint_as_string")]
    pub disc: BigInt,
    pub disc_is_square: bool,
    pub resolvent: IntPoly,
    pub resolvent_irreducible: bool,
    pub group: GaloisGroup,
}

pub fn galois_group(h: &QuarticShape) -> GaloisReport {
    galois_report(h, irreducibility(h))
}

/// [`galois_group`] with an irreducibility verdict the caller already has.
pub fn galois_report(h: &QuarticShape, irreducibility: Irreducibility) -> GaloisReport {
    let disc = discriminant(&h.to_poly()).expect("monic quartic");
    let disc_is_square = is_perfect_square(&disc);
    let resolvent = resolvent_cubic(h);
    let resolvent_irreducible = rational_roots(&resolvent).expect("nonzero").is_empty();
    let irreducible = irreducibility.is_irreducible();
    let group = match (irreducible, disc_is_square, resolvent_irreducible) {
        (false, _, _) => GaloisGroup::NotIrreducible,
        (true, false, true) => GaloisGroup::S4,
        (true, true, true) => GaloisGroup::A4,
        (true, false, false) => GaloisGroup::D8OrC4,
        (true, true, false) => GaloisGroup::V4,
    };
    GaloisReport {
        irreducible,
        irreducibility,
        disc,
        disc_is_square,
        resolvent,
        resolvent_irreducible,
        group,
    }
}
