use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Trial division runs over every prime below this bound.
pub const TRIAL_DIVISION_BOUND: u32 = 1_000_000;

/// Miller–Rabin with these bases is deterministic below 3.3 * 10^24.
const FIXED_WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Extra random rounds above the deterministic range; error below 4^-64 = 2^-128.
const RANDOM_ROUNDS: usize = 64;

const PRIMALITY_SEED: u64 = 0x4d52_5f72_6f75_6e64;
const RHO_SEED: u64 = 0x7268_6f5f_6272_656e;

/// Primes below [`TRIAL_DIVISION_BOUND`], computed once.
pub fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_below(TRIAL_DIVISION_BOUND as usize))
}

/// Sieve of Eratosthenes.
pub fn primes_below(n: usize) -> Vec<u32> {
    if n < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if composite[i] {
            continue;
        }
        out.push(i as u32);
        let mut j = i * i;
        while j < n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Complete factorization `sign * prod p^e` of a nonzero integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "sign_as_int")]
    sign: Sign,
    #[serde(serialize_with = "factors_as_strings")]
    factors: Vec<(BigInt, u32)>,
}

fn sign_as_int<S: serde::Serializer>(s: &Sign, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_i8(if *s == Sign::Minus { -1 } else { 1 })
}

fn factors_as_strings<S: serde::Serializer>(
    f: &[(BigInt, u32)],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(f.iter().map(|(p, e)| (p.to_string(), *e)))
}

impl Factorization {
    pub fn one() -> Self {
        Factorization { sign: Sign::Plus, factors: Vec::new() }
    }

    fn from_unsorted(sign: Sign, mut primes: Vec<BigInt>) -> Self {
        primes.sort();
        let mut factors: Vec<(BigInt, u32)> = Vec::new();
        for p in primes {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
        Factorization { sign, factors }
    }

    /// `-1` or `1`.
    pub fn sign(&self) -> i8 {
        if self.sign == Sign::Minus {
            -1
        } else {
            1
        }
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn value(&self) -> BigInt {
        let mag = self
            .factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize));
        if self.sign == Sign::Minus {
            -mag
        } else {
            mag
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn odd_part_squarefree(&self) -> bool {
        self.factors
            .iter()
            .all(|(p, e)| *e == 1 || *p == BigInt::from(2))
    }

    /// Factorization of the product.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let sign = if self.sign == other.sign { Sign::Plus } else { Sign::Minus };
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            match (self.factors.get(i), other.factors.get(j)) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    factors.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    factors.push(a.clone());
                    i += 1;
                }
                (Some(_), Some(b)) | (None, Some(b)) => {
                    factors.push(b.clone());
                    j += 1;
                }
                (Some(a), None) => {
                    factors.push(a.clone());
                    i += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Factorization { sign, factors }
    }

    pub fn pow(&self, k: u32) -> Factorization {
        Factorization {
            sign: if k % 2 == 0 { Sign::Plus } else { self.sign },
            factors: self.factors.iter().map(|(p, e)| (p.clone(), e * k)).collect(),
        }
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::one()];
        for (p, e) in &self.factors {
            let n = out.len();
            let mut pk = BigInt::one();
            for _ in 0..*e {
                pk *= p;
                for i in 0..n {
                    let d = &out[i] * &pk;
                    out.push(d);
                }
            }
        }
        out.sort();
        out
    }
}

pub fn factor_int(n: &BigInt) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroInteger);
    }
    let sign = if n.sign() == Sign::Minus { Sign::Minus } else { Sign::Plus };
    let mut m = n.magnitude().clone();
    let mut primes: Vec<BigInt> = Vec::new();

    if let Some(small) = m.to_u64() {
        primes.extend(factor_u64(small).into_iter().map(BigInt::from));
        return Ok(Factorization::from_unsorted(sign, primes));
    }

    for &p in small_primes() {
        let p_big = BigUint::from(p);
        while (&m % &p_big).is_zero() {
            m /= &p_big;
            primes.push(BigInt::from(p));
        }
        if let Some(small) = m.to_u64() {
            primes.extend(factor_u64(small).into_iter().map(BigInt::from));
            return Ok(Factorization::from_unsorted(sign, primes));
        }
    }
    let mut stack = vec![m];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if let Some(small) = c.to_u64() {
            primes.extend(factor_u64(small).into_iter().map(BigInt::from));
        } else if is_probable_prime_big(&c) {
            primes.push(BigInt::from(c));
        } else {
            let d = pollard_brent_big(&c);
            stack.push(&c / &d);
            stack.push(d);
        }
    }
    Ok(Factorization::from_unsorted(sign, primes))
}

pub fn is_squarefree(n: &BigInt) -> Result<bool> {
    Ok(factor_int(n)?.is_squarefree())
}

/// True when no odd prime square divides `n`.
pub fn odd_part_squarefree(n: &BigInt) -> Result<bool> {
    Ok(factor_int(n)?.odd_part_squarefree())
}

/// Primality with error below 2^-128 (exact below 3.3 * 10^24).
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => is_probable_prime_big(n.magnitude()),
    }
}

/// `v_p(n)` for `n != 0`.
pub fn valuation(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    if let (Some(mut a), Some(q)) = (n.magnitude().to_u64(), p.to_u64()) {
        let mut v = 0;
        while a % q == 0 {
            a /= q;
            v += 1;
        }
        return v;
    }
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

fn factor_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for (i, &p) in small_primes().iter().enumerate() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        while n % p == 0 {
            n /= p;
            out.push(p);
        }
        // Past this point a prime cofactor would otherwise be trial-divided
        // by every remaining small prime.
        if i % 512 == 511 && n > 1 && is_prime_u64(n) {
            break;
        }
    }
    if n == 1 {
        return out;
    }
    let mut stack = vec![n];
    while let Some(c) = stack.pop() {
        if c == 1 {
            continue;
        }
        if is_prime_u64(c) {
            out.push(c);
        } else {
            let d = pollard_brent_u64(c);
            stack.push(c / d);
            stack.push(d);
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &FIXED_WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &FIXED_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_round(n: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let n1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &FIXED_WITNESSES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    for &a in &FIXED_WITNESSES {
        if !miller_rabin_round(n, &d, s, &BigUint::from(a)) {
            return false;
        }
    }
    let deterministic_limit: BigUint = "3317044064679887385961981".parse().unwrap();
    if *n < deterministic_limit {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(PRIMALITY_SEED);
    let two = BigUint::from(2u32);
    (0..RANDOM_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&two, &n1);
        miller_rabin_round(n, &d, s, &a)
    })
}

fn rho_seeds(n: u64) -> impl Iterator<Item = (u64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
    std::iter::repeat_with(move || {
        use rand::Rng;
        (rng.gen_range(1..n), rng.gen_range(1..n))
    })
}

/// Brent's cycle detection for `x -> x^2 + c`; returns a proper divisor of composite `n`.
fn pollard_brent_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    if let Some(r) = perfect_power_root_u64(n) {
        return r;
    }
    const BATCH: u64 = 128;
    for (y0, c) in rho_seeds(n) {
        let step = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let (mut y, mut r, mut q, mut g) = (y0, 1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = step(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("seed iterator is infinite")
}

fn perfect_power_root_u64(n: u64) -> Option<u64> {
    (2..64u32).find_map(|k| {
        let r = n.nth_root(k);
        (r > 1 && r.checked_pow(k) == Some(n)).then_some(r)
    })
}

fn pollard_brent_big(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    for k in 2..(n.bits() as u32) {
        let r = n.nth_root(k);
        if r > BigUint::one() && num_traits::pow(r.clone(), k as usize) == *n {
            return r;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
    let one = BigUint::one();
    loop {
        let y0 = rng.gen_biguint_range(&one, n);
        let c = rng.gen_biguint_range(&one, n);
        let step = |x: &BigUint| (x * x + &c) % n;
        let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
        let (mut y, mut r, mut q, mut g) = (y0, 1u64, one.clone(), one.clone());
        let (mut x, mut ys) = (BigUint::zero(), BigUint::zero());
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..128.min(r - k) {
                    y = step(&y);
                    q = (q * diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = step(&ys);
                g = diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
    }
}
