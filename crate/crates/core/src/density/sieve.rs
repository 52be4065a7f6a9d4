use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::intpoly::primes_below;

/// Default number of parameters per segment.
pub const DEFAULT_SEGMENT: u64 = 1 << 20;

/// The half-open parameter range `[lo, hi)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SieveRange {
    lo: i64,
    hi: i64,
}

impl SieveRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo >= hi {
            return Err(Error::Invalid(format!("empty range [{lo}, {hi})")));
        }
        Ok(SieveRange { lo, hi })
    }

    /// `[first, last]` with both ends included.
    pub fn inclusive(first: i64, last: i64) -> Result<Self> {
        let hi = last.checked_add(1).ok_or_else(|| Error::Invalid("range end overflows".into()))?;
        Self::new(first, hi)
    }

    /// `[-n, n]`.
    pub fn symmetric(n: i64) -> Result<Self> {
        Self::inclusive(-n, n)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn len(&self) -> u64 {
        (self.hi - self.lo) as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::ops::Range<i64> {
        self.lo..self.hi
    }

    /// Consecutive subranges of at most `size` elements tiling `self`.
    pub fn segments(&self, size: u64) -> impl Iterator<Item = SieveRange> {
        let size = size.clamp(1, i64::MAX as u64) as i64;
        let hi = self.hi;
        let mut lo = self.lo;
        std::iter::from_fn(move || {
            (lo < hi).then(|| {
                let end = lo.saturating_add(size).min(hi);
                let seg = SieveRange { lo, hi: end };
                lo = end;
                seg
            })
        })
    }
}

/// `alpha t + beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub alpha: i64,
    pub beta: i64,
}

impl LinearForm {
    pub fn new(alpha: i64, beta: i64) -> Self {
        LinearForm { alpha, beta }
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.alpha * t + self.beta
    }

    pub fn display_with(&self, var: &str) -> String {
        match self.beta {
            0 => format!("{}{var}", self.alpha),
            b if self.alpha < 0 => format!("{b} - {}{var}", -self.alpha),
            b if b < 0 => format!("{}{var} - {}", self.alpha, -b),
            b => format!("{}{var} + {b}", self.alpha),
        }
    }
}

/// Every prime whose square can divide a value of one of `forms` on `range`.
pub(crate) fn primes_for(range: &SieveRange, forms: &[LinearForm]) -> Vec<i64> {
    let max = forms
        .iter()
        .flat_map(|f| [f.eval(range.lo), f.eval(range.hi - 1)])
        .map(|v| v.unsigned_abs())
        .max()
        .unwrap_or(0);
    primes_below(max.sqrt() as usize + 1).into_iter().map(i64::from).collect()
}

/// `true` where `form(t)` is square-free, for `t` in `seg`; zero is not.
pub(crate) fn sieve_segment(form: LinearForm, seg: &SieveRange, primes: &[i64]) -> Vec<bool> {
    let mut squarefree = vec![true; seg.len() as usize];
    let LinearForm { alpha, beta } = form;
    if alpha == 0 {
        if beta == 0 {
            squarefree.fill(false);
        }
    } else if beta % alpha == 0 {
        let root = -beta / alpha;
        if seg.iter().contains(&root) {
            squarefree[(root - seg.lo) as usize] = false;
        }
    }
    for &p in primes {
        let q = p * p;
        let a = alpha.rem_euclid(q);
        let b = (-beta).rem_euclid(q);
        let g = a.gcd(&q);
        if b % g != 0 {
            continue;
        }
        let modulus = q / g;
        let inverse = (a / g).extended_gcd(&modulus).x;
        let root = ((b / g) as i128 * inverse as i128).rem_euclid(modulus as i128) as i64;
        let mut t = seg.lo + (root - seg.lo).rem_euclid(modulus);
        while t < seg.hi {
            squarefree[(t - seg.lo) as usize] = false;
            t += modulus;
        }
    }
    squarefree
}

/// Number of `t` in `range` with `form(t)` square-free.
pub(crate) fn count_squarefree(form: LinearForm, range: &SieveRange, segment: u64) -> u64 {
    let primes = primes_for(range, &[form]);
    range
        .segments(segment)
        .map(|seg| sieve_segment(form, &seg, &primes).into_iter().filter(|&b| b).count() as u64)
        .sum()
}

/// `bitmap[i]` tells whether `range.lo() + i` is square-free.
pub fn squarefree_sieve(range: &SieveRange) -> Vec<bool> {
    let form = LinearForm::new(1, 0);
    let primes = primes_for(range, &[form]);
    range.segments(DEFAULT_SEGMENT).flat_map(|seg| sieve_segment(form, &seg, &primes)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(n: i64) -> bool {
        let n = n.unsigned_abs();
        n != 0 && (2..).take_while(|q| q * q <= n).all(|q| n % (q * q) != 0)
    }

    #[test]
    fn small_counts() {
        let bits = squarefree_sieve(&SieveRange::inclusive(1, 100).unwrap());
        assert_eq!(bits.iter().filter(|&&b| b).count(), 61);
        for n in [4, 8, 9, 12] {
            assert!(!bits[n - 1]);
        }
    }

    #[test]
    fn segments_tile() {
        let r = SieveRange::new(-7, 23).unwrap();
        let segs: Vec<_> = r.segments(4).collect();
        assert_eq!(segs.first().unwrap().lo(), -7);
        assert_eq!(segs.last().unwrap().hi(), 23);
        assert!(segs.windows(2).all(|w| w[0].hi() == w[1].lo()));
        assert_eq!(segs.iter().map(|s| s.len()).sum::<u64>(), 30);
    }

    #[test]
    fn forms_match_naive() {
        let range = SieveRange::inclusive(-3000, 3000).unwrap();
        for form in [LinearForm::new(-27, 256), LinearForm::new(256, -27), LinearForm::new(12, 18), LinearForm::new(4, 0)] {
            let primes = primes_for(&range, &[form]);
            for size in [1000, 7] {
                let bits: Vec<bool> = range.segments(size).flat_map(|s| sieve_segment(form, &s, &primes)).collect();
                for (t, bit) in range.iter().zip(bits) {
                    assert_eq!(bit, naive(form.eval(t)), "{form:?} at {t}");
                }
            }
        }
    }

    #[test]
    fn rejects_empty() {
        assert!(SieveRange::new(3, 3).is_err());
        assert!(SieveRange::inclusive(3, 3).is_ok());
    }
}
