use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use super::poly::Poly;
use crate::DEFAULT_SEED;

/// `(monic irreducible factor, multiplicity)` pairs.
pub type Factors<F> = Vec<(Poly<F>, u32)>;

/// Complete factorization with [`DEFAULT_SEED`]. The leading coefficient is
/// dropped; constants factor as the empty product.
pub fn factor_modp<F: PrimeField>(f: &Poly<F>) -> Factors<F> {
    factor_modp_seeded(f, DEFAULT_SEED)
}

/// Square-free decomposition, then distinct-degree, then Cantor–Zassenhaus
/// equal-degree splitting driven by a ChaCha stream seeded with `seed`.
///
/// The output is sorted by degree and then by coefficients, so it does not
/// depend on the seed.
pub fn factor_modp_seeded<F: PrimeField>(f: &Poly<F>, seed: u64) -> Factors<F> {
    assert!(!f.is_zero(), "factor_modp of the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic()) {
        for (block, d) in distinct_degree(&part) {
            for g in equal_degree(&block, d, &mut rng) {
                out.push((g, mult));
            }
        }
    }
    sort_factors(&mut out);
    out
}

pub(crate) fn sort_key<F: PrimeField>(g: &Poly<F>) -> (usize, Vec<BigInt>) {
    let k = g.field();
    (g.coeffs().len(), g.coeffs().iter().map(|c| k.lift(c)).collect())
}

fn sort_factors<F: PrimeField>(factors: &mut Factors<F>) {
    factors.sort_by_cached_key(|(g, _)| sort_key(g));
}

/// `f = prod g_i^{m_i}` with each `g_i` square-free, pairwise coprime, and the
/// `m_i` distinct. `f` must be monic.
pub fn squarefree_decomposition<F: PrimeField>(f: &Poly<F>) -> Vec<(Poly<F>, u32)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let d = f.derivative();
    let mut c = f.gcd(&d);
    let mut w = f.quo(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.quo(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.quo(&w);
    }
    if !c.is_one() {
        // Only factors whose multiplicity is divisible by p remain.
        let p = f
            .field()
            .small_characteristic()
            .expect("p-th powers only occur when p <= deg f");
        let root = pth_root(&c, p as usize);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p as u32));
        }
    }
    out
}

fn pth_root<F: PrimeField>(c: &Poly<F>, p: usize) -> Poly<F> {
    debug_assert!(c.derivative().is_zero());
    Poly::new(
        c.field().clone(),
        c.coeffs().iter().step_by(p).cloned().collect(),
    )
}

/// Splits a monic square-free `f` into `(product of all degree-d factors, d)`.
pub fn distinct_degree<F: PrimeField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let k = f.field().clone();
    let p: BigUint = k.characteristic().to_biguint().unwrap();
    let x = Poly::x(k);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&p, &rest);
        let g = rest.gcd(&(&h - &x));
        if !g.is_one() {
            rest = rest.quo(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    out
}

/// Splits a monic product of distinct degree-`d` irreducibles.
pub fn equal_degree<F: PrimeField, R: Rng + ?Sized>(
    f: &Poly<F>,
    d: usize,
    rng: &mut R,
) -> Vec<Poly<F>> {
    let n = f.degree().expect("nonzero");
    assert!(d >= 1 && n % d == 0);
    if n == d {
        return vec![f.clone()];
    }
    let k = f.field().clone();
    let p = k.characteristic().to_biguint().unwrap();
    let even = p.to_u64() == Some(2);
    let exponent = (num_traits::pow(p, d) - BigUint::one()) >> 1;
    let one = Poly::one(k.clone());
    let mut stack = vec![f.clone()];
    let mut out = Vec::new();
    while let Some(g) = stack.pop() {
        let gd = g.degree().unwrap();
        if gd == d {
            out.push(g);
            continue;
        }
        loop {
            let a = Poly::new(k.clone(), (0..gd).map(|_| k.random_elem(rng)).collect());
            if a.is_constant() {
                continue;
            }
            let b = if even {
                // absolute trace F_{2^d} -> F_2
                let mut t = a.clone();
                let mut s = a.clone();
                for _ in 1..d {
                    t = t.mul_mod(&t, &g);
                    s = &s + &t;
                }
                s
            } else {
                &a.pow_mod(&exponent, &g) - &one
            };
            let h = g.gcd(&b);
            let hd = h.degree().unwrap_or(0);
            if hd > 0 && hd < gd {
                stack.push(g.quo(&h));
                stack.push(h);
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modpoly::field::WordField;

    fn fp(p: u64, c: &[u64]) -> Poly<WordField> {
        Poly::new(WordField::new(p).unwrap(), c.to_vec())
    }

    #[test]
    fn squarefree_decomposition_handles_pth_powers() {
        // over F_3: x^3 (x+1)^2 (x+2)
        let x = fp(3, &[0, 1]);
        let x1 = fp(3, &[1, 1]);
        let x2 = fp(3, &[2, 1]);
        let f = &(&(&(&x * &x) * &x) * &(&x1 * &x1)) * &x2;
        let mut parts = squarefree_decomposition(&f);
        parts.sort_by_key(|(_, m)| *m);
        assert_eq!(parts, vec![(x2, 1), (x1, 2), (x, 3)]);
    }

    #[test]
    fn distinct_degree_groups() {
        // over F_2: (x^2+x+1)(x^3+x+1)(x) -> degree 1, 2, 3 blocks
        let f = &(&fp(2, &[1, 1, 1]) * &fp(2, &[1, 1, 0, 1])) * &fp(2, &[0, 1]);
        let blocks = distinct_degree(&f);
        let degrees: Vec<_> = blocks.iter().map(|(_, d)| *d).collect();
        assert_eq!(degrees, vec![1, 2, 3]);
    }

    #[test]
    fn equal_degree_splits_in_characteristic_two() {
        // the two irreducible cubics over F_2
        let f = &fp(2, &[1, 1, 0, 1]) * &fp(2, &[1, 0, 1, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut parts = equal_degree(&f, 3, &mut rng);
        parts.sort_by_cached_key(sort_key);
        assert_eq!(parts, vec![fp(2, &[1, 0, 1, 1]), fp(2, &[1, 1, 0, 1])]);
    }

    #[test]
    fn examples() {
        assert_eq!(factor_modp(&fp(2, &[1, 1, 0, 0, 1])), vec![(fp(2, &[1, 1, 0, 0, 1]), 1)]);
        assert_eq!(
            factor_modp(&fp(3, &[0, 1, 0, 0, 1])),
            vec![(fp(3, &[0, 1]), 1), (fp(3, &[1, 1]), 3)]
        );
        assert_eq!(
            factor_modp(&fp(5, &[0, 1, 0, 1])),
            vec![(fp(5, &[0, 1]), 1), (fp(5, &[2, 1]), 1), (fp(5, &[3, 1]), 1)]
        );
    }

    #[test]
    fn seed_does_not_change_result() {
        let f = &(&fp(7, &[1, 0, 1]) * &fp(7, &[3, 0, 1])) * &fp(7, &[1, 1]);
        let a = factor_modp_seeded(&f, 1);
        for seed in 2..20 {
            assert_eq!(factor_modp_seeded(&f, seed), a);
        }
    }
}
