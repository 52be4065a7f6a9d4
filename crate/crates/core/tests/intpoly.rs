use monoquartic::intpoly::{
    discriminant, factor_int, is_prime, is_squarefree, odd_part_squarefree, rational_roots, resultant,
    vp_poly, IntPoly, Rational, Valuation,
};
use monoquartic::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn n(v: i64) -> BigInt {
    BigInt::from(v)
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

#[test]
fn vp_poly_examples() {
    assert_eq!(vp_poly(&poly(&[27, 9, 3]), &n(3)).unwrap(), Valuation::Finite(1));
    assert_eq!(vp_poly(&poly(&[1, 0, 0, 0, 1]), &n(2)).unwrap(), Valuation::Finite(0));
    assert_eq!(vp_poly(&IntPoly::zero(), &n(5)).unwrap(), Valuation::Infinite);
    assert!(matches!(vp_poly(&poly(&[1, 1]), &n(4)), Err(Error::NotPrime(_))));
}

#[test]
fn resultant_examples() {
    assert_eq!(resultant(&poly(&[-1, 0, 1]), &poly(&[-2, 1])).unwrap(), n(3));
    for (a, b) in [(3, 7), (-2, 5), (0, 0)] {
        // res(x - a, x - b) = a - b
        assert_eq!(resultant(&poly(&[-a, 1]), &poly(&[-b, 1])).unwrap(), n(a - b));
    }
    assert_eq!(resultant(&poly(&[1, 1, 0, 0, 1]), &poly(&[1, 0, 0, 4])).unwrap(), n(229));
    assert!(resultant(&IntPoly::zero(), &poly(&[1, 1])).is_err());
}

#[test]
fn discriminant_examples() {
    assert_eq!(discriminant(&poly(&[1, 1, 0, 0, 1])).unwrap(), n(229));
    assert_eq!(discriminant(&poly(&[2, 0, 0, 1, 1])).unwrap(), n(1940));
    assert_eq!(discriminant(&poly(&[2, 2, 0, 0, 1])).unwrap(), n(256 * 8 - 27 * 16));
    assert!(discriminant(&poly(&[1, 2])).is_err());
    assert!(discriminant(&poly(&[1, 0, 2])).is_err());
}

#[test]
fn rational_root_examples() {
    assert_eq!(rational_roots(&poly(&[-2, 0, 0, 1, 1])).unwrap(), vec![Rational::one()]);
    assert_eq!(rational_roots(&poly(&[-9, -12, 0, 1])).unwrap(), vec![Rational::from_integer(n(-3))]);
    assert!(rational_roots(&poly(&[1, 1, 0, 0, 1])).unwrap().is_empty());
    let roots = rational_roots(&poly(&[-1, 0, 4])).unwrap();
    assert_eq!(roots.len(), 2);
}

#[test]
fn squarefree_examples() {
    assert!(is_squarefree(&n(229)).unwrap());
    assert!(!is_squarefree(&n(175)).unwrap());
    assert!(odd_part_squarefree(&n(336)).unwrap());
    assert!(!odd_part_squarefree(&n(2 * 9)).unwrap());
    assert_eq!(is_squarefree(&BigInt::zero()), Err(Error::ZeroInteger));
}

#[test]
fn factors_large_semiprimes() {
    let p: BigInt = (BigInt::one() << 61) - 1;
    let q: BigInt = (BigInt::one() << 31) - 1;
    let r = BigInt::from(1_000_003u64);
    let m: BigInt = &p * &q * &q * &r;
    let fac = factor_int(&-m.clone()).unwrap();
    assert_eq!(fac.value(), -m);
    assert_eq!(fac.exponent_of(&q), 2);
    assert!(fac.primes().all(is_prime));
}

/// Trial division, independent of the library's factoring.
fn naive_is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn closed_form_f(a: i64, b: i64) -> BigInt {
    n(256) * n(b).pow(3) - n(27) * n(a).pow(4)
}

fn closed_form_g(c: i64, d: i64) -> BigInt {
    n(d).pow(2) * (n(256) * n(d) - n(27) * n(c).pow(4))
}

proptest! {
    #[test]
    fn discriminant_matches_closed_forms(a in -50i64..=50, b in -50i64..=50) {
        prop_assert_eq!(discriminant(&poly(&[b, a, 0, 0, 1])).unwrap(), closed_form_f(a, b));
        prop_assert_eq!(discriminant(&poly(&[b, 0, 0, a, 1])).unwrap(), closed_form_g(a, b));
    }

    #[test]
    fn factorization_reconstructs(v in prop_oneof![-10_000_000i64..10_000_000, any::<i64>()]) {
        prop_assume!(v != 0);
        let fac = factor_int(&n(v)).unwrap();
        prop_assert_eq!(fac.value(), n(v));
        for p in fac.primes() {
            prop_assert!(is_prime(p));
            if let Ok(small) = u64::try_from(p) {
                if small < 1 << 32 {
                    prop_assert!(naive_is_prime(small));
                }
            }
        }
    }

    #[test]
    fn factorization_of_products(a in 2u64..1 << 40, b in 2u64..1 << 40) {
        let m = BigInt::from(a) * BigInt::from(b);
        let fac = factor_int(&m).unwrap();
        prop_assert_eq!(fac.value(), m);
        prop_assert!(fac.primes().all(is_prime));
    }

    #[test]
    fn rational_roots_match_brute_force(c in proptest::collection::vec(-30i64..=30, 1..5)) {
        let mut coeffs = c.clone();
        coeffs.push(1);
        let f = poly(&coeffs);
        prop_assume!(coeffs[0] != 0);
        let a0 = coeffs[0].unsigned_abs();
        let mut expected = Vec::new();
        for d in 1..=a0 {
            if a0 % d == 0 {
                for r in [-(d as i64), d as i64] {
                    if f.eval(&n(r)).is_zero() {
                        expected.push(Rational::from_integer(n(r)));
                    }
                }
            }
        }
        expected.sort();
        let mut got = rational_roots(&f).unwrap();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn gauss_lemma(
        g in proptest::collection::vec(-200i64..=200, 1..6),
        h in proptest::collection::vec(-200i64..=200, 1..6),
        p in prop::sample::select(vec![2i64, 3, 5, 7, 11, 101]),
    ) {
        let (g, h) = (poly(&g), poly(&h));
        let prod = &g * &h;
        let p = n(p);
        let sum = match (vp_poly(&g, &p).unwrap(), vp_poly(&h, &p).unwrap()) {
            (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x + y),
            _ => Valuation::Infinite,
        };
        prop_assert_eq!(vp_poly(&prod, &p).unwrap(), sum);
    }
}
