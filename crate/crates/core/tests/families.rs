use monoquartic::families::{
    check_f, check_f_bb, check_g, check_g_1d, check_resolvent_cubic, CaseTag, Certificate, Certifier, Family,
    Verdict, MOD4_PAIRS, MOD9_PAIRS,
};
use monoquartic::intpoly::{factor_int, valuation, IntPoly};
use monoquartic::montes::dedekind_test;
use monoquartic::quartic::GaloisGroup;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

fn n(v: i64) -> BigInt {
    BigInt::from(v)
}

fn f_poly(a: i64, b: i64) -> IntPoly {
    IntPoly::from_i64s(&[b, a, 0, 0, 1])
}

fn g_poly(c: i64, d: i64) -> IntPoly {
    IntPoly::from_i64s(&[d, 0, 0, c, 1])
}

/// Dedekind's criterion at every prime whose square divides the discriminant,
/// with the discriminant factored from scratch.
fn dedekind_everywhere(f: &IntPoly, disc: &BigInt) -> bool {
    let fac = factor_int(disc).unwrap();
    fac.factors().iter().filter(|(_, e)| *e >= 2).all(|(p, _)| dedekind_test(f, p).unwrap())
}

/// A monogenic certificate lists every prime of the discriminant exactly once.
fn covers_discriminant(c: &Certificate) -> bool {
    let fac = factor_int(&c.discriminant).unwrap();
    let mut listed: Vec<BigInt> = c.prime_evidence.iter().map(|e| e.p.clone()).collect();
    listed.sort();
    let mut expected: Vec<BigInt> = fac.primes().cloned().collect();
    expected.sort();
    listed == expected
}

fn assert_wording(c: &Certificate) {
    if c.verdict == Verdict::HypothesesNotMet {
        assert!(c.statement.contains("theorem inapplicable"), "{}", c.statement);
        assert!(!c.to_human().contains("non-monogenic"));
        assert!(!c.to_json().contains("non-monogenic"));
    }
}

#[test]
fn f_examples() {
    let c = check_f(&n(2), &n(2));
    assert_eq!(c.verdict, Verdict::MonogenicGenerator);
    assert_eq!(c.family, Family::FAb);
    let c = check_f(&n(1), &n(3));
    assert_eq!(c.verdict, Verdict::MonogenicGenerator);
    assert_eq!(c.discriminant, n(6912 - 27));
    let three = c.prime_evidence.iter().find(|e| e.p == n(3)).unwrap();
    assert_eq!(three.case, CaseTag::Case3P3);
    let c = check_f(&n(2), &n(4));
    assert_eq!(c.verdict, Verdict::HypothesesNotMet);
    assert_wording(&c);
}

#[test]
fn g_examples() {
    assert_eq!(check_g(&n(1), &n(1)).verdict, Verdict::MonogenicGenerator);
    let c = check_g(&n(2), &n(3));
    assert_eq!(c.verdict, Verdict::MonogenicGenerator);
    assert_eq!(c.discriminant, n(9 * 336));
    let two = c.prime_evidence.iter().find(|e| e.p == n(2)).unwrap();
    assert_eq!(two.case, CaseTag::Case2P2);
    assert_eq!(check_g(&n(1), &n(-2)).verdict, Verdict::NotIrreducible);
}

#[test]
fn restricted_examples() {
    let c = check_f_bb(&n(2));
    assert_eq!((c.verdict, c.galois.as_ref().unwrap().group), (Verdict::MonogenicGenerator, GaloisGroup::S4));
    let c = check_f_bb(&n(3));
    assert_eq!((c.verdict, c.galois.as_ref().unwrap().group), (Verdict::HypothesesNotMet, GaloisGroup::D8OrC4));
    assert_wording(&c);
    let c = check_g_1d(&n(1));
    assert_eq!((c.verdict, c.galois.as_ref().unwrap().group), (Verdict::MonogenicGenerator, GaloisGroup::S4));
}

#[test]
fn resolvent_cubic_examples() {
    assert_eq!(check_resolvent_cubic(&n(1)).verdict, Verdict::MonogenicGenerator);
    let c = check_resolvent_cubic(&n(2));
    assert_eq!(c.discriminant, n(4 * 485));
    let cubic = IntPoly::from_i64s(&[-2, -8, 0, 1]);
    assert_eq!(c.is_monogenic_generator(), dedekind_test(&cubic, &n(2)).unwrap());
    let c = check_resolvent_cubic(&n(-2));
    assert_eq!(c.verdict, Verdict::HypothesesNotMet);
    assert!(c.hypothesis_trail.iter().any(|t| t.name == "d != -2" && !t.passed));
    assert_ne!(check_g_1d(&n(-2)).verdict, Verdict::MonogenicGenerator);
}

#[test]
fn soundness_on_restricted_families() {
    for t in -2000i64..=2000 {
        let c = check_f_bb(&n(t));
        if c.is_monogenic_generator() {
            assert!(dedekind_everywhere(&f_poly(t, t), &c.discriminant), "b = {t}");
            assert!(covers_discriminant(&c), "b = {t}");
        }
        assert_wording(&c);
        let c = check_g_1d(&n(t));
        if c.is_monogenic_generator() {
            assert!(dedekind_everywhere(&g_poly(1, t), &c.discriminant), "d = {t}");
            assert!(covers_discriminant(&c), "d = {t}");
        }
        assert_wording(&c);
        let c = check_resolvent_cubic(&n(t));
        if c.is_monogenic_generator() {
            assert!(dedekind_everywhere(&IntPoly::from_i64s(&[-t, -4 * t, 0, 1]), &c.discriminant), "d = {t}");
        }
    }
}

#[test]
fn dedekind_cross_check_toggle() {
    let plain = Certifier { dedekind_xcheck: false, ..Certifier::default() };
    for (a, b) in [(2, 2), (1, 3), (6, 3), (3, 6)] {
        assert_eq!(plain.f(&n(a), &n(b)).verdict, check_f(&n(a), &n(b)).verdict);
    }
}

/// The case that must apply to `p` for `x^4 + a x + b`, decided from `a, b`.
fn expected_f_case(a: i64, b: i64, p: &BigInt, vp_disc: u64) -> CaseTag {
    let (a, b) = (n(a), n(b));
    if (&a % p).is_zero() && (&b % p).is_zero() {
        CaseTag::Case1EisensteinShape
    } else if *p == n(2) && vp_disc >= 2 {
        CaseTag::Case2P2
    } else if *p == n(3) && vp_disc >= 2 {
        CaseTag::Case3P3
    } else {
        CaseTag::SqfreeVal1
    }
}

fn expected_g_case(c: i64, d: i64, p: &BigInt) -> CaseTag {
    let (c, d) = (n(c), n(d));
    match ((&d % p).is_zero(), (&c % p).is_zero()) {
        (true, true) => CaseTag::Case1EisensteinShape,
        (true, false) => CaseTag::GcdSieve,
        _ if *p == n(2) => CaseTag::Case2P2,
        _ => CaseTag::SqfreeVal1,
    }
}

/// The `p = 3` condition for `x^4 + a x + b`, from valuations of big integers.
fn condition_three(a: &BigInt, b: &BigInt) -> bool {
    let three = n(3);
    if (a % &three).is_zero() || !(b % &three).is_zero() {
        return false;
    }
    let one = n(1);
    let t: BigInt = if a.mod_floor(&three) == one { b - a + &one } else { b + a + &one };
    !t.is_zero() && valuation(&t, &three) == 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn f_certificates_are_sound(a in -3000i64..=3000, b in -3000i64..=3000) {
        let c = check_f(&n(a), &n(b));
        assert_wording(&c);
        if c.is_monogenic_generator() {
            prop_assert!(dedekind_everywhere(&f_poly(a, b), &c.discriminant));
            prop_assert!(covers_discriminant(&c));
            for e in &c.prime_evidence {
                prop_assert!(e.certified);
                prop_assert_eq!(e.case, expected_f_case(a, b, &e.p, e.vp_disc));
            }
        }
    }

    #[test]
    fn g_certificates_are_sound(c in -300i64..=300, d in -3000i64..=3000) {
        let cert = check_g(&n(c), &n(d));
        assert_wording(&cert);
        if cert.is_monogenic_generator() {
            prop_assert!(dedekind_everywhere(&g_poly(c, d), &cert.discriminant));
            prop_assert!(covers_discriminant(&cert));
            for e in &cert.prime_evidence {
                prop_assert!(e.certified);
                prop_assert_eq!(e.case, expected_g_case(c, d, &e.p));
            }
        }
    }

    #[test]
    fn monogenic_families_with_divisible_parameters(k in 1i64..200, u in -50i64..50) {
        // p | a and p | b with p^2 ∤ b exercises the Eisenstein shape
        let a = 6 * k;
        let b = 6 * u + 3;
        let c = check_f(&n(a), &n(b));
        if c.is_monogenic_generator() {
            prop_assert!(dedekind_everywhere(&f_poly(a, b), &c.discriminant));
        }
    }

    #[test]
    fn mod9_table_is_the_valuation_condition(a in any::<i64>(), b in any::<i64>()) {
        let (a, b) = (n(a), n(b));
        let residue = |x: &BigInt, m: i64| u32::try_from(x.mod_floor(&n(m))).unwrap();
        prop_assert_eq!(MOD9_PAIRS.contains(&(residue(&a, 9), residue(&b, 9))), condition_three(&a, &b));
        let t: BigInt = &b - &a + n(1);
        let two = !(&t).is_zero() && residue(&a, 2) == 0 && residue(&b, 2) == 1 && valuation(&t, &n(2)) == 1;
        prop_assert_eq!(MOD4_PAIRS.contains(&(residue(&a, 4), residue(&b, 4))), two);
    }
}
