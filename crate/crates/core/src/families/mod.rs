//! Certificates for the quartic families `x^4 + a x + b` and `x^4 + c x^3 + d`,
//! their one-parameter slices `x^4 + b x + b` and `x^4 + x^3 + d`, and the
//! resolvent cubic `y^3 - 4 d y - d`.
//!
//! A certificate checks every hypothesis explicitly, proves irreducibility,
//! and then settles each prime dividing the discriminant: primes with
//! `v_p(disc) = 1` through the classical formula, the rest through a Montes
//! index report. [`Verdict::HypothesesNotMet`] means the theorem does not
//! apply, nothing more.

mod certificate;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub use certificate::{
    CaseTag, Certificate, Check, Family, PrimeEvidence, Verdict, SCHEMA_VERSION,
};

use crate::intpoly::{discriminant, factor_int, rational_roots, valuation, Factorization, IntPoly};
use crate::montes::{dedekind_test, index_report_with, IndexOptions};
use crate::quartic::{
    galois_report, irreducibility, GaloisGroup, GaloisReport, Irreducibility, QuarticShape,
};
use crate::DEFAULT_SEED;

/// `(a, b) mod 4` allowed at `p = 2` for `x^4 + a x + b`, and `(c, d) mod 4`
/// for `x^4 + c x^3 + d` when `4 | 256d - 27c^4`.
pub const MOD4_PAIRS: [(u32, u32); 2] = [(0, 1), (2, 3)];

/// `(a, b) mod 9` allowed at `p = 3` for `x^4 + a x + b`.
pub const MOD9_PAIRS: [(u32, u32); 12] = [
    (1, 3),
    (1, 6),
    (2, 0),
    (2, 3),
    (4, 0),
    (4, 6),
    (5, 0),
    (5, 6),
    (7, 0),
    (7, 3),
    (8, 3),
    (8, 6),
];

const RESIDUAL_SIGN_NOTE: &str = "the side from (0,1) has residual polynomial y + m/p with m the \
constant term, since residual coefficients are (a_i / p^v) mod p; written as y - m/p it differs \
only by sign, and both are linear, hence separable";

const PARITY_NOTE: &str = "256d - 27c^4 is odd when c is odd and divisible by 16 when c is even, \
so v_2 = 1 cannot occur";

/// Produces certificates with a fixed seed for equal-degree splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certifier {
    pub seed: u64,
    /// Also run Dedekind's criterion at every prime handled by Montes.
    pub dedekind_xcheck: bool,
}

impl Default for Certifier {
    fn default() -> Self {
        Certifier { seed: DEFAULT_SEED, dedekind_xcheck: true }
    }
}

pub fn check_f(a: &BigInt, b: &BigInt) -> Certificate {
    Certifier::default().f(a, b)
}

pub fn check_g(c: &BigInt, d: &BigInt) -> Certificate {
    Certifier::default().g(c, d)
}

pub fn check_f_bb(b: &BigInt) -> Certificate {
    Certifier::default().f_bb(b)
}

pub fn check_g_1d(d: &BigInt) -> Certificate {
    Certifier::default().g_1d(d)
}

pub fn check_resolvent_cubic(d: &BigInt) -> Certificate {
    Certifier::default().resolvent_cubic(d)
}

/// A prime that still needs a Montes run, and the case it falls under.
struct Planned {
    p: BigInt,
    case: CaseTag,
}

struct Draft {
    family: Family,
    params: BTreeMap<String, String>,
    poly: IntPoly,
    var: &'static str,
    disc: BigInt,
    disc_fac: Option<Factorization>,
    irreducibility: String,
    irreducible: bool,
    trail: Vec<Check>,
    flags: BTreeMap<String, bool>,
    planned: Vec<Planned>,
    galois: Option<GaloisReport>,
    notes: Vec<String>,
}

impl Draft {
    fn new(family: Family, params: &[(&str, &BigInt)], poly: IntPoly, var: &'static str) -> Self {
        let disc = discriminant(&poly).expect("monic of degree >= 2");
        Draft {
            family,
            params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            poly,
            var,
            disc,
            disc_fac: None,
            irreducibility: String::new(),
            irreducible: false,
            trail: Vec::new(),
            flags: BTreeMap::new(),
            planned: Vec::new(),
            galois: None,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, value: impl Into<String>, passed: bool) {
        self.trail.push(Check::new(name, value, passed));
    }

    fn set_irreducibility(&mut self, irr: &Irreducibility) {
        self.irreducibility = format!("{}: {}", irr.tag(), irr);
        self.irreducible = irr.is_irreducible();
    }
}

fn residue(n: &BigInt, m: u32) -> u32 {
    n.mod_floor(&BigInt::from(m)).to_u32().unwrap()
}

fn valuation_is_one(n: &BigInt, p: u32) -> bool {
    !n.is_zero() && valuation(n, &BigInt::from(p)) == 1
}

fn describe(n: &BigInt, fac: &Factorization) -> String {
    let parts: Vec<String> = fac
        .factors()
        .iter()
        .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect();
    let body = if parts.is_empty() { "1".to_string() } else { parts.join(" * ") };
    format!("{n} = {}{body}", if fac.sign() < 0 { "-" } else { "" })
}

impl Certifier {
    /// `x^4 + a x + b`.
    pub fn f(&self, a: &BigInt, b: &BigInt) -> Certificate {
        let draft = self.f_draft(Family::FAb, a, b, &[("a", a), ("b", b)]);
        self.finish(draft)
    }

    /// `x^4 + b x + b`, with the extra square-free conditions and `b != 3, 5`.
    pub fn f_bb(&self, b: &BigInt) -> Certificate {
        let mut draft = self.f_draft(Family::FBb, b, b, &[("b", b)]);
        if draft.irreducible {
            let shape = QuarticShape::new(BigInt::zero(), BigInt::zero(), b.clone(), b.clone());
            self.restricted_checks(&mut draft, b, &(BigInt::from(256) - BigInt::from(27) * b), "b", "256 - 27b");
            let excluded = *b == BigInt::from(3) || *b == BigInt::from(5);
            draft.check("b not in {3, 5}", b.to_string(), !excluded);
            self.attach_galois(&mut draft, &shape);
        }
        self.finish(draft)
    }

    fn f_draft(&self, family: Family, a: &BigInt, b: &BigInt, params: &[(&str, &BigInt)]) -> Draft {
        let shape = QuarticShape::new(BigInt::zero(), BigInt::zero(), a.clone(), b.clone());
        let mut draft = Draft::new(family, params, shape.to_poly(), "x");
        let b3 = b * b * b;
        let a4 = a * a * a * a;
        let closed = BigInt::from(256) * &b3 - BigInt::from(27) * &a4;
        draft.check("disc = 256b^3 - 27a^4", draft.disc.to_string(), draft.disc == closed);
        draft.flags.insert("b_divides_a".into(), !b.is_zero() && (a % b).is_zero());
        draft.set_irreducibility(&irreducibility(&shape));
        if !draft.irreducible {
            return draft;
        }

        let gstar = (BigInt::from(256) * &b3).gcd(&(BigInt::from(27) * &a4));
        let gstar_fac = factor_int(&gstar).expect("b != 0 for irreducible input");
        draft.check("g* = gcd(256b^3, 27a^4)", describe(&gstar, &gstar_fac), true);
        let ratio = &draft.disc / &gstar;
        let ratio_fac = factor_int(&ratio).expect("nonzero discriminant");
        draft.check(
            "(256b^3 - 27a^4) / g* square-free",
            describe(&ratio, &ratio_fac),
            ratio_fac.is_squarefree(),
        );
        draft.disc_fac = Some(gstar_fac.mul(&ratio_fac));

        let mut case1_used = false;
        for p in gstar_fac.primes() {
            let mut matched = Vec::new();
            if (a % p).is_zero() && (b % p).is_zero() && valuation(b, p) == 1 {
                matched.push(CaseTag::Case1EisensteinShape);
            }
            if *p == BigInt::from(2) && b.is_odd() && MOD4_PAIRS.contains(&(residue(a, 4), residue(b, 4))) {
                matched.push(CaseTag::Case2P2);
            }
            if *p == BigInt::from(3)
                && !(a % 3u32).is_zero()
                && MOD9_PAIRS.contains(&(residue(a, 9), residue(b, 9)))
            {
                matched.push(CaseTag::Case3P3);
            }
            let value = match matched.as_slice() {
                [] => "no condition applies".to_string(),
                [one] => one.tag().to_string(),
                many => format!("{} conditions apply", many.len()),
            };
            draft.check(format!("p = {p} divides g*: exactly one condition"), value, matched.len() == 1);
            if let [case] = matched[..] {
                case1_used |= case == CaseTag::Case1EisensteinShape;
                match case {
                    CaseTag::Case2P2 => {
                        let t: BigInt = b - a + 1;
                        draft.check("v_2(b - a + 1) = 1", t.to_string(), valuation_is_one(&t, 2));
                    }
                    CaseTag::Case3P3 => {
                        let (name, t) = if residue(a, 3) == 1 {
                            ("v_3(b - a + 1) = 1", b - a + 1u32)
                        } else {
                            ("v_3(b + a + 1) = 1", b + a + 1u32)
                        };
                        draft.check(name, t.to_string(), valuation_is_one(&t, 3));
                    }
                    _ => {}
                }
                draft.planned.push(Planned { p: p.clone(), case });
            }
        }
        for p in ratio_fac.primes().filter(|p| gstar_fac.exponent_of(p) == 0) {
            draft.planned.push(Planned { p: p.clone(), case: CaseTag::SqfreeVal1 });
        }
        if case1_used {
            draft.notes.push(RESIDUAL_SIGN_NOTE.into());
        }
        draft
    }

    /// `x^4 + c x^3 + d`.
    pub fn g(&self, c: &BigInt, d: &BigInt) -> Certificate {
        let draft = self.g_draft(Family::GCd, c, d, &[("c", c), ("d", d)]);
        self.finish(draft)
    }

    /// `x^4 + x^3 + d`, with `d` and `256d - 27` square-free and `d != -2`.
    pub fn g_1d(&self, d: &BigInt) -> Certificate {
        let one = BigInt::one();
        let mut draft = self.g_draft(Family::G1d, &one, d, &[("d", d)]);
        if draft.irreducible {
            let shape = QuarticShape::new(one, BigInt::zero(), BigInt::zero(), d.clone());
            self.restricted_checks(&mut draft, d, &(BigInt::from(256) * d - BigInt::from(27)), "d", "256d - 27");
            draft.check("d != -2", d.to_string(), *d != BigInt::from(-2));
            self.attach_galois(&mut draft, &shape);
        }
        self.finish(draft)
    }

    fn g_draft(&self, family: Family, c: &BigInt, d: &BigInt, params: &[(&str, &BigInt)]) -> Draft {
        let shape = QuarticShape::new(c.clone(), BigInt::zero(), BigInt::zero(), d.clone());
        let mut draft = Draft::new(family, params, shape.to_poly(), "x");
        let big_d = BigInt::from(256) * d - BigInt::from(27) * c * c * c * c;
        let closed = d * d * &big_d;
        draft.check("disc = d^2 (256d - 27c^4)", draft.disc.to_string(), draft.disc == closed);
        draft.set_irreducibility(&irreducibility(&shape));
        if !draft.irreducible {
            return draft;
        }

        let d_fac = factor_int(d).expect("d != 0 for irreducible input");
        draft.check("d square-free", describe(d, &d_fac), d_fac.is_squarefree());
        let big_d_fac = factor_int(&big_d).expect("nonzero discriminant");
        draft.check(
            "256d - 27c^4 has no odd square factor",
            describe(&big_d, &big_d_fac),
            big_d_fac.odd_part_squarefree(),
        );
        let v2 = big_d_fac.exponent_of(&BigInt::from(2));
        draft.check("v_2(256d - 27c^4) != 1", format!("v_2 = {v2}; {PARITY_NOTE}"), v2 != 1);
        if v2 >= 2 {
            let pair = (residue(c, 4), residue(d, 4));
            draft.check(
                "4 | 256d - 27c^4, so (c, d) mod 4 in {(0,1), (2,3)}",
                format!("({}, {})", pair.0, pair.1),
                MOD4_PAIRS.contains(&pair),
            );
            let t: BigInt = c + d + 1;
            draft.check("v_2(c + d + 1) = 1", t.to_string(), valuation_is_one(&t, 2));
        }
        draft.disc_fac = Some(d_fac.pow(2).mul(&big_d_fac));

        let mut primes: Vec<BigInt> = d_fac.primes().chain(big_d_fac.primes()).cloned().collect();
        primes.sort();
        primes.dedup();
        let mut case1_used = false;
        for p in primes {
            let case = if (d % &p).is_zero() {
                if (c % &p).is_zero() {
                    case1_used = true;
                    CaseTag::Case1EisensteinShape
                } else {
                    CaseTag::GcdSieve
                }
            } else if p == BigInt::from(2) {
                CaseTag::Case2P2
            } else {
                CaseTag::SqfreeVal1
            };
            draft.planned.push(Planned { p, case });
        }
        if case1_used {
            draft.notes.push(RESIDUAL_SIGN_NOTE.into());
        }
        draft
    }

    /// `y^3 - 4 d y - d`, the resolvent cubic of `x^4 + x^3 + d`, under the same
    /// hypotheses as [`Certifier::g_1d`].
    pub fn resolvent_cubic(&self, d: &BigInt) -> Certificate {
        let poly = IntPoly::new(vec![-d.clone(), BigInt::from(-4) * d, BigInt::zero(), BigInt::one()]);
        let mut draft = Draft::new(Family::ResolventCubic, &[("d", d)], poly, "y");
        let big_d = BigInt::from(256) * d - BigInt::from(27);
        draft.check("disc = d^2 (256d - 27)", draft.disc.to_string(), draft.disc == d * d * &big_d);
        let roots = rational_roots(&draft.poly).expect("nonzero");
        draft.irreducible = roots.is_empty();
        draft.irreducibility = match roots.first() {
            None => "NO_ROOT_NO_SPLIT: a cubic without rational roots is irreducible".into(),
            Some(r) => format!("RATIONAL_ROOT: rational root {r}"),
        };
        if !draft.irreducible {
            return self.finish(draft);
        }
        self.restricted_checks(&mut draft, d, &big_d, "d", "256d - 27");
        draft.check("d != -2", d.to_string(), *d != BigInt::from(-2));
        if let Some(fac) = &draft.disc_fac {
            for (p, e) in fac.factors() {
                let case = if (d % p).is_zero() {
                    CaseTag::Case1EisensteinShape
                } else if *e == 1 {
                    CaseTag::SqfreeVal1
                } else {
                    CaseTag::DedekindXcheck
                };
                draft.planned.push(Planned { p: p.clone(), case });
            }
        }
        self.finish(draft)
    }

    /// Square-freeness of `m` and `n`; fills in the discriminant factorization
    /// `m^2 n` when none is recorded yet.
    fn restricted_checks(&self, draft: &mut Draft, m: &BigInt, n: &BigInt, m_name: &str, n_name: &str) {
        let facs = [m, n].map(|v| if v.is_zero() { None } else { factor_int(v).ok() });
        for ((v, name), fac) in [(m, m_name), (n, n_name)].into_iter().zip(&facs) {
            match fac {
                Some(fac) => draft.check(format!("{name} square-free"), describe(v, fac), fac.is_squarefree()),
                None => draft.check(format!("{name} square-free"), "0", false),
            }
        }
        if draft.disc_fac.is_none() {
            if let [Some(fm), Some(fn_)] = &facs {
                draft.disc_fac = Some(fm.pow(2).mul(fn_));
            }
        }
    }

    fn attach_galois(&self, draft: &mut Draft, shape: &QuarticShape) {
        let report = galois_report(shape, irreducibility(shape));
        draft.check("Galois group is S4", report.group.to_string(), report.group == GaloisGroup::S4);
        draft.galois = Some(report);
    }

    fn finish(&self, draft: Draft) -> Certificate {
        let hypotheses = draft.trail.iter().all(|c| c.passed);
        let mut evidence = Vec::new();
        let verdict = if !draft.irreducible {
            Verdict::NotIrreducible
        } else if !hypotheses {
            Verdict::HypothesesNotMet
        } else {
            let mut all = true;
            for planned in &draft.planned {
                let e = self.evidence(&draft, planned);
                all &= e.certified && e.dedekind_agrees != Some(false);
                evidence.push(e);
            }
            if all {
                Verdict::MonogenicGenerator
            } else {
                Verdict::HypothesesNotMet
            }
        };
        let statement = match verdict {
            Verdict::MonogenicGenerator => {
                "v_p(index) = 0 at every prime dividing the discriminant, so a root generates \
                 the ring of integers of its field"
            }
            Verdict::HypothesesNotMet => {
                "theorem inapplicable: a hypothesis fails, and no claim about the index is made"
            }
            Verdict::NotIrreducible => "theorem inapplicable: the polynomial is reducible over Q",
        };
        Certificate {
            schema_version: SCHEMA_VERSION,
            family: draft.family,
            params: draft.params,
            polynomial: draft.poly.display_with(draft.var),
            verdict,
            statement: statement.into(),
            discriminant: draft.disc,
            discriminant_factorization: draft.disc_fac,
            irreducibility: draft.irreducibility,
            hypothesis_trail: draft.trail,
            flags: draft.flags,
            prime_evidence: evidence,
            galois: draft.galois,
            rng_seed: self.seed,
            deviation_notes: draft.notes,
        }
    }

    fn evidence(&self, draft: &Draft, planned: &Planned) -> PrimeEvidence {
        let p = &planned.p;
        let vp_disc = valuation(&draft.disc, p);
        if planned.case == CaseTag::SqfreeVal1 {
            return PrimeEvidence {
                p: p.clone(),
                case: planned.case,
                vp_disc,
                index_report: None,
                dedekind_agrees: None,
                certified: vp_disc == 1,
            };
        }
        let options = IndexOptions { seed: self.seed, shortcuts: true };
        let report = index_report_with(&draft.poly, p, options).expect("monic input, prime p");
        let certified = report.exact && report.lower_bound == 0;
        let dedekind_agrees = (self.dedekind_xcheck || planned.case == CaseTag::DedekindXcheck)
            .then(|| dedekind_test(&draft.poly, p).expect("monic input, prime p") == certified);
        PrimeEvidence {
            p: p.clone(),
            case: planned.case,
            vp_disc,
            index_report: Some(report),
            dedekind_agrees,
            certified,
        }
    }
}

/// Whether `(a, b) mod 9` satisfies the `p = 3` condition, derived from the
/// developments along `x + 1` and `x - 1` instead of the table.
pub fn mod9_condition_by_valuation(a: i64, b: i64) -> bool {
    if a.rem_euclid(3) == 0 || b.rem_euclid(3) != 0 {
        return false;
    }
    let t = if a.rem_euclid(3) == 1 { b - a + 1 } else { b + a + 1 };
    t.rem_euclid(3) == 0 && t.rem_euclid(9) != 0
}

/// `v_2(b - a + 1) = 1` with `a` even, `b` odd; the `p = 2` condition for
/// `x^4 + a x + b` without the table.
pub fn mod4_condition_by_valuation(a: i64, b: i64) -> bool {
    a.rem_euclid(2) == 0 && b.rem_euclid(2) == 1 && (b - a + 1).rem_euclid(4) == 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn f_examples() {
        let c = check_f(&n(2), &n(2));
        assert_eq!(c.verdict, Verdict::MonogenicGenerator, "{}", c.to_human());
        let c = check_f(&n(1), &n(3));
        assert_eq!(c.verdict, Verdict::MonogenicGenerator, "{}", c.to_human());
        let p3 = c.prime_evidence.iter().find(|e| e.p == n(3)).unwrap();
        assert_eq!(p3.case, CaseTag::Case3P3);
        let c = check_f(&n(2), &n(4));
        assert_eq!(c.verdict, Verdict::HypothesesNotMet);
        assert!(c.statement.contains("theorem inapplicable"));
        assert!(c.prime_evidence.is_empty());
    }

    #[test]
    fn g_examples() {
        assert_eq!(check_g(&n(1), &n(1)).verdict, Verdict::MonogenicGenerator);
        let c = check_g(&n(2), &n(3));
        assert_eq!(c.verdict, Verdict::MonogenicGenerator, "{}", c.to_human());
        assert!(c.prime_evidence.iter().any(|e| e.case == CaseTag::Case2P2));
        assert_eq!(check_g(&n(1), &n(-2)).verdict, Verdict::NotIrreducible);
    }

    #[test]
    fn restricted_examples() {
        let c = check_f_bb(&n(2));
        assert_eq!(c.verdict, Verdict::MonogenicGenerator);
        assert_eq!(c.galois.as_ref().unwrap().group, GaloisGroup::S4);
        let c = check_f_bb(&n(3));
        assert_eq!(c.verdict, Verdict::HypothesesNotMet);
        assert_eq!(c.galois.as_ref().unwrap().group, GaloisGroup::D8OrC4);
        let c = check_g_1d(&n(1));
        assert_eq!(c.verdict, Verdict::MonogenicGenerator);
        assert_eq!(c.galois.as_ref().unwrap().group, GaloisGroup::S4);
    }

    #[test]
    fn resolvent_cubic_examples() {
        let c = check_resolvent_cubic(&n(1));
        assert_eq!(c.verdict, Verdict::MonogenicGenerator);
        assert!(c.prime_evidence.iter().all(|e| e.case == CaseTag::SqfreeVal1));
        let c = check_resolvent_cubic(&n(2));
        assert_eq!(c.verdict, Verdict::MonogenicGenerator, "{}", c.to_human());
        assert_eq!(c.discriminant, n(4 * 485));
        let two = c.prime_evidence.iter().find(|e| e.p == n(2)).unwrap();
        assert!(two.index_report.is_some() && two.dedekind_agrees == Some(true));
        let c = check_resolvent_cubic(&n(-2));
        assert_eq!(c.verdict, Verdict::HypothesesNotMet);
        assert!(c.hypothesis_trail.iter().any(|t| t.name == "d != -2" && !t.passed));
    }

    #[test]
    fn mod9_table_matches_valuations() {
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(
                    MOD9_PAIRS.contains(&(a as u32, b as u32)),
                    mod9_condition_by_valuation(a, b),
                    "({a}, {b})"
                );
            }
        }
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(MOD4_PAIRS.contains(&(a as u32, b as u32)), mod4_condition_by_valuation(a, b));
            }
        }
    }

    #[test]
    fn json_is_canonical() {
        let c = check_f(&n(2), &n(2));
        let text = c.to_json();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["verdict"], "MONOGENIC_GENERATOR");
        assert_eq!(v["params"]["a"], "2");
        assert_eq!(v["schema_version"], 1);
        assert_eq!(text, check_f(&n(2), &n(2)).to_json());
    }
}
