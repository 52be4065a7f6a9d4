//! Segmented square-free sieves and density experiments for the slices
//! `x^4 + b x + b` and `x^4 + x^3 + d`.
//!
//! A parameter `t` is sieved through linear forms `alpha t + beta`: for each
//! prime `p` the multiples of `p^2` form one residue class modulo `p^2 / g`
//! with `g = gcd(alpha, p^2)`, so every segment costs one pass per prime.

mod sieve;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{Certifier, Verdict};
use crate::intpoly::{factor_int, IntPoly, Rational};
use crate::montes::dedekind_test;
use crate::quartic::{irreducibility, QuarticShape};

pub use sieve::{squarefree_sieve, LinearForm, SieveRange, DEFAULT_SEGMENT};

/// Density of square-free integers, `6 / pi^2`.
pub fn squarefree_density() -> f64 {
    6.0 / std::f64::consts::PI.powi(2)
}

/// Named reference values the experiments are compared against.
pub fn targets() -> BTreeMap<&'static str, Target> {
    let pi2 = std::f64::consts::PI.powi(2);
    [
        ("squarefree", "6/pi^2", 6.0 / pi2),
        ("f_pair_lower_bound", "(51 - 4 pi^2) / (4 pi^2)", (51.0 - 4.0 * pi2) / (4.0 * pi2)),
        ("g_pair_lower_bound", "(14 - pi^2) / pi^2", (14.0 - pi2) / pi2),
        ("squarefree_mod_27", "27 / (4 pi^2)", 27.0 / (4.0 * pi2)),
        ("squarefree_mod_256", "8 / pi^2", 8.0 / pi2),
        ("theta_generates_heuristic", "0.553", 0.553),
    ]
    .into_iter()
    .map(|(name, formula, value)| (name, Target { formula, value }))
    .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Target {
    pub formula: &'static str,
    #[serde(serialize_with = "f64_as_decimal")]
    pub value: f64,
}

/// `x` with 15 significant digits.
pub fn decimal15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.14}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let places = (14 - magnitude).max(0) as usize;
    format!("{x:.places$}")
}

fn f64_as_decimal<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&decimal15(*x))
}

/// An exact ratio `count / total`, serialized as a reduced fraction and a
/// 15-digit decimal for display.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Density {
    pub count: u64,
    pub total: u64,
}

impl Density {
    pub fn new(count: u64, total: u64) -> Self {
        Density { count, total }
    }

    pub fn exact(&self) -> Option<Rational> {
        (self.total > 0).then(|| Rational::new(self.count.into(), self.total.into()))
    }

    pub fn to_f64(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.count as f64 / self.total as f64
        }
    }
}

impl Serialize for Density {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Density", 2)?;
        let exact = self.exact().map_or_else(|| "undefined".to_string(), |r| r.to_string());
        st.serialize_field("exact", &exact)?;
        st.serialize_field("decimal", &decimal15(self.to_f64()))?;
        st.end()
    }
}

/// The one-parameter slice a scan runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// `x^4 + b x + b`, discriminant `b^3 (256 - 27 b)`.
    FBb,
    /// `x^4 + x^3 + d`, discriminant `d^2 (256 d - 27)`.
    G1d,
}

impl Slice {
    pub fn tag(self) -> &'static str {
        match self {
            Slice::FBb => "f",
            Slice::G1d => "g",
        }
    }

    pub fn parameter(self) -> &'static str {
        match self {
            Slice::FBb => "b",
            Slice::G1d => "d",
        }
    }

    /// The second linear form that must be square-free alongside the parameter.
    pub fn companion(self) -> LinearForm {
        match self {
            Slice::FBb => LinearForm::new(-27, 256),
            Slice::G1d => LinearForm::new(256, -27),
        }
    }

    fn parameter_power(self) -> u32 {
        match self {
            Slice::FBb => 3,
            Slice::G1d => 2,
        }
    }

    pub fn shape(self, t: i64) -> QuarticShape {
        let t = BigInt::from(t);
        match self {
            Slice::FBb => QuarticShape::new(0.into(), 0.into(), t.clone(), t),
            Slice::G1d => QuarticShape::new(1.into(), 0.into(), 0.into(), t),
        }
    }

    pub fn polynomial(self, t: i64) -> IntPoly {
        self.shape(t).to_poly()
    }

    fn pair_target(self) -> &'static str {
        match self {
            Slice::FBb => "f_pair_lower_bound",
            Slice::G1d => "g_pair_lower_bound",
        }
    }
}

impl std::str::FromStr for Slice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" | "fbb" | "f_bb" => Ok(Slice::FBb),
            "g" | "g1d" | "g_1d" => Ok(Slice::G1d),
            _ => Err(Error::Invalid(format!("unknown family {s:?}; expected f or g"))),
        }
    }
}

/// Whether `theta` generates the ring of integers: Dedekind's criterion at
/// every prime whose square divides the discriminant. `None` when the
/// polynomial is reducible.
pub fn theta_generates(slice: Slice, t: i64) -> Option<bool> {
    let shape = slice.shape(t);
    if !irreducibility(&shape).is_irreducible() {
        return None;
    }
    let poly = shape.to_poly();
    let param = factor_int(&BigInt::from(t)).ok()?;
    let companion = factor_int(&BigInt::from(slice.companion().eval(t))).ok()?;
    let disc = param.pow(slice.parameter_power()).mul(&companion);
    Some(
        disc.factors()
            .iter()
            .filter(|(_, e)| *e >= 2)
            .all(|(p, _)| dedekind_test(&poly, p).expect("monic input, prime p")),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DensityOptions {
    pub segment_size: u64,
    /// Run the family certificate on every candidate parameter.
    pub certify: bool,
    /// Run the Dedekind scan on every irreducible parameter.
    pub theta: bool,
    pub seed: u64,
}

impl Default for DensityOptions {
    fn default() -> Self {
        DensityOptions { segment_size: DEFAULT_SEGMENT, certify: false, theta: false, seed: crate::DEFAULT_SEED }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DensityCounts {
    pub total: u64,
    /// The parameter itself is square-free.
    pub param_squarefree: u64,
    /// The parameter and its companion form are both square-free.
    pub pair_squarefree: u64,
    pub certified_monogenic: Option<u64>,
    pub irreducible: Option<u64>,
    pub reducible: Option<u64>,
    pub theta_generates: Option<u64>,
}

fn add_opt(a: Option<u64>, b: Option<u64>) -> Option<u64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x + y),
        (x, None) | (None, x) => x,
    }
}

impl std::ops::Add for DensityCounts {
    type Output = DensityCounts;
    fn add(self, o: DensityCounts) -> DensityCounts {
        DensityCounts {
            total: self.total + o.total,
            param_squarefree: self.param_squarefree + o.param_squarefree,
            pair_squarefree: self.pair_squarefree + o.pair_squarefree,
            certified_monogenic: add_opt(self.certified_monogenic, o.certified_monogenic),
            irreducible: add_opt(self.irreducible, o.irreducible),
            reducible: add_opt(self.reducible, o.reducible),
            theta_generates: add_opt(self.theta_generates, o.theta_generates),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub schema_version: u32,
    pub family: &'static str,
    pub parameter: &'static str,
    pub companion: String,
    /// Inclusive bounds of the parameter range.
    pub first: i64,
    pub last: i64,
    pub counts: DensityCounts,
    pub densities: BTreeMap<&'static str, Density>,
    pub targets: BTreeMap<&'static str, Target>,
    pub seed: u64,
    /// Wall-clock time; left out of serialized output so reruns are byte-identical.
    #[serde(skip)]
    pub runtime: Duration,
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

impl DensityReport {
    fn new(slice: Slice, range: &SieveRange, counts: DensityCounts, seed: u64, runtime: Duration) -> Self {
        let mut densities = BTreeMap::new();
        densities.insert("param_squarefree", Density::new(counts.param_squarefree, counts.total));
        densities.insert("pair_squarefree", Density::new(counts.pair_squarefree, counts.total));
        if let Some(c) = counts.certified_monogenic {
            densities.insert("certified_monogenic", Density::new(c, counts.total));
        }
        if let (Some(t), Some(irr)) = (counts.theta_generates, counts.irreducible) {
            densities.insert("theta_generates", Density::new(t, irr));
        }
        let all = targets();
        let mut chosen = BTreeMap::new();
        for key in ["squarefree", slice.pair_target(), "theta_generates_heuristic"] {
            chosen.insert(key, all[key]);
        }
        DensityReport {
            schema_version: REPORT_SCHEMA_VERSION,
            family: slice.tag(),
            parameter: slice.parameter(),
            companion: slice.companion().display_with(slice.parameter()),
            first: range.lo(),
            last: range.hi() - 1,
            counts,
            densities,
            targets: chosen,
            seed,
            runtime,
        }
    }

    pub fn density(&self, key: &str) -> Option<Density> {
        self.densities.get(key).copied()
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    /// One header line and one data row.
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        let dens = |k: &str| self.density(k).map(|d| decimal15(d.to_f64())).unwrap_or_default();
        let row = [
            self.family.to_string(),
            self.first.to_string(),
            self.last.to_string(),
            self.counts.total.to_string(),
            self.counts.param_squarefree.to_string(),
            self.counts.pair_squarefree.to_string(),
            opt(self.counts.certified_monogenic),
            opt(self.counts.irreducible),
            opt(self.counts.theta_generates),
            dens("param_squarefree"),
            dens("pair_squarefree"),
            dens("certified_monogenic"),
            dens("theta_generates"),
            decimal15(self.targets["squarefree"].value),
            decimal15(self.targets[Slice::from_tag(self.family).pair_target()].value),
            decimal15(self.targets["theta_generates_heuristic"].value),
        ];
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        w.write_record(&row).expect("in-memory write");
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let p = self.parameter;
        let _ = writeln!(out, "family {} over {p} in [{}, {}] ({} values)", self.family, self.first, self.last, self.counts.total);
        for (k, d) in &self.densities {
            let _ = writeln!(out, "  {k:<20} {:>10} / {:<10} = {}", d.count, d.total, decimal15(d.to_f64()));
        }
        if let Some(r) = self.counts.reducible {
            let _ = writeln!(out, "  reducible            {r}");
        }
        for (k, t) in &self.targets {
            let _ = writeln!(out, "  target {k:<26} {} = {}", t.formula, decimal15(t.value));
        }
        out
    }
}

const CSV_HEADER: [&str; 16] = [
    "family",
    "first",
    "last",
    "total",
    "param_squarefree",
    "pair_squarefree",
    "certified_monogenic",
    "irreducible",
    "theta_generates",
    "density_param_squarefree",
    "density_pair_squarefree",
    "density_certified_monogenic",
    "density_theta_generates",
    "target_squarefree",
    "target_pair_lower_bound",
    "target_theta_generates",
];

impl Slice {
    fn from_tag(tag: &str) -> Slice {
        if tag == "f" {
            Slice::FBb
        } else {
            Slice::G1d
        }
    }
}

/// Square-free counts for the parameter and its companion form, with optional
/// certificate and Dedekind scans, over `range`.
pub fn family_density(slice: Slice, range: &SieveRange, opts: &DensityOptions) -> DensityReport {
    let start = std::time::Instant::now();
    let param = LinearForm::new(1, 0);
    let companion = slice.companion();
    let primes = sieve::primes_for(range, &[param, companion]);
    let certifier = Certifier { seed: opts.seed, dedekind_xcheck: true };
    let counts = range
        .segments(opts.segment_size)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|seg| {
            let a = sieve::sieve_segment(param, &seg, &primes);
            let b = sieve::sieve_segment(companion, &seg, &primes);
            let mut c = DensityCounts {
                certified_monogenic: opts.certify.then_some(0),
                irreducible: opts.theta.then_some(0),
                reducible: opts.theta.then_some(0),
                theta_generates: opts.theta.then_some(0),
                ..DensityCounts::default()
            };
            for (i, t) in seg.iter().enumerate() {
                c.total += 1;
                c.param_squarefree += a[i] as u64;
                let pair = a[i] && b[i];
                c.pair_squarefree += pair as u64;
                if let (true, Some(n)) = (pair, c.certified_monogenic.as_mut()) {
                    let t = BigInt::from(t);
                    let cert = match slice {
                        Slice::FBb => certifier.f_bb(&t),
                        Slice::G1d => certifier.g_1d(&t),
                    };
                    *n += (cert.verdict == Verdict::MonogenicGenerator) as u64;
                }
                if opts.theta {
                    match theta_generates(slice, t) {
                        None => *c.reducible.as_mut().unwrap() += 1,
                        Some(ok) => {
                            *c.irreducible.as_mut().unwrap() += 1;
                            *c.theta_generates.as_mut().unwrap() += ok as u64;
                        }
                    }
                }
            }
            c
        })
        .reduce(DensityCounts::default, |x, y| x + y);
    DensityReport::new(slice, range, counts, opts.seed, start.elapsed())
}

pub fn family_density_f(range: &SieveRange, opts: &DensityOptions) -> DensityReport {
    family_density(Slice::FBb, range, opts)
}

pub fn family_density_g(range: &SieveRange, opts: &DensityOptions) -> DensityReport {
    family_density(Slice::G1d, range, opts)
}

/// The Dedekind scan: fraction of irreducible members whose root generates
/// the ring of integers. Reducible members are counted separately.
pub fn theta_generates_scan(slice: Slice, range: &SieveRange, seed: u64) -> DensityReport {
    let opts = DensityOptions { theta: true, seed, ..DensityOptions::default() };
    family_density(slice, range, &opts)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PracharReport {
    pub m: u64,
    pub k: u64,
    pub x: u64,
    pub density: Density,
    #[serde(serialize_with = "f64_as_decimal")]
    pub target: f64,
}

impl PracharReport {
    pub fn to_human(&self) -> String {
        format!(
            "n = {} (mod {}), 1 <= n <= {}: {} / {} square-free = {}, target {}\n",
            self.m,
            self.k,
            self.x,
            self.density.count,
            self.density.total,
            decimal15(self.density.to_f64()),
            decimal15(self.target)
        )
    }
}

/// `(6 / pi^2) prod_{p | k} (1 - 1/p^2)^{-1}`, the density of square-free
/// integers in a class coprime to `k`.
pub fn prachar_target(k: u64) -> f64 {
    let fac = factor_int(&BigInt::from(k.max(1))).expect("k >= 1");
    fac.primes().fold(squarefree_density(), |acc, p| {
        let p: f64 = p.to_string().parse().unwrap();
        acc / (1.0 - 1.0 / (p * p))
    })
}

/// Square-free density among `1 <= n <= x` with `n = m (mod k)`.
pub fn prachar_check(m: u64, k: u64, x: u64) -> Result<PracharReport> {
    if k == 0 {
        return Err(Error::ZeroInteger);
    }
    let g = m.gcd(&k);
    if g != 1 {
        return Err(Error::NotCoprime { m: m as i64, k: k as i64, gcd: g as i64 });
    }
    let residue = m % k;
    // n = k t + residue with t >= 0 and n >= 1.
    let t_lo = if residue == 0 { 1 } else { 0 };
    let t_hi = if x < residue { 0 } else { (x - residue) / k + 1 };
    let form = LinearForm::new(k as i64, residue as i64);
    let count = if t_hi > t_lo {
        let range = SieveRange::new(t_lo as i64, t_hi as i64)?;
        sieve::count_squarefree(form, &range, DEFAULT_SEGMENT)
    } else {
        0
    };
    let total = t_hi.saturating_sub(t_lo);
    Ok(PracharReport { m, k, x, density: Density::new(count, total), target: prachar_target(k) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn range(lo: i64, hi: i64) -> SieveRange {
        SieveRange::new(lo, hi).unwrap()
    }

    #[test]
    fn pair_examples() {
        let r = family_density_f(&range(2, 4), &DensityOptions::default());
        assert_eq!(r.counts.total, 2);
        assert_eq!(r.counts.pair_squarefree, 1);
        let r = family_density_g(&range(1, 2), &DensityOptions::default());
        assert_eq!(r.counts.pair_squarefree, 1);
    }

    #[test]
    fn prachar_targets() {
        let pi2 = std::f64::consts::PI.powi(2);
        assert!((prachar_target(27) - 27.0 / (4.0 * pi2)).abs() < 1e-12);
        assert!((prachar_target(256) - 8.0 / pi2).abs() < 1e-12);
        assert!((prachar_target(256) - 0.81057).abs() < 1e-5);
        assert_eq!(prachar_target(1), squarefree_density());
        assert!(matches!(prachar_check(3, 27, 100), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn prachar_small_matches_naive() {
        let r = prachar_check(13, 27, 10_000).unwrap();
        let naive: Vec<u64> = (1..=10_000u64).filter(|n| n % 27 == 13).collect();
        let sf = naive.iter().filter(|&&n| (2..=100u64).all(|q| n % (q * q) != 0)).count();
        assert_eq!(r.density, Density::new(sf as u64, naive.len() as u64));
        let r = prachar_check(1, 1, 100).unwrap();
        assert_eq!(r.density, Density::new(61, 100));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_generates(Slice::FBb, 2), Some(true));
        assert_eq!(theta_generates(Slice::FBb, 0), None);
        assert_eq!(theta_generates(Slice::FBb, 16), None);
        assert_eq!(theta_generates(Slice::G1d, 1), Some(true));
        assert_eq!(theta_generates(Slice::G1d, 0), None);
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal15(0.5), "0.500000000000000");
        assert_eq!(decimal15(0.0123), "0.0123000000000000");
        assert_eq!(decimal15(12.5), "12.5000000000000");
    }

    #[test]
    fn report_formats() {
        let opts = DensityOptions { certify: true, theta: true, ..DensityOptions::default() };
        let r = family_density_g(&range(1, 101), &opts);
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.starts_with("family,first,last,total"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["last"], 100);
        assert!(json.get("runtime").is_none());
        assert!(r.counts.certified_monogenic.unwrap() <= r.counts.pair_squarefree);
    }
}
