use std::collections::BTreeMap;
use std::fmt::{self, Write};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::intpoly::{bigint_as_string, Factorization};
use crate::montes::IndexReport;
use crate::quartic::GaloisReport;

/// Bumped whenever a field is renamed or its meaning changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `x^4 + a x + b`
    FAb,
    /// `x^4 + c x^3 + d`
    GCd,
    /// `x^4 + b x + b`
    FBb,
    /// `x^4 + x^3 + d`
    G1d,
    /// `y^3 - 4 d y - d`
    ResolventCubic,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::FAb => "F_AB",
            Family::GCd => "G_CD",
            Family::FBb => "F_BB",
            Family::G1d => "G_1D",
            Family::ResolventCubic => "RESOLVENT_CUBIC",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    MonogenicGenerator,
    HypothesesNotMet,
    NotIrreducible,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::MonogenicGenerator => "MONOGENIC_GENERATOR",
            Verdict::HypothesesNotMet => "HYPOTHESES_NOT_MET",
            Verdict::NotIrreducible => "NOT_IRREDUCIBLE",
        }
    }
}

/// How a prime dividing the discriminant was handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `v_p(disc) = 1`, so the classical formula forces `v_p(index) = 0`.
    SqfreeVal1,
    /// Reduction `x^n`; a single side from `(0,1)` to `(n,0)`.
    Case1EisensteinShape,
    /// `p = 2` with reduction `(x+1)^4`.
    Case2P2,
    /// `p = 3` with reduction `x (x -/+ 1)^3`.
    Case3P3,
    /// `p | d`, `p ∤ c`: reduction `x^3 (x + c)`.
    GcdSieve,
    /// Generic Montes run confirmed by Dedekind's criterion.
    DedekindXcheck,
}

impl CaseTag {
    pub fn tag(self) -> &'static str {
        match self {
            CaseTag::SqfreeVal1 => "SQFREE_VAL_1",
            CaseTag::Case1EisensteinShape => "CASE1_EISENSTEIN_SHAPE",
            CaseTag::Case2P2 => "CASE2_P2",
            CaseTag::Case3P3 => "CASE3_P3",
            CaseTag::GcdSieve => "GCD_SIEVE",
            CaseTag::DedekindXcheck => "DEDEKIND_XCHECK",
        }
    }
}

macro_rules! serialize_as_tag {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(self.tag())
            }
        }
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.tag())
            }
        }
    )*};
}
serialize_as_tag!(Family, Verdict, CaseTag);

/// One named hypothesis with the value it was evaluated on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: String,
    pub passed: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, value: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), value: value.into(), passed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeEvidence {
    #[serde(serialize_with = "bigint_as_string")]
    pub p: BigInt,
    pub case: CaseTag,
    pub vp_disc: u64,
    /// `None` for primes settled by the classical formula alone.
    pub index_report: Option<IndexReport>,
    /// Dedekind's criterion evaluated independently; `None` when not run.
    pub dedekind_agrees: Option<bool>,
    /// `v_p(index) = 0` is established.
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub family: Family,
    /// Parameter names and decimal values.
    pub params: BTreeMap<String, String>,
    pub polynomial: String,
    pub verdict: Verdict,
    pub statement: String,
    #[serde(serialize_with = "bigint_as_string")]
    pub discriminant: BigInt,
    pub discriminant_factorization: Option<Factorization>,
    pub irreducibility: String,
    pub hypothesis_trail: Vec<Check>,
    /// Facts recorded for the reader that are not hypotheses.
    pub flags: BTreeMap<String, bool>,
    pub prime_evidence: Vec<PrimeEvidence>,
    pub galois: Option<GaloisReport>,
    pub rng_seed: u64,
    pub deviation_notes: Vec<String>,
}

impl Certificate {
    pub fn is_monogenic_generator(&self) -> bool {
        self.verdict == Verdict::MonogenicGenerator
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypothesis_trail.iter().all(|c| c.passed)
    }

    /// Canonical JSON: object keys sorted, two-space indentation.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("certificate serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificate serializes")
    }

    /// Plain-text rendering for terminals.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        let _ = writeln!(out, "family      {} ({})", self.family, params.join(", "));
        let _ = writeln!(out, "polynomial  {}", self.polynomial);
        let _ = writeln!(out, "verdict     {}", self.verdict);
        let _ = writeln!(out, "            {}", self.statement);
        let _ = writeln!(out, "disc        {}", self.discriminant);
        let _ = writeln!(out, "irreducible {}", self.irreducibility);
        if let Some(g) = &self.galois {
            let _ = writeln!(out, "galois      {} (disc square: {}, resolvent {} {})",
                g.group,
                g.disc_is_square,
                g.resolvent.display_with("y"),
                if g.resolvent_irreducible { "irreducible" } else { "reducible" });
        }
        out.push_str("hypotheses\n");
        for c in &self.hypothesis_trail {
            let _ = writeln!(out, "  [{}] {}: {}", if c.passed { "ok" } else { "no" }, c.name, c.value);
        }
        if !self.prime_evidence.is_empty() {
            out.push_str("primes\n");
        }
        for e in &self.prime_evidence {
            let _ = write!(out, "  p = {}: {} v_p(disc) = {}", e.p, e.case, e.vp_disc);
            if let Some(r) = &e.index_report {
                let _ = write!(out, ", ind = {}, exact = {}", r.lower_bound, r.exact);
            }
            if let Some(d) = e.dedekind_agrees {
                let _ = write!(out, ", dedekind {}", if d { "agrees" } else { "DISAGREES" });
            }
            out.push('\n');
        }
        for n in &self.deviation_notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "seed        {}", self.rng_seed);
        out
    }
}
