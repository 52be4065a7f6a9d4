use num_bigint::BigInt;
use serde::Serialize;

use super::development::phi_development;
use super::polygon::{ind_phi, newton_polygon, PolygonShape};
use crate::error::{Error, Result};
use crate::intpoly::{bigint_as_string, check_prime, discriminant, valuation, IntPoly};
use crate::modpoly::{
    factor_modp_seeded, lift, reduce, with_prime_field, FieldVisitor, PrimeField,
};
use crate::DEFAULT_SEED;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexOptions {
    /// Seed for equal-degree splitting.
    pub seed: u64,
    /// Skip polygons when `f mod p` is square-free, and for simple factors.
    /// Turning this off builds every polygon.
    pub shortcuts: bool,
}

impl Default for IndexOptions {
    fn default() -> Self {
        IndexOptions { seed: DEFAULT_SEED, shortcuts: true }
    }
}

/// The polygon of one factor, with residual coefficients lifted to `Z[x]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonSummary {
    pub shape: PolygonShape,
    pub residuals: Vec<Vec<IntPoly>>,
    pub residual_separable: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    /// Canonical lift of the irreducible factor.
    pub phi: IntPoly,
    pub multiplicity: u32,
    /// Lattice points under the principal polygon.
    pub lattice_count: u64,
    /// `deg phi * lattice_count`.
    pub ind: u64,
    pub separable: bool,
    /// `None` when the factor was handled as a simple factor.
    pub polygon: Option<PolygonSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    #[serde(serialize_with = "bigint_as_string")]
    pub p: BigInt,
    pub seed: u64,
    /// `f mod p` had no repeated factor and no polygon was built.
    pub squarefree_reduction: bool,
    pub entries: Vec<FactorEntry>,
    /// Sum of the `ind` values; a lower bound for `v_p` of the index.
    pub lower_bound: u64,
    /// Every residual polynomial was separable, so `lower_bound` is `v_p` of
    /// the index.
    pub exact: bool,
}

impl IndexReport {
    /// `v_p([O_K : Z[theta]])` when known.
    pub fn index_valuation(&self) -> Option<u64> {
        self.exact.then_some(self.lower_bound)
    }
}

pub fn index_report(f: &IntPoly, p: &BigInt) -> Result<IndexReport> {
    index_report_with(f, p, IndexOptions::default())
}

/// One-step Montes: factor `f mod p`, develop `f` along each repeated factor,
/// and sum the polygon indices. `f` should be irreducible over `Q`; that is
/// the caller's responsibility.
pub fn index_report_with(f: &IntPoly, p: &BigInt, options: IndexOptions) -> Result<IndexReport> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree().unwrap_or(0);
    if n < 1 {
        return Err(Error::DegreeTooSmall { expected: 1, actual: n });
    }
    check_prime(p)?;
    struct Visit<'a>(&'a IntPoly, IndexOptions);
    impl FieldVisitor for Visit<'_> {
        type Output = IndexReport;
        fn visit<F: PrimeField + Send + Sync>(self, field: F) -> IndexReport
        where
            F::Elem: Send + Sync,
        {
            index_report_over(self.0, &field, self.1)
        }
    }
    Ok(with_prime_field(p, Visit(f, options)))
}

/// [`index_report_with`] over an explicit field; `f` must be monic.
pub fn index_report_over<F: PrimeField>(f: &IntPoly, field: &F, options: IndexOptions) -> IndexReport {
    let p = field.characteristic();
    let fbar = reduce(f, field);
    let mut report = IndexReport {
        p,
        seed: options.seed,
        squarefree_reduction: false,
        entries: Vec::new(),
        lower_bound: 0,
        exact: true,
    };
    if options.shortcuts && fbar.is_separable() {
        report.squarefree_reduction = true;
        return report;
    }
    for (g, multiplicity) in factor_modp_seeded(&fbar, options.seed) {
        let phi = lift(&g);
        if options.shortcuts && multiplicity == 1 {
            report.entries.push(FactorEntry {
                phi,
                multiplicity,
                lattice_count: 0,
                ind: 0,
                separable: true,
                polygon: None,
            });
            continue;
        }
        let dev = phi_development(f, &phi).expect("lifts are monic");
        let polygon = newton_polygon(&dev, field);
        let lattice_count = ind_phi(polygon.shape());
        let residual_separable: Vec<bool> =
            polygon.residuals().iter().map(|r| r.is_separable()).collect();
        let separable = residual_separable.iter().all(|&s| s);
        let ind = phi.degree().unwrap() as u64 * lattice_count;
        report.lower_bound += ind;
        report.exact &= separable;
        report.entries.push(FactorEntry {
            phi,
            multiplicity,
            lattice_count,
            ind,
            separable,
            polygon: Some(PolygonSummary {
                residuals: polygon.residual_lifts(),
                shape: polygon.shape().clone(),
                residual_separable,
            }),
        });
    }
    report
}

/// `v_p(disc K) = v_p(disc f) - 2 v_p(index)`; `None` when the index is not
/// known or the data are inconsistent.
pub fn disc_valuation_from_index(vp_disc: u64, vp_index: u64) -> Option<u64> {
    vp_disc.checked_sub(2 * vp_index)
}

pub fn field_disc_valuation(vp_disc: u64, report: &IndexReport) -> Option<u64> {
    disc_valuation_from_index(vp_disc, report.index_valuation()?)
}

/// `v_p` of the field discriminant, computing `disc f` itself.
pub fn vp_field_disc(f: &IntPoly, p: &BigInt, report: &IndexReport) -> Result<Option<u64>> {
    let d = discriminant(f)?;
    if d == BigInt::from(0) {
        return Err(Error::Invalid("polynomial has a repeated root".into()));
    }
    Ok(field_disc_valuation(valuation(&d, p), report))
}
