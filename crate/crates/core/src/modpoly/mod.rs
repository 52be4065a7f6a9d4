//! Polynomials over `F_p` and over residue fields `F_p[x]/(phi)`.
//!
//! Arithmetic is generic over [`Field`]; [`WordField`] covers machine-word
//! primes and [`BigField`] everything else. Callers holding a `BigInt` prime use
//! [`factor_mod`] and friends, which pick the representation themselves.

mod factor;
mod field;
mod poly;
mod residue;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intpoly::{check_prime, IntPoly};

pub use factor::{
    distinct_degree, equal_degree, factor_modp, factor_modp_seeded, squarefree_decomposition,
    Factors,
};
pub use field::{BigField, Field, FieldVisitor, PrimeField, WordField};
pub(crate) use field::with_prime_field;
pub use poly::Poly;
pub use residue::{residual_separable, ResidualPoly, ResidueElem, ResidueField};

/// A polynomial over a prime field.
pub type ModPoly<F> = Poly<F>;

/// Coefficientwise reduction `Z[x] -> F_p[x]`.
pub fn reduce<F: PrimeField>(f: &IntPoly, field: &F) -> ModPoly<F> {
    Poly::new(field.clone(), f.coeffs().iter().map(|c| field.reduce(c)).collect())
}

/// Canonical lift with coefficients in `[0, p)`.
pub fn lift<F: PrimeField>(g: &ModPoly<F>) -> IntPoly {
    let k = g.field();
    IntPoly::new(g.coeffs().iter().map(|c| k.lift(c)).collect())
}

pub fn is_separable<F: PrimeField>(f: &ModPoly<F>) -> bool {
    f.is_separable()
}

/// Factors `f mod p`, returning canonical lifts of the monic irreducible factors
/// with their multiplicities.
pub fn factor_mod(f: &IntPoly, p: &BigInt, seed: u64) -> Result<Vec<(IntPoly, u32)>> {
    check_prime(p)?;
    struct Visit<'a>(&'a IntPoly, u64);
    impl FieldVisitor for Visit<'_> {
        type Output = Result<Vec<(IntPoly, u32)>>;
        fn visit<F: PrimeField + Send + Sync>(self, field: F) -> Self::Output
        where
            F::Elem: Send + Sync,
        {
            let fbar = reduce(self.0, &field);
            if fbar.is_zero() {
                return Err(Error::Invalid("polynomial vanishes modulo p".into()));
            }
            Ok(factor_modp_seeded(&fbar, self.1)
                .iter()
                .map(|(g, m)| (lift(g), *m))
                .collect())
        }
    }
    with_prime_field(p, Visit(f, seed))
}

/// Whether `f mod p` has no repeated factor.
pub fn is_separable_mod(f: &IntPoly, p: &BigInt) -> Result<bool> {
    check_prime(p)?;
    struct Visit<'a>(&'a IntPoly);
    impl FieldVisitor for Visit<'_> {
        type Output = bool;
        fn visit<F: PrimeField + Send + Sync>(self, field: F) -> bool
        where
            F::Elem: Send + Sync,
        {
            reduce(self.0, &field).is_separable()
        }
    }
    Ok(with_prime_field(p, Visit(f)))
}
