use std::fmt;

use super::field::{Field, PrimeField};
use super::poly::Poly;

/// The finite field `F_p[x] / (phi)` for a monic irreducible `phi`.
///
/// Elements are polynomials of degree below `deg phi`.
#[derive(Clone, PartialEq)]
pub struct ResidueField<F: PrimeField> {
    modulus: Poly<F>,
}

/// An element of a [`ResidueField`].
pub type ResidueElem<F> = Poly<F>;

impl<F: PrimeField> ResidueField<F> {
    /// `modulus` must be monic and irreducible over `F_p`; this is checked by
    /// factoring it.
    pub fn new(modulus: Poly<F>) -> Option<Self> {
        let irreducible = modulus.is_monic()
            && matches!(super::factor::factor_modp(&modulus).as_slice(), [(_, 1)]);
        irreducible.then_some(ResidueField { modulus })
    }

    /// Skips the irreducibility check; `modulus` came out of a factorization.
    pub(crate) fn new_unchecked(modulus: Poly<F>) -> Self {
        debug_assert!(modulus.is_monic());
        ResidueField { modulus }
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    pub fn base(&self) -> &F {
        self.modulus.field()
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// Reduces an arbitrary polynomial over `F_p` into the field.
    pub fn element(&self, value: &Poly<F>) -> ResidueElem<F> {
        value.rem(&self.modulus)
    }
}

impl<F: PrimeField> fmt::Debug for ResidueField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[x]/{:?}", self.base(), self.modulus.coeffs())
    }
}

impl<F: PrimeField> Field for ResidueField<F> {
    type Elem = Poly<F>;

    fn zero(&self) -> Poly<F> {
        Poly::zero(self.base().clone())
    }
    fn one(&self) -> Poly<F> {
        Poly::one(self.base().clone()).rem(&self.modulus)
    }
    fn is_zero(&self, a: &Poly<F>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a + b
    }
    fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a - b
    }
    fn neg(&self, a: &Poly<F>) -> Poly<F> {
        -a
    }
    fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a.mul_mod(b, &self.modulus)
    }
    fn inv(&self, a: &Poly<F>) -> Option<Poly<F>> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.ext_gcd(&self.modulus);
        debug_assert!(g.is_one(), "modulus is not irreducible");
        Some(s.rem(&self.modulus))
    }
    fn from_u64(&self, n: u64) -> Poly<F> {
        let base = self.base();
        Poly::constant(base.clone(), base.from_u64(n)).rem(&self.modulus)
    }
}

/// Polynomial in `y` over a residue field, attached to a side of a Newton polygon.
pub type ResidualPoly<F> = Poly<ResidueField<F>>;

/// Separability over `F_p[x]/(phi)`.
pub fn residual_separable<F: PrimeField>(r: &ResidualPoly<F>) -> bool {
    r.is_separable()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modpoly::field::WordField;

    fn fp(p: u64, c: &[u64]) -> Poly<WordField> {
        Poly::new(WordField::new(p).unwrap(), c.to_vec())
    }

    #[test]
    fn gf4_inverses() {
        // F_4 = F_2[x]/(x^2 + x + 1)
        let k = ResidueField::new(fp(2, &[1, 1, 1])).unwrap();
        let x = fp(2, &[0, 1]);
        let inv = k.inv(&x).unwrap();
        assert!(k.mul(&x, &inv).is_one());
        assert_eq!(inv, fp(2, &[1, 1]));
        assert!(ResidueField::new(fp(2, &[1, 0, 1])).is_none());
    }

    #[test]
    fn residual_separability_over_extension() {
        // over F_9 = F_3[x]/(x^2+1): y^2 - x has distinct roots, (y - x)^2 does not
        let k = ResidueField::new(fp(3, &[1, 0, 1])).unwrap();
        let xe = fp(3, &[0, 1]);
        let r1: ResidualPoly<WordField> = Poly::new(k.clone(), vec![k.neg(&xe), k.zero(), k.one()]);
        assert!(residual_separable(&r1));
        let sq = k.mul(&xe, &xe);
        let two_x = k.add(&xe, &xe);
        let r2: ResidualPoly<WordField> = Poly::new(k.clone(), vec![sq, k.neg(&two_x), k.one()]);
        assert!(!residual_separable(&r2));
        let linear: ResidualPoly<WordField> = Poly::new(k.clone(), vec![xe, k.one()]);
        assert!(residual_separable(&linear));
    }
}
