use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intpoly::{check_prime, IntPoly};
use crate::modpoly::{
    lift, reduce, squarefree_decomposition, with_prime_field, FieldVisitor, Poly, PrimeField,
};

/// Dedekind's criterion: `true` iff `p` does not divide `[O_K : Z[theta]]`.
///
/// With `f mod p = prod g_i^{e_i}`, take `g = prod lift(g_i)`, `h` a lift of
/// `f / prod g_i` mod `p`, and `M = (g h - f) / p`. Then `p` is coprime to the
/// index iff `gcd(M, g, h) = 1` mod `p`.
///
/// Only the radical `prod g_i` matters, so it is taken from the square-free
/// decomposition rather than a full factorization; the criterion does not
/// depend on how the `g_i` are grouped or lifted.
pub fn dedekind_test(f: &IntPoly, p: &BigInt) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    check_prime(p)?;
    struct Visit<'a>(&'a IntPoly);
    impl FieldVisitor for Visit<'_> {
        type Output = bool;
        fn visit<F: PrimeField + Send + Sync>(self, field: F) -> bool
        where
            F::Elem: Send + Sync,
        {
            dedekind_over(self.0, &field)
        }
    }
    Ok(with_prime_field(p, Visit(f)))
}

/// [`dedekind_test`] over an explicit field; `f` must be monic.
pub fn dedekind_over<F: PrimeField>(f: &IntPoly, field: &F) -> bool {
    let p = field.characteristic();
    let fbar = reduce(f, field);
    let mut g = IntPoly::one();
    let mut radical = Poly::one(field.clone());
    for (part, _) in squarefree_decomposition(&fbar.monic()) {
        g = &g * &lift(&part);
        radical = &radical * &part;
    }
    let hbar = fbar.quo(&radical);
    let common = radical.gcd(&hbar);
    if common.is_one() {
        return true;
    }
    let h = lift(&hbar);
    let m = (&(&g * &h) - f).exact_div_scalar(&p);
    reduce(&m, field).gcd(&common).is_one()
}
