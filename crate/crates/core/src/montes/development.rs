use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

/// `f = sum a_i(x) phi(x)^i` with `deg a_i < deg phi`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiDevelopment {
    phi: IntPoly,
    coeffs: Vec<IntPoly>,
}

impl PhiDevelopment {
    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    /// `a_0, ..., a_r`; the last one is nonzero.
    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn reconstruct(&self) -> IntPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, a| &(&acc * &self.phi) + a)
    }
}

/// Repeated Euclidean division of `f` by the monic `phi`.
pub fn phi_development(f: &IntPoly, phi: &IntPoly) -> Result<PhiDevelopment> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = phi.degree().ok_or(Error::ZeroPolynomial)?;
    if deg < 1 {
        return Err(Error::DegreeTooSmall { expected: 1, actual: deg });
    }
    if !phi.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut coeffs = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem_monic(phi)?;
        coeffs.push(r);
        rest = q;
    }
    Ok(PhiDevelopment { phi: phi.clone(), coeffs })
}
