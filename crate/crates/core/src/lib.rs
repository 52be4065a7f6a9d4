//! Certificates of monogenicity for the quartic families `x^4 + a x + b` and
//! `x^4 + c x^3 + d`.
//!
//! The crate is layered bottom-up:
//!
//! * [`intpoly`]: integer and rational polynomials, resultants, discriminants,
//!   rational roots, and integer factorization.
//! * [`modpoly`]: polynomials over `F_p` and over residue fields
//!   `F_p[x]/(phi)`, with Cantor–Zassenhaus factorization.
//! * [`montes`]: phi-adic developments, Newton polygons, residual polynomials,
//!   the index lower bound with its exactness criterion, and Dedekind's
//!   criterion as an independent oracle.
//! * [`quartic`]: resolvent cubics, depressed quartics, irreducibility and
//!   Galois group classification.
//! * [`families`]: per-family certificates with a full evidence trail.
//! * [`density`]: segmented square-free sieves and density experiments.

pub mod density;
pub mod error;
pub mod families;
pub mod intpoly;
pub mod modpoly;
pub mod montes;
pub mod quartic;

pub use error::{Error, Result};
pub use intpoly::{IntPoly, RatPoly, Rational, Valuation};

/// Seed used whenever a caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x6d71_5f73_6565_6431;
