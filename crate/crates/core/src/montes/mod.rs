//! First-order Montes machinery.
//!
//! For a monic `f` and a prime `p`, each irreducible factor `phi` of `f mod p`
//! gives a `phi`-adic development, a Newton polygon, and residual polynomials.
//! The lattice points under the principal polygons bound `v_p` of the index of
//! `Z[theta]` from below, with equality when every residual polynomial is
//! separable. [`dedekind_test`] answers the `v_p = 0` question independently.

mod dedekind;
mod development;
mod index;
mod polygon;
mod render;

pub use dedekind::{dedekind_over, dedekind_test};
pub use development::{phi_development, PhiDevelopment};
pub use index::{
    disc_valuation_from_index, field_disc_valuation, index_report, index_report_over,
    index_report_with, vp_field_disc, FactorEntry, IndexOptions, IndexReport, PolygonSummary,
};
pub use polygon::{
    ind_phi, newton_polygon, polygon_shape, LatticePoint, NewtonPolygon, PolygonShape, Side,
};
pub use render::render_polygon;
