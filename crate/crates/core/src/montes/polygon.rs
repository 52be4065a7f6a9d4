use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Pow;
use serde::Serialize;

use super::development::PhiDevelopment;
use crate::intpoly::{vp_poly_unchecked, IntPoly, Valuation};
use crate::modpoly::{lift, reduce, Field, Poly, PrimeField, ResidualPoly, ResidueField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LatticePoint {
    pub x: u64,
    pub y: u64,
}

impl LatticePoint {
    pub fn new(x: u64, y: u64) -> Self {
        LatticePoint { x, y }
    }
}

/// A hull segment of slope `-h/e`, `gcd(h, e) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Side {
    pub start: LatticePoint,
    pub end: LatticePoint,
    pub h: u64,
    pub e: u64,
    pub length: u64,
    pub degree: u64,
}

impl Side {
    /// `None` unless the slope is strictly negative.
    pub fn between(start: LatticePoint, end: LatticePoint) -> Option<Side> {
        if end.x <= start.x || end.y >= start.y {
            return None;
        }
        let length = end.x - start.x;
        let drop = start.y - end.y;
        let g = length.gcd(&drop);
        Some(Side { start, end, h: drop / g, e: length / g, length, degree: g })
    }

    /// `floor` of the ordinate of the side above `x`, for `start.x <= x <= end.x`.
    pub fn floor_at(&self, x: u64) -> u64 {
        debug_assert!(self.start.x <= x && x <= self.end.x);
        let num = self.start.y as u128 * self.length as u128
            - (self.start.y - self.end.y) as u128 * (x - self.start.x) as u128;
        (num / self.length as u128) as u64
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        if p.x < self.start.x || p.x > self.end.x {
            return false;
        }
        let lhs = p.y as u128 * self.length as u128;
        let rhs = self.start.y as u128 * self.length as u128
            - (self.start.y - self.end.y) as u128 * (p.x - self.start.x) as u128;
        lhs == rhs
    }
}

/// The points `(i, v_p(a_i))`, their lower convex hull, and its principal part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonShape {
    points: Vec<LatticePoint>,
    hull: Vec<LatticePoint>,
    sides: Vec<Side>,
}

impl PolygonShape {
    /// Points must have distinct abscissae.
    pub fn from_points(mut points: Vec<LatticePoint>) -> Self {
        points.sort();
        debug_assert!(points.windows(2).all(|w| w[0].x < w[1].x));
        let hull = lower_hull(&points);
        let sides = hull
            .windows(2)
            .map_while(|w| Side::between(w[0], w[1]))
            .collect();
        PolygonShape { points, hull, sides }
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// Vertices of the whole lower hull, left to right.
    pub fn hull(&self) -> &[LatticePoint] {
        &self.hull
    }

    /// Sides of negative slope, left to right.
    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn principal_vertices(&self) -> Vec<LatticePoint> {
        match self.sides.first() {
            None => Vec::new(),
            Some(first) => std::iter::once(first.start)
                .chain(self.sides.iter().map(|s| s.end))
                .collect(),
        }
    }

    /// Whether `p` lies on the principal polygon.
    pub fn on_principal(&self, p: LatticePoint) -> bool {
        self.sides.iter().any(|s| s.contains(p))
    }

    /// Lattice points with `x >= 1`, `y >= 1` on or below the principal polygon.
    pub fn lattice_count(&self) -> u64 {
        let mut count = 0;
        for (k, side) in self.sides.iter().enumerate() {
            // shared vertices belong to the earlier side
            let from = if k == 0 { side.start.x.max(1) } else { side.start.x + 1 };
            for x in from..=side.end.x {
                count += side.floor_at(x);
            }
        }
        count
    }
}

/// Monotone chain over points sorted by `x`; collinear points are dropped.
fn lower_hull(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let cross = |o: LatticePoint, a: LatticePoint, b: LatticePoint| -> i128 {
        (a.x as i128 - o.x as i128) * (b.y as i128 - o.y as i128)
            - (a.y as i128 - o.y as i128) * (b.x as i128 - o.x as i128)
    };
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(points.len());
    for &p in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

/// The raw lattice count of a polygon; the index contribution of `phi` is
/// `deg phi` times this.
pub fn ind_phi(shape: &PolygonShape) -> u64 {
    shape.lattice_count()
}

/// Attaches `(i, v_p(a_i))` for every nonzero `a_i`.
pub fn polygon_shape(dev: &PhiDevelopment, p: &BigInt) -> PolygonShape {
    let points = dev
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, a)| match vp_poly_unchecked(a, p) {
            Valuation::Finite(v) => Some(LatticePoint::new(i as u64, v)),
            Valuation::Infinite => None,
        })
        .collect();
    PolygonShape::from_points(points)
}

/// A principal polygon together with its residual polynomials over
/// `F_p[x]/(phi mod p)`, one per side.
#[derive(Clone, Debug)]
pub struct NewtonPolygon<F: PrimeField> {
    shape: PolygonShape,
    residuals: Vec<ResidualPoly<F>>,
}

impl<F: PrimeField> NewtonPolygon<F> {
    pub fn shape(&self) -> &PolygonShape {
        &self.shape
    }

    pub fn residuals(&self) -> &[ResidualPoly<F>] {
        &self.residuals
    }

    pub fn all_separable(&self) -> bool {
        self.residuals.iter().all(|r| r.is_separable())
    }

    /// Residual coefficients lifted to `Z[x]`, constant term first.
    pub fn residual_lifts(&self) -> Vec<Vec<IntPoly>> {
        self.residuals
            .iter()
            .map(|r| r.coeffs().iter().map(lift).collect())
            .collect()
    }
}

/// Builds the polygon of `dev` over `field`, whose characteristic is `p`.
///
/// `dev.phi()` must reduce to an irreducible polynomial mod `p`.
pub fn newton_polygon<F: PrimeField>(dev: &PhiDevelopment, field: &F) -> NewtonPolygon<F> {
    let p = field.characteristic();
    let shape = polygon_shape(dev, &p);
    let residue = ResidueField::new_unchecked(reduce(dev.phi(), field));
    let residuals = shape
        .sides()
        .iter()
        .map(|side| residual_polynomial(dev, &shape, side, &residue, &p))
        .collect();
    NewtonPolygon { shape, residuals }
}

/// `c_t + c_{t+e} y + ... + c_{t+de} y^d` for a side starting at `x = t`.
fn residual_polynomial<F: PrimeField>(
    dev: &PhiDevelopment,
    shape: &PolygonShape,
    side: &Side,
    residue: &ResidueField<F>,
    p: &BigInt,
) -> ResidualPoly<F> {
    let coeffs = (0..=side.degree)
        .map(|j| {
            let i = side.start.x + j * side.e;
            residual_coefficient(dev, shape, i as usize, residue, p)
        })
        .collect();
    Poly::new(residue.clone(), coeffs)
}

/// `(a_i / p^v) mod (p, phi)` when `(i, v)` lies on the polygon, else zero.
fn residual_coefficient<F: PrimeField>(
    dev: &PhiDevelopment,
    shape: &PolygonShape,
    i: usize,
    residue: &ResidueField<F>,
    p: &BigInt,
) -> Poly<F> {
    let a = &dev.coeffs()[i];
    let v = match vp_poly_unchecked(a, p) {
        Valuation::Finite(v) => v,
        Valuation::Infinite => return residue.zero(),
    };
    if !shape.on_principal(LatticePoint::new(i as u64, v)) {
        return residue.zero();
    }
    let unit = if v == 0 { a.clone() } else { a.exact_div_scalar(&Pow::pow(p, v)) };
    residue.element(&reduce(&unit, residue.base()))
}
