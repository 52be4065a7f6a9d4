use monoquartic::intpoly::{discriminant, valuation, IntPoly};
use monoquartic::montes::{
    dedekind_test, disc_valuation_from_index, ind_phi, index_report, index_report_with, phi_development,
    polygon_shape, vp_field_disc, IndexOptions, LatticePoint, PolygonShape,
};
use monoquartic::quartic::{is_irreducible_quartic, QuarticShape};
use monoquartic::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn n(v: i64) -> BigInt {
    BigInt::from(v)
}

fn shape_of(points: &[(u64, u64)]) -> PolygonShape {
    PolygonShape::from_points(points.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect())
}

/// Lattice points with `x, y >= 1` on or below the lower envelope of the
/// attached points, up to the leftmost point of least height. A point is under
/// the envelope when it is under every chord spanning its abscissa, so no hull
/// is built.
fn brute_force_count(points: &[(u64, u64)]) -> u64 {
    let min_y = points.iter().map(|p| p.1).min().unwrap();
    let start = points.iter().map(|p| p.0).min().unwrap();
    let end = points.iter().filter(|p| p.1 == min_y).map(|p| p.0).min().unwrap();
    if start == end {
        return 0;
    }
    let below = |x: u64, y: u64| {
        points.iter().all(|&(i, vi)| {
            points.iter().all(|&(j, vj)| {
                !(i <= x && x <= j) || {
                    if i == j {
                        y <= vi
                    } else {
                        // y (j - i) <= vi (j - x) + vj (x - i)
                        (y * (j - i)) as u128 <= (vi * (j - x) + vj * (x - i)) as u128
                    }
                }
            })
        })
    };
    let mut count = 0;
    for x in start.max(1)..=end {
        for y in 1..=points.iter().map(|p| p.1).max().unwrap() {
            if below(x, y) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn worked_example_polygon() {
    let f = poly(&[27, 18, 9, 15, 1, 3, 1]);
    let dev = phi_development(&f, &IntPoly::x()).unwrap();
    let shape = polygon_shape(&dev, &n(3));
    let pts: Vec<(u64, u64)> = shape.points().iter().map(|p| (p.x, p.y)).collect();
    assert_eq!(pts, vec![(0, 3), (1, 2), (2, 2), (3, 1), (4, 0), (5, 1), (6, 0)]);
    let vs: Vec<(u64, u64)> = shape.principal_vertices().iter().map(|p| (p.x, p.y)).collect();
    assert_eq!(vs, vec![(0, 3), (1, 2), (4, 0)]);
    assert_eq!(ind_phi(&shape), 3);
    assert_eq!(brute_force_count(&pts), 3);
}

#[test]
fn development_examples() {
    for (a, b) in [(1, 3), (-7, 12), (0, 0)] {
        let dev = phi_development(&poly(&[b, a, 0, 0, 1]), &poly(&[1, 1])).unwrap();
        assert_eq!(dev.coeffs(), &[b - a + 1, a - 4, 6, -4, 1].map(|c| poly(&[c]))[..]);
    }
    for (c, d) in [(2, 3), (-5, 1)] {
        let dev = phi_development(&poly(&[d, 0, 0, c, 1]), &poly(&[-1, 1])).unwrap();
        assert_eq!(dev.coeffs(), &[c + d + 1, 3 * c + 4, 3 * c + 6, c + 4, 1].map(|k| poly(&[k]))[..]);
    }
    let f = poly(&[5, -3, 0, 8, 1]);
    let dev = phi_development(&f, &IntPoly::x()).unwrap();
    assert_eq!(dev.coeffs(), &[5, -3, 0, 8, 1].map(|c| poly(&[c]))[..]);
    assert_eq!(phi_development(&f, &poly(&[1, 2])).unwrap_err(), Error::NotMonic);
}

#[test]
fn polygon_examples() {
    let one_sided = shape_of(&[(0, 1), (1, 2), (2, 1), (3, 3), (4, 0)]);
    assert_eq!(one_sided.sides().len(), 1);
    let side = one_sided.sides()[0];
    assert_eq!((side.e, side.degree), (4, 1));
    assert_eq!(ind_phi(&one_sided), 0);

    let short = shape_of(&[(0, 2), (1, 0), (2, 0), (3, 1)]);
    assert_eq!(short.sides().len(), 1);
    assert_eq!(short.sides()[0].end, LatticePoint::new(1, 0));
    assert_eq!(short.sides()[0].length, 1);
    assert_eq!(ind_phi(&short), 0);

    assert_eq!(ind_phi(&shape_of(&[(0, 2), (2, 0)])), 1);
}

#[test]
fn index_examples() {
    let r = index_report(&poly(&[2, 2, 0, 0, 1]), &n(2)).unwrap();
    assert_eq!((r.lower_bound, r.exact), (0, true));
    let r = index_report(&poly(&[3, 1, 0, 0, 1]), &n(3)).unwrap();
    assert_eq!((r.lower_bound, r.exact), (0, true));
    let mut phis: Vec<_> = r.entries.iter().map(|e| (e.phi.clone(), e.multiplicity)).collect();
    phis.sort_by_key(|(p, _)| p.coeffs().to_vec());
    assert_eq!(phis, vec![(poly(&[0, 1]), 1), (poly(&[1, 1]), 3)]);
    let r = index_report(&poly(&[27, 18, 9, 15, 1, 3, 1]), &n(3)).unwrap();
    assert_eq!(r.entries.iter().find(|e| e.phi == IntPoly::x()).unwrap().ind, 3);
    assert_eq!(index_report(&poly(&[1, 2]), &n(2)).unwrap_err(), Error::NotMonic);
    assert!(matches!(index_report(&poly(&[1, 1]), &n(9)), Err(Error::NotPrime(_))));
}

#[test]
fn field_discriminant_examples() {
    assert_eq!(disc_valuation_from_index(1, 0), Some(1));
    assert_eq!(disc_valuation_from_index(3, 0), Some(3));
    assert_eq!(disc_valuation_from_index(2, 1), Some(0));
    let f = poly(&[2, 2, 0, 0, 1]);
    let r = index_report(&f, &n(2)).unwrap();
    assert_eq!(vp_field_disc(&f, &n(2), &r).unwrap(), Some(4));
}

#[test]
fn dedekind_examples() {
    assert!(!dedekind_test(&poly(&[-8, -2, -1, 1]), &n(2)).unwrap());
    assert!(dedekind_test(&poly(&[2, 2, 0, 0, 1]), &n(2)).unwrap());
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 31, 1009] {
        assert!(dedekind_test(&poly(&[1, 1, 0, 0, 1]), &n(p)).unwrap());
    }
}

fn quartic(c: &[i64; 4]) -> IntPoly {
    poly(&[c[0], c[1], c[2], c[3], 1])
}

proptest! {
    #[test]
    fn development_reconstructs(
        f in proptest::collection::vec(-1_000_000i64..=1_000_000, 1..9),
        phi in proptest::collection::vec(-1_000_000i64..=1_000_000, 1..3),
    ) {
        let mut fc = f;
        fc.push(1);
        let mut pc = phi;
        pc.push(1);
        let (f, phi) = (poly(&fc), poly(&pc));
        prop_assume!(f.degree() >= phi.degree());
        let dev = phi_development(&f, &phi).unwrap();
        prop_assert!(dev.coeffs().iter().all(|a| a.degree().map_or(true, |d| d < phi.degree().unwrap())));
        prop_assert_eq!(dev.reconstruct(), f);
    }

    #[test]
    fn hull_sound_and_count_matches(heights in proptest::collection::vec(proptest::option::of(0u64..12), 2..10)) {
        let points: Vec<(u64, u64)> =
            heights.iter().enumerate().filter_map(|(i, h)| h.map(|h| (i as u64, h))).collect();
        prop_assume!(points.len() >= 2);
        let shape = shape_of(&points);
        for side in shape.sides() {
            for &(x, y) in &points {
                // every point lies on or above the line through the side
                let (x0, y0, x1, y1) = (side.start.x as i128, side.start.y as i128, side.end.x as i128, side.end.y as i128);
                prop_assert!((y as i128 - y0) * (x1 - x0) >= (y1 - y0) * (x as i128 - x0));
            }
        }
        let attached: Vec<LatticePoint> = points.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect();
        prop_assert!(shape.principal_vertices().iter().all(|v| attached.contains(v)));
        prop_assert_eq!(ind_phi(&shape), brute_force_count(&points));
    }

    #[test]
    fn exact_reports_agree_with_dedekind(
        c in prop::array::uniform4(-30i64..=30),
        p in prop::sample::select(vec![2i64, 3, 5, 7]),
    ) {
        prop_assume!(is_irreducible_quartic(&QuarticShape::from_i64s(c[3], c[2], c[1], c[0])));
        let f = quartic(&c);
        let r = index_report(&f, &n(p)).unwrap();
        if r.exact {
            prop_assert_eq!(r.lower_bound == 0, dedekind_test(&f, &n(p)).unwrap());
            let vp_disc = valuation(&discriminant(&f).unwrap(), &n(p));
            prop_assert!(vp_disc >= 2 * r.lower_bound);
        }
    }

    #[test]
    fn simple_factors_contribute_nothing(
        c in prop::array::uniform4(-30i64..=30),
        p in prop::sample::select(vec![2i64, 3, 5, 7, 11]),
    ) {
        let f = quartic(&c);
        prop_assume!(c[0] != 0);
        let quick = index_report_with(&f, &n(p), IndexOptions { shortcuts: true, ..IndexOptions::default() }).unwrap();
        let full = index_report_with(&f, &n(p), IndexOptions { shortcuts: false, ..IndexOptions::default() }).unwrap();
        prop_assert_eq!((quick.lower_bound, quick.exact), (full.lower_bound, full.exact));
        for e in full.entries.iter().filter(|e| e.multiplicity == 1) {
            prop_assert_eq!(e.ind, 0);
            prop_assert!(e.separable);
        }
    }
}
