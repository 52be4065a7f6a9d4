use std::fmt::Write;

use super::polygon::{LatticePoint, PolygonShape};

/// ASCII picture of a polygon: valuations run up the rows, indices along the
/// columns. `#` marks principal vertices, `o` other attached points, `+`
/// counted lattice points that carry no attached point.
pub fn render_polygon(shape: &PolygonShape) -> String {
    let points = shape.points();
    let max_x = points.iter().map(|p| p.x).max().unwrap_or(0);
    let max_y = points.iter().map(|p| p.y).max().unwrap_or(0);
    let vertices = shape.principal_vertices();
    let counted = counted_points(shape);
    let width = max_x.to_string().len().max(1) + 1;
    let label = max_y.to_string().len();

    let mut out = String::new();
    for y in (0..=max_y).rev() {
        let _ = write!(out, "{y:>label$} |");
        for x in 0..=max_x {
            let p = LatticePoint::new(x, y);
            let mark = if vertices.contains(&p) {
                '#'
            } else if points.contains(&p) {
                'o'
            } else if counted.contains(&p) {
                '+'
            } else {
                '.'
            };
            let _ = write!(out, "{mark:>width$}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{} +{}", " ".repeat(label), "-".repeat(width * (max_x as usize + 1)));
    let _ = write!(out, "{}  ", " ".repeat(label));
    for x in 0..=max_x {
        let _ = write!(out, "{x:>width$}");
    }
    out.push('\n');

    let listed: Vec<String> = vertices.iter().map(|p| format!("({},{})", p.x, p.y)).collect();
    let _ = writeln!(out, "principal vertices: {}", if listed.is_empty() { "none".into() } else { listed.join(" ") });
    for s in shape.sides() {
        let _ = writeln!(
            out,
            "side ({},{})-({},{}): slope -{}/{}, length {}, degree {}",
            s.start.x, s.start.y, s.end.x, s.end.y, s.h, s.e, s.length, s.degree
        );
    }
    let _ = writeln!(out, "ind = {}", shape.lattice_count());
    out
}

fn counted_points(shape: &PolygonShape) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for (k, side) in shape.sides().iter().enumerate() {
        let from = if k == 0 { side.start.x.max(1) } else { side.start.x + 1 };
        for x in from..=side.end.x {
            for y in 1..=side.floor_at(x) {
                out.push(LatticePoint::new(x, y));
            }
        }
    }
    out
}
