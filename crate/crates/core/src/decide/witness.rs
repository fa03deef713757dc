//! Drawings behind the negative certificates: a face that meets itself across a bridge, and
//! an odd wheel drawn without crossings with every identification class blown up in a
//! small disc around its wheel vertex.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::{circle_planarized, ingest_polylines, DrawingError, PlanarizedDrawing, PolylineDrawing};
use crate::geometry::{qf, Point, Q};
use crate::multigraph::named::wheel;
use crate::multigraph::{EdgeId, Multigraph, VertexId};

/// Circle drawing with the two sides of the bridge on disjoint arcs and the bridge's ends
/// next to each other, so the same face lies on both sides of the bridge.
pub fn bridge_drawing(g: &Multigraph, edge: EdgeId, side: &[VertexId]) -> Result<PlanarizedDrawing, DrawingError> {
    let e = *g.edge(edge).ok_or(DrawingError::BadOrder)?;
    let (u, v) = if side.contains(&e.u) { (e.u, e.v) } else { (e.v, e.u) };
    let mut order: Vec<VertexId> = side.iter().copied().filter(|&x| x != u).collect();
    order.push(u);
    order.push(v);
    order.extend(g.vertices().filter(|x| !side.contains(x) && *x != v));
    circle_planarized(g, &order)
}

fn approx(x: f64) -> Q {
    qf((x * 1024.0).round() as i64, 1024)
}

/// Crossing-free odd wheel with `rim` rim vertices, class `i` gathered around wheel vertex
/// `i`. Edges between classes follow the wheel edge they identify with; edges inside a
/// class stay near its centre.
pub fn subcontraction_drawing(g: &Multigraph, rim: usize, classes: &[Vec<VertexId>]) -> Result<PlanarizedDrawing, DrawingError> {
    let w = wheel(rim);
    let k = rim + 1;
    if classes.len() != k {
        return Err(DrawingError::BadOrder);
    }
    let radius = 1000.0;
    let centre: Vec<(f64, f64)> = (0..k)
        .map(|i| {
            if i == rim {
                (0.0, 0.0)
            } else {
                let a = 2.0 * std::f64::consts::PI * i as f64 / rim as f64;
                (radius * a.cos(), radius * a.sin())
            }
        })
        .collect();
    let pt = |p: (f64, f64)| Point::new(approx(p.0), approx(p.1));
    let mut class_of = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of.insert(v, i);
        }
    }
    // exit point on the wheel edge a–b, a fixed distance from a
    let exit = |a: usize, b: usize| {
        let (pa, pb) = (centre[a], centre[b]);
        let len = ((pb.0 - pa.0).powi(2) + (pb.1 - pa.1).powi(2)).sqrt();
        let t = approx(80.0 / len);
        let (ca, cb) = (pt(pa), pt(pb));
        ca.add(&cb.sub(&ca).scale(&t))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(rim as u64);
    let mut last = DrawingError::BadOrder;
    for _ in 0..200 {
        let mut p = PolylineDrawing::default();
        for v in g.vertices() {
            let i = *class_of.get(&v).ok_or(DrawingError::BadOrder)?;
            let c = pt(centre[i]);
            let off = Point::int(rng.gen_range(-25..=25), rng.gen_range(-25..=25));
            p.vertices.insert(v, c.add(&off));
        }
        let mut copies: HashMap<(VertexId, VertexId), i64> = HashMap::new();
        for e in g.edges() {
            let (a, b) = (class_of[&e.u], class_of[&e.v]);
            let bends = if a != b {
                if w.multiplicity(a, b) == 0 {
                    return Err(DrawingError::BadOrder);
                }
                vec![exit(a, b), exit(b, a)]
            } else if e.is_loop() {
                let c = p.vertices[&e.u].clone();
                let (dx, dy) = (rng.gen_range(3..=9), rng.gen_range(3..=9));
                vec![c.add(&Point::int(dx, -dy)), c.add(&Point::int(dx, dy))]
            } else {
                let j = copies.entry((e.u.min(e.v), e.u.max(e.v))).or_insert(0);
                *j += 1;
                let (pu, pv) = (&p.vertices[&e.u], &p.vertices[&e.v]);
                let mid = pu.add(pv).scale(&qf(1, 2));
                let bend = mid.add(&pv.sub(pu).perp().scale(&qf(*j - 1, 5)));
                if *j == 1 {
                    Vec::new()
                } else {
                    vec![bend]
                }
            };
            p.edges.insert(e.id, (e.u, e.v, bends));
        }
        match ingest_polylines(&p) {
            Ok(d) => return Ok(d),
            Err(e) => last = e,
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facecolor::color_faces_exact;
    use crate::multigraph::has_subcontraction;
    use crate::multigraph::named::*;

    #[test]
    fn bridge_face_meets_itself() {
        let g = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
        let d = bridge_drawing(&g, 6, &[0, 1, 2]).unwrap();
        for k in 2..=4 {
            assert!(color_faces_exact(&d, k).is_none());
        }
    }

    #[test]
    fn blown_up_wheels_need_four_colours() {
        for (g, rim) in [(wheel(5), 5), (complete(4), 3)] {
            let w = has_subcontraction(&g, &wheel(rim), 12).unwrap().unwrap();
            let d = subcontraction_drawing(&g, rim, &w.classes).unwrap();
            assert!(color_faces_exact(&d, 3).is_none());
            assert!(color_faces_exact(&d, 4).is_some());
        }
    }
}
