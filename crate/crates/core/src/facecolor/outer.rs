//! Three-colourings for drawings with every vertex on the outer face, and for leafless graphs.

use std::collections::{HashSet, VecDeque};

use crate::drawing::{circle_planarized, twin, MapEditor, PlanarizedDrawing, PvKind};
use crate::multigraph::{EdgeId, Multigraph, VertexId};

use super::{face_2_coloring, ColorError, FaceColoring};

/// Joins a new vertex in the outer face to all odd-degree vertices, 2-colours the result and
/// gives the outer face colour 2. Colour 2 is used on the outer face only.
pub fn outerface_3coloring(d: &PlanarizedDrawing) -> Result<FaceColoring, ColorError> {
    let g = d.underlying();
    if let Some(&e) = g.bridges().first() {
        return Err(ColorError::Bridge(e));
    }
    let f = d.faces();
    let orbit = f.boundary(f.outer).to_vec();
    let on_outer: HashSet<usize> = orbit.iter().map(|&x| d.origin(x)).collect();
    for v in g.vertices() {
        let pv = d.normal_pv(v).expect("validated map");
        if !on_outer.contains(&pv) {
            return Err(ColorError::NotOnOuterFace(v));
        }
    }
    let mut odd: HashSet<usize> = g
        .vertices()
        .filter(|&v| g.degree(v).expect("vertex") % 2 == 1)
        .map(|v| d.normal_pv(v).expect("validated map"))
        .collect();

    let two = if odd.is_empty() {
        face_2_coloring(d).map(|c| (c, (0..d.dart_count()).map(Some).collect::<Vec<_>>(), d.clone()))
    } else {
        let mut ed = MapEditor::new(d);
        let w = ed.underlying.new_vertex();
        let hub = ed.new_pv(PvKind::Normal(w));
        let mut hub_darts = Vec::new();
        // walk the outer boundary; the corner after `twin(x)` at head(x) lies in the outer face
        for &x in &orbit {
            let corner = twin(x);
            let p = d.origin(corner);
            if !odd.remove(&p) {
                continue;
            }
            let PvKind::Normal(orig) = d.kind(p) else { unreachable!("odd vertices are normal") };
            let s = ed.new_segment(hub, p);
            ed.insert_after(Some(corner), 2 * s + 1);
            hub_darts.push(2 * s);
            let e = ed.underlying.new_edge(w, orig)?;
            ed.trails.insert(e, vec![2 * s]);
        }
        // seen from the hub the boundary is met in counter-clockwise order
        hub_darts.reverse();
        ed.rot[hub] = hub_darts;
        let s = ed.finish()?;
        face_2_coloring(&s.drawing).map(|c| (c, s.dart_map, s.drawing))
    };
    let (c2, dart_map, plus) =
        two.ok_or_else(|| ColorError::Construction("augmented drawing is not face-2-colourable".into()))?;
    let fp = plus.faces();
    let mut colors = vec![2u8; f.len()];
    for (face, orbit) in f.orbits.iter().enumerate() {
        if face != f.outer {
            let image = dart_map[orbit[0]].expect("no dart is deleted");
            colors[face] = c2.colors[fp.face(image)];
        }
    }
    let out = FaceColoring { k: 3, colors };
    if !out.is_proper(d) {
        return Err(ColorError::NotProper);
    }
    Ok(out)
}

/// A shortest cycle among `edges` (loops and parallel pairs first), as edge ids.
fn shortest_cycle(g: &Multigraph, edges: &[EdgeId]) -> Option<Vec<EdgeId>> {
    let mut best: Option<Vec<EdgeId>> = None;
    for (i, &e) in edges.iter().enumerate() {
        let edge = g.edge(e).expect("edge");
        if edge.is_loop() {
            return Some(vec![e]);
        }
        // shortest path between the ends avoiding e
        let mut prev: std::collections::HashMap<VertexId, (VertexId, EdgeId)> = Default::default();
        let mut queue = VecDeque::from([edge.u]);
        let mut seen = HashSet::from([edge.u]);
        while let Some(x) = queue.pop_front() {
            if x == edge.v {
                break;
            }
            for (j, &f) in edges.iter().enumerate() {
                if j == i {
                    continue;
                }
                let fe = g.edge(f).expect("edge");
                if fe.touches(x) && !fe.is_loop() {
                    let y = fe.other(x);
                    if seen.insert(y) {
                        prev.insert(y, (x, f));
                        queue.push_back(y);
                    }
                }
            }
        }
        if !seen.contains(&edge.v) {
            continue;
        }
        let mut cycle = vec![e];
        let mut y = edge.v;
        while y != edge.u {
            let (x, f) = prev[&y];
            cycle.push(f);
            y = x;
        }
        if best.as_ref().map_or(true, |b| cycle.len() < b.len()) {
            best = Some(cycle);
        }
    }
    best
}

/// Draws a graph of minimum degree 2 together with a face-3-colouring.
///
/// Cycles are peeled greedily (shortest first); the least edge of each is rerouted through a
/// hub vertex, the result drawn on a circle and coloured with [`outerface_3coloring`], and the
/// hub turned back into a single crossing point of the rerouted edges.
pub fn leafless_3colorable_drawing(g: &Multigraph) -> Result<(PlanarizedDrawing, FaceColoring), ColorError> {
    for v in g.vertices() {
        let deg = g.degree(v)?;
        if deg < 2 {
            return Err(ColorError::LowDegree(v, deg));
        }
    }
    let mut rest: Vec<EdgeId> = g.edges().map(|e| e.id).collect();
    let mut chosen = Vec::new();
    while let Some(c) = shortest_cycle(g, &rest) {
        chosen.push(*c.iter().min().expect("non-empty cycle"));
        rest.retain(|e| !c.contains(e));
    }
    let mut h = g.clone();
    let x = h.new_vertex();
    let mut halves = Vec::new();
    for &e in &chosen {
        let edge = h.remove_edge(e)?;
        let a = h.new_edge(edge.u, x)?;
        let b = h.new_edge(x, edge.v)?;
        halves.push((e, a, b));
    }
    let order: Vec<VertexId> = h.vertices().collect();
    let drawn = circle_planarized(&h, &order)?;
    let colored = outerface_3coloring(&drawn)?;

    let mut ed = MapEditor::new(&drawn);
    let hub = drawn.normal_pv(x).expect("hub drawn");
    ed.kinds[hub] = Some(PvKind::Crossing);
    for &(e, a, b) in &halves {
        let mut tr = ed.trails.shift_remove(&a).expect("half trail");
        tr.extend(ed.trails.shift_remove(&b).expect("half trail"));
        ed.trails.insert(e, tr);
    }
    let mut trails = indexmap::IndexMap::new();
    for e in g.edges() {
        trails.insert(e.id, ed.trails.shift_remove(&e.id).expect("trail for every edge"));
    }
    ed.trails = trails;
    ed.underlying = g.clone();
    ed.tidy();
    let s = ed.finish()?;
    let (f_old, f_new) = (drawn.faces(), s.drawing.faces());
    let mut colors = vec![u8::MAX; f_new.len()];
    for (d_old, image) in s.dart_map.iter().enumerate() {
        if let Some(d_new) = image {
            colors[f_new.face(*d_new)] = colored.colors[f_old.face(d_old)];
        }
    }
    let out = FaceColoring { k: 3, colors };
    if !out.is_proper(&s.drawing) {
        return Err(ColorError::NotProper);
    }
    Ok((s.drawing, out))
}

#[cfg(test)]
mod tests {
    use super::super::tests::*;
    use super::*;
    use crate::drawing::circle_planarized;
    use crate::facecolor::color_faces_exact;
    use crate::multigraph::named::*;

    fn check_outer(g: &Multigraph) {
        let order: Vec<_> = g.vertices().collect();
        let d = circle_planarized(g, &order).unwrap();
        let c = outerface_3coloring(&d).unwrap();
        assert!(c.is_proper(&d));
        let outer = d.faces().outer;
        for (f, &col) in c.colors.iter().enumerate() {
            assert_eq!(col == 2, f == outer);
        }
    }

    #[test]
    fn outer_examples() {
        check_outer(&complete(4));
        check_outer(&complete_bipartite(3, 3));
        check_outer(&cycle(5));
        check_outer(&complete(5));
        let order = [0, 3, 1, 4, 2, 5];
        let d = circle_planarized(&complete_bipartite(3, 3), &order).unwrap();
        assert!(outerface_3coloring(&d).unwrap().is_proper(&d));
        assert!(color_faces_exact(&d, 3).is_some());
    }

    #[test]
    fn outer_errors() {
        let d = straight(&[(0, 0), (1, 0), (2, 1)], &[(0, 1), (1, 2)]);
        assert_eq!(outerface_3coloring(&d), Err(ColorError::Bridge(0)));
        // K4 with one vertex inside the triangle
        let d = straight(&[(0, 0), (6, 0), (3, 6), (3, 2)], &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]);
        assert_eq!(outerface_3coloring(&d), Err(ColorError::NotOnOuterFace(3)));
    }

    #[test]
    fn leafless_examples() {
        let (d, c) = leafless_3colorable_drawing(&cycle(5)).unwrap();
        assert!(c.is_proper(&d));
        assert_eq!(d.underlying(), &cycle(5));
        // two triangles joined by two edges
        let g = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4)]).unwrap();
        let (d, c) = leafless_3colorable_drawing(&g).unwrap();
        assert!(c.is_proper(&d));
        assert_eq!(d.crossings().filter(|&x| d.degree(x) >= 4).count() >= 1, true);
        let (d, c) = leafless_3colorable_drawing(&petersen()).unwrap();
        assert!(c.is_proper(&d));
        let (d, c) = leafless_3colorable_drawing(&complete(4)).unwrap();
        assert!(c.is_proper(&d));
    }

    #[test]
    fn leafless_rejects_leaves() {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(leafless_3colorable_drawing(&g).unwrap_err(), ColorError::LowDegree(3, 1));
    }
}
