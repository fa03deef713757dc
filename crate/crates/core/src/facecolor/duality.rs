//! Moving between orientations of the abstract graph, orientations of the planarization and
//! face colourings. Convention: along every directed segment, the colour on the right exceeds
//! the colour on the left by 1 (mod 3).

use std::collections::VecDeque;

use crate::drawing::{twin, PlanarizedDrawing};
use crate::flow3::Orientation;

use super::{ColorError, FaceColoring};

/// Orients every segment along its trail, in the direction the abstract edge is oriented.
pub fn lift_orientation(d: &PlanarizedDrawing, o: &Orientation) -> Result<Orientation, ColorError> {
    let g = d.underlying();
    if o.graph.edge_count() != g.edge_count() || o.forward.len() != g.edge_count() {
        return Err(ColorError::Mismatch);
    }
    let mut forward = vec![true; d.seg_count()];
    for (i, e) in o.graph.edges().enumerate() {
        let mine = g.edge(e.id).ok_or(ColorError::Mismatch)?;
        if (mine.u, mine.v) != (e.u, e.v) {
            return Err(ColorError::Mismatch);
        }
        let along = o.forward[i];
        for &x in d.trail(e.id).ok_or(ColorError::Mismatch)? {
            forward[x / 2] = (x % 2 == 0) == along;
        }
    }
    Ok(Orientation { graph: d.planar_graph(), forward })
}

/// The dart of segment `s` pointing the way `o` orients it.
fn directed(o: &Orientation, s: usize) -> usize {
    if o.forward[s] {
        2 * s
    } else {
        2 * s + 1
    }
}

/// Face potential of a modulo-3-orientation of the planarization; the outer face gets 0.
pub fn coloring_from_mod3(d: &PlanarizedDrawing, o: &Orientation) -> Result<FaceColoring, ColorError> {
    if o.forward.len() != d.seg_count() || o.graph.vertex_count() != d.pv_count() {
        return Err(ColorError::Mismatch);
    }
    if !o.is_mod3() {
        return Err(ColorError::NotMod3);
    }
    let f = d.faces();
    let mut colors = vec![u8::MAX; f.len()];
    colors[f.outer] = 0;
    let mut queue = VecDeque::from([f.outer]);
    while let Some(a) = queue.pop_front() {
        for &x in f.boundary(a) {
            let b = f.face(twin(x));
            let step = if directed(o, x / 2) == x { 1 } else { 2 };
            let c = (colors[a] + step) % 3;
            if colors[b] == u8::MAX {
                colors[b] = c;
                queue.push_back(b);
            } else if colors[b] != c {
                return Err(ColorError::Inconsistent(x / 2));
            }
        }
    }
    let out = FaceColoring { k: 3, colors };
    if !out.is_proper(d) {
        return Err(ColorError::NotProper);
    }
    Ok(out)
}

/// Orients each segment so that the colour on its right is one more than on its left.
pub fn mod3_from_coloring(d: &PlanarizedDrawing, c: &FaceColoring) -> Result<Orientation, ColorError> {
    if c.k > 3 || !c.is_proper(d) {
        return Err(ColorError::NotProper);
    }
    let f = d.faces();
    let forward = (0..d.seg_count())
        .map(|s| {
            let (left, right) = (c.colors[f.face(2 * s)], c.colors[f.face(2 * s + 1)]);
            (right + 3 - left) % 3 == 1
        })
        .collect();
    Ok(Orientation { graph: d.planar_graph(), forward })
}

#[cfg(test)]
mod tests {
    use super::super::tests::*;
    use super::*;
    use crate::drawing::circle_planarized;
    use crate::facecolor::color_faces_exact;
    use crate::flow3::{kmn_mod3_orientation, mod3_orientation};
    use crate::multigraph::named::*;

    #[test]
    fn triangle_cyclic() {
        let d = straight(&[(0, 0), (2, 0), (0, 2)], &[(0, 1), (1, 2), (2, 0)]);
        let o = lift_orientation(&d, &Orientation::all_forward(d.underlying().clone())).unwrap();
        let c = coloring_from_mod3(&d, &o).unwrap();
        let outer = d.faces().outer;
        assert_eq!(c.colors[outer], 0);
        assert_ne!(c.colors[1 - outer], 0);
        assert!(c.is_proper(&d));
    }

    #[test]
    fn k33_pipeline() {
        let g = complete_bipartite(3, 3);
        let d = circle_planarized(&g, &[0, 3, 1, 4, 2, 5]).unwrap();
        let o = kmn_mod3_orientation(3, 3).unwrap();
        let lifted = lift_orientation(&d, &o).unwrap();
        let exc = lifted.excesses();
        for x in d.crossings() {
            assert_eq!(exc[x], 0);
        }
        for v in g.vertices() {
            assert_eq!(exc[d.normal_pv(v).unwrap()], o.excess(v).unwrap());
        }
        let c = coloring_from_mod3(&d, &lifted).unwrap();
        assert!(c.is_proper(&d));
        // the colouring yields back the same orientation
        assert_eq!(mod3_from_coloring(&d, &c).unwrap().forward, lifted.forward);
    }

    #[test]
    fn figure_eight_lift() {
        let d = figure_eight();
        for dir in [true, false] {
            let o = Orientation::new(d.underlying().clone(), vec![dir]).unwrap();
            let l = lift_orientation(&d, &o).unwrap();
            let x = d.crossings().next().unwrap();
            assert_eq!(l.excesses()[x], 0);
        }
    }

    #[test]
    fn square_round_trip() {
        let d = square();
        let c = color_faces_exact(&d, 2).unwrap();
        let c3 = FaceColoring { k: 3, colors: c.colors.clone() };
        let o = mod3_from_coloring(&d, &c3).unwrap();
        assert!(o.is_mod3());
        // all four segments run the same way around the square
        let back = coloring_from_mod3(&d, &o).unwrap();
        assert_eq!(back, c3);
    }

    #[test]
    fn rejects_bad_orientations() {
        let d = convex_k4();
        let wrong = Orientation::all_forward(d.planar_graph());
        assert!(matches!(coloring_from_mod3(&d, &wrong), Err(ColorError::NotMod3)));
        assert!(mod3_orientation(d.underlying()).is_none());
        let other = Orientation::all_forward(cycle(4));
        assert_eq!(lift_orientation(&d, &other), Err(ColorError::Mismatch));
    }
}
