use crate::multigraph::Multigraph;

use super::{DrawingError, PlanarizedDrawing, PvId, PvKind};

/// Turns the 4-valent crossing `x` of two distinct edges `e1 = u1v1`, `e2 = u2v2` into a new
/// vertex `u`. The underlying graph loses `e1`, `e2` and gains `u1u`, `uv1`, `u2u`, `uv2`
/// (fresh ids in that order); the map itself is unchanged.
pub fn place_vertex_at_crossing(
    d: &PlanarizedDrawing,
    x: PvId,
) -> Result<(PlanarizedDrawing, Multigraph), DrawingError> {
    if x >= d.pv_count() || !d.is_crossing(x) || d.degree(x) != 4 {
        return Err(DrawingError::NotSimpleCrossing(x));
    }
    let passes = d.passes(x);
    let (e1, e2) = (passes[0].0, passes[1].0);
    if e1 == e2 {
        return Err(DrawingError::NotSimpleCrossing(x));
    }
    let (kinds, segs, rot, mut trails, mut g, outer) = d.clone().into_parts();
    let u = g.max_vertex_id().map_or(0, |m| m + 1);
    g.add_vertex(u)?;
    let mut next = g.max_edge_id().map_or(0, |m| m + 1);
    let mut kinds = kinds;
    kinds[x] = PvKind::Normal(u);
    for (e, _, out) in [passes[0], passes[1]] {
        let edge = g.remove_edge(e)?;
        let tr = trails.shift_remove(&e).expect("trail of a crossing edge");
        let cut = tr.iter().position(|&y| y == out).expect("pass on its trail");
        g.add_edge(next, edge.u, u)?;
        trails.insert(next, tr[..cut].to_vec());
        g.add_edge(next + 1, u, edge.v)?;
        trails.insert(next + 1, tr[cut..].to_vec());
        next += 2;
    }
    let placed = PlanarizedDrawing::from_parts(kinds, segs, rot, trails, g.clone(), outer)?;
    Ok((placed, g))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::multigraph::iso::are_isomorphic;
    use crate::multigraph::named::wheel;

    #[test]
    fn k4_crossing_gives_w4() {
        let d = convex_k4();
        let x = d.crossings().next().unwrap();
        let (p, h) = place_vertex_at_crossing(&d, x).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 8);
        assert!(are_isomorphic(&h, &wheel(4)));
        assert_eq!(p.crossings().count(), 0);
        assert_eq!(p.faces().len(), d.faces().len());
    }

    #[test]
    fn rejects_non_simple_crossings() {
        let d = figure_eight();
        let x = d.crossings().next().unwrap();
        assert_eq!(place_vertex_at_crossing(&d, x).unwrap_err(), DrawingError::NotSimpleCrossing(x));
        let pts = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)];
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)];
        let d = straight(&pts, &edges);
        let x = d.crossings().next().unwrap();
        assert_eq!(place_vertex_at_crossing(&d, x).unwrap_err(), DrawingError::NotSimpleCrossing(x));
        assert!(place_vertex_at_crossing(&d, 0).is_err());
    }
}
