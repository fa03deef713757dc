//! Face-3-colouring of drawings of K_{3,n}^+ through a vertex placed at a crossing.

use std::collections::HashMap;

use crate::drawing::{place_vertex_at_crossing, PlanarizedDrawing};
use crate::flow3::{kmn_mod3_orientation, Orientation};
use crate::multigraph::{EdgeId, Multigraph, VertexId};

use super::{coloring_from_mod3, lift_orientation, ColorError, FaceColoring};

/// Roles in the auxiliary graph H.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Role {
    X1,
    X2,
    X3,
    U,
    V1,
    V2,
}

use Role::*;

/// Both `u1 = x1`, `u2 = x2`: every vertex of H[x1, x2, x3, u, v1, v2] has excess 0 mod 3.
const CASE1: [(Role, Role); 9] =
    [(X1, X2), (X1, V2), (V1, X2), (V1, X3), (X3, V2), (X1, U), (V1, U), (U, X2), (U, V2)];

/// `u1 = x1`, `u2 = x3`: excess 0 at v1, v2, u and 1 at x1, x2, x3.
const CASE2: [(Role, Role); 9] =
    [(V1, X3), (U, X3), (V1, X2), (V1, U), (X2, X1), (X2, V2), (X1, V2), (U, V2), (X1, U)];

/// The 3-side `[x1, x2, x3]` (with `x1x2` the extra edge) and the n-side, if `g` is K_{3,n}^+
/// with n >= 4.
pub fn k3nplus_sides(g: &Multigraph) -> Option<([VertexId; 3], Vec<VertexId>)> {
    let n = g.vertex_count().checked_sub(3)?;
    if n < 4 || !g.is_simple() || g.edge_count() != 3 * n + 1 {
        return None;
    }
    let big: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == Ok(n + 1)).collect();
    let mid: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == Ok(n)).collect();
    if big.len() != 2 || mid.len() != 1 || g.multiplicity(big[0], big[1]) != 1 {
        return None;
    }
    let a = [big[0], big[1], mid[0]];
    let b: Vec<VertexId> = g.vertices().filter(|v| !a.contains(v)).collect();
    let complete = b.iter().all(|&y| a.iter().all(|&x| g.multiplicity(x, y) == 1));
    complete.then_some((a, b))
}

/// Colours a drawing of K_{3,n}^+ (n >= 4) in which two non-adjacent edges between the two
/// sides cross at a 4-valent crossing; good drawings always have one.
pub fn k3nplus_coloring(d: &PlanarizedDrawing) -> Result<FaceColoring, ColorError> {
    let g = d.underlying();
    let (a, b) = k3nplus_sides(g).ok_or(ColorError::NotK3nPlus)?;
    let a_end = |e: EdgeId| {
        let edge = g.edge(e).expect("edge");
        if a.contains(&edge.u) && !a.contains(&edge.v) {
            Some((edge.u, edge.v))
        } else if a.contains(&edge.v) && !a.contains(&edge.u) {
            Some((edge.v, edge.u))
        } else {
            None
        }
    };
    let site = d.crossings().find_map(|x| {
        let passes = d.passes(x);
        if passes.len() != 2 {
            return None;
        }
        let (p, q) = (a_end(passes[0].0)?, a_end(passes[1].0)?);
        (p.0 != q.0 && p.1 != q.1).then_some((x, p, q))
    });
    let (x, (u1, v1), (u2, v2)) = site.ok_or(ColorError::NoQualifyingCrossing)?;
    let (placed, h) = place_vertex_at_crossing(d, x)?;
    let u = h.max_vertex_id().expect("new vertex");

    let adjacent = g.multiplicity(u1, u2) == 1;
    let mut role: HashMap<VertexId, Role> = HashMap::new();
    let table = if adjacent {
        role.extend([(u1, X1), (u2, X2), (v1, V1), (v2, V2)]);
        &CASE1
    } else {
        // the endpoint on the extra edge plays x1, the other x3
        let (p, q) = if u1 == a[2] { ((u2, v2), (u1, v1)) } else { ((u1, v1), (u2, v2)) };
        role.extend([(p.0, X1), (q.0, X3), (p.1, V1), (q.1, V2)]);
        &CASE2
    };
    let third = *a.iter().find(|v| !role.contains_key(v)).expect("three A vertices");
    role.insert(third, if adjacent { X3 } else { X2 });
    role.insert(u, U);

    // H2 = K_{3,n-2} on A and the rest of B
    let a_ordered: Vec<VertexId> = [X1, X2, X3]
        .iter()
        .map(|r| *role.iter().find(|(_, s)| *s == r).expect("role").0)
        .collect();
    let rest: Vec<VertexId> = b.iter().copied().filter(|y| *y != v1 && *y != v2).collect();
    let base = kmn_mod3_orientation(3, rest.len())?;
    let mut h2: HashMap<(VertexId, VertexId), bool> = HashMap::new();
    for (_, t, hd) in base.arcs() {
        let name = |i: usize| if i < 3 { a_ordered[i] } else { rest[i - 3] };
        let (t, hd) = (name(t), name(hd));
        h2.insert((t.min(hd), t.max(hd)), t < hd);
    }
    if !adjacent {
        // make b a source, then reverse its arcs: each x_i gains excess 2
        let bv = rest[0];
        let source = a_ordered.iter().all(|&xi| h2[&(xi.min(bv), xi.max(bv))] == (bv < xi));
        if !source {
            h2.values_mut().for_each(|dir| *dir = !*dir);
        }
        for &xi in &a_ordered {
            let dir = h2.get_mut(&(xi.min(bv), xi.max(bv))).expect("arc at b");
            *dir = !*dir;
        }
    }

    let mut arcs = Vec::with_capacity(h.edge_count());
    for e in h.edges() {
        let (p, q) = (e.u, e.v);
        let in_h1 = role.contains_key(&p) && role.contains_key(&q);
        let (t, hd) = if in_h1 {
            let (rp, rq) = (role[&p], role[&q]);
            if table.contains(&(rp, rq)) {
                (p, q)
            } else if table.contains(&(rq, rp)) {
                (q, p)
            } else {
                return Err(ColorError::Construction(format!("edge {} missing from the case table", e.id)));
            }
        } else {
            let low_to_high = *h2.get(&(p.min(q), p.max(q))).ok_or(ColorError::NotK3nPlus)?;
            if low_to_high == (p < q) {
                (p, q)
            } else {
                (q, p)
            }
        };
        arcs.push((e.id, t, hd));
    }
    let o = Orientation::from_arcs(h, &arcs)?;
    if !o.is_mod3() {
        return Err(ColorError::Construction("orientation of H is not modulo-3".into()));
    }
    let lifted = lift_orientation(&placed, &o)?;
    // placing the vertex does not change the map, so face ids carry over
    coloring_from_mod3(&placed, &lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{circle_planarized, is_good_drawing};
    use crate::facecolor::color_faces_exact;
    use crate::flow3::mod3_orientation;
    use crate::multigraph::named::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn recognises_the_family() {
        let (a, b) = k3nplus_sides(&k3n_plus(4)).unwrap();
        assert_eq!(a, [0, 1, 2]);
        assert_eq!(b, vec![3, 4, 5, 6]);
        assert!(k3nplus_sides(&k3n_plus(3)).is_none());
        assert!(k3nplus_sides(&complete_bipartite(3, 5)).is_none());
    }

    #[test]
    fn colours_random_convex_drawings() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 4..=5 {
            let g = k3n_plus(n);
            assert!(mod3_orientation(&g).is_none());
            for _ in 0..6 {
                let mut order: Vec<_> = g.vertices().collect();
                order.shuffle(&mut rng);
                let d = circle_planarized(&g, &order).unwrap();
                assert!(is_good_drawing(&d).0);
                let c = k3nplus_coloring(&d).unwrap();
                assert!(c.is_proper(&d));
                assert!(color_faces_exact(&d, 3).is_some());
            }
        }
    }

    #[test]
    fn rejects_other_graphs() {
        let g = k3n_plus(3);
        let order: Vec<_> = g.vertices().collect();
        let d = circle_planarized(&g, &order).unwrap();
        assert_eq!(k3nplus_coloring(&d), Err(ColorError::NotK3nPlus));
    }
}
