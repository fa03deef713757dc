//! Face colourings of drawings and their relation to modulo-3-orientations.

use std::collections::VecDeque;

use thiserror::Error;

use crate::drawing::{twin, DrawingError, FaceId, PlanarizedDrawing, PvId};
use crate::flow3::FlowError;
use crate::multigraph::{EdgeId, GraphError, VertexId};

pub mod duality;
pub mod k3nplus;
pub mod outer;

pub use duality::{coloring_from_mod3, lift_orientation, mod3_from_coloring};
pub use k3nplus::k3nplus_coloring;
pub use outer::{leafless_3colorable_drawing, outerface_3coloring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("orientation does not match the graph")]
    Mismatch,
    #[error("orientation is not a modulo-3-orientation")]
    NotMod3,
    #[error("potential is inconsistent across segment {0}")]
    Inconsistent(usize),
    #[error("colouring is not proper")]
    NotProper,
    #[error("vertex {0} does not lie on the outer face")]
    NotOnOuterFace(VertexId),
    #[error("edge {0} is a bridge")]
    Bridge(EdgeId),
    #[error("vertex {0} has degree {1}, need at least 2")]
    LowDegree(VertexId, usize),
    #[error("underlying graph is not K_{{3,n}}^+ with n >= 4")]
    NotK3nPlus,
    #[error("no crossing between two non-adjacent edges of the 3-side star")]
    NoQualifyingCrossing,
    #[error("crossing vertex {0} could not be placed")]
    Placement(PvId),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Colours in `0..k`, indexed by face id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceColoring {
    pub k: u8,
    pub colors: Vec<u8>,
}

impl FaceColoring {
    pub fn color(&self, f: FaceId) -> u8 {
        self.colors[f]
    }

    /// One colour per face, all below `k`, and the two sides of every segment differ.
    pub fn is_proper(&self, d: &PlanarizedDrawing) -> bool {
        let f = d.faces();
        self.colors.len() == f.len()
            && self.colors.iter().all(|&c| c < self.k)
            && (0..d.seg_count()).all(|s| self.colors[f.face(2 * s)] != self.colors[f.face(2 * s + 1)])
    }

    pub fn colors_used(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// Simple adjacency of the dual, or `None` if some segment has one face on both sides.
fn dual_adjacency(d: &PlanarizedDrawing) -> Option<(Vec<Vec<FaceId>>, FaceId)> {
    let f = d.faces();
    let mut adj = vec![Vec::new(); f.len()];
    for s in 0..d.seg_count() {
        let (a, b) = (f.face(2 * s), f.face(2 * s + 1));
        if a == b {
            return None;
        }
        if !adj[a].contains(&b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    Some((adj, f.outer))
}

/// Proper face-`k`-colouring by exhaustive search, or `None` if there is none. The outer face
/// gets colour 0 and colours are numbered by first appearance in face order after it.
pub fn color_faces_exact(d: &PlanarizedDrawing, k: u8) -> Option<FaceColoring> {
    let (adj, outer) = dual_adjacency(d)?;
    let colors = dsatur(&adj, k, outer)?;
    Some(FaceColoring { k, colors: canonical(&colors, outer) })
}

fn canonical(colors: &[u8], first: usize) -> Vec<u8> {
    let mut relabel = [u8::MAX; 256];
    let mut next = 0;
    let order = std::iter::once(first).chain((0..colors.len()).filter(|&i| i != first));
    for i in order {
        let c = colors[i] as usize;
        if relabel[c] == u8::MAX {
            relabel[c] = next;
            next += 1;
        }
    }
    colors.iter().map(|&c| relabel[c as usize]).collect()
}

/// Backtracking with saturation-degree ordering; new colours are opened one at a time.
fn dsatur(adj: &[Vec<usize>], k: u8, first: usize) -> Option<Vec<u8>> {
    let n = adj.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![u8::MAX; n];
    colors[first] = 0;
    if search(adj, k, &mut colors, 1, 1) {
        Some(colors)
    } else {
        None
    }
}

fn search(adj: &[Vec<usize>], k: u8, colors: &mut [u8], done: usize, used: u8) -> bool {
    if done == colors.len() {
        return true;
    }
    // most saturated uncoloured vertex, then most uncoloured neighbours, then lowest id
    let mut best = usize::MAX;
    let mut key = (0usize, 0usize);
    let mut best_mask = 0u64;
    for v in 0..colors.len() {
        if colors[v] != u8::MAX {
            continue;
        }
        let mut mask = 0u64;
        let mut free = 0;
        for &w in &adj[v] {
            if colors[w] == u8::MAX {
                free += 1;
            } else {
                mask |= 1 << colors[w];
            }
        }
        let sat = mask.count_ones() as usize;
        if best == usize::MAX || (sat, free) > key {
            best = v;
            key = (sat, free);
            best_mask = mask;
        }
    }
    let limit = k.min(used + 1);
    for c in 0..limit {
        if best_mask & (1 << c) != 0 {
            continue;
        }
        colors[best] = c;
        if search(adj, k, colors, done + 1, used.max(c + 1)) {
            return true;
        }
    }
    colors[best] = u8::MAX;
    false
}

/// Two-colouring of the faces (outer face 0), which exists exactly for Eulerian graphs.
pub fn face_2_coloring(d: &PlanarizedDrawing) -> Option<FaceColoring> {
    let f = d.faces();
    let mut colors = vec![u8::MAX; f.len()];
    colors[f.outer] = 0;
    let mut queue = VecDeque::from([f.outer]);
    while let Some(a) = queue.pop_front() {
        for &x in f.boundary(a) {
            let b = f.face(twin(x));
            if colors[b] == u8::MAX {
                colors[b] = 1 - colors[a];
                queue.push_back(b);
            } else if colors[b] == colors[a] {
                return None;
            }
        }
    }
    Some(FaceColoring { k: 2, colors })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    pub use crate::drawing::fixtures::*;

    #[test]
    fn square_two_colours() {
        let d = square();
        let c = color_faces_exact(&d, 2).unwrap();
        let outer = d.faces().outer;
        assert_eq!(c.colors[outer], 0);
        assert_eq!(c.colors[1 - outer], 1);
        assert!(c.is_proper(&d));
        assert_eq!(face_2_coloring(&d), Some(c));
    }

    #[test]
    fn k4_drawings() {
        // the convex drawing has a wheel W4 as dual, the plane drawing a K4
        let d = convex_k4();
        let c = color_faces_exact(&d, 3).unwrap();
        assert!(c.is_proper(&d));
        assert!(face_2_coloring(&d).is_none());
        let plane = straight(&[(0, 0), (6, 0), (3, 6), (3, 2)], &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]);
        assert!(color_faces_exact(&plane, 3).is_none());
        assert!(color_faces_exact(&plane, 4).unwrap().is_proper(&plane));
    }

    #[test]
    fn figure_eight_lobes() {
        let d = figure_eight();
        let c = face_2_coloring(&d).unwrap();
        let outer = d.faces().outer;
        for f in 0..3 {
            assert_eq!(c.colors[f], u8::from(f != outer));
        }
    }

    #[test]
    fn bridge_blocks_every_k() {
        // a path drawn in the plane: both sides of each segment are the outer face
        let d = straight(&[(0, 0), (1, 0), (2, 1)], &[(0, 1), (1, 2)]);
        for k in 1..=4 {
            assert!(color_faces_exact(&d, k).is_none());
        }
        assert!(face_2_coloring(&d).is_none());
    }
}
