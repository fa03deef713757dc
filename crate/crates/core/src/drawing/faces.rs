//! Face orbits and the dual multigraph.

use crate::multigraph::Multigraph;

use super::{seg_of, twin, DartId, PlanarizedDrawing};

pub type FaceId = usize;

/// Faces ordered by their smallest dart; face ids are positions in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceStructure {
    pub orbits: Vec<Vec<DartId>>,
    pub face_of: Vec<FaceId>,
    pub outer: FaceId,
}

impl FaceStructure {
    pub fn of(d: &PlanarizedDrawing) -> Self {
        let nd = d.dart_count();
        if nd == 0 {
            return FaceStructure { orbits: vec![Vec::new()], face_of: Vec::new(), outer: 0 };
        }
        let mut face_of = vec![usize::MAX; nd];
        let mut orbits = Vec::new();
        // scanning darts in increasing order names faces by their minimum dart
        for start in 0..nd {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut x = start;
            loop {
                face_of[x] = id;
                orbit.push(x);
                x = d.face_succ(x);
                if x == start {
                    break;
                }
            }
            orbits.push(orbit);
        }
        let outer = face_of[d.outer_dart().expect("map with segments has an outer dart")];
        FaceStructure { orbits, face_of, outer }
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// The face to the left of `d`.
    pub fn face(&self, d: DartId) -> FaceId {
        self.face_of[d]
    }

    pub fn boundary(&self, f: FaceId) -> &[DartId] {
        &self.orbits[f]
    }

    pub fn dual(&self, d: &PlanarizedDrawing) -> DualGraph {
        let mut g = Multigraph::with_vertices(self.len());
        for s in 0..d.seg_count() {
            g.add_edge(s, self.face_of[2 * s], self.face_of[2 * s + 1]).expect("fresh id");
        }
        DualGraph { graph: g, outer: self.outer }
    }

    /// Whether the two sides of the segment of `d` are the same face.
    pub fn is_bridge_segment(&self, d: DartId) -> bool {
        self.face_of[d] == self.face_of[twin(d)]
    }

    /// Faces incident with planar vertex `v` (with repetition, in rotation order).
    pub fn faces_at(&self, d: &PlanarizedDrawing, v: usize) -> Vec<FaceId> {
        d.rotation(v).iter().map(|&x| self.face_of[x]).collect()
    }

    /// Segments on the boundary of face `f`.
    pub fn boundary_segments(&self, f: FaceId) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits[f].iter().map(|&x| seg_of(x)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

/// Faces as vertices, one edge per segment (edge id = segment id).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    pub graph: Multigraph,
    pub outer: FaceId,
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;

    #[test]
    fn square_faces_and_dual() {
        let d = square();
        let f = d.faces();
        assert_eq!(f.len(), 2);
        assert_eq!(f.orbits.iter().map(|o| o.len()).sum::<usize>(), 8);
        let dual = d.dual();
        assert_eq!(dual.graph.vertex_count(), 2);
        assert_eq!(dual.graph.edge_count(), 4);
        assert_eq!(dual.graph.multiplicity(0, 1), 4);
        // the outer face is the one all four vertices see from outside
        assert!(f.outer < 2);
    }

    #[test]
    fn figure_eight_dual_is_a_path() {
        let d = figure_eight();
        let dual = d.dual();
        assert_eq!(dual.graph.vertex_count(), 3);
        let o = dual.outer;
        let lobes: Vec<usize> = (0..3).filter(|&x| x != o).collect();
        assert_eq!(dual.graph.multiplicity(lobes[0], lobes[1]), 0);
        assert!(dual.graph.multiplicity(o, lobes[0]) > 0);
        assert!(dual.graph.multiplicity(o, lobes[1]) > 0);
    }
}
