//! Mutable view of a map for local surgery. Darts of the starting map are tracked through
//! every edit so that callers can transfer face data across the change.

use indexmap::IndexMap;

use crate::multigraph::{EdgeId, Multigraph};

use super::{twin, DartId, DrawingError, PlanarizedDrawing, PvId, PvKind, SegId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Fate {
    Alive,
    /// Merged into another dart that runs along the same side of the same curve.
    Alias(DartId),
    Gone,
}

/// Result of an edit: the new map and, for every dart of the old map, its image (if any).
#[derive(Debug, Clone)]
pub struct Surgery {
    pub drawing: PlanarizedDrawing,
    pub dart_map: Vec<Option<DartId>>,
}

#[derive(Debug, Clone)]
pub struct MapEditor {
    pub kinds: Vec<Option<PvKind>>,
    pub segs: Vec<Option<(PvId, PvId)>>,
    pub rot: Vec<Vec<DartId>>,
    pub trails: IndexMap<EdgeId, Vec<DartId>>,
    pub underlying: Multigraph,
    pub outer: Option<DartId>,
    fate: Vec<Fate>,
    original_darts: usize,
}

impl MapEditor {
    pub fn new(d: &PlanarizedDrawing) -> Self {
        let (kinds, segs, rot, trails, underlying, outer) = d.clone().into_parts();
        let nd = 2 * segs.len();
        MapEditor {
            kinds: kinds.into_iter().map(Some).collect(),
            segs: segs.into_iter().map(Some).collect(),
            rot,
            trails,
            underlying,
            outer,
            fate: vec![Fate::Alive; nd],
            original_darts: nd,
        }
    }

    pub fn origin(&self, d: DartId) -> PvId {
        let (a, b) = self.segs[d / 2].expect("live segment");
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }

    pub fn head(&self, d: DartId) -> PvId {
        self.origin(twin(d))
    }

    /// Moves the end of `d`'s segment that `d` leaves from; rotations are the caller's job.
    pub fn set_origin(&mut self, d: DartId, v: PvId) {
        let s = self.segs[d / 2].as_mut().expect("live segment");
        if d % 2 == 0 {
            s.0 = v;
        } else {
            s.1 = v;
        }
    }

    pub fn position(&self, d: DartId) -> usize {
        let v = self.origin(d);
        self.rot[v].iter().position(|&x| x == d).expect("dart in its rotation")
    }

    pub fn cw_next(&self, d: DartId) -> DartId {
        let r = &self.rot[self.origin(d)];
        r[(self.position(d) + 1) % r.len()]
    }

    pub fn face_succ(&self, d: DartId) -> DartId {
        self.cw_next(twin(d))
    }

    pub fn face_orbit(&self, d: DartId) -> Vec<DartId> {
        let mut out = vec![d];
        let mut x = self.face_succ(d);
        while x != d {
            out.push(x);
            x = self.face_succ(x);
        }
        out
    }

    pub fn is_alive(&self, d: DartId) -> bool {
        self.fate.get(d) == Some(&Fate::Alive)
    }

    /// `(edge, index)` of the trail element using the segment of `d`.
    pub fn owner(&self, d: DartId) -> (EdgeId, usize) {
        let s = d / 2;
        for (&e, tr) in &self.trails {
            if let Some(i) = tr.iter().position(|&x| x / 2 == s) {
                return (e, i);
            }
        }
        panic!("segment {s} is on no trail")
    }

    pub fn new_pv(&mut self, kind: PvKind) -> PvId {
        self.kinds.push(Some(kind));
        self.rot.push(Vec::new());
        self.kinds.len() - 1
    }

    /// New segment between `a` and `b`; its darts are not yet in any rotation.
    pub fn new_segment(&mut self, a: PvId, b: PvId) -> SegId {
        self.segs.push(Some((a, b)));
        self.fate.push(Fate::Alive);
        self.fate.push(Fate::Alive);
        self.segs.len() - 1
    }

    /// Inserts `d` into the rotation at its origin right after `anchor` (or alone).
    pub fn insert_after(&mut self, anchor: Option<DartId>, d: DartId) {
        let v = self.origin(d);
        match anchor {
            Some(a) => {
                let i = self.position(a);
                self.rot[v].insert(i + 1, d);
            }
            None => self.rot[v].push(d),
        }
    }

    fn remove_from_rotation(&mut self, d: DartId) {
        let v = self.origin(d);
        let i = self.position(d);
        self.rot[v].remove(i);
    }

    /// Re-attaches the given darts to `v`, appended to its rotation in the given order.
    pub fn move_darts(&mut self, darts: &[DartId], v: PvId) {
        for &d in darts {
            self.remove_from_rotation(d);
            self.set_origin(d, v);
            self.rot[v].push(d);
        }
    }

    /// Picks a surviving outer dart before `segments` are deleted.
    fn keep_outer_away_from(&mut self, segments: &[SegId]) {
        let Some(o) = self.outer else { return };
        let doomed = |d: DartId| segments.contains(&(d / 2));
        if !doomed(o) {
            return;
        }
        // faces across doomed segments merge with the outer face
        let mut seen = vec![o];
        let mut queue = vec![o];
        while let Some(start) = queue.pop() {
            for x in self.face_orbit(start) {
                if !doomed(x) {
                    self.outer = Some(x);
                    return;
                }
                let t = twin(x);
                if !seen.contains(&t) {
                    seen.push(t);
                    queue.push(t);
                }
            }
        }
        self.outer = None;
    }

    /// Deletes segments (their darts leave the rotations). Trails must be fixed by the caller.
    pub fn remove_segments(&mut self, segments: &[SegId]) {
        self.keep_outer_away_from(segments);
        for &s in segments {
            for d in [2 * s, 2 * s + 1] {
                self.remove_from_rotation(d);
                self.fate[d] = Fate::Gone;
            }
        }
        for &s in segments {
            self.segs[s] = None;
        }
    }

    pub fn remove_pv(&mut self, v: PvId) {
        assert!(self.rot[v].is_empty(), "only isolated planar vertices can be removed");
        self.kinds[v] = None;
    }

    /// Merges the two segments at a degree-2 crossing vertex into one and deletes the vertex.
    pub fn dissolve(&mut self, x: PvId) {
        assert_eq!(self.rot[x].len(), 2, "dissolve needs degree 2");
        let (e, i) = self.owner(self.rot[x][0]);
        let tr = &self.trails[&e];
        // the trail arrives along a and leaves along b
        let (a, b) = if self.rot[x][0] == tr[i] {
            (tr[i - 1], tr[i])
        } else {
            (tr[i], tr[i + 1])
        };
        let far = self.head(b);
        let tb = twin(b);
        // twin(a) takes over twin(b)'s place at the far end
        self.remove_from_rotation(twin(a));
        let pos = self.position(tb);
        self.rot[far][pos] = twin(a);
        self.rot[x].clear();
        self.set_origin(twin(a), far);
        self.segs[b / 2] = None;
        self.fate[b] = Fate::Alias(a);
        self.fate[tb] = Fate::Alias(twin(a));
        if self.outer == Some(b) {
            self.outer = Some(a);
        } else if self.outer == Some(tb) {
            self.outer = Some(twin(a));
        }
        let tr = self.trails.get_mut(&e).expect("trail");
        let k = tr.iter().position(|&y| y == b).expect("b on trail");
        tr.remove(k);
        self.kinds[x] = None;
    }

    /// Dissolves every degree-2 crossing and deletes every isolated crossing.
    pub fn tidy(&mut self) {
        for v in 0..self.kinds.len() {
            if self.kinds[v] == Some(PvKind::Crossing) {
                match self.rot[v].len() {
                    0 => self.remove_pv(v),
                    2 => self.dissolve(v),
                    _ => {}
                }
            }
        }
    }

    /// Records that the (deleted) dart `old` of the starting map now lives on as `new`.
    pub fn set_alias(&mut self, old: DartId, new: DartId) {
        self.fate[old] = Fate::Alias(new);
    }

    fn resolve(&self, mut d: DartId) -> Option<DartId> {
        loop {
            match self.fate[d] {
                Fate::Alive => return Some(d),
                Fate::Alias(x) => d = x,
                Fate::Gone => return None,
            }
        }
    }

    /// Compacts ids and validates.
    pub fn finish(self) -> Result<Surgery, DrawingError> {
        let mut pv_new = vec![usize::MAX; self.kinds.len()];
        let mut kinds = Vec::new();
        for (v, k) in self.kinds.iter().enumerate() {
            if let Some(k) = k {
                pv_new[v] = kinds.len();
                kinds.push(*k);
            }
        }
        let mut seg_new = vec![usize::MAX; self.segs.len()];
        let mut segs = Vec::new();
        for (s, e) in self.segs.iter().enumerate() {
            if let Some((a, b)) = e {
                seg_new[s] = segs.len();
                segs.push((pv_new[*a], pv_new[*b]));
            }
        }
        let dart_new = |d: DartId| 2 * seg_new[d / 2] + d % 2;
        let mut rot = Vec::with_capacity(kinds.len());
        for (v, r) in self.rot.iter().enumerate() {
            if pv_new[v] != usize::MAX {
                rot.push(r.iter().map(|&d| dart_new(d)).collect());
            }
        }
        let trails = self.trails.iter().map(|(&e, tr)| (e, tr.iter().map(|&d| dart_new(d)).collect())).collect();
        let outer = self.outer.and_then(|o| self.resolve(o)).map(dart_new);
        let dart_map = (0..self.original_darts).map(|d| self.resolve(d).map(dart_new)).collect();
        let drawing = PlanarizedDrawing::from_parts(kinds, segs, rot, trails, self.underlying, outer)?;
        Ok(Surgery { drawing, dart_map })
    }
}
