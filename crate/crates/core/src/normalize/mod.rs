//! Turning a drawing into a good drawing by local redrawing, keeping a record that lets a
//! face colouring of the result be carried back to the input.

pub mod split;
pub mod surgery;

use serde::Serialize;
use thiserror::Error;

use crate::drawing::editor::Surgery;
use crate::drawing::good::touchings;
use crate::drawing::{crossing_triples, find_violations, DartId, DrawingError, PlanarizedDrawing, PvId, ViolationKind};
use crate::facecolor::{coloring_from_mod3, mod3_from_coloring, ColorError, FaceColoring};
use crate::flow3::Orientation;
use crate::multigraph::EdgeId;

pub use split::split_multicrossing;
pub use surgery::{isolate_loop, remove_touching, reroute_self_intersection, shared_crossings, uncross_adjacent, uncross_double};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("planar vertex {0} is not a 4-valent crossing")]
    NotSimpleCrossing(PvId),
    #[error("crossing {0} is not a touching")]
    NotTouching(PvId),
    #[error("crossing {0} has the wrong kind for this move")]
    WrongKind(PvId),
    #[error("edges {0} and {1} share fewer than two crossings")]
    TooFewShared(EdgeId, EdgeId),
    #[error("edges {0} and {1} are adjacent")]
    Adjacent(EdgeId, EdgeId),
    #[error("edge {0} is not a loop")]
    NotLoop(EdgeId),
    #[error("loop {0} crosses nothing")]
    LoopCrossingFree(EdgeId),
    #[error("planar vertex {0} is not a crossing of three or more passes")]
    NotMultiCrossing(PvId),
    #[error("no generic chord layout found at crossing {0}")]
    Perturbation(PvId),
    #[error("no progress after {0} rounds")]
    RoundBound(usize),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Operation {
    SplitMulticrossing,
    RemoveTouching,
    RerouteSelfIntersection,
    UncrossAdjacent,
    UncrossDouble,
    IsolateLoop,
}

/// Crossing triples and touchings; the pair decreases lexicographically over every round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Measure {
    pub triples: usize,
    pub touchings: usize,
}

impl Measure {
    pub fn of(d: &PlanarizedDrawing) -> Self {
        Measure { triples: crossing_triples(d), touchings: touchings(d) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryReport {
    pub round: usize,
    pub operation: Operation,
    /// Planar vertices of the drawing the move was applied to.
    pub sites: Vec<PvId>,
    pub edges: Vec<EdgeId>,
    pub before: Measure,
    pub after: Measure,
}

/// How colours travel back across a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Every old face takes the colour of the new face its darts went to.
    Faces,
    /// Through the modulo-3-orientation of the new map; needs at most three colours.
    Orientation,
}

#[derive(Debug, Clone)]
pub struct Step {
    pub before: PlanarizedDrawing,
    pub dart_map: Vec<Option<DartId>>,
    pub route: Route,
}

#[derive(Debug, Clone)]
pub struct Normalized {
    pub drawing: PlanarizedDrawing,
    pub reports: Vec<SurgeryReport>,
    pub steps: Vec<Step>,
}

impl Normalized {
    /// Carries a proper colouring of the normalized drawing back to the input drawing.
    pub fn transfer(&self, c: &FaceColoring) -> Result<FaceColoring, ColorError> {
        let mut after = &self.drawing;
        let mut c = c.clone();
        if !c.is_proper(after) {
            return Err(ColorError::NotProper);
        }
        for step in self.steps.iter().rev() {
            c = transfer_step(step, after, &c)?;
            after = &step.before;
        }
        Ok(c)
    }
}

fn transfer_step(step: &Step, after: &PlanarizedDrawing, c: &FaceColoring) -> Result<FaceColoring, ColorError> {
    let old = &step.before;
    let out = match step.route {
        Route::Faces => {
            let (fo, fa) = (old.faces(), after.faces());
            let colors = fo
                .orbits
                .iter()
                .map(|orbit| {
                    let image = orbit.iter().find_map(|&x| step.dart_map[x]).ok_or(ColorError::Mismatch)?;
                    Ok(c.colors[fa.face(image)])
                })
                .collect::<Result<Vec<u8>, ColorError>>()?;
            FaceColoring { k: c.k, colors }
        }
        Route::Orientation => {
            let o = mod3_from_coloring(after, c)?;
            let forward = (0..old.seg_count())
                .map(|s| {
                    let image = step.dart_map[2 * s].ok_or(ColorError::Mismatch)?;
                    Ok(o.forward[image / 2] == (image % 2 == 0))
                })
                .collect::<Result<Vec<bool>, ColorError>>()?;
            coloring_from_mod3(old, &Orientation { graph: old.planar_graph(), forward })?
        }
    };
    if !out.is_proper(old) {
        return Err(ColorError::NotProper);
    }
    Ok(out)
}

struct Run {
    current: PlanarizedDrawing,
    reports: Vec<SurgeryReport>,
    steps: Vec<Step>,
    round: usize,
}

impl Run {
    fn apply(&mut self, op: Operation, sites: Vec<PvId>, edges: Vec<EdgeId>, s: Surgery, route: Route) {
        let before = Measure::of(&self.current);
        let after = Measure::of(&s.drawing);
        self.reports.push(SurgeryReport { round: self.round, operation: op, sites, edges, before, after });
        let old = std::mem::replace(&mut self.current, s.drawing);
        self.steps.push(Step { before: old, dart_map: s.dart_map, route });
    }

    fn touching(&mut self, x: PvId) -> Result<(), NormalizeError> {
        let edges = self.current.passes(x).iter().map(|p| p.0).collect();
        let s = remove_touching(&self.current, x)?;
        self.apply(Operation::RemoveTouching, vec![x], edges, s, Route::Faces);
        Ok(())
    }
}

fn priority(kind: ViolationKind) -> usize {
    match kind {
        ViolationKind::MultiCrossing => 0,
        ViolationKind::Touching => 1,
        ViolationKind::SelfIntersection => 2,
        ViolationKind::LoopCrossing => 3,
        ViolationKind::AdjacentCrossing => 4,
        ViolationKind::DoubleCrossing => 5,
    }
}

/// Splits every multi-crossing, then repairs one violation per round (touchings first, then
/// self-crossings, crossing loops, adjacent crossings and double crossings) until the drawing
/// is good. Each round lowers the number of crossing triples.
pub fn normalize(d: &PlanarizedDrawing) -> Result<Normalized, NormalizeError> {
    let start = Measure::of(d);
    let bound = start.triples + start.touchings + 1;
    let mut run = Run { current: d.clone(), reports: Vec::new(), steps: Vec::new(), round: 0 };

    // multi-crossings never arise later, so one pass settles them
    loop {
        let multi = run.current.crossings().find(|&x| run.current.degree(x) >= 6);
        let Some(x) = multi else { break };
        let edges = run.current.passes(x).iter().map(|p| p.0).collect();
        let s = split_multicrossing(&run.current, x)?;
        run.apply(Operation::SplitMulticrossing, vec![x], edges, s, Route::Faces);
    }

    loop {
        let violations = find_violations(&run.current);
        let Some(v) = violations.iter().min_by_key(|v| priority(v.kind)) else { break };
        run.round += 1;
        if run.round > bound {
            return Err(NormalizeError::RoundBound(bound));
        }
        let x = v.sites[0];
        match v.kind {
            ViolationKind::MultiCrossing => {
                let s = split_multicrossing(&run.current, x)?;
                run.apply(Operation::SplitMulticrossing, vec![x], v.edges.clone(), s, Route::Faces);
            }
            ViolationKind::Touching => run.touching(x)?,
            ViolationKind::SelfIntersection => {
                let s = reroute_self_intersection(&run.current, x)?;
                run.apply(Operation::RerouteSelfIntersection, vec![x], v.edges.clone(), s, Route::Faces);
                run.touching(x)?;
            }
            ViolationKind::LoopCrossing => {
                let g = run.current.underlying();
                let e = *v.edges.iter().find(|&&e| g.edge(e).is_some_and(|ed| ed.is_loop())).expect("a loop");
                let s = isolate_loop(&run.current, e)?;
                run.apply(Operation::IsolateLoop, vec![x], vec![e], s, Route::Orientation);
            }
            ViolationKind::AdjacentCrossing => {
                let s = uncross_adjacent(&run.current, x)?;
                run.apply(Operation::UncrossAdjacent, vec![x], v.edges.clone(), s, Route::Faces);
                run.touching(x)?;
            }
            ViolationKind::DoubleCrossing => {
                let (e1, e2) = (v.edges[0], v.edges[1]);
                let (s, [p1, p2]) = uncross_double(&run.current, e1, e2)?;
                run.apply(Operation::UncrossDouble, vec![p1, p2], vec![e1, e2], s, Route::Faces);
                let (hi, lo) = (p1.max(p2), p1.min(p2));
                let probe = run.current.rotation(lo)[0];
                run.touching(hi)?;
                let map = &run.steps.last().expect("step").dart_map;
                let image = map[probe].expect("touching removal keeps every dart");
                let lo = run.current.origin(image);
                run.touching(lo)?;
            }
        }
    }
    Ok(Normalized { drawing: run.current, reports: run.reports, steps: run.steps })
}

#[cfg(test)]
mod tests;
