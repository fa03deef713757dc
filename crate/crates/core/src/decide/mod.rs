//! Deciding whether every drawing of a graph has a face-3-colouring, for the classes where
//! this is settled, with certificates that can be checked independently.

pub mod gate;
pub mod verify;
pub mod witness;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::flow3::{mod3_orientation, Orientation};
use crate::guards::Guards;
use crate::multigraph::connectivity::edge_disjoint_paths;
use crate::multigraph::iso::find_isomorphism;
use crate::multigraph::named::{complete_bipartite, k3n_plus, wheel};
use crate::multigraph::{edge_connectivity, has_minor, has_subcontraction, EdgeId, GraphError, Multigraph, VertexId};

pub use gate::{conjecture_gate, GateReport};
pub use verify::certificate_verify;
pub use witness::{bridge_drawing, subcontraction_drawing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    DegreeOne,
    Bridge,
    Mod3Orientation,
    FourEdgeConnected,
    CubicBipartite,
    Subcubic,
    K33Free,
    K3nPlus,
    BadSubcontraction,
    None,
}

/// An arc `(edge, tail, head)`.
pub type Arc = (EdgeId, VertexId, VertexId);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointPaths {
    pub target: VertexId,
    pub paths: Vec<Vec<EdgeId>>,
}

/// How a negative flow claim was reached; the checker repeats it with an independent method.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub method: String,
    /// Edges outside a spanning forest; the independent check enumerates 2^cyclomatic cases.
    pub cyclomatic: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Mod3Orientation { arcs: Vec<Arc> },
    /// Four edge-disjoint paths from `root` to every other vertex.
    FourEdgeConnected { root: VertexId, paths: Vec<DisjointPaths> },
    /// A cubic graph with either a bipartition or an odd cycle (closed vertex walk with its edges).
    CubicBipartite { bipartition: Option<(Vec<VertexId>, Vec<VertexId>)>, odd_cycle: Option<(Vec<VertexId>, Vec<EdgeId>)> },
    SubcubicNoFlow { refutation: Refutation },
    K33FreeFlow { minor_guard: usize, refutation: Refutation },
    /// `map` sends vertices of the graph to those of the standard K_{3,n}^+.
    K3nPlus { n: usize, map: Vec<(VertexId, VertexId)> },
    /// The two sides of a bridge; placing them on disjoint arcs of a circle makes the bridge
    /// border the outer face on both sides.
    BridgeObstruction { edge: EdgeId, side: Vec<VertexId> },
    DegreeOneObstruction { vertex: VertexId },
    /// Identification classes onto the odd wheel with `rim` rim vertices, listed rim first,
    /// hub last (the vertex order of the standard wheel).
    BadSubcontraction { rim: usize, classes: Vec<Vec<VertexId>> },
    Attempted { rules: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub rule: Rule,
    pub micros: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub rule: Rule,
    pub certificate: Certificate,
    pub timings: Vec<Timing>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecideOptions {
    pub guards: Guards,
    /// Rim sizes of the odd wheels tried as obstructions.
    pub wheels: Vec<usize>,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { guards: Guards::default(), wheels: vec![3, 5, 7] }
    }
}

pub(crate) fn arcs_of(o: &Orientation) -> Vec<Arc> {
    o.arcs()
}

pub(crate) fn cyclomatic(g: &Multigraph) -> usize {
    g.edge_count() + g.components().len() - g.vertex_count()
}

fn refutation(g: &Multigraph) -> Refutation {
    Refutation { method: "gf3-elimination".into(), cyclomatic: cyclomatic(g) }
}

/// Whether some stored odd wheel is a subcontraction, with the witness classes.
pub fn bad_subcontraction(g: &Multigraph, wheels: &[usize], guard: usize) -> Result<Option<Certificate>, GraphError> {
    for &k in wheels {
        if k < 3 || k % 2 == 0 || k + 1 > g.vertex_count() {
            continue;
        }
        if let Some(w) = has_subcontraction(g, &wheel(k), guard)? {
            return Ok(Some(Certificate::BadSubcontraction { rim: k, classes: w.classes }));
        }
    }
    Ok(None)
}

/// The rule ladder: degree-one vertex, bridge, modulo-3-orientation, 4-edge-connectivity,
/// subcubic, K_{3,3}-minor-free, K_{3,n}^+, odd-wheel subcontraction. The first rule that
/// applies decides. Rules whose search exceeds a guard are skipped.
pub fn decide_facially_3_colorable(g: &Multigraph) -> Decision {
    decide_with(g, &DecideOptions::default())
}

pub fn decide_with(g: &Multigraph, opts: &DecideOptions) -> Decision {
    let mut timings = Vec::new();
    let mut attempted = Vec::new();
    let mut run = |rule: Rule, f: &mut dyn FnMut() -> Result<Option<(Verdict, Certificate)>, GraphError>| {
        let t = Instant::now();
        let out = f();
        timings.push(Timing { rule, micros: t.elapsed().as_micros() });
        match out {
            Ok(Some(hit)) => Some(hit),
            Ok(None) => {
                attempted.push(format!("{}", serde_json::to_string(&rule).expect("rule").trim_matches('"')));
                None
            }
            Err(e) => {
                attempted.push(format!("{}: {e}", serde_json::to_string(&rule).expect("rule").trim_matches('"')));
                None
            }
        }
    };
    let flow = std::cell::OnceCell::new();
    let flowable = || flow.get_or_init(|| mod3_orientation(g)).clone();

    let ladder: Vec<(Rule, Box<dyn Fn() -> Result<Option<(Verdict, Certificate)>, GraphError> + '_>)> = vec![
        (
            Rule::DegreeOne,
            Box::new(|| {
                Ok(g.vertices()
                    .find(|&v| g.degree(v) == Ok(1))
                    .map(|vertex| (Verdict::No, Certificate::DegreeOneObstruction { vertex })))
            }),
        ),
        (
            Rule::Bridge,
            Box::new(|| {
                Ok(g.bridges().first().map(|&edge| {
                    let e = *g.edge(edge).expect("bridge");
                    let mut h = g.clone();
                    h.remove_edge(edge).expect("bridge");
                    let side = h.components().into_iter().find(|c| c.contains(&e.u)).expect("component");
                    (Verdict::No, Certificate::BridgeObstruction { edge, side })
                }))
            }),
        ),
        (
            Rule::Mod3Orientation,
            Box::new(|| Ok(flowable().map(|o| (Verdict::Yes, Certificate::Mod3Orientation { arcs: arcs_of(&o) })))),
        ),
        (
            Rule::FourEdgeConnected,
            Box::new(|| {
                if g.vertex_count() < 2 || !edge_connectivity(g, 3).is_at_least(4) {
                    return Ok(None);
                }
                let root = g.vertices().next().expect("vertex");
                let paths = g
                    .vertices()
                    .filter(|&t| t != root)
                    .map(|target| DisjointPaths { target, paths: edge_disjoint_paths(g, root, target, 4).expect("4-edge-connected") })
                    .collect();
                Ok(Some((Verdict::Yes, Certificate::FourEdgeConnected { root, paths })))
            }),
        ),
        (
            Rule::CubicBipartite,
            Box::new(|| {
                if !g.is_cubic() {
                    return Ok(None);
                }
                // a cubic graph is 3-flowable exactly when it is bipartite
                let cert = match g.is_bipartite() {
                    Some(b) => Certificate::CubicBipartite { bipartition: Some((b.left, b.right)), odd_cycle: None },
                    None => Certificate::CubicBipartite { bipartition: None, odd_cycle: g.shortest_odd_cycle() },
                };
                let verdict = if flowable().is_some() { Verdict::Yes } else { Verdict::No };
                Ok(Some((verdict, cert)))
            }),
        ),
        (
            Rule::Subcubic,
            Box::new(|| {
                if g.max_degree() > 3 {
                    return Ok(None);
                }
                Ok(Some(match flowable() {
                    Some(o) => (Verdict::Yes, Certificate::Mod3Orientation { arcs: arcs_of(&o) }),
                    None => (Verdict::No, Certificate::SubcubicNoFlow { refutation: refutation(g) }),
                }))
            }),
        ),
        (
            Rule::K33Free,
            Box::new(|| {
                let simple = g.simplified();
                if has_minor(&simple, &complete_bipartite(3, 3), opts.guards.minor)?.is_some() {
                    return Ok(None);
                }
                Ok(Some(match flowable() {
                    Some(o) => (Verdict::Yes, Certificate::Mod3Orientation { arcs: arcs_of(&o) }),
                    None => (Verdict::No, Certificate::K33FreeFlow { minor_guard: opts.guards.minor, refutation: refutation(g) }),
                }))
            }),
        ),
        (
            Rule::K3nPlus,
            Box::new(|| {
                let Some(n) = g.vertex_count().checked_sub(3).filter(|&n| n >= 4) else { return Ok(None) };
                Ok(find_isomorphism(g, &k3n_plus(n)).map(|m| {
                    let mut map: Vec<(VertexId, VertexId)> = m.into_iter().collect();
                    map.sort_unstable();
                    (Verdict::Yes, Certificate::K3nPlus { n, map })
                }))
            }),
        ),
        (
            Rule::BadSubcontraction,
            Box::new(|| Ok(bad_subcontraction(g, &opts.wheels, opts.guards.subcontraction)?.map(|c| (Verdict::No, c)))),
        ),
    ];
    for (rule, f) in &ladder {
        if let Some((verdict, certificate)) = run(*rule, &mut || f()) {
            return Decision { verdict, rule: *rule, certificate, timings };
        }
    }
    Decision { verdict: Verdict::Unknown, rule: Rule::None, certificate: Certificate::Attempted { rules: attempted }, timings }
}
