//! Screening a graph against the conjecture that facially 3-colourable graphs without a
//! K_{3,n}^+ subcontraction (n >= 4) are 3-flowable.

use serde::Serialize;

use crate::flow3::{is_vertex_3_critical, mod3_orientation};
use crate::guards::Guards;
use crate::multigraph::connectivity::small_bonds;
use crate::multigraph::named::{complete_bipartite, k3n_plus};
use crate::multigraph::{edge_connectivity, has_minor, has_subcontraction, GraphError, Multigraph};

use super::{decide_with, DecideOptions, Verdict};

/// Properties every smallest counterexample has.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MincexFilters {
    pub vertex_3_critical: bool,
    pub simple: bool,
    /// 3-edge-connected, and every 3-edge-cut is the star of a vertex.
    pub star_cuts_only: bool,
    pub max_degree_at_least_4: bool,
    pub k33_minor: bool,
}

impl MincexFilters {
    pub fn failed(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.vertex_3_critical {
            out.push("vertex_3_critical");
        }
        if !self.simple {
            out.push("simple");
        }
        if !self.star_cuts_only {
            out.push("star_cuts_only");
        }
        if !self.max_degree_at_least_4 {
            out.push("max_degree_at_least_4");
        }
        if !self.k33_minor {
            out.push("k33_minor");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateReport {
    pub facially_3_colorable: Verdict,
    /// `(n, present)` for every n tried.
    pub k3n_plus_subcontractions: Vec<(usize, bool)>,
    pub three_flowable: bool,
    /// Facially 3-colourable, not 3-flowable, and no K_{3,n}^+ subcontraction was found.
    pub counterexample: bool,
    pub filters: MincexFilters,
    pub failed_filters: Vec<&'static str>,
}

pub fn conjecture_gate(g: &Multigraph, guards: &Guards) -> Result<GateReport, GraphError> {
    let n = g.vertex_count();
    if n > guards.subcontraction {
        return Err(GraphError::GuardExceeded { what: "conjecture gate", limit: guards.subcontraction, actual: n });
    }
    let decision = decide_with(g, &DecideOptions { guards: *guards, ..DecideOptions::default() });
    let mut k3n = Vec::new();
    for m in 4..=guards.k3n {
        if m + 3 > n {
            break;
        }
        k3n.push((m, has_subcontraction(g, &k3n_plus(m), guards.subcontraction)?.is_some()));
    }
    let three_flowable = mod3_orientation(g).is_some();
    let star_cuts_only = g.is_connected()
        && edge_connectivity(g, 2).is_at_least(3)
        && small_bonds(g, 3).iter().all(|(cut, side)| {
            cut.len() < 3 || side.len() == 1 || side.len() == n - 1
        });
    let critical = n <= guards.critical && is_vertex_3_critical(g);
    let filters = MincexFilters {
        vertex_3_critical: critical,
        simple: g.is_simple(),
        star_cuts_only,
        max_degree_at_least_4: g.max_degree() >= 4,
        k33_minor: has_minor(&g.simplified(), &complete_bipartite(3, 3), guards.minor)?.is_some(),
    };
    Ok(GateReport {
        facially_3_colorable: decision.verdict,
        counterexample: decision.verdict == Verdict::Yes && !three_flowable && k3n.iter().all(|&(_, present)| !present),
        k3n_plus_subcontractions: k3n,
        three_flowable,
        failed_filters: filters.failed(),
        filters,
    })
}
