//! Independent re-checking of decisions.

use std::collections::{HashMap, HashSet};

use crate::flow3::solver::{mod3_orientation_brute, orientation_exists_cotree};
use crate::flow3::{ExcessTarget, Orientation};
use crate::guards::Guards;
use crate::multigraph::connectivity::verify_disjoint_paths;
use crate::multigraph::iso::verify_isomorphism;
use crate::multigraph::named::{complete_bipartite, k3n_plus, wheel};
use crate::multigraph::{has_minor, Multigraph, Multiplicity, SubcontractionWitness, VertexId};

use super::{cyclomatic, Certificate, DecideError, Decision, Refutation, Verdict};

/// Whether the decision's certificate proves its verdict for `g`. Only the graph and the
/// certificate are used; nothing computed by the decider is trusted.
pub fn certificate_verify(g: &Multigraph, d: &Decision) -> Result<bool, DecideError> {
    certificate_verify_with(g, d, &Guards::default())
}

fn vertex(g: &Multigraph, v: VertexId) -> Result<VertexId, DecideError> {
    if g.contains_vertex(v) {
        Ok(v)
    } else {
        Err(DecideError::Malformed(format!("unknown vertex {v}")))
    }
}

/// No modulo-3-orientation, re-derived by enumerating the non-forest edges.
fn refuted(g: &Multigraph, r: &Refutation, guards: &Guards) -> Result<bool, DecideError> {
    if r.cyclomatic != cyclomatic(g) {
        return Ok(false);
    }
    if r.cyclomatic > guards.cotree {
        return Err(DecideError::Malformed(format!("refutation needs 2^{} cases, above the guard", r.cyclomatic)));
    }
    Ok(orientation_exists_cotree(g, &ExcessTarget::zero()).is_none())
}

fn is_odd_cycle(g: &Multigraph, walk: &(Vec<VertexId>, Vec<crate::multigraph::EdgeId>)) -> Result<bool, DecideError> {
    let (vs, es) = walk;
    if vs.is_empty() || vs.len() != es.len() || vs.len() % 2 == 0 {
        return Ok(false);
    }
    for &v in vs {
        vertex(g, v)?;
    }
    if vs.iter().collect::<HashSet<_>>().len() != vs.len() || es.iter().collect::<HashSet<_>>().len() != es.len() {
        return Ok(false);
    }
    for (i, &e) in es.iter().enumerate() {
        let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
        let Some(edge) = g.edge(e) else { return Err(DecideError::Malformed(format!("unknown edge {e}"))) };
        if !((edge.u, edge.v) == (a, b) || (edge.v, edge.u) == (a, b)) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn certificate_verify_with(g: &Multigraph, d: &Decision, guards: &Guards) -> Result<bool, DecideError> {
    use Certificate::*;
    let yes = d.verdict == Verdict::Yes;
    let no = d.verdict == Verdict::No;
    Ok(match &d.certificate {
        Mod3Orientation { arcs } => {
            yes && match Orientation::from_arcs(g.clone(), arcs) {
                Ok(o) => o.is_mod3(),
                Err(_) => false,
            }
        }
        FourEdgeConnected { root, paths } => {
            vertex(g, *root)?;
            let mut seen = HashSet::new();
            for p in paths {
                vertex(g, p.target)?;
                if p.target == *root || !seen.insert(p.target) || p.paths.len() < 4 {
                    return Ok(false);
                }
                if !verify_disjoint_paths(g, *root, p.target, &p.paths) {
                    return Ok(false);
                }
            }
            yes && g.vertex_count() >= 2 && seen.len() == g.vertex_count() - 1
        }
        CubicBipartite { bipartition, odd_cycle } => {
            if !g.is_cubic() {
                return Ok(false);
            }
            match (d.verdict, bipartition, odd_cycle) {
                (Verdict::Yes, Some((l, r)), None) => {
                    let left: HashSet<VertexId> = l.iter().copied().collect();
                    let right: HashSet<VertexId> = r.iter().copied().collect();
                    left.len() == l.len()
                        && right.len() == r.len()
                        && left.is_disjoint(&right)
                        && left.len() + right.len() == g.vertex_count()
                        && g.vertices().all(|v| left.contains(&v) || right.contains(&v))
                        && g.edges().all(|e| left.contains(&e.u) != left.contains(&e.v))
                }
                (Verdict::No, None, Some(walk)) => is_odd_cycle(g, walk)?,
                _ => false,
            }
        }
        SubcubicNoFlow { refutation } => no && g.max_degree() <= 3 && refuted(g, refutation, guards)?,
        K33FreeFlow { minor_guard, refutation } => {
            let free = has_minor(&g.simplified(), &complete_bipartite(3, 3), *minor_guard.max(&guards.minor))
                .map_err(|e| DecideError::Malformed(e.to_string()))?
                .is_none();
            no && free && refuted(g, refutation, guards)?
        }
        K3nPlus { n, map } => {
            let m: HashMap<VertexId, VertexId> = map.iter().copied().collect();
            yes && *n >= 4 && m.len() == map.len() && verify_isomorphism(g, &k3n_plus(*n), &m)
        }
        BridgeObstruction { edge, side } => {
            let Some(e) = g.edge(*edge).copied() else { return Err(DecideError::Malformed(format!("unknown edge {edge}"))) };
            for &v in side {
                vertex(g, v)?;
            }
            let mut h = g.clone();
            h.remove_edge(*edge)?;
            let mut comp = h.components().into_iter().find(|c| c.contains(&e.u)).unwrap_or_default();
            let mut s = side.clone();
            comp.sort_unstable();
            s.sort_unstable();
            no && !e.is_loop() && comp == s && !comp.contains(&e.v)
        }
        DegreeOneObstruction { vertex: v } => no && g.degree(vertex(g, *v)?)? == 1,
        BadSubcontraction { rim, classes } => {
            if *rim < 3 || rim % 2 == 0 || *rim > 13 {
                return Ok(false);
            }
            let w = wheel(*rim);
            let witness = SubcontractionWitness { classes: classes.clone() };
            // odd wheels are planar; recheck that this one has no modulo-3-orientation
            no && witness.verify(g, &w, Multiplicity::Exact) && mod3_orientation_brute(&w, &ExcessTarget::zero()).is_none()
        }
        Attempted { .. } => d.verdict == Verdict::Unknown,
    })
}
