//! Isomorphism for small multigraphs by colour refinement and individualisation.
//! Edge ids are ignored; only the multiplicity matrix (loops on the diagonal) matters.

use std::collections::HashMap;

use super::{Multigraph, VertexId};

/// Multiplicity matrix in a canonical vertex order, flattened row-major with the size first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u32>);

fn matrix(g: &Multigraph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0u32; n]; n];
    for e in g.edges() {
        let a = g.vertex_index(e.u).expect("endpoint");
        let b = g.vertex_index(e.v).expect("endpoint");
        m[a][b] += 1;
        if a != b {
            m[b][a] += 1;
        }
    }
    m
}

/// Refines an ordered partition (colour per vertex) until equitable.
fn refine(m: &[Vec<u32>], colour: &mut Vec<usize>) {
    let n = m.len();
    loop {
        let mut sigs: Vec<(usize, Vec<(usize, u32)>, usize)> = (0..n)
            .map(|v| {
                let mut s: Vec<(usize, u32)> =
                    (0..n).filter(|&w| m[v][w] > 0).map(|w| (colour[w], m[v][w])).collect();
                s.sort_unstable();
                (colour[v], s, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let old = colour.iter().max().map_or(0, |&x| x + 1);
        *colour = next;
        if c + 1 == old || n == 0 {
            return;
        }
    }
}

fn encode(m: &[Vec<u32>], order: &[usize]) -> Vec<u32> {
    let n = order.len();
    let mut out = Vec::with_capacity(1 + n * n);
    out.push(n as u32);
    for &a in order {
        for &b in order {
            out.push(m[a][b]);
        }
    }
    out
}

fn search(m: &[Vec<u32>], colour: Vec<usize>, best: &mut Option<(Vec<u32>, Vec<usize>)>) {
    let n = m.len();
    let cells = colour.iter().max().map_or(0, |&x| x + 1);
    if cells == n {
        let mut order = vec![0; n];
        for v in 0..n {
            order[colour[v]] = v;
        }
        let code = encode(m, &order);
        if best.as_ref().map_or(true, |(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    }
    // first smallest non-singleton cell
    let mut size = vec![0; cells];
    for &c in &colour {
        size[c] += 1;
    }
    let target = (0..cells).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c)).expect("non-discrete");
    for v in 0..n {
        if colour[v] != target {
            continue;
        }
        // individualise v: it takes the front of its cell
        let mut c2: Vec<usize> = colour.iter().map(|&c| if c > target { c + 1 } else { c }).collect();
        for w in 0..n {
            if colour[w] == target && w != v {
                c2[w] = target + 1;
            }
        }
        refine(m, &mut c2);
        search(m, c2, best);
    }
}

/// Returns the canonical form and, for each canonical position, the vertex placed there.
pub fn canonical_labeling(g: &Multigraph) -> (CanonicalForm, Vec<VertexId>) {
    let m = matrix(g);
    let n = m.len();
    if n == 0 {
        return (CanonicalForm(vec![0]), Vec::new());
    }
    // seed with (degree, loops) so the refinement is label independent
    let keys: Vec<(u32, u32)> = (0..n).map(|v| (m[v].iter().sum::<u32>() + m[v][v], m[v][v])).collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut colour: Vec<usize> = keys.iter().map(|k| distinct.binary_search(k).expect("present")).collect();
    refine(&m, &mut colour);
    let mut best = None;
    search(&m, colour, &mut best);
    let (code, order) = best.expect("at least one leaf");
    let labels = order.iter().map(|&i| g.vertex_at(i).expect("index")).collect();
    (CanonicalForm(code), labels)
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Vertex bijection `g → h` preserving all multiplicities, if one exists.
pub fn find_isomorphism(g: &Multigraph, h: &Multigraph) -> Option<HashMap<VertexId, VertexId>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, lg) = canonical_labeling(g);
    let (ch, lh) = canonical_labeling(h);
    (cg == ch).then(|| lg.into_iter().zip(lh).collect())
}

pub fn are_isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Checks that `map` is an isomorphism `g → h`.
pub fn verify_isomorphism(g: &Multigraph, h: &Multigraph, map: &HashMap<VertexId, VertexId>) -> bool {
    if g.vertex_count() != h.vertex_count() || map.len() != g.vertex_count() {
        return false;
    }
    let mut image: Vec<VertexId> = map.values().copied().collect();
    image.sort_unstable();
    image.dedup();
    if image.len() != map.len() || !image.iter().all(|&v| h.contains_vertex(v)) {
        return false;
    }
    let mut count: HashMap<(VertexId, VertexId), i64> = HashMap::new();
    let key = |a: VertexId, b: VertexId| if a <= b { (a, b) } else { (b, a) };
    for e in g.edges() {
        let (Some(&a), Some(&b)) = (map.get(&e.u), map.get(&e.v)) else { return false };
        *count.entry(key(a, b)).or_default() += 1;
    }
    for e in h.edges() {
        *count.entry(key(e.u, e.v)).or_default() -= 1;
    }
    count.values().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    fn shuffled(g: &Multigraph, perm: &[usize]) -> Multigraph {
        let mut h = Multigraph::with_vertices(g.vertex_count());
        for (i, e) in g.edges().enumerate() {
            h.add_edge(i, perm[e.u], perm[e.v]).unwrap();
        }
        h
    }

    #[test]
    fn petersen_relabeled() {
        let p = petersen();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        let q = shuffled(&p, &perm);
        let map = find_isomorphism(&p, &q).unwrap();
        assert!(verify_isomorphism(&p, &q, &map));
        assert_eq!(canonical_form(&p), canonical_form(&q));
    }

    #[test]
    fn distinguishes_prism_from_k33() {
        let prism = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap();
        assert!(!are_isomorphic(&prism, &complete_bipartite(3, 3)));
    }

    #[test]
    fn multiplicities_matter() {
        let a = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let b = Multigraph::from_edges(3, &[(0, 1), (1, 2), (1, 2)]).unwrap();
        let c = Multigraph::from_edges(3, &[(0, 1), (1, 1), (1, 2)]).unwrap();
        assert!(are_isomorphic(&a, &b));
        assert!(!are_isomorphic(&a, &c));
    }

    #[test]
    fn regular_graphs_with_equal_refinement() {
        // C6 and two triangles are both 2-regular
        let two = cycle(3).disjoint_union(&cycle(3));
        assert!(!are_isomorphic(&cycle(6), &two));
    }
}
