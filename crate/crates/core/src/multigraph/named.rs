//! Standard graph families. Vertices are `0..n`, edges numbered in construction order.

use super::Multigraph;

fn build(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edges(n, edges).expect("well-formed construction")
}

pub fn empty(n: usize) -> Multigraph {
    Multigraph::with_vertices(n)
}

pub fn path(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// C_n for n ≥ 1: a loop for n = 1, a digon for n = 2.
pub fn cycle(n: usize) -> Multigraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    build(n, &edges)
}

/// K_{m,n} with sides `0..m` and `m..m+n`; edge `i*n + j` joins `i` and `m + j`.
pub fn complete_bipartite(m: usize, n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            edges.push((i, m + j));
        }
    }
    build(m + n, &edges)
}

/// K_{3,n} plus the edge `0–1` inside the 3-side (appended last).
pub fn k3n_plus(n: usize) -> Multigraph {
    let mut g = complete_bipartite(3, n);
    g.add_edge(3 * n, 0, 1).expect("fresh id");
    g
}

/// Rim `0..k` in cyclic order and hub `k`; rim edges first, then spokes.
pub fn wheel(k: usize) -> Multigraph {
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, k)));
    build(k + 1, &edges)
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// Two parallel classes: `k` edges between vertices 0 and 1.
pub fn bundle(k: usize) -> Multigraph {
    build(2, &vec![(0, 1); k])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(k3n_plus(4).edge_count(), 13);
        assert_eq!(wheel(5).edge_count(), 10);
        let p = petersen();
        assert!(p.is_cubic());
        assert_eq!(p.edge_count(), 15);
        assert!(p.is_simple());
    }
}
