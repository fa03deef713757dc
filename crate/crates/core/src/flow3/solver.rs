//! GF(3) solver for orientations with prescribed excess.
//!
//! Every non-loop edge `e = uv` gets a variable `x_e ∈ {1, 2}`: value 1 means `u → v`,
//! value 2 (≡ −1) means `v → u`. The excess at `w` is then `Σ_{e: u=w} x_e − Σ_{e: v=w} x_e`.
//! Row reduction fixes the affine solution space once; solving a right-hand side is a
//! backtrack over the free variables where every pivot variable must come out non-zero.

use crate::multigraph::{Multigraph, VertexId};

use super::{ExcessTarget, FlowError, NearOrientation, Orientation, Z3Flow};

fn add3(a: u8, b: u8) -> u8 {
    (a + b) % 3
}

fn mul3(a: u8, b: u8) -> u8 {
    (a * b) % 3
}

fn neg3(a: u8) -> u8 {
    (3 - a) % 3
}

/// Row-reduced incidence system of a graph, reusable across targets.
#[derive(Debug, Clone)]
pub struct Mod3System {
    graph: Multigraph,
    /// Indices (in edge order) of the non-loop edges; column `j` is `cols[j]`.
    cols: Vec<usize>,
    /// `transform · incidence = reduced`
    transform: Vec<Vec<u8>>,
    reduced: Vec<Vec<u8>>,
    rank: usize,
    pivot_col: Vec<usize>,
    /// Free columns in branching order.
    free: Vec<usize>,
    /// For each pivot row, the position in `free` after which the row is fully determined.
    row_ready: Vec<Option<usize>>,
}

impl Mod3System {
    pub fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let cols: Vec<usize> = (0..g.edge_count()).filter(|&i| !g.edge_at(i).expect("edge").is_loop()).collect();
        let m = cols.len();
        let mut a = vec![vec![0u8; m]; n];
        for (j, &i) in cols.iter().enumerate() {
            let e = g.edge_at(i).expect("edge");
            a[g.vertex_index(e.u).expect("u")][j] = 1;
            a[g.vertex_index(e.v).expect("v")][j] = 2;
        }
        let mut t: Vec<Vec<u8>> = (0..n).map(|r| (0..n).map(|c| u8::from(r == c)).collect()).collect();
        let mut rank = 0;
        let mut pivot_col = Vec::new();
        for c in 0..m {
            let Some(p) = (rank..n).find(|&r| a[r][c] != 0) else { continue };
            a.swap(rank, p);
            t.swap(rank, p);
            // scale the pivot to 1 (inverse of 2 is 2)
            if a[rank][c] == 2 {
                for x in a[rank].iter_mut().chain(t[rank].iter_mut()) {
                    *x = mul3(*x, 2);
                }
            }
            for r in 0..n {
                if r != rank && a[r][c] != 0 {
                    let f = neg3(a[r][c]);
                    for k in 0..m {
                        a[r][k] = add3(a[r][k], mul3(f, a[rank][k]));
                    }
                    for k in 0..n {
                        t[r][k] = add3(t[r][k], mul3(f, t[rank][k]));
                    }
                }
            }
            pivot_col.push(c);
            rank += 1;
        }
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; m];
            for &c in &pivot_col {
                v[c] = true;
            }
            v
        };
        // branch on free columns touching the most pivot rows first, ties by edge id
        let mut free: Vec<usize> = (0..m).filter(|&c| !is_pivot[c]).collect();
        let weight = |c: usize| (0..rank).filter(|&r| a[r][c] != 0).count();
        let edge_id = |c: usize| g.edge_at(cols[c]).expect("edge").id;
        free.sort_by_key(|&c| (std::cmp::Reverse(weight(c)), edge_id(c)));
        let row_ready = (0..rank)
            .map(|r| (0..free.len()).rev().find(|&p| a[r][free[p]] != 0))
            .collect();
        Mod3System { graph: g.clone(), cols, transform: t, reduced: a, rank, pivot_col, free, row_ready }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    /// Dimension of the free part, i.e. how many variables the backtrack branches on.
    pub fn free_count(&self) -> usize {
        self.free.len()
    }

    /// Solves for targets given per vertex index.
    pub fn solve_indexed(&self, target: &[u8]) -> Option<Orientation> {
        let n = self.graph.vertex_count();
        let b: Vec<u8> =
            (0..n).map(|r| (0..n).fold(0, |acc, k| add3(acc, mul3(self.transform[r][k], target[k])))).collect();
        if b[self.rank..].iter().any(|&x| x != 0) {
            return None;
        }
        // rows with no free variable are decided already
        for r in 0..self.rank {
            if self.row_ready[r].is_none() && b[r] == 0 {
                return None;
            }
        }
        let mut ready_at: Vec<Vec<usize>> = vec![Vec::new(); self.free.len()];
        for r in 0..self.rank {
            if let Some(p) = self.row_ready[r] {
                ready_at[p].push(r);
            }
        }
        let mut vals = vec![0u8; self.free.len()];
        let mut partial = b.clone();
        if !self.branch(0, &mut vals, &mut partial, &ready_at) {
            return None;
        }
        let mut x = vec![0u8; self.cols.len()];
        for (p, &c) in self.free.iter().enumerate() {
            x[c] = vals[p];
        }
        for r in 0..self.rank {
            x[self.pivot_col[r]] = partial[r];
        }
        let mut forward = vec![true; self.graph.edge_count()];
        for (j, &i) in self.cols.iter().enumerate() {
            forward[i] = x[j] == 1;
        }
        Some(Orientation { graph: self.graph.clone(), forward })
    }

    fn branch(&self, p: usize, vals: &mut [u8], partial: &mut [u8], ready_at: &[Vec<usize>]) -> bool {
        if p == self.free.len() {
            return true;
        }
        let c = self.free[p];
        for v in [1u8, 2] {
            vals[p] = v;
            for r in 0..self.rank {
                let coef = self.reduced[r][c];
                if coef != 0 {
                    partial[r] = add3(partial[r], neg3(mul3(coef, v)));
                }
            }
            if ready_at[p].iter().all(|&r| partial[r] != 0) && self.branch(p + 1, vals, partial, ready_at) {
                return true;
            }
            for r in 0..self.rank {
                let coef = self.reduced[r][c];
                if coef != 0 {
                    partial[r] = add3(partial[r], mul3(coef, v));
                }
            }
        }
        false
    }

    pub fn solve(&self, t: &ExcessTarget) -> Option<Orientation> {
        let target: Vec<u8> = self.graph.vertices().map(|v| t.get(v)).collect();
        self.solve_indexed(&target)
    }
}

/// Orientation with every excess ≡ 0 (mod 3), or `None` if the graph has no nowhere-zero 3-flow.
pub fn mod3_orientation(g: &Multigraph) -> Option<Orientation> {
    if !g.bridges().is_empty() {
        return None;
    }
    Mod3System::new(g).solve(&ExcessTarget::zero())
}

pub fn nz3_flow(g: &Multigraph) -> Option<Z3Flow> {
    mod3_orientation(g).map(Z3Flow::from_orientation)
}

pub fn orientation_with_targets(g: &Multigraph, t: &ExcessTarget) -> Option<Orientation> {
    if t.is_zero() {
        return mod3_orientation(g);
    }
    Mod3System::new(g).solve(t)
}

pub fn near_mod3_orientation(g: &Multigraph, u1: VertexId, u2: VertexId) -> Result<Option<NearOrientation>, FlowError> {
    if u1 == u2 {
        return Err(FlowError::SameVertex);
    }
    let sys = Mod3System::new(g);
    for alpha in [1u8, 2] {
        let t = ExcessTarget::new(g, [(u1, alpha as i64), (u2, -(alpha as i64))])?;
        if let Some(o) = sys.solve(&t) {
            return Ok(Some(NearOrientation { orientation: o, u1, u2, alpha }));
        }
    }
    Ok(None)
}

/// Exhaustive search over all 2^|E| orientations; an oracle for small graphs.
pub fn mod3_orientation_brute(g: &Multigraph, t: &ExcessTarget) -> Option<Orientation> {
    let m = g.edge_count();
    assert!(m < 30, "brute force is for small graphs");
    for mask in 0u64..(1u64 << m) {
        let forward = (0..m).map(|i| mask >> i & 1 == 0).collect();
        let o = Orientation { graph: g.clone(), forward };
        if o.meets(t) {
            return Some(o);
        }
    }
    None
}

/// Independent check: enumerate the directions of non-forest edges, then the forest edges
/// are forced by peeling leaves. Exponential in the cyclomatic number only.
pub fn orientation_exists_cotree(g: &Multigraph, t: &ExcessTarget) -> Option<Orientation> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let adj = g.adjacency();
    // BFS forest: parent edge index per vertex, plus a leaf-first order
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut in_tree = vec![false; m];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &(ei, y) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, ei));
                    in_tree[ei] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let cotree: Vec<usize> =
        (0..m).filter(|&i| !in_tree[i] && !g.edge_at(i).expect("edge").is_loop()).collect();
    assert!(cotree.len() < 40, "cyclomatic number too large for enumeration");
    let want: Vec<i64> = g.vertices().map(|v| t.get(v) as i64).collect();
    let ends: Vec<(usize, usize)> = g
        .edges()
        .map(|e| (g.vertex_index(e.u).expect("u"), g.vertex_index(e.v).expect("v")))
        .collect();
    for mask in 0u64..(1u64 << cotree.len()) {
        let mut forward = vec![true; m];
        let mut exc = vec![0i64; n];
        for (k, &i) in cotree.iter().enumerate() {
            let f = mask >> k & 1 == 0;
            forward[i] = f;
            let (a, b) = ends[i];
            let (tl, hd) = if f { (a, b) } else { (b, a) };
            exc[tl] += 1;
            exc[hd] -= 1;
        }
        let mut ok = true;
        for &x in order.iter().rev() {
            let need = (want[x] - exc[x]).rem_euclid(3);
            match parent[x] {
                None => {
                    if need != 0 {
                        ok = false;
                        break;
                    }
                }
                Some((p, ei)) => {
                    // the tree edge must contribute +1 (x is tail) or −1 (x is head)
                    let x_is_tail = match need {
                        1 => true,
                        2 => false,
                        _ => {
                            ok = false;
                            break;
                        }
                    };
                    forward[ei] = (ends[ei].0 == x) == x_is_tail;
                    let d = if x_is_tail { 1 } else { -1 };
                    exc[x] += d;
                    exc[p] -= d;
                }
            }
        }
        if ok {
            return Some(Orientation { graph: g.clone(), forward });
        }
    }
    None
}
