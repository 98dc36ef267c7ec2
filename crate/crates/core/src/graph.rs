//! Immutable connected graphs with a precomputed hop-distance matrix,
//! plus the walk type and the small structural recognizers the rest of
//! the workspace builds on.
//!
//! Vertices are dense indices `0..n`. Ingestion maps arbitrary input
//! labels onto indices and keeps the originals for output. Disconnected
//! input is rejected at construction rather than silently repaired; the
//! game is only defined on connected graphs.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Capture radius. Plain wrapper so signatures say what the integer means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Radius(pub usize);

impl From<usize> for Radius {
    fn from(r: usize) -> Self {
        Radius(r)
    }
}

impl std::fmt::Display for Radius {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite walk: consecutive entries stay put or move along an edge.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Walk(pub Vec<usize>);

impl Walk {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff the walk is nonempty and every consecutive pair is at
    /// distance at most 1 (staying in place is a legal step).
    pub fn is_valid_on(&self, g: &Graph) -> bool {
        if self.0.is_empty() {
            return false;
        }
        if self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        self.0.windows(2).all(|w| g.dist(w[0], w[1]) <= 1)
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    neighbors: Vec<Vec<usize>>,
    dist: Vec<u16>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Rejects self-loops,
    /// out-of-range endpoints and disconnected input. Duplicate edges are
    /// collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::input("graph must have at least one vertex"));
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let neighbors: Vec<Vec<usize>> = adj.iter().map(|s| s.to_vec()).collect();
        let dist = all_pairs_bfs(n, &neighbors)?;
        Ok(Graph {
            n,
            adj,
            neighbors,
            dist,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::input(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(|ns| ns.len()).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// B_rho(v): all vertices at distance at most rho from v.
    pub fn ball(&self, v: usize, rho: Radius) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        let row = &self.dist[v * self.n..(v + 1) * self.n];
        for (u, &d) in row.iter().enumerate() {
            if (d as usize) <= rho.0 {
                s.insert(u);
            }
        }
        s
    }

    /// N[S]: s together with every vertex adjacent to s. One robber step,
    /// staying allowed.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        (0..self.n).map(|u| self.dist(v, u)).max().unwrap_or(0)
    }

    pub fn radius(&self) -> usize {
        (0..self.n).map(|v| self.eccentricity(v)).min().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    pub fn is_tree(&self) -> bool {
        // connectivity is a construction invariant
        self.edge_count() == self.n - 1
    }

    /// A caterpillar is a tree whose leaf-deleted remainder is a path
    /// (possibly empty or a single vertex).
    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let remaining: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) >= 2).collect();
        // Deleting leaves from a tree leaves a tree, so it is a path iff
        // every remaining vertex keeps degree at most 2.
        remaining.iter().all(|&v| {
            self.neighbors(v)
                .iter()
                .filter(|&&u| self.degree(u) >= 2)
                .count()
                <= 2
        })
    }

    /// Shortest path from u to v, endpoints included. Deterministic:
    /// BFS parents follow ascending vertex order.
    pub fn shortest_path(&self, u: usize, v: usize) -> Vec<usize> {
        if u == v {
            return vec![u];
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        parent[u] = u;
        queue.push_back(u);
        while let Some(w) = queue.pop_front() {
            if w == v {
                break;
            }
            for &x in self.neighbors(w) {
                if parent[x] == usize::MAX {
                    parent[x] = w;
                    queue.push_back(x);
                }
            }
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Rebuilds the graph with vertex i renamed to perm[i].
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length mismatch"));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Brute-force chordality check: no induced cycle of length >= 4.
    /// Exponential in n; intended for the desk-scale corpora only.
    pub fn is_chordal_bruteforce(&self) -> bool {
        assert!(self.n <= 24, "brute-force chordality check is for small graphs");
        for mask in 0u32..(1 << self.n) {
            if (mask.count_ones() as usize) < 4 {
                continue;
            }
            if self.subset_induces_cycle(mask) {
                return false;
            }
        }
        true
    }

    fn subset_induces_cycle(&self, mask: u32) -> bool {
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask & (1 << v) != 0).collect();
        // every vertex has exactly two neighbors inside, and the subset is connected
        for &v in &verts {
            let deg_in = self
                .neighbors(v)
                .iter()
                .filter(|&&u| mask & (1 << u) != 0)
                .count();
            if deg_in != 2 {
                return false;
            }
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![verts[0]];
        seen[verts[0]] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &u in self.neighbors(v) {
                if mask & (1 << u) != 0 && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        count == verts.len()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

fn all_pairs_bfs(n: usize, neighbors: &[Vec<usize>]) -> Result<Vec<u16>> {
    let mut dist = vec![u16::MAX; n * n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &u in &neighbors[v] {
                if row[u] == u16::MAX {
                    row[u] = row[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        if row.iter().any(|&d| d == u16::MAX) {
            return Err(Error::input("graph is not connected"));
        }
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn ball_examples() {
        let p5 = families::make_path(5);
        assert_eq!(p5.ball(2, Radius(0)).to_vec(), vec![2]);
        assert_eq!(p5.ball(2, Radius(1)).to_vec(), vec![1, 2, 3]);
        let c6 = families::make_cycle(6);
        assert_eq!(c6.ball(0, Radius(2)).to_vec(), vec![0, 1, 2, 4, 5]);
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p5 = families::make_path(5);
        let empty = VertexSet::empty(5);
        assert!(p5.closed_neighborhood(&empty).is_empty());
        assert_eq!(
            p5.closed_neighborhood(&VertexSet::singleton(5, 2)).to_vec(),
            vec![1, 2, 3]
        );
        let c6 = families::make_cycle(6);
        let s = VertexSet::from_indices(6, [0, 3]);
        assert_eq!(c6.closed_neighborhood(&s).count(), 6);
    }

    #[test]
    fn walk_validation() {
        let p5 = families::make_path(5);
        assert!(Walk(vec![0, 1, 1, 2]).is_valid_on(&p5));
        assert!(!Walk(vec![0, 2]).is_valid_on(&p5));
        assert!(!Walk(vec![]).is_valid_on(&p5));
        let c4 = families::make_cycle(4);
        assert!(Walk(vec![0, 1, 2, 3, 0]).is_valid_on(&c4));
    }

    #[test]
    fn caterpillar_recognition() {
        assert!(families::make_path(4).is_caterpillar());
        let spider = families::make_triod(2, 2, 2);
        assert!(!spider.is_caterpillar());
        assert!(!families::make_cycle(4).is_caterpillar());
        assert!(families::make_triod(1, 1, 1).is_caterpillar());
    }

    #[test]
    fn radius_diameter_tree() {
        let p5 = families::make_path(5);
        assert!(p5.is_tree());
        assert_eq!(p5.radius(), 2);
        assert_eq!(p5.diameter(), 4);
        let c6 = families::make_cycle(6);
        assert!(!c6.is_tree());
        assert_eq!(c6.radius(), 3);
        assert_eq!(c6.diameter(), 3);
        let k3 = families::make_cycle(3);
        assert!(!k3.is_tree());
        assert_eq!(k3.radius(), 1);
        assert_eq!(k3.diameter(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::from_edges(3, &[(0, 1)]).is_err(), "disconnected");
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err(), "self-loop");
        assert!(Graph::from_edges(2, &[(0, 5)]).is_err(), "out of range");
    }

    #[test]
    fn ball_recurrence() {
        let g = families::make_cycle_triod(2, 2).0;
        for v in 0..g.n() {
            assert_eq!(g.ball(v, Radius(0)).to_vec(), vec![v]);
            for rho in 0..g.radius() {
                let grown = g.closed_neighborhood(&g.ball(v, Radius(rho)));
                assert_eq!(grown.to_vec(), g.ball(v, Radius(rho + 1)).to_vec());
            }
        }
        // some center sees everything at graph radius
        let r = g.radius();
        assert!((0..g.n()).any(|v| g.ball(v, Radius(r)).count() == g.n()));
    }

    #[test]
    fn chordality_bruteforce() {
        assert!(families::make_cycle(3).is_chordal_bruteforce());
        assert!(!families::make_cycle(4).is_chordal_bruteforce());
        assert!(families::make_triod(2, 2, 2).is_chordal_bruteforce());
        assert!(!families::make_cycle_triod(2, 1).0.is_chordal_bruteforce());
    }
}
