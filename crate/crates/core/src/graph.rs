//! Simple undirected graphs, deficiency accounting and k-core shaving.
//!
//! Vertices are `0..n`. Neighbor lists are kept sorted so adjacency tests are
//! binary searches and iteration order is deterministic everywhere.

use std::collections::VecDeque;

use crate::error::{invalid, Result};

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(invalid(format!("edge {u}-{v} references a vertex outside 0..{n}")));
        }
        if u == v {
            return Err(invalid(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(invalid(format!("edge {u}-{v} already present"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(invalid(format!("edge {u}-{v} not present")));
        }
        let pos = self.adj[u].binary_search(&v).unwrap();
        self.adj[u].remove(pos);
        let pos = self.adj[v].binary_search(&u).unwrap();
        self.adj[v].remove(pos);
        self.m -= 1;
        Ok(())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("clique is simple")
    }

    /// Star with center `0` and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("Petersen graph is simple")
    }
}

/// `max(0, k - deg(v))`.
pub fn deficiency(g: &Graph, k: usize, v: usize) -> Result<usize> {
    if v >= g.n() {
        return Err(invalid(format!("unknown vertex {v}")));
    }
    Ok(k.saturating_sub(g.degree(v)))
}

pub fn total_deficiency(g: &Graph, k: usize) -> usize {
    (0..g.n()).map(|v| k.saturating_sub(g.degree(v))).sum()
}

/// The k-core of `g` as a sorted vertex list, by queue-based shaving in O(n + m).
pub fn k_core(g: &Graph, k: usize) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    for &v in &queue {
        removed[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    removed[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// `g[s]` with vertices renumbered `0..s.len()` in the order given by `s`.
///
/// The returned table maps new ids back to ids of `g`.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> (Graph, Vec<usize>) {
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in s.iter().enumerate() {
        index[v] = i;
    }
    let mut sub = Graph::new(s.len());
    for (i, &v) in s.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = index[w];
            if j != usize::MAX && i < j {
                sub.add_edge(i, j).expect("induced edges are simple");
            }
        }
    }
    (sub, s.to_vec())
}
