//! Maximum matching in general graphs by Edmonds' blossom algorithm.

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex reached.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Maximum-cardinality matching as sorted `(u, v)` pairs with `u < v`.
pub fn max_matching(g: &Graph) -> Vec<(usize, usize)> {
    max_matching_from(g, &[])
}

/// Extends `initial`, which must be a matching of `g`, to a maximum matching
/// by augmenting paths. Edges of `initial` are only replaced when an
/// augmenting path runs through them.
pub fn max_matching_from(g: &Graph, initial: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    for &(u, v) in initial {
        debug_assert!(g.has_edge(u, v) && b.mate[u] == NONE && b.mate[v] == NONE);
        b.mate[u] = v;
        b.mate[v] = u;
    }
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let ppv = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = ppv;
            }
        }
    }
    (0..n).filter(|&u| b.mate[u] != NONE && u < b.mate[u]).map(|u| (u, b.mate[u])).collect()
}
