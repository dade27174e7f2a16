//! Tree decompositions: validation, conversion to nice form, and a min-fill
//! elimination heuristic.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::RawDecomposition;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidDecomposition(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    /// Sorted bag.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// A rooted nice tree decomposition. Children always precede their parent
/// in `nodes`, and the root is the last node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceDecomposition {
    nodes: Vec<NiceNode>,
}

impl NiceDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Largest bag size minus one; `0` for an empty graph.
    pub fn width(&self) -> usize {
        self.nodes.iter().map(|t| t.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Builds a nice decomposition from an arbitrary valid one, rooted at bag 0.
    pub fn from_raw(g: &Graph, raw: &RawDecomposition) -> Result<Self> {
        validate_raw(g, raw)?;
        let nb = raw.bags.len();
        let mut adj = vec![Vec::new(); nb];
        for &(a, b) in &raw.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![usize::MAX; nb];
        let mut order = vec![0];
        let mut seen = vec![false; nb];
        seen[0] = true;
        let mut i = 0;
        while i < order.len() {
            let t = order[i];
            i += 1;
            adj[t].sort_unstable();
            for &c in &adj[t] {
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = t;
                    order.push(c);
                }
            }
        }
        let mut b = Builder { nodes: Vec::new() };
        let mut top = vec![usize::MAX; nb];
        for &t in order.iter().rev() {
            let bag = &raw.bags[t];
            let kids: Vec<usize> = adj[t].iter().copied().filter(|&c| parent[c] == t).collect();
            let mut branches: Vec<usize> = kids.iter().map(|&c| b.morph(top[c], bag)).collect();
            if branches.is_empty() {
                let leaf = b.push(NodeKind::Leaf, Vec::new(), Vec::new());
                branches.push(b.morph(leaf, bag));
            }
            while branches.len() > 1 {
                let right = branches.pop().unwrap();
                let left = branches.pop().unwrap();
                let j = b.push(NodeKind::Join, bag.clone(), vec![left, right]);
                branches.push(j);
            }
            top[t] = branches[0];
        }
        b.morph(top[0], &[]);
        let dec = NiceDecomposition { nodes: b.nodes };
        dec.validate(g)?;
        Ok(dec)
    }

    /// Checks vertex coverage, edge coverage, connectivity of every vertex's
    /// bags, and the nice-form rules.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.nodes.is_empty() {
            return Err(bad("no nodes"));
        }
        let mut has_parent = vec![false; self.nodes.len()];
        for (i, t) in self.nodes.iter().enumerate() {
            if t.bag.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad(format!("bag of node {i} is not sorted and duplicate-free")));
            }
            if let Some(&v) = t.bag.iter().find(|&&v| v >= g.n()) {
                return Err(bad(format!("node {i} holds unknown vertex {v}")));
            }
            for &c in &t.children {
                if c >= i {
                    return Err(bad(format!("child {c} of node {i} does not precede it")));
                }
                if has_parent[c] {
                    return Err(bad(format!("node {c} has two parents")));
                }
                has_parent[c] = true;
            }
            let child_bag = |j: usize| &self.nodes[t.children[j]].bag;
            let ok = match t.kind {
                NodeKind::Leaf => t.children.is_empty() && t.bag.is_empty(),
                NodeKind::Introduce(v) => {
                    t.children.len() == 1 && !child_bag(0).contains(&v) && with(child_bag(0), v) == t.bag
                }
                NodeKind::Forget(v) => {
                    t.children.len() == 1 && child_bag(0).contains(&v) && with(&t.bag, v) == *child_bag(0)
                }
                NodeKind::Join => t.children.len() == 2 && *child_bag(0) == t.bag && *child_bag(1) == t.bag,
            };
            if !ok {
                return Err(bad(format!("node {i} is not a well-formed {:?} node", t.kind)));
            }
        }
        let root = self.root();
        if has_parent[root] || has_parent[..root].iter().any(|&x| !x) {
            return Err(bad("nodes do not form a single tree rooted at the last node"));
        }
        if !self.nodes[root].bag.is_empty() {
            return Err(bad("root bag is not empty"));
        }
        let bags: Vec<Vec<usize>> = self.nodes.iter().map(|t| t.bag.clone()).collect();
        let edges: Vec<(usize, usize)> = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, t)| t.children.iter().map(move |&c| (c, i)))
            .collect();
        check_properties(g, &bags, &edges)
    }
}

fn with(bag: &[usize], v: usize) -> Vec<usize> {
    let mut out = bag.to_vec();
    let pos = out.binary_search(&v).unwrap_or_else(|p| p);
    out.insert(pos, v);
    out
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Forgets and introduces vertices one at a time until the bag is `target`.
    fn morph(&mut self, mut top: usize, target: &[usize]) -> usize {
        let current = self.nodes[top].bag.clone();
        let mut bag = current.clone();
        for &v in current.iter().filter(|v| !target.contains(v)) {
            bag.retain(|&x| x != v);
            top = self.push(NodeKind::Forget(v), bag.clone(), vec![top]);
        }
        for &v in target.iter().filter(|v| !current.contains(v)) {
            bag = with(&bag, v);
            top = self.push(NodeKind::Introduce(v), bag.clone(), vec![top]);
        }
        top
    }
}

fn validate_raw(g: &Graph, raw: &RawDecomposition) -> Result<()> {
    if raw.n != g.n() {
        return Err(bad(format!("decomposition is for {} vertices, graph has {}", raw.n, g.n())));
    }
    let nb = raw.bags.len();
    if nb == 0 {
        return Err(bad("no bags"));
    }
    if raw.tree_edges.len() != nb - 1 {
        return Err(bad(format!("{} bags need {} tree edges, found {}", nb, nb - 1, raw.tree_edges.len())));
    }
    let mut adj = vec![Vec::new(); nb];
    for &(a, b) in &raw.tree_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; nb];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut count = 1;
    while let Some(t) = queue.pop_front() {
        for &c in &adj[t] {
            if !seen[c] {
                seen[c] = true;
                count += 1;
                queue.push_back(c);
            }
        }
    }
    if count != nb {
        return Err(bad("the bags are not connected into a tree"));
    }
    check_properties(g, &raw.bags, &raw.tree_edges)
}

/// Vertex coverage, edge coverage and connectivity of occurrences, given a
/// tree on the bags.
fn check_properties(g: &Graph, bags: &[Vec<usize>], tree_edges: &[(usize, usize)]) -> Result<()> {
    let n = g.n();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in bags.iter().enumerate() {
        for &v in bag {
            holders[v].push(i);
        }
    }
    if let Some(v) = (0..n).find(|&v| holders[v].is_empty()) {
        return Err(bad(format!("vertex {} is in no bag", v + 1)));
    }
    for (u, v) in g.edges() {
        let both = holders[u].iter().any(|t| bags[*t].binary_search(&v).is_ok());
        if !both {
            return Err(bad(format!("edge {} {} is in no bag", u + 1, v + 1)));
        }
    }
    // The bags holding v span a subtree iff they are joined by exactly |holders| - 1 tree edges.
    let mut inner = vec![0usize; n];
    for &(a, b) in tree_edges {
        for &v in &bags[a] {
            if bags[b].binary_search(&v).is_ok() {
                inner[v] += 1;
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| inner[v] + 1 != holders[v].len()) {
        return Err(bad(format!("the bags holding vertex {} are not connected", v + 1)));
    }
    Ok(())
}

/// Min-fill elimination (ties by degree, then id) turned into a raw
/// decomposition with one bag per vertex.
pub fn min_fill_decomposition(g: &Graph) -> RawDecomposition {
    let n = g.n();
    if n == 0 {
        return RawDecomposition { n, bags: vec![Vec::new()], tree_edges: Vec::new() };
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let fill_of = |adj: &[BTreeSet<usize>], v: usize| {
        let ns: Vec<usize> = adj[v].iter().copied().collect();
        let mut missing = 0;
        for (i, &a) in ns.iter().enumerate() {
            missing += ns[i + 1..].iter().filter(|&&b| !adj[a].contains(&b)).count();
        }
        missing
    };
    let mut fill: Vec<usize> = (0..n).map(|v| fill_of(&adj, v)).collect();
    let mut alive = vec![true; n];
    let mut position = vec![0; n];
    let mut later: Vec<Vec<usize>> = vec![Vec::new(); n];
    for step in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (fill[v], adj[v].len(), v)).unwrap();
        alive[v] = false;
        position[v] = step;
        let ns: Vec<usize> = adj[v].iter().copied().collect();
        later[v] = ns.clone();
        let mut touched: BTreeSet<usize> = ns.iter().copied().collect();
        for (i, &a) in ns.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &ns[i + 1..] {
                if adj[a].insert(b) {
                    adj[b].insert(a);
                    touched.extend(adj[a].iter().copied());
                    touched.extend(adj[b].iter().copied());
                }
            }
        }
        for x in touched {
            if alive[x] {
                fill[x] = fill_of(&adj, x);
            }
        }
    }
    let mut bags = Vec::with_capacity(n);
    let mut tree_edges = Vec::new();
    let mut roots = Vec::new();
    for (v, up) in later.iter().enumerate() {
        let mut bag = up.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        match up.iter().min_by_key(|&&w| position[w]) {
            Some(&w) => tree_edges.push((v, w)),
            None => roots.push(v),
        }
    }
    for w in roots.windows(2) {
        tree_edges.push((w[0], w[1]));
    }
    RawDecomposition { n, bags, tree_edges }
}

/// Min-fill heuristic followed by conversion to nice form.
pub fn heuristic_decomposition(g: &Graph) -> NiceDecomposition {
    NiceDecomposition::from_raw(g, &min_fill_decomposition(g)).expect("min-fill output is a valid decomposition")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths() {
        assert_eq!(heuristic_decomposition(&Graph::path(6)).width(), 1);
        assert_eq!(heuristic_decomposition(&Graph::star(5)).width(), 1);
        for n in 3..10 {
            assert_eq!(heuristic_decomposition(&Graph::cycle(n)).width(), 2);
        }
        assert_eq!(heuristic_decomposition(&Graph::complete(4)).width(), 3);
        assert_eq!(heuristic_decomposition(&Graph::new(3)).width(), 0);
        assert_eq!(heuristic_decomposition(&Graph::new(0)).nodes().len(), 1);
    }

    #[test]
    fn violations_are_named() {
        let g = Graph::path(3);
        let raw = |bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>| RawDecomposition { n: 3, bags, tree_edges: edges };
        let err = |r: RawDecomposition| NiceDecomposition::from_raw(&g, &r).unwrap_err().to_string();
        assert!(err(raw(vec![vec![0, 1]], vec![])).contains("vertex 3 is in no bag"));
        assert!(err(raw(vec![vec![0, 1], vec![2]], vec![(0, 1)])).contains("edge 2 3 is in no bag"));
        let split = raw(vec![vec![0, 1], vec![2], vec![1, 2]], vec![(0, 1), (1, 2)]);
        assert!(err(split).contains("vertex 2 are not connected"));
        assert!(NiceDecomposition::from_raw(&g, &raw(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)])).is_ok());
    }
}
