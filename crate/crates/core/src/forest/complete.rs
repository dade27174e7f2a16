//! Completion of a forest to minimum degree `k` with `⌈df/2⌉` added edges.
//!
//! For `k >= 3` the forest is first joined into one tree by leaf-to-leaf
//! edges. The tree is then grown one leaf at a time in BFS order from a
//! centroid: the first `k + 1` vertices become a clique, and each further
//! leaf `v` with tree parent `p` takes over a matching of the good edges
//! added so far (the graph `A`), each matched edge `st` being replaced by
//! `sv` and `tv`.

use std::collections::VecDeque;

use crate::completion::{AdditionLog, EdgeKind};
use crate::error::{internal, invalid, Result};
use crate::graph::{total_deficiency, Graph};
use crate::matching::max_matching_from;

use super::tree::{bfs, centroid};

type Edge = (usize, usize);

fn norm(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

pub fn complete_forest(t: &Graph, k: usize) -> Result<AdditionLog> {
    let n = t.n();
    if !t.is_forest() {
        return Err(invalid("not a forest"));
    }
    if n <= k {
        return Err(invalid(format!("a forest on {n} vertices cannot reach minimum degree {k}")));
    }
    let edges = match k {
        0 => Vec::new(),
        1 => pair_up(t, (0..n).filter(|&v| t.degree(v) == 0).collect()),
        _ => {
            let (tree, mut edges) = join_components(t);
            if k == 2 {
                edges.extend(pair_up(&tree, (0..n).filter(|&v| tree.degree(v) <= 1).collect()));
            } else {
                edges.extend(Induction::run(&tree, k)?);
            }
            edges
        }
    };
    let log = AdditionLog::replay(t, k, edges)?;
    let df = total_deficiency(t, k);
    if log.len() != df.div_ceil(2) || log.count(EdgeKind::Bad) != df % 2 || log.count(EdgeKind::Wasted) > 0 {
        return Err(internal(format!(
            "forest completion used {} edges ({} bad) for deficiency {df}",
            log.len(),
            log.count(EdgeKind::Bad)
        )));
    }
    Ok(log)
}

/// Pairs consecutive vertices of `todo`; a leftover vertex gets one edge to
/// its lowest non-neighbor.
fn pair_up(g: &Graph, todo: Vec<usize>) -> Vec<Edge> {
    let mut edges: Vec<Edge> = todo.chunks_exact(2).map(|c| norm(c[0], c[1])).collect();
    if todo.len() % 2 == 1 {
        let u = *todo.last().unwrap();
        let w = (0..g.n()).find(|&w| w != u && !g.has_edge(u, w)).expect("n > k leaves a non-neighbor");
        edges.push(norm(u, w));
    }
    edges
}

/// Chains the components together through vertices of degree at most one.
fn join_components(t: &Graph) -> (Graph, Vec<Edge>) {
    let mut tree = t.clone();
    let mut edges = Vec::new();
    let mut comps = t.components().into_iter();
    let mut joined = comps.next().unwrap_or_default();
    for comp in comps {
        let a = *joined.iter().find(|&&v| tree.degree(v) <= 1).expect("a tree has a leaf");
        let b = *comp.iter().find(|&&v| tree.degree(v) <= 1).expect("a tree has a leaf");
        tree.add_edge(a, b).expect("distinct components");
        edges.push(norm(a, b));
        joined.extend(comp);
        joined.sort_unstable();
    }
    (tree, edges)
}

/// State of the leaf-by-leaf construction on a tree, for `k >= 3`.
struct Induction {
    k: usize,
    /// Tree edges among placed vertices plus the added edges.
    g: Graph,
    /// The added good edges only.
    a: Graph,
    placed: usize,
    /// The one placed vertex of deficiency one, if the placed tree has odd deficiency.
    u: Option<usize>,
}

impl Induction {
    fn run(tree: &Graph, k: usize) -> Result<Vec<Edge>> {
        let n = tree.n();
        let (order, parent) = bfs(tree, centroid(tree, 0));
        let mut st = Induction { k, g: Graph::new(n), a: Graph::new(n), placed: k + 1, u: None };
        let base = &order[..=k];
        for &v in &base[1..] {
            st.g.add_edge(v, parent[v])?;
        }
        for (i, &x) in base.iter().enumerate() {
            for &y in &base[i + 1..] {
                if !st.g.has_edge(x, y) {
                    st.add(x, y)?;
                }
            }
        }
        st.check(&order[..st.placed])?;
        for &v in &order[k + 1..] {
            st.grow(v, parent[v])?;
            st.placed += 1;
            st.check(&order[..st.placed])?;
        }
        let mut edges: Vec<Edge> = st.a.edges().collect();
        if let Some(u) = st.u {
            let covered = |w: usize| st.a.degree(w) > 0;
            let w = (0..n)
                .find(|&w| w != u && !st.g.has_edge(u, w) && covered(w))
                .or_else(|| (0..n).find(|&w| w != u && !st.g.has_edge(u, w)))
                .ok_or_else(|| internal(format!("vertex {u} has no non-neighbor")))?;
            edges.push(norm(u, w));
        }
        Ok(edges)
    }

    fn add(&mut self, x: usize, y: usize) -> Result<()> {
        self.g.add_edge(x, y)?;
        self.a.add_edge(x, y)
    }

    fn remove(&mut self, x: usize, y: usize) -> Result<()> {
        self.g.remove_edge(x, y)?;
        self.a.remove_edge(x, y)
    }

    fn in_a(&self, x: usize) -> bool {
        self.a.degree(x) > 0
    }

    /// Deficiencies, `Δ(A) <= k - 1`, `|V(A)| >= k` and connectivity of `A` for `k >= 4`.
    fn check(&self, placed: &[usize]) -> Result<()> {
        let k = self.k;
        for &x in placed {
            let want = if Some(x) == self.u { k - 1 } else { k };
            if self.g.degree(x) != want && !(self.g.degree(x) > k && !self.in_a(x)) {
                return Err(internal(format!("vertex {x} has degree {} after placing {} vertices", self.g.degree(x), placed.len())));
            }
            if self.a.degree(x) >= k {
                return Err(internal(format!("added-edge graph has degree {} at {x}", self.a.degree(x))));
            }
        }
        let covered: Vec<usize> = placed.iter().copied().filter(|&x| self.in_a(x)).collect();
        if covered.len() < k {
            return Err(internal(format!("added-edge graph covers only {} vertices", covered.len())));
        }
        if k >= 4 && component(&self.a, covered[0], None).len() != covered.len() {
            return Err(internal(format!("added-edge graph is disconnected after placing {} vertices", placed.len())));
        }
        Ok(())
    }

    fn grow(&mut self, v: usize, p: usize) -> Result<()> {
        let k = self.k;
        self.g.add_edge(p, v)?;
        let p_in_a = self.in_a(p);
        let u = self.u;
        if k.is_multiple_of(2) {
            if p_in_a {
                // (a)
                let mut m = self.matching(k / 2, &[])?;
                self.cover(&mut m, p, &[])?;
                self.keep_connected(&mut m, p, None);
                self.reroute(v, p, &m, None)?;
            } else {
                // (b)
                let avoid: Vec<usize> = u.into_iter().collect();
                let m = self.matching(k / 2 - 1, &avoid)?;
                self.reroute(v, p, &m, None)?;
                self.u = match u {
                    Some(u) if u != p => {
                        self.add(u, v)?;
                        None
                    }
                    _ => Some(v),
                };
            }
            return Ok(());
        }
        match (p_in_a, u) {
            (false, _) => {
                // (c)
                let m = self.matching((k - 1) / 2, &[])?;
                self.reroute(v, p, &m, None)?;
                if u == Some(p) {
                    self.u = None;
                }
            }
            (true, None) => {
                // (d)
                let mut m = self.matching((k - 1) / 2, &[])?;
                self.cover(&mut m, p, &[])?;
                self.keep_connected(&mut m, p, None);
                self.reroute(v, p, &m, None)?;
                self.u = Some(v);
            }
            (true, Some(u)) if u == p => {
                // The tree edge pv already repairs p; v takes (k - 1) / 2 edges avoiding p.
                let m = self.matching((k - 1) / 2, &[p])?;
                self.reroute(v, p, &m, None)?;
                self.u = None;
            }
            (true, Some(u)) => {
                // (e)
                if self.placed < k + 2 {
                    return Err(internal(format!(
                        "odd deficiency with only {} placed vertices contradicts the construction",
                        self.placed
                    )));
                }
                let mut m = self.matching(k.div_ceil(2), &[])?;
                self.cover(&mut m, p, &[])?;
                let pi = m.iter().position(|&(x, y)| x == p || y == p).unwrap();
                if m[pi] == norm(p, u) {
                    let covered = covered_by(&m);
                    if let Some(&q) = self.a.neighbors(p).iter().find(|&&q| !covered.contains(&q)) {
                        m[pi] = norm(p, q);
                    }
                }
                let pi = m.iter().position(|&(x, y)| x == p || y == p).unwrap();
                if m[pi] == norm(p, u) {
                    for &(x, y) in &m {
                        self.remove(x, y)?;
                    }
                    let covered = covered_by(&m);
                    let w = *covered
                        .iter()
                        .find(|&&w| w != p && w != u && !self.g.has_edge(u, w))
                        .ok_or_else(|| internal(format!("no vertex of the matching is free for {u}")))?;
                    for &x in &covered {
                        if x != p && x != w {
                            self.add(x, v)?;
                        }
                    }
                    self.add(u, w)?;
                } else {
                    match m.iter().position(|&(x, y)| x == u || y == u) {
                        Some(i) => {
                            m.remove(i);
                        }
                        None => {
                            let i = m.iter().rposition(|&(x, y)| x != p && y != p).unwrap();
                            m.remove(i);
                        }
                    }
                    let pi = m.iter().position(|&(x, y)| x == p || y == p).unwrap();
                    let q = if m[pi].0 == p { m[pi].1 } else { m[pi].0 };
                    if !component(&self.a, p, Some((p, q))).contains(&u) {
                        self.keep_connected(&mut m, p, Some(u));
                    }
                    self.reroute(v, p, &m, None)?;
                    self.add(u, v)?;
                }
                self.u = None;
            }
        }
        Ok(())
    }

    /// Removes the matched edges and joins their endpoints to `v`, except `p`
    /// (already joined by the tree edge) and `skip`.
    fn reroute(&mut self, v: usize, p: usize, m: &[Edge], skip: Option<usize>) -> Result<()> {
        for &(x, y) in m {
            self.remove(x, y)?;
        }
        for x in covered_by(m) {
            if x != p && Some(x) != skip {
                self.add(x, v)?;
            }
        }
        Ok(())
    }

    /// A matching of `A - avoid` with exactly `size` edges, lowest edges first.
    fn matching(&self, size: usize, avoid: &[usize]) -> Result<Vec<Edge>> {
        let mut used = vec![false; self.a.n()];
        for &x in avoid {
            used[x] = true;
        }
        let mut m = Vec::new();
        for (x, y) in self.a.edges() {
            if m.len() == size {
                return Ok(m);
            }
            if !used[x] && !used[y] {
                used[x] = true;
                used[y] = true;
                m.push((x, y));
            }
        }
        if m.len() >= size {
            return Ok(m);
        }
        let mut sub = self.a.clone();
        for &x in avoid {
            for y in self.a.neighbors(x).to_vec() {
                sub.remove_edge(x, y)?;
            }
        }
        let mut full = max_matching_from(&sub, &m);
        if full.len() < size {
            return Err(internal(format!(
                "added-edge graph has a maximum matching of {} edges, {size} needed",
                full.len()
            )));
        }
        full.truncate(size);
        Ok(full)
    }

    /// Makes `m` cover `p` by swapping in an edge `pq` of `A`.
    fn cover(&self, m: &mut Vec<Edge>, p: usize, avoid: &[usize]) -> Result<()> {
        if m.iter().any(|&(x, y)| x == p || y == p) {
            return Ok(());
        }
        let q = *self
            .a
            .neighbors(p)
            .iter()
            .find(|q| !avoid.contains(q))
            .ok_or_else(|| internal(format!("vertex {p} has no added edge to take over")))?;
        match m.iter().position(|&(x, y)| x == q || y == q) {
            Some(i) => {
                m.remove(i);
            }
            None => {
                m.pop();
            }
        }
        m.push(norm(p, q));
        Ok(())
    }

    /// Adjusts `m` so that replacing `pq` by the tree edge `pv` and `qv`
    /// cannot disconnect `A`. Only relevant for `k >= 4`.
    fn keep_connected(&self, m: &mut [Edge], p: usize, forbid: Option<usize>) {
        if self.k < 4 || self.a.degree(p) == 1 {
            return;
        }
        let pi = m.iter().position(|&(x, y)| x == p || y == p).expect("p is covered");
        let q = if m[pi].0 == p { m[pi].1 } else { m[pi].0 };
        if let Some(&t) = self.a.neighbors(p).iter().find(|&&t| self.a.degree(t) == 1 && Some(t) != forbid) {
            m[pi] = norm(p, t);
            return;
        }
        let comp = component(&self.a, p, Some((p, q)));
        if comp.contains(&q) {
            return;
        }
        if m.iter().any(|&(x, y)| x != p && y != p && comp.contains(&x)) {
            return;
        }
        let inner = comp.iter().copied().filter(|&x| x != p).find_map(|x| {
            self.a.neighbors(x).iter().find(|&&y| y != p && y > x).map(|&y| (x, y))
        });
        if let (Some(e), Some(i)) = (inner, m.iter().rposition(|&(x, y)| x != p && y != p)) {
            m[i] = e;
        }
    }
}

fn covered_by(m: &[Edge]) -> Vec<usize> {
    let mut c: Vec<usize> = m.iter().flat_map(|&(x, y)| [x, y]).collect();
    c.sort_unstable();
    c
}

/// Vertices reachable from `s` in `a`, optionally ignoring one edge.
fn component(a: &Graph, s: usize, without: Option<Edge>) -> Vec<usize> {
    let skip = without.map(|(x, y)| norm(x, y));
    let mut seen = vec![false; a.n()];
    seen[s] = true;
    let mut out = vec![s];
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &y in a.neighbors(x) {
            if !seen[y] && Some(norm(x, y)) != skip {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(t: &Graph, k: usize) -> AdditionLog {
        let log = complete_forest(t, k).unwrap();
        let h = log.apply(t).unwrap();
        assert!(h.min_degree().unwrap() >= k);
        assert_eq!(log.len(), total_deficiency(t, k).div_ceil(2));
        log
    }

    #[test]
    fn examples() {
        assert_eq!(check(&Graph::path(4), 2).edges, vec![(0, 3)]);
        assert_eq!(check(&Graph::star(3), 2).len(), 2);
        let log = check(&Graph::path(5), 4);
        assert_eq!(log.len(), 6);
        assert_eq!(log.apply(&Graph::path(5)).unwrap(), Graph::complete(5));
    }

    #[test]
    fn small_k_and_errors() {
        assert!(check(&Graph::new(3), 0).is_empty());
        assert_eq!(check(&Graph::new(3), 1).len(), 2);
        assert!(complete_forest(&Graph::path(3), 3).is_err());
        assert!(complete_forest(&Graph::cycle(5), 2).is_err());
    }

    #[test]
    fn long_paths_and_stars() {
        for k in 3..7 {
            for n in k + 1..k + 30 {
                check(&Graph::path(n), k);
                check(&Graph::star(n - 1), k);
                check(&Graph::new(n), k);
            }
        }
    }
}
