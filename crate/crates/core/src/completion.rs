//! Edge additions that raise every vertex to degree `k`: edge classification,
//! the constructive completion for large total deficiency, and a greedy
//! completion with no optimality claim.

use crate::error::{internal, invalid, Result};
use crate::graph::{total_deficiency, Graph};

/// Effect of one added edge on total deficiency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// Both endpoints deficient: total deficiency drops by two.
    Good,
    /// Exactly one endpoint deficient: drops by one.
    Bad,
    /// Neither endpoint deficient.
    Wasted,
}

pub fn classify_edge(g: &Graph, k: usize, u: usize, v: usize) -> Result<EdgeKind> {
    if u >= g.n() || v >= g.n() {
        return Err(invalid(format!("edge {u}-{v} references an unknown vertex")));
    }
    if u == v {
        return Err(invalid(format!("self-loop at vertex {u}")));
    }
    if g.has_edge(u, v) {
        return Err(invalid(format!("edge {u}-{v} already present")));
    }
    Ok(match (g.degree(u) < k, g.degree(v) < k) {
        (true, true) => EdgeKind::Good,
        (false, false) => EdgeKind::Wasted,
        _ => EdgeKind::Bad,
    })
}

/// An ordered list of added edges with the kind each had when it was added.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AdditionLog {
    pub edges: Vec<(usize, usize)>,
    pub kinds: Vec<EdgeKind>,
}

impl AdditionLog {
    /// Replays `edges` on `g` in order, classifying each addition.
    pub fn replay(g: &Graph, k: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut h = g.clone();
        let mut kinds = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            kinds.push(classify_edge(&h, k, u, v)?);
            h.add_edge(u, v)?;
        }
        Ok(AdditionLog { edges, kinds })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn count(&self, kind: EdgeKind) -> usize {
        self.kinds.iter().filter(|&&x| x == kind).count()
    }

    /// `g` with the logged edges added.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        let mut h = g.clone();
        for &(u, v) in &self.edges {
            h.add_edge(u, v)?;
        }
        Ok(h)
    }
}

fn lowest_non_neighbor(g: &Graph, v: usize, want: impl Fn(usize) -> bool) -> Option<usize> {
    (0..g.n()).find(|&w| w != v && !g.has_edge(v, w) && want(w))
}

/// Completes `g` to minimum degree `k` with exactly `⌈df(g)/2⌉` additions, at
/// most one of them bad. Requires `k >= 2` and `df(g) >= 3k³`.
pub fn complete_large(g: &Graph, k: usize) -> Result<AdditionLog> {
    if k < 2 {
        return Err(invalid(format!("large-deficiency completion needs k >= 2, got {k}")));
    }
    let df = total_deficiency(g, k);
    if df < 3 * k * k * k {
        return Err(invalid(format!(
            "total deficiency {df} is below threshold 3k^3 = {}",
            3 * k * k * k
        )));
    }
    let n = g.n();
    let mut h = g.clone();
    let mut added: Vec<(usize, usize)> = Vec::new();
    let deficient = |h: &Graph, v: usize| h.degree(v) < k;

    // Pair up nonadjacent deficient vertices until the deficient set is a clique.
    let mut u = 0;
    while u < n {
        if deficient(&h, u) {
            if let Some(v) = (u + 1..n).find(|&v| deficient(&h, v) && !h.has_edge(u, v)) {
                h.add_edge(u, v)?;
                added.push((u, v));
                continue;
            }
        }
        u += 1;
    }

    // Reroute logged edges into the remaining deficient clique.
    loop {
        let clique: Vec<usize> = (0..n).filter(|&v| deficient(&h, v)).collect();
        let remaining: usize = clique.iter().map(|&v| k - h.degree(v)).sum();
        if clique.len() > k {
            return Err(internal(format!("deficient set of size {} is not a clique", clique.len())));
        }
        if remaining < 2 {
            break;
        }
        let step = find_reroute(&h, k, &clique, &added);
        let Some((u, v, idx, (a, b))) = step else {
            return Err(internal("no logged edge can be rerouted into the deficient clique"));
        };
        added.remove(idx);
        h.remove_edge(a, b)?;
        h.add_edge(u, a)?;
        h.add_edge(v, b)?;
        added.push((u.min(a), u.max(a)));
        added.push((v.min(b), v.max(b)));
    }

    if let Some(v) = (0..n).find(|&v| deficient(&h, v)) {
        let w = lowest_non_neighbor(&h, v, |_| true)
            .ok_or_else(|| internal(format!("vertex {v} has no non-neighbor left")))?;
        h.add_edge(v, w)?;
        added.push((v.min(w), v.max(w)));
    }

    let log = AdditionLog::replay(g, k, added)?;
    if log.len() != df.div_ceil(2) || log.count(EdgeKind::Wasted) > 0 || log.count(EdgeKind::Bad) > df % 2 {
        return Err(internal(format!(
            "large completion used {} edges ({} bad) for deficiency {df}",
            log.len(),
            log.count(EdgeKind::Bad)
        )));
    }
    Ok(log)
}

/// First `(u, v, log index, (u', v'))` in search order such that `u'v'` is a
/// logged edge avoiding the clique with `uu'` and `vv'` both absent.
fn find_reroute(
    h: &Graph,
    k: usize,
    clique: &[usize],
    added: &[(usize, usize)],
) -> Option<(usize, usize, usize, (usize, usize))> {
    let in_clique = |x: usize| clique.binary_search(&x).is_ok();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i..] {
            if u == v && k - h.degree(u) < 2 {
                continue;
            }
            for (idx, &(x, y)) in added.iter().enumerate() {
                if in_clique(x) || in_clique(y) {
                    continue;
                }
                for (a, b) in [(x, y), (y, x)] {
                    if !h.has_edge(u, a) && !h.has_edge(v, b) {
                        return Some((u, v, idx, (a, b)));
                    }
                }
            }
        }
    }
    None
}

/// Greedily raises every deficient vertex to degree `k`, preferring other
/// deficient vertices as partners. Uses at most `df(g)` additions.
pub fn complete_small(g: &Graph, k: usize) -> Result<AdditionLog> {
    let n = g.n();
    if n <= k {
        return Err(invalid(format!("{n} vertices cannot reach degree {k}")));
    }
    let mut h = g.clone();
    let mut log = AdditionLog::default();
    for v in 0..n {
        while h.degree(v) < k {
            let w = lowest_non_neighbor(&h, v, |w| h.degree(w) < k)
                .or_else(|| lowest_non_neighbor(&h, v, |_| true))
                .ok_or_else(|| internal(format!("vertex {v} has no non-neighbor left")))?;
            log.kinds.push(classify_edge(&h, k, v, w)?);
            log.edges.push((v.min(w), v.max(w)));
            h.add_edge(v, w)?;
        }
    }
    Ok(log)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn min_degree_after(g: &Graph, log: &AdditionLog) -> usize {
        log.apply(g).unwrap().min_degree().unwrap()
    }

    #[test]
    fn classification() {
        let p3 = Graph::path(3);
        assert_eq!(classify_edge(&p3, 2, 0, 2).unwrap(), EdgeKind::Good);
        let star = Graph::star(3);
        assert_eq!(classify_edge(&star, 2, 1, 2).unwrap(), EdgeKind::Good);
        let mut k4 = Graph::complete(4);
        k4 = Graph::from_edges(5, k4.edges()).unwrap();
        assert_eq!(classify_edge(&k4, 3, 4, 0).unwrap(), EdgeKind::Bad);
        assert_eq!(classify_edge(&k4, 1, 0, 4).unwrap(), EdgeKind::Bad);
        assert_eq!(classify_edge(&Graph::cycle(4), 2, 0, 2).unwrap(), EdgeKind::Wasted);
        assert!(classify_edge(&p3, 2, 0, 1).is_err());
        assert!(classify_edge(&p3, 2, 1, 1).is_err());
    }

    #[test]
    fn large_completion_of_empty_graphs() {
        let g = Graph::new(30);
        let log = complete_large(&g, 2).unwrap();
        assert_eq!(log.len(), 30);
        assert_eq!(log.count(EdgeKind::Good), 30);
        assert_eq!(min_degree_after(&g, &log), 2);

        let g = Graph::new(41);
        let log = complete_large(&g, 3).unwrap();
        assert_eq!(log.len(), 62);
        assert_eq!(log.count(EdgeKind::Bad), 1);
        assert_eq!(min_degree_after(&g, &log), 3);
    }

    #[test]
    fn large_completion_rejects_small_deficiency() {
        assert!(complete_large(&Graph::cycle(10), 2).is_err());
        assert!(complete_large(&Graph::new(5), 2).is_err());
        assert!(complete_large(&Graph::new(100), 1).is_err());
    }

    #[test]
    fn small_completion() {
        let log = complete_small(&Graph::path(3), 2).unwrap();
        assert_eq!(log.edges, vec![(0, 2)]);
        let star = Graph::star(3);
        let log = complete_small(&star, 2).unwrap();
        assert_eq!(log.len(), 2);
        assert_eq!(min_degree_after(&star, &log), 2);
        assert!(complete_small(&Graph::complete(5), 4).unwrap().is_empty());
        assert!(complete_small(&Graph::new(2), 2).is_err());
    }
}
