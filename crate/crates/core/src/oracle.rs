//! Exhaustive ground truth: brute-force decision, brute-force minimum
//! deficiency, and graph enumeration. Nothing here is clever on purpose.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, k_core, total_deficiency, Graph};
use crate::instance::{Answer, Certificate, Instance, Normalized};

/// Hard limits checked before any search starts. An instance is accepted
/// when it has at most `max_vertices` vertices or a budget of at most
/// `max_budget`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_budget: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_vertices: 10, max_budget: 3, time_limit: None }
    }
}

struct Clock {
    deadline: Option<Instant>,
}

impl Clock {
    fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::CapExceeded("time limit reached".into())),
            _ => Ok(()),
        }
    }
}

/// Decides the instance exhaustively.
///
/// With few vertices every candidate core `H` is enumerated and the fewest
/// edges inside `H` raising it to minimum degree `k` are found by search;
/// otherwise every set of at most `b` non-edges is tried.
pub fn brute_force_solve(inst: &Instance, cap: SearchBudget) -> Result<Answer> {
    let n = inst.graph.n();
    if n > cap.max_vertices && inst.b > cap.max_budget {
        return Err(Error::CapExceeded(format!(
            "{n} vertices exceed {} and budget {} exceeds {}",
            cap.max_vertices, inst.b, cap.max_budget
        )));
    }
    if n > 63 {
        return Err(Error::CapExceeded(format!("{n} vertices exceed 63")));
    }
    let p = match inst.normalize() {
        Normalized::Decided(answer) => return Ok(answer),
        Normalized::Target(p) => p,
    };
    let clock = Clock { deadline: cap.time_limit.map(|t| Instant::now() + t) };
    let found = if n <= cap.max_vertices {
        by_core_sets(inst, p, &clock)?
    } else {
        by_edge_sets(inst, p, &clock)?
    };
    Ok(match found {
        Some(edges) => Answer::yes(Certificate::from_additions(&inst.graph, inst.k, edges)),
        None => Answer::no(),
    })
}

fn by_core_sets(inst: &Instance, p: usize, clock: &Clock) -> Result<Option<Vec<(usize, usize)>>> {
    let (g, k) = (&inst.graph, inst.k);
    let n = g.n();
    for mask in 0u64..1 << n {
        if (mask.count_ones() as usize) < p {
            continue;
        }
        clock.check()?;
        let h: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let (mut sub, back) = induced_subgraph(g, &h);
        let mut added = Vec::new();
        if complete_within(&mut sub, k, inst.b, 0, &mut added, clock)? {
            return Ok(Some(added.into_iter().map(|(x, y)| (back[x], back[y])).collect()));
        }
    }
    Ok(None)
}

/// Depth-first search for at most `limit` additions giving minimum degree
/// `k`: the lowest deficient vertex takes its next partner, partners of one
/// vertex in increasing order.
fn complete_within(
    g: &mut Graph,
    k: usize,
    limit: usize,
    from: usize,
    added: &mut Vec<(usize, usize)>,
    clock: &Clock,
) -> Result<bool> {
    let df = total_deficiency(g, k);
    if df == 0 {
        return Ok(true);
    }
    if df.div_ceil(2) > limit {
        return Ok(false);
    }
    clock.check()?;
    let x = (0..g.n()).find(|&v| g.degree(v) < k).expect("positive deficiency");
    let floor = match added.last() {
        Some(&(a, b)) if a == x => b + 1,
        _ => from,
    };
    for y in floor..g.n() {
        if y == x || g.has_edge(x, y) {
            continue;
        }
        g.add_edge(x, y)?;
        added.push((x, y));
        if complete_within(g, k, limit - 1, 0, added, clock)? {
            return Ok(true);
        }
        added.pop();
        g.remove_edge(x, y)?;
    }
    Ok(false)
}

fn by_edge_sets(inst: &Instance, p: usize, clock: &Clock) -> Result<Option<Vec<(usize, usize)>>> {
    let g = &inst.graph;
    let n = g.n();
    let candidates: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    let mut chosen: Vec<usize> = Vec::new();
    let mut h = g.clone();
    fn go(
        inst: &Instance,
        p: usize,
        cands: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<usize>,
        h: &mut Graph,
        clock: &Clock,
    ) -> Result<bool> {
        if k_core(h, inst.k).len() >= p {
            return Ok(true);
        }
        if chosen.len() == inst.b {
            return Ok(false);
        }
        clock.check()?;
        for i in start..cands.len() {
            let (u, v) = cands[i];
            h.add_edge(u, v)?;
            chosen.push(i);
            if go(inst, p, cands, i + 1, chosen, h, clock)? {
                return Ok(true);
            }
            chosen.pop();
            h.remove_edge(u, v)?;
        }
        Ok(false)
    }
    if go(inst, p, &candidates, 0, &mut chosen, &mut h, clock)? {
        Ok(Some(chosen.into_iter().map(|i| candidates[i]).collect()))
    } else {
        Ok(None)
    }
}

/// `min { df(g[Ŝ]) : |Ŝ| >= p }` by trying every subset, or `None` when
/// `p > n`. Refuses graphs with more than 16 vertices.
pub fn brute_force_min_deficiency(g: &Graph, k: usize, p: usize) -> Result<Option<usize>> {
    Ok(brute_force_deficiency_profile(g, k)?.into_iter().skip(p).flatten().min())
}

/// For each size `s`, the least deficiency of an induced subgraph on exactly
/// `s` vertices.
pub fn brute_force_deficiency_profile(g: &Graph, k: usize) -> Result<Vec<Option<usize>>> {
    let n = g.n();
    if n > 16 {
        return Err(Error::CapExceeded(format!("{n} vertices exceed 16")));
    }
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let mut best = vec![None::<usize>; n + 1];
    for mask in 0u32..1 << n {
        let df: usize = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| k.saturating_sub((nbr[v] & mask).count_ones() as usize))
            .sum();
        let slot = &mut best[mask.count_ones() as usize];
        *slot = Some(slot.map_or(df, |x| x.min(df)));
    }
    Ok(best)
}

/// All labeled graphs on `n <= 8` vertices, ordered by the bitmask over the
/// pairs `(0,1), (0,2), ..., (n-2,n-1)` in lexicographic order.
pub fn enumerate_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "enumeration is limited to 8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
            .expect("pairs are distinct")
    })
}

pub fn enumerate_forests(n: usize) -> impl Iterator<Item = Graph> {
    enumerate_graphs(n).filter(Graph::is_forest)
}

pub fn enumerate_connected(n: usize) -> impl Iterator<Item = Graph> {
    enumerate_graphs(n).filter(|g| g.components().len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::verify_certificate;

    fn solve(g: Graph, k: usize, b: usize, p: usize) -> Answer {
        let inst = Instance::new(g, k, b, p);
        let ans = brute_force_solve(&inst, SearchBudget::default()).unwrap();
        if let Some(c) = &ans.certificate {
            assert!(verify_certificate(&inst, c).is_accepted());
        }
        ans
    }

    #[test]
    fn decisions() {
        assert!(solve(Graph::path(4), 2, 1, 4).feasible);
        let tri_plus = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!solve(tri_plus.clone(), 2, 1, 4).feasible);
        assert!(solve(tri_plus, 2, 2, 4).feasible);
        assert!(solve(Graph::new(5), 4, 10, 5).feasible);
        assert!(!solve(Graph::new(5), 4, 9, 5).feasible);
    }

    #[test]
    fn edge_set_mode_agrees() {
        let g = Graph::from_edges(12, (0..11).map(|i| (i, i + 1))).unwrap();
        let cap = SearchBudget { max_vertices: 4, max_budget: 3, time_limit: None };
        let inst = Instance::new(g, 2, 1, 12);
        assert!(brute_force_solve(&inst, cap).unwrap().feasible);
        let inst = Instance::new(inst.graph, 2, 4, 12);
        assert!(matches!(brute_force_solve(&inst, cap), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn min_deficiency() {
        assert_eq!(brute_force_min_deficiency(&Graph::path(5), 2, 5).unwrap(), Some(2));
        let mut g = Graph::from_edges(6, Graph::cycle(5).edges()).unwrap();
        g.add_edge(4, 5).unwrap();
        assert_eq!(brute_force_min_deficiency(&g, 2, 5).unwrap(), Some(0));
        assert_eq!(brute_force_min_deficiency(&g, 2, 0).unwrap(), Some(0));
        assert_eq!(brute_force_min_deficiency(&g, 2, 7).unwrap(), None);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(3).count(), 8);
        assert_eq!(enumerate_graphs(4).count(), 64);
        assert_eq!(enumerate_forests(4).count(), 38);
        assert_eq!(enumerate_connected(4).count(), 38);
    }
}
