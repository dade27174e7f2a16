//! Seeded random graph models. All draws come from [`SplitMix64`] in the
//! order documented on each function.

use std::collections::BTreeSet;

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Uniform labeled tree: `n - 2` draws of `below(n)` form a Prüfer sequence,
/// decoded by repeatedly attaching the lowest-id current leaf.
pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("a tree needs at least one vertex"));
    }
    if n <= 2 {
        return Ok(Graph::path(n));
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut g = Graph::new(n);
    for &x in &code {
        let leaf = leaves.pop_first().expect("a Prüfer sequence always leaves a leaf");
        g.add_edge(leaf, x)?;
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    g.add_edge(last[0], last[1])?;
    Ok(g)
}

/// A random tree whose edges are each kept with probability `keep`, one
/// `unit()` draw per edge in lexicographic order.
pub fn random_forest(n: usize, keep: f64, rng: &mut SplitMix64) -> Result<Graph> {
    let tree = random_tree(n, rng)?;
    let edges: Vec<(usize, usize)> = tree.edges().collect();
    Graph::from_edges(n, edges.into_iter().filter(|_| rng.chance(keep)))
}

/// Erdős–Rényi `G(n, q)`: one `unit()` draw per pair `u < v` in
/// lexicographic order.
pub fn gnp(n: usize, q: f64, rng: &mut SplitMix64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&q) {
        return Err(invalid(format!("edge probability {q} outside [0, 1]")));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(q) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// A graph whose edges all touch a random `c`-set: the set is the first `c`
/// entries of a partial Fisher–Yates shuffle of `0..n` (position `i` swaps
/// with `i + below(n - i)`), then each pair `u < v` meeting the set is an
/// edge with probability `q`.
pub fn vc_bounded(n: usize, c: usize, q: f64, rng: &mut SplitMix64) -> Result<Graph> {
    if c > n {
        return Err(invalid(format!("cover size {c} exceeds {n} vertices")));
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(invalid(format!("edge probability {q} outside [0, 1]")));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in 0..c {
        let j = i + rng.below((n - i) as u64) as usize;
        perm.swap(i, j);
    }
    let mut in_set = vec![false; n];
    for &v in &perm[..c] {
        in_set[v] = true;
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if (in_set[u] || in_set[v]) && rng.chance(q) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_trees_and_deterministic() {
        for n in 1..30 {
            let g = random_tree(n, &mut SplitMix64::new(7)).unwrap();
            assert_eq!(g.m(), n - 1);
            assert!(g.is_forest());
            assert_eq!(g, random_tree(n, &mut SplitMix64::new(7)).unwrap());
        }
    }

    #[test]
    fn cover_set_touches_every_edge() {
        let g = vc_bounded(10, 3, 0.7, &mut SplitMix64::new(3)).unwrap();
        let mut best = usize::MAX;
        for mask in 0u32..1 << 10 {
            if g.edges().all(|(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1) {
                best = best.min(mask.count_ones() as usize);
            }
        }
        assert!(best <= 3);
        assert!(gnp(4, 1.5, &mut SplitMix64::new(0)).is_err());
    }
}
