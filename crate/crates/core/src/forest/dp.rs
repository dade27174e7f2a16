//! Minimum total deficiency over vertex subsets of a forest, in `O(k n²)`.
//!
//! Every component hangs below an implicit root. For a vertex `v` and the
//! subtree spanned by `v` and its first `j` children the tables hold:
//!
//! * `zero[s]`: least deficiency of an `s`-vertex subset avoiding `v`;
//! * `one[s][d]`: least deficiency of an `s`-vertex subset containing `v`
//!   where `v` itself currently has deficiency exactly `d`.
//!
//! Adding a child `c` to a subset containing `v` lowers the deficiency of
//! both `v` and `c` by one when positive.

use crate::error::{internal, invalid, Result};
use crate::graph::Graph;

use super::tree::{bfs, centroid, NO_PARENT};

const INF: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Tables {
    k: usize,
    zero: Vec<u32>,
    one: Vec<u32>,
}

impl Tables {
    fn single(k: usize) -> Self {
        let mut one = vec![INF; 2 * (k + 1)];
        one[(k + 1) + k] = k as u32;
        Tables { k, zero: vec![0, INF], one }
    }

    fn size(&self) -> usize {
        self.zero.len() - 1
    }

    fn one(&self, s: usize, d: usize) -> u32 {
        self.one[s * (self.k + 1) + d]
    }

    /// Least deficiency with exactly `s` vertices, `v` in or out.
    fn best(&self, s: usize) -> u32 {
        (0..=self.k).map(|d| self.one(s, d)).fold(self.zero[s], u32::min)
    }

    /// Least deficiency with `v` included and its deficiency lowered by one
    /// when positive, as seen from a parent that is also included.
    fn join(&self, s: usize) -> u32 {
        (0..=self.k)
            .map(|d| self.one(s, d))
            .enumerate()
            .filter(|&(_, x)| x != INF)
            .map(|(d, x)| x - u32::from(d > 0))
            .fold(INF, u32::min)
    }

    fn merge(&self, child: &Tables) -> Tables {
        let k = self.k;
        let (na, nc) = (self.size(), child.size());
        let best: Vec<u32> = (0..=nc).map(|s| child.best(s)).collect();
        let join: Vec<u32> = (0..=nc).map(|s| child.join(s)).collect();
        let mut out = Tables { k, zero: vec![INF; na + nc + 1], one: vec![INF; (na + nc + 1) * (k + 1)] };
        for s1 in 0..=na {
            let z = self.zero[s1];
            if z != INF {
                for (s2, &b) in best.iter().enumerate() {
                    if b != INF {
                        let slot = &mut out.zero[s1 + s2];
                        *slot = (*slot).min(z + b);
                    }
                }
            }
            for d in 0..=k {
                let a = self.one(s1, d);
                if a == INF {
                    continue;
                }
                let nd = d.saturating_sub(1);
                let lowered = a - u32::from(d > 0);
                for (s2, &cz) in child.zero.iter().enumerate().take(nc + 1) {
                    let base = (s1 + s2) * (k + 1);
                    if cz != INF {
                        let slot = &mut out.one[base + d];
                        *slot = (*slot).min(a + cz);
                    }
                    if join[s2] != INF {
                        let slot = &mut out.one[base + nd];
                        *slot = (*slot).min(lowered + join[s2]);
                    }
                }
            }
        }
        out
    }
}

fn min_plus(acc: &[u32], other: &[u32]) -> Vec<u32> {
    let mut out = vec![INF; acc.len() + other.len() - 1];
    for (i, &a) in acc.iter().enumerate() {
        if a == INF {
            continue;
        }
        for (j, &b) in other.iter().enumerate() {
            if b != INF {
                out[i + j] = out[i + j].min(a + b);
            }
        }
    }
    out
}

struct Rooted {
    roots: Vec<usize>,
    children: Vec<Vec<usize>>,
    /// Parents before children.
    order: Vec<usize>,
}

fn root_forest(g: &Graph) -> Rooted {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut roots = Vec::new();
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let root = centroid(g, s);
        let (comp, parent) = bfs(g, root);
        for &v in &comp {
            seen[v] = true;
            if parent[v] != NO_PARENT {
                children[parent[v]].push(v);
            }
        }
        roots.push(root);
        order.extend(comp);
    }
    Rooted { roots, children, order }
}

/// Computes per-vertex final tables bottom-up. When `keep` is false a
/// child's tables are dropped as soon as its parent has absorbed them.
fn solve_tables(g: &Graph, k: usize, rooted: &Rooted, keep: bool) -> (Vec<Option<Tables>>, Vec<u32>) {
    let mut tables: Vec<Option<Tables>> = vec![None; g.n()];
    for &v in rooted.order.iter().rev() {
        let mut acc = Tables::single(k);
        for &c in &rooted.children[v] {
            let child = if keep { tables[c].clone() } else { tables[c].take() };
            acc = acc.merge(child.as_ref().expect("children finish first"));
        }
        tables[v] = Some(acc);
    }
    let mut top = vec![0u32];
    for &r in &rooted.roots {
        let t = if keep { tables[r].clone() } else { tables[r].take() };
        let t = t.expect("roots finish last");
        let best: Vec<u32> = (0..=t.size()).map(|s| t.best(s)).collect();
        top = min_plus(&top, &best);
    }
    (tables, top)
}

fn check_forest(g: &Graph) -> Result<()> {
    if g.is_forest() {
        Ok(())
    } else {
        Err(invalid("not a forest"))
    }
}

fn pick(top: &[u32], p: usize) -> Option<(usize, u32)> {
    (p..top.len()).filter(|&s| top[s] != INF).map(|s| (s, top[s])).min_by_key(|&(s, v)| (v, s))
}

/// `min { df(g[H]) : |H| >= p }`, or `None` when `p > n`.
pub fn min_deficiency_forest(g: &Graph, k: usize, p: usize) -> Result<Option<usize>> {
    check_forest(g)?;
    let rooted = root_forest(g);
    let (_, top) = solve_tables(g, k, &rooted, false);
    Ok(pick(&top, p).map(|(_, v)| v as usize))
}

#[derive(Debug, Clone, Copy)]
enum State {
    Out(usize),
    In(usize, usize),
}

/// Like [`min_deficiency_forest`], also returning a sorted optimal `H`.
pub fn min_deficiency_forest_witness(g: &Graph, k: usize, p: usize) -> Result<Option<(usize, Vec<usize>)>> {
    check_forest(g)?;
    let rooted = root_forest(g);
    let (tables, top) = solve_tables(g, k, &rooted, true);
    let Some((s_best, value)) = pick(&top, p) else { return Ok(None) };
    let table = |v: usize| tables[v].as_ref().expect("kept");

    let mut tasks: Vec<(usize, State)> = Vec::new();
    // Undo the fold over component roots, last component first.
    let mut prefixes = vec![vec![0u32]];
    let bests: Vec<Vec<u32>> =
        rooted.roots.iter().map(|&r| (0..=table(r).size()).map(|s| table(r).best(s)).collect()).collect();
    for b in &bests {
        let next = min_plus(prefixes.last().unwrap(), b);
        prefixes.push(next);
    }
    let mut s = s_best;
    for (j, &r) in rooted.roots.iter().enumerate().rev() {
        let want = prefixes[j + 1][s];
        let prev = &prefixes[j];
        let s2 = (0..=s.min(bests[j].len() - 1))
            .find(|&s2| {
                s - s2 < prev.len() && prev[s - s2] != INF && bests[j][s2] != INF && prev[s - s2] + bests[j][s2] == want
            })
            .ok_or_else(|| internal("forest backtracking lost the optimum at the root"))?;
        tasks.push((r, best_state(table(r), s2)));
        s -= s2;
    }

    let mut chosen = Vec::new();
    while let Some((v, state)) = tasks.pop() {
        if matches!(state, State::Out(0)) {
            continue;
        }
        let kids = &rooted.children[v];
        let mut prefix = vec![Tables::single(k)];
        for &c in kids {
            let next = prefix.last().unwrap().merge(table(c));
            prefix.push(next);
        }
        let mut state = state;
        for (j, &c) in kids.iter().enumerate().rev() {
            let (prev, cur, child) = (&prefix[j], &prefix[j + 1], table(c));
            let (next_state, child_state) = split(prev, cur, child, state)
                .ok_or_else(|| internal(format!("forest backtracking lost the optimum at vertex {v}")))?;
            tasks.push((c, child_state));
            state = next_state;
        }
        match state {
            State::In(1, d) if d == k => chosen.push(v),
            State::Out(0) => {}
            _ => return Err(internal(format!("forest backtracking ended in {state:?} at vertex {v}"))),
        }
    }
    chosen.sort_unstable();
    Ok(Some((value as usize, chosen)))
}

fn best_state(t: &Tables, s: usize) -> State {
    let want = t.best(s);
    if t.zero[s] == want {
        return State::Out(s);
    }
    let d = (0..=t.k).find(|&d| t.one(s, d) == want).expect("best is attained");
    State::In(s, d)
}

fn join_state(t: &Tables, s: usize) -> State {
    let want = t.join(s);
    let d = (0..=t.k)
        .find(|&d| t.one(s, d) != INF && t.one(s, d) - u32::from(d > 0) == want)
        .expect("join is attained");
    State::In(s, d)
}

/// Finds how the entry `state` of `cur` splits into an entry of `prev` and a
/// contribution of `child`.
fn split(prev: &Tables, cur: &Tables, child: &Tables, state: State) -> Option<(State, State)> {
    let nc = child.size();
    match state {
        State::Out(s) => {
            let want = cur.zero[s];
            (0..=s.min(nc)).find_map(|s2| {
                let (a, b) = (*prev.zero.get(s - s2)?, child.best(s2));
                (a != INF && b != INF && a + b == want).then(|| (State::Out(s - s2), best_state(child, s2)))
            })
        }
        State::In(s, d) => {
            let want = cur.one(s, d);
            for s2 in 0..=s.min(nc) {
                let s1 = s - s2;
                if s1 > prev.size() {
                    continue;
                }
                let a = prev.one(s1, d);
                if a != INF && child.zero[s2] != INF && a + child.zero[s2] == want {
                    return Some((State::In(s1, d), State::Out(s2)));
                }
                let j = child.join(s2);
                if j == INF {
                    continue;
                }
                if d < prev.k {
                    let a = prev.one(s1, d + 1);
                    if a != INF && a - 1 + j == want {
                        return Some((State::In(s1, d + 1), join_state(child, s2)));
                    }
                }
                if d == 0 && a != INF && a + j == want {
                    return Some((State::In(s1, 0), join_state(child, s2)));
                }
            }
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_subgraph, total_deficiency};

    fn brute(g: &Graph, k: usize, p: usize) -> Option<usize> {
        let n = g.n();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize >= p)
            .map(|m| {
                let s: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                total_deficiency(&induced_subgraph(g, &s).0, k)
            })
            .min()
    }

    #[test]
    fn examples() {
        assert_eq!(min_deficiency_forest(&Graph::path(5), 2, 5).unwrap(), Some(2));
        assert_eq!(min_deficiency_forest(&Graph::star(5), 2, 4).unwrap(), Some(3));
        assert_eq!(min_deficiency_forest(&Graph::star(5), 2, 0).unwrap(), Some(0));
        assert_eq!(min_deficiency_forest(&Graph::path(3), 2, 4).unwrap(), None);
        assert!(min_deficiency_forest(&Graph::cycle(3), 2, 1).is_err());
    }

    #[test]
    fn witness_matches_value() {
        let g = Graph::from_edges(9, [(0, 1), (1, 2), (1, 3), (3, 4), (5, 6), (6, 7), (6, 8)]).unwrap();
        for k in 0..4 {
            for p in 0..=9 {
                let value = min_deficiency_forest(&g, k, p).unwrap();
                assert_eq!(value, brute(&g, k, p), "k={k} p={p}");
                let (d, h) = min_deficiency_forest_witness(&g, k, p).unwrap().unwrap();
                assert_eq!(Some(d), value);
                assert!(h.len() >= p);
                assert_eq!(total_deficiency(&induced_subgraph(&g, &h).0, k), d);
            }
        }
    }
}
