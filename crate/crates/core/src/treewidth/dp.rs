//! Minimum total deficiency over vertex subsets, by dynamic programming over
//! a nice tree decomposition.
//!
//! An entry of node `t` is keyed by the chosen part `S` of the bag (a bitmask
//! over bag positions) and the current deficiencies `f` of the vertices of
//! `S` (packed in base `k + 1`), and holds for each size `s` the least
//! deficiency of a chosen set inside the subtree with those traits.
//!
//! * Introducing `v` into the chosen set lowers the deficiency of each
//!   chosen bag neighbor by one where positive, and `v` starts at
//!   `max(0, k - |N(v) ∩ S|)`.
//! * At a join, a vertex of `S` is deficient only if it is deficient on both
//!   sides, and then has deficiency `max(0, f1 + f2 - k + deg_S)`.

use std::collections::BTreeMap;

use crate::error::{internal, Result};
use crate::graph::Graph;

use super::decomposition::{NiceDecomposition, NodeKind};

const INF: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    mask: u32,
    f: u64,
}

#[derive(Debug, Clone, Copy)]
enum Back {
    Leaf,
    Introduce { child: Key, took: bool },
    Forget { child: Key },
    Join { left: Key, s_left: u32, right: Key },
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    value: u32,
    back: Back,
}

const EMPTY: Cell = Cell { value: INF, back: Back::Leaf };

type Table = BTreeMap<Key, Vec<Cell>>;

fn relax(row: &mut [Cell], s: usize, value: u32, back: Back) {
    if value < row[s].value {
        row[s] = Cell { value, back };
    }
}

struct Codec {
    base: u64,
}

impl Codec {
    fn decode(&self, key: Key, len: usize) -> Vec<Option<u64>> {
        let mut f = key.f;
        (0..len)
            .map(|i| {
                let digit = f % self.base;
                f /= self.base;
                (key.mask >> i & 1 == 1).then_some(digit)
            })
            .collect()
    }

    fn encode(&self, state: &[Option<u64>]) -> Key {
        let mut mask = 0;
        let mut f = 0;
        for (i, x) in state.iter().enumerate().rev() {
            f *= self.base;
            if let Some(d) = x {
                mask |= 1 << i;
                f += d;
            }
        }
        Key { mask, f }
    }
}

/// Tables for every node of the decomposition.
pub struct DeficiencyDp<'a> {
    dec: &'a NiceDecomposition,
    tables: Vec<Table>,
    sizes: Vec<usize>,
}

impl<'a> DeficiencyDp<'a> {
    pub fn run(g: &Graph, dec: &'a NiceDecomposition, k: usize) -> Result<Self> {
        dec.validate(g)?;
        if dec.width() >= 31 {
            return Err(crate::error::Error::Unsupported(format!("decomposition width {} is too large", dec.width())));
        }
        let codec = Codec { base: k as u64 + 1 };
        let nodes = dec.nodes();
        let mut tables: Vec<Table> = Vec::with_capacity(nodes.len());
        let mut sizes = Vec::with_capacity(nodes.len());
        for node in nodes {
            let bag = &node.bag;
            let len = bag.len();
            let (table, size) = match node.kind {
                NodeKind::Leaf => {
                    let mut t = Table::new();
                    t.insert(Key { mask: 0, f: 0 }, vec![Cell { value: 0, back: Back::Leaf }]);
                    (t, 0)
                }
                NodeKind::Introduce(v) => {
                    let c = node.children[0];
                    let size = sizes[c] + 1;
                    let pos = bag.binary_search(&v).unwrap();
                    let adjacent: Vec<bool> = bag.iter().map(|&w| g.has_edge(v, w)).collect();
                    let mut t = Table::new();
                    for (&key, row) in &tables[c] {
                        let mut state = codec.decode(key, len - 1);
                        state.insert(pos, None);
                        let out = t.entry(codec.encode(&state)).or_insert_with(|| vec![EMPTY; size + 1]);
                        for (s, cell) in row.iter().enumerate() {
                            if cell.value != INF {
                                relax(out, s, cell.value, Back::Introduce { child: key, took: false });
                            }
                        }
                        let mut relief = 0u32;
                        let mut chosen_nbrs = 0u64;
                        for (i, x) in state.iter_mut().enumerate() {
                            if let Some(d) = x {
                                if adjacent[i] {
                                    chosen_nbrs += 1;
                                    if *d > 0 {
                                        *d -= 1;
                                        relief += 1;
                                    }
                                }
                            }
                        }
                        let own = (k as u64).saturating_sub(chosen_nbrs);
                        state[pos] = Some(own);
                        let out = t.entry(codec.encode(&state)).or_insert_with(|| vec![EMPTY; size + 1]);
                        for (s, cell) in row.iter().enumerate() {
                            if cell.value != INF {
                                let value = cell.value + own as u32 - relief;
                                relax(out, s + 1, value, Back::Introduce { child: key, took: true });
                            }
                        }
                    }
                    (t, size)
                }
                NodeKind::Forget(v) => {
                    let c = node.children[0];
                    let size = sizes[c];
                    let pos = nodes[c].bag.binary_search(&v).unwrap();
                    let mut t = Table::new();
                    for (&key, row) in &tables[c] {
                        let mut state = codec.decode(key, len + 1);
                        state.remove(pos);
                        let out = t.entry(codec.encode(&state)).or_insert_with(|| vec![EMPTY; size + 1]);
                        for (s, cell) in row.iter().enumerate() {
                            if cell.value != INF {
                                relax(out, s, cell.value, Back::Forget { child: key });
                            }
                        }
                    }
                    (t, size)
                }
                NodeKind::Join => {
                    let (l, r) = (node.children[0], node.children[1]);
                    let size = sizes[l] + sizes[r] - len;
                    let nbr_mask: Vec<u32> = bag
                        .iter()
                        .map(|&v| bag.iter().enumerate().filter(|&(_, &w)| g.has_edge(v, w)).fold(0, |m, (j, _)| m | 1 << j))
                        .collect();
                    let mut by_mask: BTreeMap<u32, Vec<(Key, &Vec<Cell>)>> = BTreeMap::new();
                    for (&key, row) in &tables[r] {
                        by_mask.entry(key.mask).or_default().push((key, row));
                    }
                    let mut t = Table::new();
                    for (&lk, lrow) in &tables[l] {
                        let Some(partners) = by_mask.get(&lk.mask) else { continue };
                        let chosen = lk.mask.count_ones() as usize;
                        let ls = codec.decode(lk, len);
                        for &(rk, rrow) in partners {
                            let rs = codec.decode(rk, len);
                            let mut state = vec![None; len];
                            let mut correction: i64 = 0;
                            for i in 0..len {
                                if let (Some(a), Some(b)) = (ls[i], rs[i]) {
                                    let deg = (nbr_mask[i] & lk.mask).count_ones() as i64;
                                    let f = if a == 0 || b == 0 { 0 } else { (a as i64 + b as i64 - k as i64 + deg).max(0) };
                                    correction += f - a as i64 - b as i64;
                                    state[i] = Some(f as u64);
                                }
                            }
                            let out = t.entry(codec.encode(&state)).or_insert_with(|| vec![EMPTY; size + 1]);
                            for (s1, c1) in lrow.iter().enumerate() {
                                if c1.value == INF {
                                    continue;
                                }
                                for (s2, c2) in rrow.iter().enumerate() {
                                    if c2.value == INF {
                                        continue;
                                    }
                                    let value = (c1.value as i64 + c2.value as i64 + correction) as u32;
                                    let back = Back::Join { left: lk, s_left: s1 as u32, right: rk };
                                    relax(out, s1 + s2 - chosen, value, back);
                                }
                            }
                        }
                    }
                    (t, size)
                }
            };
            tables.push(table);
            sizes.push(size);
        }
        Ok(DeficiencyDp { dec, tables, sizes })
    }

    fn root_row(&self) -> &[Cell] {
        self.tables[self.dec.root()].get(&Key { mask: 0, f: 0 }).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Least deficiency of an induced subgraph on exactly `s` vertices, for each `s`.
    pub fn profile(&self) -> Vec<Option<usize>> {
        self.root_row().iter().map(|c| (c.value != INF).then_some(c.value as usize)).collect()
    }

    /// Least deficiency over sets of at least `p` vertices, smallest such set
    /// size on ties; `None` when `p` exceeds the vertex count.
    pub fn best(&self, p: usize) -> Option<(usize, usize)> {
        let row = self.root_row();
        (p..row.len()).filter(|&s| row[s].value != INF).min_by_key(|&s| (row[s].value, s)).map(|s| (row[s].value as usize, s))
    }

    /// Reconstructs a set attaining the root entry of size `s`.
    pub fn witness(&self, s: usize) -> Result<Vec<usize>> {
        let nodes = self.dec.nodes();
        let mut chosen = Vec::new();
        let mut stack = vec![(self.dec.root(), Key { mask: 0, f: 0 }, s)];
        while let Some((t, key, s)) = stack.pop() {
            let cell = self.tables[t]
                .get(&key)
                .and_then(|row| row.get(s))
                .filter(|c| c.value != INF)
                .ok_or_else(|| internal(format!("missing table entry at node {t}")))?;
            let node = &nodes[t];
            match (node.kind, cell.back) {
                (NodeKind::Leaf, Back::Leaf) => {}
                (NodeKind::Introduce(v), Back::Introduce { child, took }) => {
                    if took {
                        chosen.push(v);
                        stack.push((node.children[0], child, s - 1));
                    } else {
                        stack.push((node.children[0], child, s));
                    }
                }
                (NodeKind::Forget(_), Back::Forget { child }) => stack.push((node.children[0], child, s)),
                (NodeKind::Join, Back::Join { left, s_left, right }) => {
                    let chosen_here = key.mask.count_ones() as usize;
                    let s_left = s_left as usize;
                    stack.push((node.children[0], left, s_left));
                    stack.push((node.children[1], right, s + chosen_here - s_left));
                }
                _ => return Err(internal(format!("back-pointer does not match node {t}"))),
            }
        }
        chosen.sort_unstable();
        chosen.dedup();
        Ok(chosen)
    }

    /// Number of `(S, f, s)` entries stored at node `t`.
    pub fn entries(&self, t: usize) -> usize {
        self.tables[t].values().map(|row| row.iter().filter(|c| c.value != INF).count()).sum()
    }

    pub fn subtree_size(&self, t: usize) -> usize {
        self.sizes[t]
    }
}

/// `min { df(g[Ŝ]) : |Ŝ| >= p }` over the given decomposition, or `None`
/// when `p > n`.
pub fn min_deficiency_tw(g: &Graph, dec: &NiceDecomposition, k: usize, p: usize) -> Result<Option<usize>> {
    Ok(DeficiencyDp::run(g, dec, k)?.best(p).map(|(d, _)| d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_subgraph, total_deficiency};
    use crate::treewidth::decomposition::heuristic_decomposition;

    fn tw(g: &Graph, k: usize, p: usize) -> Option<usize> {
        min_deficiency_tw(g, &heuristic_decomposition(g), k, p).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(tw(&Graph::path(5), 2, 5), Some(2));
        let mut c5 = Graph::from_edges(6, Graph::cycle(5).edges()).unwrap();
        c5.add_edge(0, 5).unwrap();
        assert_eq!(tw(&c5, 2, 5), Some(0));
        assert_eq!(tw(&Graph::petersen(), 3, 0), Some(0));
        assert_eq!(tw(&Graph::path(3), 1, 4), None);
    }

    #[test]
    fn witness_attains_value() {
        let g = Graph::petersen();
        let dec = heuristic_decomposition(&g);
        for k in 0..5 {
            let dp = DeficiencyDp::run(&g, &dec, k).unwrap();
            for p in 0..=10 {
                let (d, s) = dp.best(p).unwrap();
                let h = dp.witness(s).unwrap();
                assert_eq!(h.len(), s);
                assert_eq!(total_deficiency(&induced_subgraph(&g, &h).0, k), d, "k={k} p={p}");
            }
        }
    }
}
