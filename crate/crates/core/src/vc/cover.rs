use crate::graph::Graph;

/// A minimum vertex cover, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    pub vertices: Vec<usize>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn covers(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.contains(u) || self.contains(v))
    }
}

struct Branch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
}

impl Branch<'_> {
    /// `removed[v]` marks vertices already taken or excluded.
    fn go(&mut self, removed: &mut Vec<bool>, taken: &mut Vec<usize>) {
        if taken.len() >= self.best.len() {
            return;
        }
        let live_deg = |v: usize, removed: &[bool]| self.g.neighbors(v).iter().filter(|&&w| !removed[w]).count();
        let pick = (0..self.g.n())
            .filter(|&v| !removed[v])
            .map(|v| (live_deg(v, removed), v))
            .filter(|&(d, _)| d > 0)
            .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
        let Some((d, v)) = pick else {
            self.best = taken.clone();
            return;
        };
        if d == 1 {
            // Every remaining component is a single edge: one endpoint each.
            let mut extra = Vec::new();
            let mut gone = removed.clone();
            for u in 0..self.g.n() {
                if !gone[u] {
                    if let Some(&w) = self.g.neighbors(u).iter().find(|&&w| !gone[w]) {
                        extra.push(u);
                        gone[u] = true;
                        gone[w] = true;
                    }
                }
            }
            if taken.len() + extra.len() < self.best.len() {
                let mut all = taken.clone();
                all.extend(extra);
                self.best = all;
            }
            return;
        }
        removed[v] = true;
        taken.push(v);
        self.go(removed, taken);
        taken.pop();
        let nbrs: Vec<usize> = self.g.neighbors(v).iter().copied().filter(|&w| !removed[w]).collect();
        for &w in &nbrs {
            removed[w] = true;
            taken.push(w);
        }
        self.go(removed, taken);
        for &w in &nbrs {
            removed[w] = false;
            taken.pop();
        }
        removed[v] = false;
    }
}

/// Minimum vertex cover by branching on a highest-degree vertex: take it, or
/// take all of its neighbours.
pub fn min_vertex_cover(g: &Graph) -> VertexCover {
    let mut search = Branch { g, best: (0..g.n()).filter(|&v| g.degree(v) > 0).collect() };
    search.go(&mut vec![false; g.n()], &mut Vec::new());
    let mut vertices = search.best;
    vertices.sort_unstable();
    VertexCover { vertices }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gnp;
    use crate::rng::SplitMix64;

    fn brute(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|m| g.edges().all(|(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn examples() {
        assert_eq!(min_vertex_cover(&Graph::cycle(4)).len(), 2);
        assert_eq!(min_vertex_cover(&Graph::star(5)).vertices, vec![0]);
        assert_eq!(min_vertex_cover(&Graph::petersen()).len(), 6);
        assert!(min_vertex_cover(&Graph::new(3)).is_empty());
    }

    #[test]
    fn matches_brute_force() {
        let mut rng = SplitMix64::new(11);
        for trial in 0..300 {
            let n = 1 + trial % 12;
            let g = gnp(n, rng.unit(), &mut rng).unwrap();
            let c = min_vertex_cover(&g);
            assert!(c.covers(&g));
            assert_eq!(c.len(), brute(&g));
        }
    }
}
