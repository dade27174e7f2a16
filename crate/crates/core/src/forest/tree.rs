use std::collections::VecDeque;

use crate::graph::Graph;

pub(crate) const NO_PARENT: usize = usize::MAX;

/// BFS from `root` visiting neighbors in increasing id order. Returns the
/// visit order and the parent of every visited vertex.
pub(crate) fn bfs(g: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![NO_PARENT; g.n()];
    let mut seen = vec![false; g.n()];
    let mut order = vec![root];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    (order, parent)
}

/// Lowest-id vertex of the tree containing `root` whose removal leaves no
/// piece larger than half the tree.
pub(crate) fn centroid(g: &Graph, root: usize) -> usize {
    let (order, parent) = bfs(g, root);
    let total = order.len();
    let mut size = vec![1usize; g.n()];
    for &v in order.iter().rev() {
        if parent[v] != NO_PARENT {
            size[parent[v]] += size[v];
        }
    }
    let heaviest = |v: usize| {
        let up = total - size[v];
        g.neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| size[w])
            .fold(up, usize::max)
    };
    let mut members = order.clone();
    members.sort_unstable();
    members.into_iter().find(|&v| 2 * heaviest(v) <= total).expect("every tree has a centroid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centroids() {
        assert_eq!(centroid(&Graph::path(5), 0), 2);
        assert_eq!(centroid(&Graph::path(4), 3), 1);
        assert_eq!(centroid(&Graph::star(4), 3), 0);
        assert_eq!(centroid(&Graph::new(1), 0), 0);
    }

    #[test]
    fn bfs_parents() {
        let (order, parent) = bfs(&Graph::path(3), 1);
        assert_eq!(order, vec![1, 0, 2]);
        assert_eq!(parent, vec![1, NO_PARENT, 1]);
    }
}
