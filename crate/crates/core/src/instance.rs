//! Problem instances, certificates and independent certificate checking.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{k_core, Graph};

/// One Edge k-Core question: can at most `b` added edges make the k-core of
/// `graph` contain at least `p` vertices?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
    pub b: usize,
    pub p: usize,
}

/// A witness for a yes answer. Edges are unordered pairs stored as `(u, v)`
/// with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Certificate {
    pub added_edges: Vec<(usize, usize)>,
    pub core_vertices: Vec<usize>,
}

impl Certificate {
    /// Normalizes the edges and records the resulting k-core of `graph + edges`.
    ///
    /// Edges that are not legal additions are kept as given so that
    /// [`verify_certificate`] can report them.
    pub fn from_additions(graph: &Graph, k: usize, edges: Vec<(usize, usize)>) -> Self {
        let added_edges: Vec<(usize, usize)> =
            edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        let mut augmented = graph.clone();
        for &(u, v) in &added_edges {
            // Illegal pairs are ignored here; verification rejects them.
            let _ = augmented.add_edge(u, v);
        }
        Certificate { core_vertices: k_core(&augmented, k), added_edges }
    }
}

/// A solver's decision; a certificate is present exactly when `feasible`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Answer {
    pub feasible: bool,
    pub certificate: Option<Certificate>,
}

impl Answer {
    pub fn no() -> Self {
        Answer { feasible: false, certificate: None }
    }

    pub fn yes(certificate: Certificate) -> Self {
        Answer { feasible: true, certificate: Some(certificate) }
    }

    pub fn added(&self) -> usize {
        self.certificate.as_ref().map_or(0, |c| c.added_edges.len())
    }
}

/// Result of [`Instance::normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    /// Decided without search.
    Decided(Answer),
    /// Solve with the effective target `p >= k + 1`.
    Target(usize),
}

impl Instance {
    pub fn new(graph: Graph, k: usize, b: usize, p: usize) -> Self {
        Instance { graph, k, b, p }
    }

    /// Settles the trivial cases and clamps `p` up to `k + 1`, the size of the
    /// smallest nonempty k-core.
    pub fn normalize(&self) -> Normalized {
        if self.p == 0 {
            return Normalized::Decided(Answer::yes(Certificate::from_additions(
                &self.graph,
                self.k,
                Vec::new(),
            )));
        }
        let n = self.graph.n();
        // With n <= k even the complete graph has degree n - 1 < k.
        if n <= self.k {
            return Normalized::Decided(Answer::no());
        }
        let p = self.p.max(self.k + 1);
        if p > n {
            return Normalized::Decided(Answer::no());
        }
        Normalized::Target(p)
    }
}

/// Outcome of [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted { core_size: usize },
    Rejected(String),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accepted { core_size } => write!(f, "accepted (core size {core_size})"),
            Verdict::Rejected(why) => write!(f, "rejected: {why}"),
        }
    }
}

/// Checks a certificate against the instance from scratch.
///
/// The diagnostic names the first violated condition: budget, simplicity,
/// edges already present, or the final core size.
pub fn verify_certificate(inst: &Instance, cert: &Certificate) -> Verdict {
    let g = &inst.graph;
    if cert.added_edges.len() > inst.b {
        return Verdict::Rejected(format!(
            "{} edges added but the budget is {}",
            cert.added_edges.len(),
            inst.b
        ));
    }
    let mut seen = BTreeSet::new();
    let mut augmented = g.clone();
    for &(u, v) in &cert.added_edges {
        if u >= g.n() || v >= g.n() {
            return Verdict::Rejected(format!("edge {} {} references an unknown vertex", u + 1, v + 1));
        }
        if u == v {
            return Verdict::Rejected(format!("self-loop at vertex {}", u + 1));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Verdict::Rejected(format!("edge {} {} listed twice", key.0 + 1, key.1 + 1));
        }
        if g.has_edge(u, v) {
            return Verdict::Rejected(format!("edge {} {} already present", key.0 + 1, key.1 + 1));
        }
        augmented.add_edge(u, v).expect("checked above");
    }
    let core = k_core(&augmented, inst.k).len();
    if core < inst.p {
        return Verdict::Rejected(format!("core size {core} < {}", inst.p));
    }
    Verdict::Accepted { core_size: core }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4(b: usize) -> Instance {
        Instance::new(Graph::path(4), 2, b, 4)
    }

    #[test]
    fn closing_a_path_into_a_cycle_verifies() {
        let cert = Certificate::from_additions(&Graph::path(4), 2, vec![(3, 0)]);
        assert_eq!(cert.added_edges, vec![(0, 3)]);
        assert_eq!(verify_certificate(&p4(1), &cert), Verdict::Accepted { core_size: 4 });
    }

    #[test]
    fn existing_edge_is_rejected() {
        let cert = Certificate { added_edges: vec![(1, 2)], core_vertices: vec![] };
        match verify_certificate(&p4(1), &cert) {
            Verdict::Rejected(why) => assert!(why.contains("already present"), "{why}"),
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn small_core_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = Instance::new(g, 2, 1, 4);
        let cert = Certificate { added_edges: vec![(0, 3)], core_vertices: vec![] };
        assert_eq!(verify_certificate(&inst, &cert), Verdict::Rejected("core size 3 < 4".into()));
    }

    #[test]
    fn budget_and_duplicates_are_checked() {
        let cert = Certificate { added_edges: vec![(0, 3), (3, 0)], core_vertices: vec![] };
        assert!(matches!(verify_certificate(&p4(1), &cert), Verdict::Rejected(w) if w.contains("budget")));
        assert!(matches!(verify_certificate(&p4(2), &cert), Verdict::Rejected(w) if w.contains("twice")));
    }

    #[test]
    fn normalization() {
        let inst = Instance::new(Graph::path(3), 2, 0, 0);
        assert!(matches!(inst.normalize(), Normalized::Decided(a) if a.feasible));
        let inst = Instance::new(Graph::complete(3), 3, 10, 1);
        assert_eq!(inst.normalize(), Normalized::Decided(Answer::no()));
        let inst = Instance::new(Graph::path(5), 2, 0, 1);
        assert_eq!(inst.normalize(), Normalized::Target(3));
        let inst = Instance::new(Graph::path(5), 2, 0, 6);
        assert_eq!(inst.normalize(), Normalized::Decided(Answer::no()));
    }
}
