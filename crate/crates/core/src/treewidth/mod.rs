//! Solver for graphs given with (or heuristically assigned) a tree
//! decomposition: a dynamic program over a nice decomposition computes the
//! least deficiency of a large enough induced subgraph, and the completion
//! lemmas turn it into edges.

pub mod decomposition;
mod dp;

pub use decomposition::{heuristic_decomposition, min_fill_decomposition, NiceDecomposition, NiceNode, NodeKind};
pub use dp::{min_deficiency_tw, DeficiencyDp};

use crate::completion::{complete_large, complete_small};
use crate::error::{Error, Result};
use crate::graph::induced_subgraph;
use crate::instance::{Answer, Certificate, Instance, Normalized};
use crate::oracle::{brute_force_solve, SearchBudget};

/// Budgets at or below `3k³` are handed to the exhaustive search when the
/// instance is small enough; above it the decomposition decides.
pub fn solve_treewidth(inst: &Instance) -> Result<Answer> {
    let dec = heuristic_decomposition(&inst.graph);
    solve_treewidth_with(inst, &dec)
}

pub fn solve_treewidth_with(inst: &Instance, dec: &NiceDecomposition) -> Result<Answer> {
    dec.validate(&inst.graph)?;
    let (g, k) = (&inst.graph, inst.k);
    let p = match inst.normalize() {
        Normalized::Decided(answer) => return Ok(answer),
        Normalized::Target(p) => p,
    };
    let threshold = 3 * k * k * k;
    if inst.b <= threshold && k >= 2 {
        let cap = SearchBudget { max_vertices: 14, max_budget: 3, time_limit: None };
        if g.n() <= cap.max_vertices || inst.b <= cap.max_budget {
            return brute_force_solve(inst, cap);
        }
        return Err(Error::Unsupported(format!(
            "budget {} is at most 3k^3 = {threshold} and the instance is too large for exhaustive search",
            inst.b
        )));
    }
    let dp = DeficiencyDp::run(g, dec, k)?;
    let Some((d, s)) = dp.best(p) else {
        return Ok(Answer::no());
    };
    if d.div_ceil(2) > inst.b {
        return Ok(Answer::no());
    }
    let h = dp.witness(s)?;
    let (sub, back) = induced_subgraph(g, &h);
    let log = if d < threshold || k < 2 { complete_small(&sub, k)? } else { complete_large(&sub, k)? };
    if log.len() > inst.b {
        return Err(Error::Internal(format!("completion used {} edges, budget {}", log.len(), inst.b)));
    }
    let edges = log.edges.iter().map(|&(x, y)| (back[x], back[y])).collect();
    Ok(Answer::yes(Certificate::from_additions(g, k, edges)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::instance::verify_certificate;
    use crate::graph::total_deficiency;
    use crate::oracle::{brute_force_deficiency_profile, brute_force_min_deficiency, enumerate_graphs};

    #[test]
    fn dp_matches_brute_force_on_all_small_graphs() {
        for n in 1..=6 {
            for g in enumerate_graphs(n) {
                let dec = heuristic_decomposition(&g);
                for k in 0..=3 {
                    let dp = DeficiencyDp::run(&g, &dec, k).unwrap();
                    assert_eq!(
                        dp.profile(),
                        brute_force_deficiency_profile(&g, k).unwrap(),
                        "n={n} k={k} edges={:?}",
                        g.edges().collect::<Vec<_>>()
                    );
                    if let Some((_, s)) = dp.best(k + 1) {
                        let h = dp.witness(s).unwrap();
                        let (sub, _) = induced_subgraph(&g, &h);
                        assert_eq!(h.len(), s);
                        assert_eq!(Some(total_deficiency(&sub, k)), dp.profile()[s]);
                    }
                }
            }
        }
        let g = Graph::petersen();
        assert_eq!(
            min_deficiency_tw(&g, &heuristic_decomposition(&g), 3, 10).unwrap(),
            brute_force_min_deficiency(&g, 3, 10).unwrap()
        );
    }

    #[test]
    fn large_budget_uses_decomposition() {
        let g = Graph::path(40);
        let inst = Instance::new(g, 2, 30, 40);
        let ans = solve_treewidth(&inst).unwrap();
        assert!(verify_certificate(&inst, ans.certificate.as_ref().unwrap()).is_accepted());
        let inst = Instance::new(Graph::new(60), 3, 90, 60);
        let ans = solve_treewidth(&inst).unwrap();
        assert_eq!(ans.added(), 90);
        assert!(verify_certificate(&inst, ans.certificate.as_ref().unwrap()).is_accepted());
        assert!(!solve_treewidth(&Instance::new(Graph::new(60), 3, 89, 60)).unwrap().feasible);
        let small = Instance::new(Graph::new(41), 3, 62, 41);
        assert!(matches!(solve_treewidth(&small), Err(Error::Unsupported(_))));
    }
}
