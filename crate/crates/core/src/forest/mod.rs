//! Exact polynomial-time solver for forests.
//!
//! On a forest the cheapest way to turn a vertex set `H` into a k-core costs
//! exactly `⌈df(G[H])/2⌉` edges, so the decision reduces to finding the
//! least-deficiency `H` with `|H| >= p`.

mod complete;
mod dp;
mod tree;

pub use complete::complete_forest;
pub use dp::{min_deficiency_forest, min_deficiency_forest_witness};

use crate::error::Result;
use crate::graph::induced_subgraph;
use crate::instance::{Answer, Certificate, Instance, Normalized};

pub fn solve_forest(inst: &Instance) -> Result<Answer> {
    let g = &inst.graph;
    let p = match inst.normalize() {
        Normalized::Decided(answer) => {
            if !g.is_forest() {
                return Err(crate::error::invalid("not a forest"));
            }
            return Ok(answer);
        }
        Normalized::Target(p) => p,
    };
    let Some((d, h)) = min_deficiency_forest_witness(g, inst.k, p)? else {
        return Ok(Answer::no());
    };
    if d.div_ceil(2) > inst.b {
        return Ok(Answer::no());
    }
    let (sub, back) = induced_subgraph(g, &h);
    let log = complete_forest(&sub, inst.k)?;
    let edges = log.edges.iter().map(|&(x, y)| (back[x], back[y])).collect();
    Ok(Answer::yes(Certificate::from_additions(g, inst.k, edges)))
}
