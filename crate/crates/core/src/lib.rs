//! Exact and certified solvers for the Edge k-Core problem: can at most `b`
//! added edges make the k-core of a graph contain at least `p` vertices?
//!
//! Every solver returns an [`Answer`] whose certificate can be rechecked with
//! [`verify_certificate`].

pub mod cli;
pub mod completion;
pub mod error;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod io;
pub mod forest;
pub mod matching;
pub mod oracle;
pub mod rng;
pub mod sequences;
pub mod treewidth;
pub mod vc;

pub use error::{Error, Result};
pub use graph::{deficiency, induced_subgraph, k_core, total_deficiency, Graph};
pub use instance::{verify_certificate, Answer, Certificate, Instance, Normalized, Verdict};
