//! Kernelization pipelines, Ramsey-type extractors and exact solvers for
//! graph problems parameterized by solution size `k` and the c-closure of
//! the input graph.
//!
//! Every pipeline is paired with an exhaustive oracle in [`oracle`] so that
//! results can be certified on small instances.

pub mod bounds;
pub mod cliques;
pub mod closure;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod kernel;
pub mod matching;
pub mod oracle;
pub mod ramsey;
pub mod solver;
pub mod verify;

pub use closure::{compute_closure, is_c_closed, ClosureReport};
pub use error::{Error, Result};
pub use graph::{Bipartition, Color, Coloring, Graph, Side, Vertex, VertexSet};
pub use instance::{Instance, KernelOutcome, Problem, RuleRecord, Witness};
