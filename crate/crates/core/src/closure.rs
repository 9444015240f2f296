use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub c: usize,
    /// Lexicographically smallest nonadjacent pair with `c − 1` common
    /// neighbors. Absent when `c = 1`.
    pub witness_pair: Option<(Vertex, Vertex)>,
}

pub fn common_neighbors(g: &Graph, u: Vertex, v: Vertex) -> Result<VertexSet> {
    if u == v {
        return invalid(format!("common neighbors of {u} with itself"));
    }
    g.require(u)?;
    g.require(v)?;
    Ok(g.neighbors(u)
        .intersection(g.neighbors(v))
        .copied()
        .collect())
}

/// Counts wedges through every vertex, so the cost is the sum of squared
/// degrees rather than quadratic in `n`.
pub fn compute_closure(g: &Graph) -> ClosureReport {
    let mut best: Option<(usize, (Vertex, Vertex))> = None;
    for u in g.vertices() {
        let mut counts: BTreeMap<Vertex, usize> = BTreeMap::new();
        for &w in g.neighbors(u) {
            for &v in g.neighbors(w).range(u + 1..) {
                *counts.entry(v).or_default() += 1;
            }
        }
        for (v, n) in counts {
            if g.has_edge(u, v) {
                continue;
            }
            if best.is_none_or(|(m, _)| n > m) {
                best = Some((n, (u, v)));
            }
        }
    }
    report(best)
}

/// Plain scan over all nonadjacent pairs; the reference the fast version
/// must agree with.
pub fn compute_closure_reference(g: &Graph) -> ClosureReport {
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut best: Option<(usize, (Vertex, Vertex))> = None;
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.has_edge(u, v) {
                continue;
            }
            let n = g.neighbors(u).intersection(g.neighbors(v)).count();
            if best.is_none_or(|(m, _)| n > m) {
                best = Some((n, (u, v)));
            }
        }
    }
    report(best)
}

fn report(best: Option<(usize, (Vertex, Vertex))>) -> ClosureReport {
    match best {
        Some((n, pair)) if n > 0 => ClosureReport {
            c: n + 1,
            witness_pair: Some(pair),
        },
        _ => ClosureReport {
            c: 1,
            witness_pair: None,
        },
    }
}

pub fn is_c_closed(g: &Graph, c: usize) -> Result<bool> {
    if c == 0 {
        return invalid("closure parameter must be positive");
    }
    Ok(compute_closure(g).c <= c)
}

/// Fails with `InvalidArgument` unless `g` is `c`-closed.
pub fn require_c_closed(g: &Graph, c: usize) -> Result<()> {
    if is_c_closed(g, c)? {
        Ok(())
    } else {
        let report = compute_closure(g);
        invalid(format!(
            "graph is not {c}-closed (closure {}, pair {:?})",
            report.c, report.witness_pair
        ))
    }
}
