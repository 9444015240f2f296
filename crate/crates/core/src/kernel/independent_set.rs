use crate::error::{internal, Result};
use crate::graph::{Graph, VertexSet};
use crate::instance::{Instance, KernelOutcome, Problem, Rule, RuleRecord, Witness};

use super::{require_closure, require_problem, Pipeline};

/// RR1 exhaustively (smallest id first), then either a counting Yes or a
/// kernel with at most `ck²` vertices.
pub fn kernelize_is(inst: &Instance, c: usize) -> Result<KernelOutcome> {
    require_problem(inst, &[Problem::IndependentSet])?;
    require_closure(inst, c)?;
    let mut run = Pipeline::new(inst);
    let k = inst.k;
    if k == 0 {
        let w = Witness::vertices(Problem::IndependentSet, VertexSet::new());
        return Ok(run.decide(RuleRecord::decided(Rule::Trivial, true), Some(w)));
    }
    let bound = (c - 1) * (k - 1) + 1;
    loop {
        let g = &run.inst.graph;
        let Some(v) = g.vertices().find(|&v| g.degree(v) >= bound) else {
            break;
        };
        let mut rec = RuleRecord::new(Rule::HighDegree);
        rec.removed.push(v);
        run.apply(rec)?;
    }
    let g = &run.inst.graph;
    if g.vertex_count() >= bound * k {
        let set: VertexSet = greedy_min_degree_independent_set(g)
            .into_iter()
            .take(k)
            .collect();
        if set.len() < k {
            return internal("degree-bounded graph has too small an independent set");
        }
        let rec = RuleRecord::decided(Rule::ManyLowDegree, true)
            .with_payload("witness", set.iter().copied());
        return Ok(run.decide(rec, Some(Witness::vertices(Problem::IndependentSet, set))));
    }
    Ok(run.reduced())
}

/// Repeatedly takes a minimum-degree vertex (smallest id on ties) and
/// deletes its closed neighborhood. Yields at least `n / (Δ + 1)` vertices.
pub fn greedy_min_degree_independent_set(g: &Graph) -> VertexSet {
    let mut h = g.clone();
    let mut out = VertexSet::new();
    while let Some(v) = h.vertices().min_by_key(|&v| (h.degree(v), v)) {
        out.insert(v);
        for u in h.closed_neighbors(v) {
            h.delete_vertex(u).expect("present");
        }
    }
    out
}

/// Reduced instances have at most `ck²` vertices.
pub fn size_bound_holds(reduced: &Instance, c: usize, k: usize) -> bool {
    reduced.graph.vertex_count() <= c * k * k
}
