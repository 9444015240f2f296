//! Induced matching: RR10–RR15 for c-closed graphs and the size-threshold
//! kernels for bipartite graphs.

use num_bigint::BigUint;

use crate::bounds::{self, big, binom2};
use crate::error::{internal, Result};
use crate::graph::{Bipartition, Graph, Vertex, VertexSet};
use crate::instance::{AddedVertex, Instance, KernelOutcome, Problem, Rule, RuleRecord, Witness};
use crate::matching::{
    crown_from_vclp, is_induced_matching, max_matching_general, vclp_half_integral, Matching,
    VclpPartition,
};
use crate::ramsey::{self, CliqueOrIm};

use super::{optional_witness, require_closure, require_problem, BipartiteMode, Pipeline};

#[derive(Clone, Debug, Default)]
pub struct ImOptions {
    pub require_witness: bool,
    /// Test-only replacement for the RR11 and RR12 thresholds.
    pub lp_thresholds: Option<(BigUint, BigUint)>,
}

/// `3·Q''_c(4ck + 1, k)` and `Q'_c(4ck + 1, k)`.
pub fn lp_thresholds(c: usize, k: usize) -> (BigUint, BigUint) {
    let (cb, a, b) = (big(c), big(4 * c * k + 1), big(k));
    (3u32 * bounds::q2_c(&cb, &a, &b), bounds::q1_c(&cb, &a, &b))
}

fn leaf_neighbors(g: &Graph, v: Vertex) -> Vec<Vertex> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&u| g.degree(u) == 1)
        .collect()
}

/// RR10: smallest-id vertex whose neighborhood holds a matching of size
/// `2ck`.
pub fn rr_neighborhood_matching(g: &Graph, c: usize, k: usize) -> Option<RuleRecord> {
    let need = 2 * c * k;
    g.vertices()
        .find(|&v| {
            g.degree(v) >= 2 * need
                && max_matching_general(&g.induced_subgraph(g.neighbors(v))).len() >= need
        })
        .map(|v| {
            let mut rec = RuleRecord::new(Rule::NeighborhoodMatching);
            rec.removed.push(v);
            rec
        })
}

/// First applicable of RR13, RR14 and RR15 for the partition `p`.
pub fn rr_leaf_rules(g: &Graph, p: &VclpPartition) -> Option<RuleRecord> {
    for &v1 in &p.v1 {
        let leaves = leaf_neighbors(g, v1);
        if leaves.len() > 1 {
            let mut rec = RuleRecord::new(Rule::ExtraLeaves).with_payload("keep", [leaves[0]]);
            rec.removed = leaves[1..].to_vec();
            return Some(rec);
        }
    }
    for &v0 in &p.v0 {
        let closed = g.closed_neighbors(v0);
        for &v1 in g.neighbors(v0).intersection(&p.v1) {
            if leaf_neighbors(g, v1).is_empty() && closed.is_subset(&g.closed_neighbors(v1)) {
                let id = g.next_id();
                let mut rec = RuleRecord::new(Rule::AttachLeaf)
                    .with_payload("v0", [v0])
                    .with_payload("v1", [v1]);
                rec.added.push(AddedVertex {
                    id,
                    neighbors: vec![v1],
                    color: None,
                    side: None,
                });
                return Some(rec);
            }
        }
    }
    for &v0 in &p.v0 {
        if g.degree(v0) >= 2
            && g.neighbors(v0)
                .iter()
                .all(|&u| !leaf_neighbors(g, u).is_empty())
        {
            let mut rec = RuleRecord::new(Rule::NeighborsHaveLeaves);
            rec.removed.push(v0);
            return Some(rec);
        }
    }
    None
}

fn drop_isolated(g: &Graph) -> Option<RuleRecord> {
    let isolated: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
    (!isolated.is_empty()).then(|| {
        let mut rec = RuleRecord::new(Rule::DropIsolated);
        rec.removed = isolated;
        rec
    })
}

/// Components of a 1-closed graph are cliques; one edge from each
/// component with at least two vertices.
fn cluster_matching(g: &Graph) -> Matching {
    let mut seen = VertexSet::new();
    let mut out = Matching::new();
    for v in g.vertices() {
        if seen.contains(&v) {
            continue;
        }
        let comp = g.closed_neighbors(v);
        if let Some(&u) = g.neighbors(v).iter().next() {
            out.insert((v.min(u), v.max(u)));
        }
        seen.extend(comp);
    }
    out
}

/// Undoes RR14 leaves in a witness: `v1ℓ` becomes `v0v1`.
fn lift_im(trace: &[RuleRecord], m: &Matching) -> Matching {
    let mut m = m.clone();
    for rec in trace.iter().rev() {
        if rec.rule != Rule::AttachLeaf {
            continue;
        }
        let leaf = rec.added[0].id;
        let (v0, v1) = (rec.payload["v0"][0], rec.payload["v1"][0]);
        if m.remove(&(v1.min(leaf), v1.max(leaf))) {
            m.insert((v0.min(v1), v0.max(v1)));
        }
    }
    m
}

fn im_witness(original: &Instance, trace: &[RuleRecord], m: Matching) -> Result<Witness> {
    let lifted = lift_im(trace, &m);
    if lifted.len() < original.k || !is_induced_matching(&original.graph, &lifted) {
        return internal("lifted induced matching is invalid for the input graph");
    }
    Ok(Witness::edges(
        Problem::InducedMatching,
        lifted.into_iter().take(original.k),
    ))
}

fn matching_from(res: CliqueOrIm) -> Result<Matching> {
    match res {
        CliqueOrIm::InducedMatching(m) => Ok(m),
        CliqueOrIm::Clique(_) => internal("large clique survived the neighborhood-matching rule"),
    }
}

pub fn kernelize_im(inst: &Instance, c: usize) -> Result<KernelOutcome> {
    kernelize_im_with(inst, c, &ImOptions::default())
}

/// Fixpoint of RR10 → VCLP → RR11/RR12 → RR13–RR15 → isolated vertices.
/// 1-closed graphs are decided by counting clusters.
pub fn kernelize_im_with(inst: &Instance, c: usize, opts: &ImOptions) -> Result<KernelOutcome> {
    require_problem(inst, &[Problem::InducedMatching])?;
    require_closure(inst, c)?;
    let mut run = Pipeline::new(inst);
    let k = inst.k;
    if k == 0 {
        let w = Witness::edges(Problem::InducedMatching, []);
        return Ok(run.decide(RuleRecord::decided(Rule::Trivial, true), Some(w)));
    }
    if c == 1 {
        let m = cluster_matching(&inst.graph);
        let answer = m.len() >= k;
        let w = answer.then(|| Witness::edges(Problem::InducedMatching, m.into_iter().take(k)));
        return Ok(run.decide(RuleRecord::decided(Rule::ClusterCount, answer), w));
    }
    let (half_limit, one_limit) = opts
        .lp_thresholds
        .clone()
        .unwrap_or_else(|| lp_thresholds(c, k));
    let cap = 16 * (inst.graph.vertex_count() + 4).pow(2);
    for _ in 0..cap {
        while let Some(rec) = rr_neighborhood_matching(&run.inst.graph, c, k) {
            run.apply(rec)?;
        }
        let g = &run.inst.graph;
        let p = vclp_half_integral(g);
        if bounds::reaches(p.v_half.len(), &half_limit) {
            let half = max_matching_general(&g.induced_subgraph(&p.v_half));
            let w = ramsey::clique_or_im(g, c, &half, 4 * c * k + 1, k)
                .and_then(matching_from)
                .and_then(|m| im_witness(inst, &run.trace, m));
            let w = optional_witness(w, opts.require_witness)?;
            let rec =
                RuleRecord::decided(Rule::HalfIntegralCount, true).with_payload("v_half", p.v_half);
            return Ok(run.decide(rec, w));
        }
        if bounds::reaches(p.v1.len(), &one_limit) {
            let crown = crown_from_vclp(g, &p)?;
            let w =
                ramsey::clique_or_im_saturating(g, c, &crown.i, &crown.matching, 4 * c * k + 1, k)
                    .and_then(matching_from)
                    .and_then(|m| im_witness(inst, &run.trace, m));
            let w = optional_witness(w, opts.require_witness)?;
            let rec = RuleRecord::decided(Rule::IntegralCount, true).with_payload("v1", p.v1);
            return Ok(run.decide(rec, w));
        }
        if let Some(rec) = rr_leaf_rules(g, &p) {
            run.apply(rec)?;
            continue;
        }
        if let Some(rec) = drop_isolated(g) {
            run.apply(rec)?;
            continue;
        }
        return Ok(run.reduced());
    }
    internal("induced-matching rules did not reach a fixpoint")
}

/// The partition bounds of a reduced instance, for the partition the
/// kernel would compute on it.
pub fn size_bound_holds(reduced: &Instance, c: usize) -> bool {
    let p = vclp_half_integral(&reduced.graph);
    let (half_limit, one_limit) = lp_thresholds(c, reduced.k);
    let v1 = big(p.v1.len());
    big(p.v_half.len()) < half_limit
        && v1 < one_limit
        && big(p.v0.len()) <= &v1 + big(c) * binom2(&v1)
}

/// Nonadjacent vertices with equal, nonempty neighborhoods: the larger id
/// of the first pair is removed.
fn rr_false_twin(g: &Graph) -> Option<RuleRecord> {
    let vs: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    for (i, &u) in vs.iter().enumerate() {
        if let Some(&v) = vs[i + 1..]
            .iter()
            .find(|&&v| g.neighbors(u) == g.neighbors(v))
        {
            let mut rec = RuleRecord::new(Rule::FalseTwin).with_payload("twin", [u]);
            rec.removed.push(v);
            return Some(rec);
        }
    }
    None
}

/// Size-threshold kernels for bipartite graphs, in terms of `Δ` or of `c`.
pub fn kernelize_im_bipartite(
    inst: &Instance,
    parts: &Bipartition,
    c: usize,
    mode: BipartiteMode,
) -> Result<KernelOutcome> {
    require_problem(inst, &[Problem::InducedMatching])?;
    parts.validate(&inst.graph)?;
    let mut run = Pipeline::new(inst);
    let k = inst.k;
    let g = &inst.graph;
    if k == 0 {
        let w = Witness::edges(Problem::InducedMatching, []);
        return Ok(run.decide(RuleRecord::decided(Rule::Trivial, true), Some(w)));
    }
    if g.edge_count() == 0 {
        return Ok(run.decide(RuleRecord::decided(Rule::Trivial, false), None));
    }
    match mode {
        BipartiteMode::Delta => {
            let threshold = bounds::dense_bipartite_threshold(g.max_degree(), k);
            if bounds::reaches(g.non_isolated_count(), &threshold) {
                let m = ramsey::im_dense_bipartite(g, parts, k)?;
                let w = Witness::edges(Problem::InducedMatching, m);
                return Ok(run.decide(RuleRecord::decided(Rule::DenseBipartite, true), Some(w)));
            }
        }
        BipartiteMode::Closure => {
            require_closure(inst, c)?;
            let heavy: VertexSet = g.vertices().filter(|&v| g.degree(v) >= c * k).collect();
            if heavy.len() >= 2 * k {
                let m = ramsey::im_from_high_degree(g, parts, c, k)?;
                let rec = RuleRecord::decided(Rule::HighDegreeBipartite, true)
                    .with_payload("heavy", heavy);
                return Ok(run.decide(rec, Some(Witness::edges(Problem::InducedMatching, m))));
            }
            let rest = g.without(&heavy);
            let threshold = bounds::dense_bipartite_threshold(c * k, k);
            if bounds::reaches(rest.non_isolated_count(), &threshold) {
                let m = ramsey::im_dense_bipartite(&rest, parts, k)?;
                let rec =
                    RuleRecord::decided(Rule::DenseBipartite, true).with_payload("heavy", heavy);
                return Ok(run.decide(rec, Some(Witness::edges(Problem::InducedMatching, m))));
            }
            while let Some(rec) = rr_false_twin(&run.inst.graph) {
                run.apply(rec)?;
            }
        }
    }
    if let Some(rec) = drop_isolated(&run.inst.graph) {
        run.apply(rec)?;
    }
    Ok(run.reduced())
}

/// Vertex bound of a reduced bipartite instance. Δ-mode: fewer
/// non-isolated vertices than the threshold. c-mode: fewer than `2k`
/// heavy vertices, the rest of the dense threshold, and twin-free
/// vertices whose neighbors are all heavy.
pub fn bipartite_size_bound_holds(reduced: &Instance, c: usize, mode: BipartiteMode) -> bool {
    let g = &reduced.graph;
    let k = reduced.k;
    match mode {
        BipartiteMode::Delta => {
            big(g.vertex_count()) < bounds::dense_bipartite_threshold(g.max_degree(), k)
        }
        BipartiteMode::Closure => {
            let heavy: VertexSet = g.vertices().filter(|&v| g.degree(v) >= c * k).collect();
            let rest = g.without(&heavy);
            let hanging = rest.vertices().filter(|&v| rest.degree(v) == 0).count();
            heavy.len() < 2 * k
                && big(rest.non_isolated_count()) < bounds::dense_bipartite_threshold(c * k, k)
                && hanging < 1usize.checked_shl(heavy.len() as u32).unwrap_or(usize::MAX)
        }
    }
}

/// Sanity check used by tests: no clique of size `4ck + 1` after RR10.
pub fn no_large_clique(g: &Graph, c: usize, k: usize) -> bool {
    crate::cliques::max_clique_size(g) <= 4 * c * k
}
