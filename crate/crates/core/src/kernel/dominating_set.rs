//! Threshold dominating set on bw-graphs (RR2–RR6), color removal, the
//! plain dominating-set kernel, the bipartite kernel (RR7–RR9) and the
//! hitting-set construction.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::RngExt;

use crate::bounds::{big, binom2, pow, rho};
use crate::cliques::{cliques_of_size, maximal_cliques};
use crate::closure::compute_closure;
use crate::error::{internal, invalid, Result};
use crate::graph::{Bipartition, Color, Graph, Vertex, VertexSet};
use crate::instance::{
    AddedVertex, Instance, KernelOutcome, Problem, Retag, Rule, RuleRecord, Witness,
};
use crate::oracle::is_threshold_dominating;

use super::{require_closure, require_problem, Pipeline};

const SIMPLICIAL: &str = "simplicial";

/// Clique `Q = w_1..w_{r+1}` added by color removal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInfo {
    pub clique: Vec<Vertex>,
    /// Former white vertex to the gadget vertices it was joined to.
    pub attached: BTreeMap<Vertex, Vec<Vertex>>,
    pub k_offset: usize,
}

impl GadgetInfo {
    /// `w_{r+1}`, the only simplicial gadget vertex.
    pub fn apex(&self) -> Vertex {
        *self.clique.last().expect("gadget is nonempty")
    }
}

fn black_neighbors(inst: &Instance, v: Vertex) -> VertexSet {
    inst.graph
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| inst.is_black(u))
        .collect()
}

fn attach_black(inst: &Instance, rule: Rule, clique: &VertexSet, whiten: &VertexSet) -> RuleRecord {
    let id = inst.graph.next_id();
    let mut rec = RuleRecord::new(rule)
        .with_payload("clique", clique.iter().copied())
        .with_payload(SIMPLICIAL, [id]);
    rec.added.push(AddedVertex {
        id,
        neighbors: clique.iter().copied().collect(),
        color: Some(Color::Black),
        side: None,
    });
    rec.recolored = whiten
        .iter()
        .filter(|&&v| inst.is_black(v))
        .map(|&v| (v, Color::White))
        .collect();
    rec
}

/// RR2: first maximal clique (lexicographic order) holding at least `ck`
/// black vertices gets a new black simplicial vertex and turns white.
pub fn rr_clique(inst: &Instance, c: usize) -> Option<RuleRecord> {
    let need = c * inst.k;
    maximal_cliques(&inst.graph)
        .into_iter()
        .find(|cl| cl.iter().filter(|&&v| inst.is_black(v)).count() >= need)
        .map(|cl| attach_black(inst, Rule::CliqueManyBlack, &cl, &cl))
}

fn common_black_neighborhood(inst: &Instance, clique: &VertexSet) -> VertexSet {
    let common = if clique.is_empty() {
        inst.graph.vertex_set()
    } else {
        inst.graph.common_neighborhood(clique)
    };
    common.into_iter().filter(|&v| inst.is_black(v)).collect()
}

/// Cliques of `size` vertices whose common black neighborhood exceeds
/// `threshold`, first one in lexicographic order.
fn large_common_neighborhood(
    inst: &Instance,
    size: usize,
    threshold: &BigUint,
) -> Option<(VertexSet, VertexSet)> {
    if size == 0 {
        let p = common_black_neighborhood(inst, &VertexSet::new());
        return (&big(p.len()) > threshold).then_some((VertexSet::new(), p));
    }
    let pool: VertexSet = inst
        .graph
        .vertices()
        .filter(|&v| &big(black_neighbors(inst, v).len()) > threshold)
        .collect();
    cliques_of_size(&inst.graph, &pool, size)
        .into_iter()
        .map(|cl| {
            let p = common_black_neighborhood(inst, &cl);
            (cl, p)
        })
        .find(|(_, p)| &big(p.len()) > threshold)
}

/// `k^{i−1}ρ + k + k² + … + k^{i−1}`.
pub fn common_threshold(c: usize, k: usize, i: usize) -> BigUint {
    let tail: BigUint = (1..i).map(|j| pow(k, j)).sum();
    pow(k, i - 1) * rho(c, k) + tail
}

/// RR3.i (for `r ≤ c − 1`): a clique of size `c − i` whose common black
/// neighborhood `P` has more than `common_threshold(c, k, i)` vertices gets
/// a new black simplicial vertex; the clique and `P` turn white.
pub fn rr_common_neighborhood(inst: &Instance, c: usize, i: usize) -> Option<RuleRecord> {
    let threshold = common_threshold(c, inst.k, i);
    let (cl, p) = large_common_neighborhood(inst, c - i, &threshold)?;
    let whiten: VertexSet = cl.union(&p).copied().collect();
    Some(
        attach_black(inst, Rule::CommonNeighborhood(i as u8), &cl, &whiten)
            .with_payload("common", p.iter().copied()),
    )
}

/// RR4 (for `r ≥ c`): a `(c − 1)`-clique with more than `ρ` common black
/// neighbors means No.
pub fn rr_common_neighborhood_no(inst: &Instance, c: usize) -> Option<RuleRecord> {
    let (cl, p) = large_common_neighborhood(inst, c - 1, &rho(c, inst.k))?;
    Some(
        RuleRecord::decided(Rule::CommonNeighborhoodNo, false)
            .with_payload("clique", cl)
            .with_payload("common", p),
    )
}

/// RR5: more than `black_limit(c, k)` black vertices means No.
pub fn rr_black_count(inst: &Instance, c: usize) -> Option<RuleRecord> {
    let limit = black_limit(c, inst.k);
    let blacks = inst.black_vertices().len();
    (big(blacks) > limit).then(|| RuleRecord::decided(Rule::BlackCount, false))
}

/// RR6: a white `w` whose black neighbors all lie in `N[v]` for `r`
/// distinct vertices `v ≠ w` is removed.
pub fn rr_white_removal(inst: &Instance) -> Option<RuleRecord> {
    let (w, dominators) = removable_white(inst, &VertexSet::new())?;
    let mut rec = RuleRecord::new(Rule::WhiteRemoval).with_payload("dominators", dominators);
    rec.removed.push(w);
    Some(rec)
}

/// First white vertex outside `keep` that RR6 removes, with the `r`
/// vertices covering its black neighborhood.
pub fn removable_white(inst: &Instance, keep: &VertexSet) -> Option<(Vertex, Vec<Vertex>)> {
    let r = inst.threshold();
    let g = &inst.graph;
    inst.white_vertices()
        .into_iter()
        .filter(|w| !keep.contains(w))
        .find_map(|w| {
            let nb = black_neighbors(inst, w);
            let dominators: Vec<Vertex> = g
                .vertices()
                .filter(|&v| v != w && nb.iter().all(|&b| b == v || g.has_edge(b, v)))
                .take(r)
                .collect();
            (dominators.len() == r).then_some((w, dominators))
        })
}

/// Shared decisions for tiny budgets; `None` if the rules should run.
fn trivial_decision(inst: &Instance, c: usize) -> Option<(bool, Option<VertexSet>)> {
    let blacks = inst.black_vertices();
    let (k, r) = (inst.k, inst.threshold());
    if blacks.is_empty() {
        return Some((true, Some(VertexSet::new())));
    }
    if k == 0 || r > k {
        return Some((false, None));
    }
    if c * k < 2 {
        let g = &inst.graph;
        let hit = g
            .vertices()
            .find(|&v| blacks.iter().all(|&b| b == v || g.has_edge(b, v)));
        return Some((hit.is_some(), hit.map(|v| VertexSet::from([v]))));
    }
    None
}

/// Runs the BW-TDS rules on `run` in place. Returns a decision, if any.
fn bwtds_rules(run: &mut Pipeline, c: usize) -> Result<Option<(RuleRecord, Option<VertexSet>)>> {
    if let Some((answer, w)) = trivial_decision(&run.inst, c) {
        return Ok(Some((RuleRecord::decided(Rule::Trivial, answer), w)));
    }
    let r = run.inst.threshold();
    'outer: loop {
        if let Some(rec) = rr_clique(&run.inst, c) {
            run.apply(rec)?;
            continue;
        }
        if r < c {
            for i in 1..=c - r {
                if let Some(rec) = rr_common_neighborhood(&run.inst, c, i) {
                    run.apply(rec)?;
                    continue 'outer;
                }
            }
        } else if let Some(rec) = rr_common_neighborhood_no(&run.inst, c) {
            return Ok(Some((rec, None)));
        }
        if let Some(rec) = rr_black_count(&run.inst, c) {
            return Ok(Some((rec, None)));
        }
        if let Some(rec) = rr_white_removal(&run.inst) {
            run.apply(rec)?;
            continue;
        }
        return Ok(None);
    }
}

fn finish_decision(
    run: Pipeline,
    original: &Instance,
    rec: RuleRecord,
    w: Option<VertexSet>,
) -> Result<KernelOutcome> {
    let witness = match w {
        Some(set) => {
            let lifted = lift_through_trace(original, &run.trace, &set)?;
            Some(Witness::vertices(original.problem, lifted))
        }
        None => None,
    };
    Ok(run.decide(rec, witness))
}

/// RR2, RR3.1..RR3.(c−r) or RR4, RR5 and RR6 to a fixpoint; after any
/// change the rules restart from RR2.
pub fn kernelize_bwtds(inst: &Instance, c: usize) -> Result<KernelOutcome> {
    require_problem(inst, &[Problem::BwThresholdDominatingSet])?;
    require_closure(inst, c)?;
    let mut run = Pipeline::new(inst);
    if let Some((rec, w)) = bwtds_rules(&mut run, c)? {
        return finish_decision(run, inst, rec, w);
    }
    Ok(run.reduced())
}

fn colorize(run: &mut Pipeline) -> Result<()> {
    let mut rec = RuleRecord::new(Rule::Colorize);
    rec.retag = Some(Retag {
        problem: Problem::BwThresholdDominatingSet,
        r: Some(run.inst.threshold()),
        colored: true,
        drop_bipartition: false,
    });
    run.apply(rec)
}

fn uncolored_kernel(inst: &Instance, c: usize) -> Result<KernelOutcome> {
    require_closure(inst, c)?;
    let mut run = Pipeline::new(inst);
    colorize(&mut run)?;
    if let Some((rec, w)) = bwtds_rules(&mut run, c)? {
        return finish_decision(run, inst, rec, w);
    }
    let (rec, _) = gadget_record(&run.inst, inst.problem)?;
    run.apply(rec)?;
    Ok(run.reduced())
}

/// All vertices black, BW-TDS kernel with `r = 1`, then color removal.
pub fn kernelize_ds(inst: &Instance, c: usize) -> Result<KernelOutcome> {
    require_problem(inst, &[Problem::DominatingSet])?;
    uncolored_kernel(inst, c)
}

pub fn kernelize_tds(inst: &Instance, c: usize) -> Result<KernelOutcome> {
    require_problem(inst, &[Problem::ThresholdDominatingSet])?;
    uncolored_kernel(inst, c)
}

fn gadget_record(inst: &Instance, target: Problem) -> Result<(RuleRecord, GadgetInfo)> {
    let r = inst.threshold();
    let whites: Vec<Vertex> = inst.white_vertices().into_iter().collect();
    let base = inst.graph.next_id();
    let clique: Vec<Vertex> = (0..=r as Vertex).map(|j| base + j).collect();
    let mut rec = RuleRecord::new(Rule::ColorGadget)
        .with_payload("clique", clique.iter().copied())
        .with_payload(SIMPLICIAL, [clique[r]]);
    for (j, &w) in clique.iter().enumerate() {
        let mut neighbors: Vec<Vertex> = clique[..j].to_vec();
        if j < r {
            neighbors.extend(&whites);
        }
        rec.added.push(AddedVertex {
            id: w,
            neighbors,
            color: None,
            side: None,
        });
    }
    rec.k_delta = r as i64;
    rec.retag = Some(Retag {
        problem: target,
        r: target.has_threshold().then_some(r),
        colored: false,
        drop_bipartition: true,
    });
    let after = inst.apply(&rec)?;
    rec.closure_after = Some(compute_closure(&after.graph).c);
    let info = GadgetInfo {
        attached: whites.iter().map(|&w| (w, clique[..r].to_vec())).collect(),
        clique,
        k_offset: r,
    };
    Ok((rec, info))
}

/// Color removal: a clique `w_1..w_{r+1}`, every white vertex joined to
/// `w_1..w_r`, colors erased and `k' = k + r`.
pub fn uncolor_gadget(inst: &Instance) -> Result<(Instance, GadgetInfo)> {
    require_problem(inst, &[Problem::BwThresholdDominatingSet])?;
    let (rec, info) = gadget_record(inst, Problem::ThresholdDominatingSet)?;
    Ok((inst.apply(&rec)?, info))
}

/// Swaps the simplicial vertex `v` out of `d`: dropped if `N[v] ⊆ d`,
/// otherwise replaced by its smallest neighbor outside `d`.
fn normalize_simplicial(g: &Graph, v: Vertex, d: &mut VertexSet) {
    if !d.contains(&v) || !g.contains(v) {
        return;
    }
    d.remove(&v);
    if let Some(&x) = g.neighbors(v).iter().find(|x| !d.contains(x)) {
        d.insert(x);
    }
}

/// Maps a solution of the gadget instance back to the bw-instance it was
/// built from.
pub fn lift_witness(
    gadget_inst: &Instance,
    info: &GadgetInfo,
    d_prime: &Witness,
) -> Result<Witness> {
    let set = d_prime
        .vertex_set()
        .ok_or_else(|| crate::Error::InvalidArgument("expected a vertex set".into()))?;
    if set.len() > gadget_inst.k
        || !is_threshold_dominating(&gadget_inst.graph, None, gadget_inst.threshold(), set)
    {
        return invalid("witness does not solve the gadget instance");
    }
    let mut d = set.clone();
    normalize_simplicial(&gadget_inst.graph, info.apex(), &mut d);
    for w in &info.clique {
        d.remove(w);
    }
    Ok(Witness::vertices(Problem::BwThresholdDominatingSet, d))
}

/// Maps a solution of the last instance of `trace` back to `original`,
/// undoing added simplicial vertices (in reverse order) and re-adding
/// vertices that RR7 forced into the solution.
pub fn lift_through_trace(
    original: &Instance,
    trace: &[RuleRecord],
    w: &VertexSet,
) -> Result<VertexSet> {
    let mut states = vec![original.clone()];
    for rec in trace {
        let next = states.last().expect("nonempty").apply(rec)?;
        states.push(next);
    }
    let mut d = w.clone();
    for (j, rec) in trace.iter().enumerate().rev() {
        let after = &states[j + 1];
        match rec.rule {
            Rule::CliqueManyBlack | Rule::CommonNeighborhood(_) | Rule::ColorGadget => {
                for &v in rec.payload.get(SIMPLICIAL).into_iter().flatten() {
                    normalize_simplicial(&after.graph, v, &mut d);
                }
                for add in &rec.added {
                    d.remove(&add.id);
                }
            }
            Rule::HighBlackDegree => d.extend(&rec.removed),
            _ => {}
        }
    }
    let coloring = original.coloring.as_ref();
    if d.len() > original.k
        || !is_threshold_dominating(&original.graph, coloring, original.threshold(), &d)
    {
        return internal("lifted dominating set is invalid for the input instance");
    }
    Ok(d)
}

/// RR7–RR9 on a bipartite, c-closed instance with `r = 1`. Plain
/// dominating-set input is colored all black first.
pub fn kernelize_bipartite_bwds(
    inst: &Instance,
    parts: &Bipartition,
    c: usize,
) -> Result<KernelOutcome> {
    require_problem(
        inst,
        &[Problem::DominatingSet, Problem::BwThresholdDominatingSet],
    )?;
    if inst.threshold() != 1 {
        return invalid("the bipartite kernel needs r = 1");
    }
    parts.validate(&inst.graph)?;
    require_closure(inst, c)?;
    let mut run = Pipeline::new(inst);
    if inst.problem == Problem::DominatingSet {
        colorize(&mut run)?;
    }
    loop {
        let k = run.inst.k;
        let blacks = run.inst.black_vertices();
        if k == 0 || blacks.is_empty() {
            let answer = blacks.is_empty();
            let w = answer.then(VertexSet::new);
            return finish_decision(run, inst, RuleRecord::decided(Rule::Trivial, answer), w);
        }
        let heavy = run
            .inst
            .graph
            .vertices()
            .find(|&v| black_neighbors(&run.inst, v).len() >= c * k);
        if let Some(v) = heavy {
            let mut rec = RuleRecord::new(Rule::HighBlackDegree);
            rec.recolored = black_neighbors(&run.inst, v)
                .into_iter()
                .map(|u| (u, Color::White))
                .collect();
            rec.removed.push(v);
            rec.k_delta = -1;
            run.apply(rec)?;
            continue;
        }
        if blacks.len() > c * k * k {
            return finish_decision(
                run,
                inst,
                RuleRecord::decided(Rule::BipartiteBlackCount, false),
                None,
            );
        }
        let few = run
            .inst
            .white_vertices()
            .into_iter()
            .map(|w| (w, black_neighbors(&run.inst, w).len()))
            .find(|&(_, b)| b <= 1);
        if let Some((w, b)) = few {
            let mut rec = RuleRecord::new(Rule::WhiteFewBlack);
            rec.removed.push(w);
            if b == 0 {
                rec.note = Some("no black neighbor (extension of the one-neighbor rule)".into());
            }
            run.apply(rec)?;
            continue;
        }
        return Ok(run.reduced());
    }
}

/// Reduced bipartite instances have at most `ck² + c·binom(ck², 2)`
/// vertices.
pub fn bipartite_size_bound_holds(reduced: &Instance, c: usize) -> bool {
    let b = big(c * reduced.k * reduced.k);
    big(reduced.graph.vertex_count()) <= &b + big(c) * binom2(&b)
}

/// `|B| ≤ black_limit(c, k)`, which every reduced BW-TDS instance satisfies.
pub fn black_count_bound_holds(reduced: &Instance, c: usize) -> bool {
    big(reduced.black_vertices().len()) <= black_limit(c, reduced.k)
}

/// With `r = 1` and `c ≥ 2`, after RR3 every vertex has at most
/// `common_threshold(c, k, c − 1)` black neighbors.
pub fn black_degree_bound_holds(reduced: &Instance, c: usize) -> bool {
    if reduced.threshold() != 1 || c < 2 {
        return true;
    }
    let limit = common_threshold(c, reduced.k, c - 1);
    reduced
        .graph
        .vertices()
        .all(|v| big(black_neighbors(reduced, v).len()) <= limit)
}

/// Elements `0..universe`, a family of `λ`-sets, budget `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSetInstance {
    pub universe: usize,
    pub family: Vec<VertexSet>,
    pub lambda: usize,
    pub k: usize,
}

/// Elements form a clique; every set becomes a vertex adjacent to its
/// elements. The result is `(λ + 1)`-closed.
pub fn hitting_set_to_ds(hs: &HittingSetInstance) -> Result<Instance> {
    if hs.lambda == 0 || hs.k == 0 {
        return invalid("λ and k must be positive");
    }
    for set in &hs.family {
        if set.len() != hs.lambda {
            return invalid(format!(
                "set of size {} in a {}-uniform family",
                set.len(),
                hs.lambda
            ));
        }
        if set.iter().any(|&e| e as usize >= hs.universe) {
            return invalid("set element outside the universe");
        }
    }
    let mut g = Graph::with_vertices(hs.universe + hs.family.len());
    for u in 0..hs.universe as Vertex {
        for v in u + 1..hs.universe as Vertex {
            g.add_edge(u, v)?;
        }
    }
    for (i, set) in hs.family.iter().enumerate() {
        let s = (hs.universe + i) as Vertex;
        for &e in set {
            g.add_edge(e, s)?;
        }
    }
    Ok(Instance::new(Problem::DominatingSet, g, hs.k))
}

/// Universe of `λ..=max_universe` elements, one to six `λ`-sets, `k ≤ 3`.
pub fn random_hitting_set<R: RngExt + ?Sized>(
    rng: &mut R,
    max_universe: usize,
    lambda: usize,
) -> HittingSetInstance {
    let universe = rng.random_range(lambda..=max_universe.max(lambda));
    let count = rng.random_range(1..=6);
    let family = (0..count)
        .map(|_| {
            let mut set = VertexSet::new();
            while set.len() < lambda {
                set.insert(rng.random_range(0..universe) as Vertex);
            }
            set
        })
        .collect();
    HittingSetInstance {
        universe,
        family,
        lambda,
        k: rng.random_range(1..=3),
    }
}

/// Largest black count RR5 lets through, `k^c·ρ + k + k² + … + k^c`.
pub fn black_limit(c: usize, k: usize) -> BigUint {
    common_threshold(c, k, c + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{decide, oracle_ds, oracle_tds};

    fn path(n: u32) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn star(leaves: u32) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves as usize + 1, &edges).unwrap()
    }

    fn bw(g: Graph, k: usize, r: usize) -> Instance {
        Instance::new(Problem::BwThresholdDominatingSet, g, k).with_r(r)
    }

    fn equivalent(before: &Instance, out: &KernelOutcome) -> bool {
        let expected = decide(before).unwrap();
        match out {
            KernelOutcome::Decided { answer, .. } => *answer == expected,
            KernelOutcome::Reduced { instance, .. } => decide(instance).unwrap() == expected,
        }
    }

    #[test]
    fn rr2_fires_on_black_edge() {
        let inst = bw(path(2), 1, 1);
        let rec = rr_clique(&inst, 2).expect("fires");
        let after = inst.apply(&rec).unwrap();
        assert_eq!(after.graph.vertex_count(), 3);
        assert_eq!(after.black_vertices(), VertexSet::from([2]));
        assert_eq!(decide(&inst).unwrap(), decide(&after).unwrap());
        assert!(rr_clique(&after, 2).is_none());
    }

    #[test]
    fn rho_example() {
        assert_eq!(rho(2, 1), big(2));
    }

    #[test]
    fn rr3_fires_on_large_common_neighborhood() {
        // {0} has the common black neighbors 1, 2, 3 and 3 > k⁰ρ = 2.
        let mut inst = bw(star(3), 1, 1);
        let mut col = crate::graph::Coloring::all_black();
        col.set(0, Color::White);
        inst.coloring = Some(col);
        let rec = rr_common_neighborhood(&inst, 2, 1).expect("fires");
        let after = inst.apply(&rec).unwrap();
        assert_eq!(decide(&inst).unwrap(), decide(&after).unwrap());
    }

    #[test]
    fn rr5_boundary() {
        let inst = bw(Graph::with_vertices(3), 1, 1);
        assert_eq!(black_limit(1, 1), big(2));
        assert!(rr_black_count(&inst, 1).is_some());
        let two = bw(Graph::with_vertices(2), 1, 1);
        assert!(rr_black_count(&two, 1).is_none());
    }

    #[test]
    fn rr5_counts_self_domination() {
        // {3} dominates all five vertices; c = 4, ρ = 4 and |B| = 5 > k^c·ρ,
        // but 5 ≤ k^c·ρ + c.
        let g = Graph::from_edges(
            5,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (3, 4),
            ],
        )
        .unwrap();
        let inst = bw(g, 1, 1);
        assert!(rr_black_count(&inst, 4).is_none());
        let out = kernelize_bwtds(&inst, 4).unwrap();
        assert_ne!(out.answer(), Some(false));
        assert!(decide(&inst).unwrap());
    }

    #[test]
    fn rr6_removes_dominated_white_leaf() {
        // White 0 hangs on black 1, which is also adjacent to 2.
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let mut inst = bw(g, 1, 1);
        let mut col = crate::graph::Coloring::all_black();
        col.set(0, Color::White);
        inst.coloring = Some(col);
        let rec = rr_white_removal(&inst).expect("fires");
        assert_eq!(rec.removed, vec![0]);
        assert_eq!(
            decide(&inst).unwrap(),
            decide(&inst.apply(&rec).unwrap()).unwrap()
        );
    }

    #[test]
    fn pipeline_examples() {
        let p4 = Instance::new(Problem::DominatingSet, path(4), 1);
        let out = kernelize_ds(&p4, 2).unwrap();
        assert!(equivalent(&p4, &out));
        assert_eq!(oracle_ds(&path(4)).unwrap(), 2);

        let s = Instance::new(Problem::DominatingSet, star(4), 1);
        let out = kernelize_ds(&s, 2).unwrap();
        assert!(equivalent(&s, &out));

        let blk = bw(Graph::with_vertices(1), 0, 1);
        assert_eq!(kernelize_bwtds(&blk, 1).unwrap().answer(), Some(false));

        let empty = Instance::new(Problem::DominatingSet, Graph::new(), 0);
        assert_eq!(kernelize_ds(&empty, 1).unwrap().answer(), Some(true));
    }

    #[test]
    fn gadget_shape_and_lifting() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let mut inst = bw(g, 1, 1);
        let mut col = crate::graph::Coloring::all_black();
        col.set(0, Color::White);
        inst.coloring = Some(col);
        let (gi, info) = uncolor_gadget(&inst).unwrap();
        assert_eq!(info.clique, vec![2, 3]);
        assert_eq!(gi.k, 2);
        assert!(gi.graph.has_edge(0, 2) && !gi.graph.has_edge(0, 3));
        assert_eq!(
            oracle_tds(&gi.graph, None, 1).unwrap().unwrap() <= gi.k,
            decide(&inst).unwrap()
        );
        // {1, 3} solves the gadget instance and uses the apex.
        let d = Witness::vertices(Problem::ThresholdDominatingSet, VertexSet::from([1, 3]));
        let lifted = lift_witness(&gi, &info, &d).unwrap();
        assert!(is_threshold_dominating(
            &inst.graph,
            inst.coloring.as_ref(),
            1,
            lifted.vertex_set().unwrap()
        ));
        assert!(lifted.len() <= inst.k);
    }

    #[test]
    fn bipartite_rules() {
        let inst = bw(star(4), 2, 1);
        let parts = inst.graph.infer_bipartition().unwrap();
        let out = kernelize_bipartite_bwds(&inst, &parts, 2).unwrap();
        assert_eq!(out.trace()[0].rule, Rule::HighBlackDegree);
        assert!(equivalent(&inst, &out));

        let many = bw(Graph::with_vertices(5), 2, 1);
        let out = kernelize_bipartite_bwds(&many, &Bipartition::default(), 1).unwrap();
        assert_eq!(out.answer(), Some(false));
    }

    #[test]
    fn hitting_set_example() {
        let hs = HittingSetInstance {
            universe: 3,
            family: vec![VertexSet::from([0, 1]), VertexSet::from([1, 2])],
            lambda: 2,
            k: 1,
        };
        let inst = hitting_set_to_ds(&hs).unwrap();
        assert_eq!(inst.graph.vertex_count(), 5);
        assert!(decide(&inst).unwrap());
        assert!(compute_closure(&inst.graph).c <= 3);
        let bad = HittingSetInstance {
            family: vec![VertexSet::from([0])],
            ..hs
        };
        assert!(hitting_set_to_ds(&bad).is_err());
    }
}
