use num_bigint::BigUint;

use crate::bounds::{self, saturate, IrsThresholds};
use crate::error::{internal, precondition, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::{Instance, KernelOutcome, Problem, Rule, RuleRecord, Witness};
use crate::oracle::{is_irredundant, PrivateNeighborhood};
use crate::ramsey::{clique_or_is_core, im_dense_bipartite, CliqueOrIs};

use super::{optional_witness, require_closure, require_problem, Pipeline};

#[derive(Clone, Debug, Default)]
pub struct IrsOptions {
    pub require_witness: bool,
    /// Test-only replacement for `α'`.
    pub alpha_prime: Option<BigUint>,
}

impl IrsOptions {
    pub fn thresholds(&self, c: usize, k: usize) -> IrsThresholds {
        match &self.alpha_prime {
            Some(ap) => IrsThresholds::with_alpha_prime(c, k, ap.clone()),
            None => IrsThresholds::new(c, k),
        }
    }
}

/// RR16: first pair `u < v` of simplicial vertices with `N[u] = N[v]`;
/// `v` is removed.
pub fn rr_simplicial_twin(g: &Graph) -> Option<RuleRecord> {
    let simplicial: Vec<Vertex> = g.vertices().filter(|&v| g.is_simplicial(v)).collect();
    for (i, &u) in simplicial.iter().enumerate() {
        let nu = g.closed_neighbors(u);
        if let Some(&v) = simplicial[i + 1..]
            .iter()
            .find(|&&v| g.closed_neighbors(v) == nu)
        {
            let mut rec = RuleRecord::new(Rule::SimplicialTwin).with_payload("twin", [u]);
            rec.removed.push(v);
            return Some(rec);
        }
    }
    None
}

pub fn kernelize_irs(inst: &Instance, c: usize) -> Result<KernelOutcome> {
    kernelize_irs_with(inst, c, &IrsOptions::default())
}

/// RR16 exhaustively; at least `R_c(cα + 1, k)` vertices means Yes.
pub fn kernelize_irs_with(inst: &Instance, c: usize, opts: &IrsOptions) -> Result<KernelOutcome> {
    require_problem(inst, &[Problem::IrredundantSet])?;
    require_closure(inst, c)?;
    let mut run = Pipeline::new(inst);
    let k = inst.k;
    if k == 0 {
        let w = Witness::vertices(Problem::IrredundantSet, VertexSet::new());
        return Ok(run.decide(RuleRecord::decided(Rule::Trivial, true), Some(w)));
    }
    while let Some(rec) = rr_simplicial_twin(&run.inst.graph) {
        run.apply(rec)?;
    }
    let t = opts.thresholds(c, k);
    if bounds::reaches(run.inst.graph.vertex_count(), &t.total) {
        let w = extract_with(&run.inst.graph, c, k, &t)
            .map(|set| Witness::vertices(Problem::IrredundantSet, set));
        let w = optional_witness(w, opts.require_witness)?;
        return Ok(run.decide(RuleRecord::decided(Rule::IrredundantThreshold, true), w));
    }
    Ok(run.reduced())
}

/// Irredundant set of size `k` in a c-closed graph without simplicial
/// twins and with at least `R_c(cα + 1, k)` vertices.
pub fn extract_irs_witness(g: &Graph, c: usize, k: usize) -> Result<VertexSet> {
    extract_with(g, c, k, &IrsThresholds::new(c, k))
}

pub fn extract_with(g: &Graph, c: usize, k: usize, t: &IrsThresholds) -> Result<VertexSet> {
    if !bounds::reaches(g.vertex_count(), &t.total) {
        return precondition(format!("{} vertices, need {}", g.vertex_count(), t.total));
    }
    if rr_simplicial_twin(g).is_some() {
        return precondition("graph has simplicial twins");
    }
    let alpha = saturate(&t.alpha);
    let alpha_prime = saturate(&t.alpha_prime);
    let clique = match clique_or_is_core(g, c.saturating_mul(alpha).saturating_add(1), k)? {
        CliqueOrIs::IndependentSet(s) => return Ok(s),
        CliqueOrIs::Clique(cl) => extend_to_maximal(g, cl),
    };
    let inner: VertexSet = clique
        .iter()
        .copied()
        .filter(|&v| !g.neighbors(v).is_subset(&clique))
        .collect();
    let mut xs: Vec<Vertex> = Vec::with_capacity(alpha);
    let mut ys: Vec<Vertex> = Vec::with_capacity(alpha);
    for _ in 0..alpha {
        let x = inner
            .iter()
            .copied()
            .find(|&x| !xs.contains(&x) && ys.iter().all(|&y| !g.has_edge(x, y)));
        let Some(x) = x else {
            return internal("ran out of clique vertices avoiding earlier private neighbors");
        };
        let y = *g
            .neighbors(x)
            .iter()
            .find(|y| !clique.contains(y))
            .expect("x has a neighbor outside the clique");
        xs.push(x);
        ys.push(y);
    }
    let y_set: VertexSet = ys.iter().copied().collect();
    let y_clique = match clique_or_is_core(&g.induced_subgraph(&y_set), alpha_prime, k)? {
        CliqueOrIs::IndependentSet(s) => {
            if !is_irredundant(g, &s, PrivateNeighborhood::Closed) {
                return internal("independent set is not irredundant");
            }
            return Ok(s);
        }
        CliqueOrIs::Clique(cl) => cl,
    };
    let picked: Vec<usize> = (0..alpha).filter(|&i| y_clique.contains(&ys[i])).collect();
    let x_rest: VertexSet = picked[1..].iter().map(|&i| xs[i]).collect();
    let y_rest: VertexSet = picked[1..].iter().map(|&i| ys[i]).collect();
    let (bip, parts) = g.bipartite_between(&x_rest, &y_rest);
    let m = im_dense_bipartite(&bip, &parts, k)?;
    let out: VertexSet = m
        .iter()
        .map(|&(u, v)| if x_rest.contains(&u) { u } else { v })
        .collect();
    if out.len() != k || !is_irredundant(g, &out, PrivateNeighborhood::Closed) {
        return internal("extracted set is not irredundant");
    }
    Ok(out)
}

fn extend_to_maximal(g: &Graph, mut clique: VertexSet) -> VertexSet {
    for v in g.vertices() {
        if !clique.contains(&v) && clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.insert(v);
        }
    }
    clique
}

/// Reduced instances have fewer than `R_c(cα + 1, k)` vertices.
pub fn size_bound_holds(reduced: &Instance, c: usize) -> bool {
    !bounds::reaches(
        reduced.graph.vertex_count(),
        &IrsThresholds::new(c, reduced.k).total,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::disjoint_cliques;
    use crate::oracle::oracle_irs;

    #[test]
    fn triangle_collapses() {
        let k3 = disjoint_cliques(1, 3).unwrap();
        let inst = Instance::new(Problem::IrredundantSet, k3, 1);
        let out = kernelize_irs(&inst, 1).unwrap();
        let removals = out
            .trace()
            .iter()
            .filter(|r| r.rule == Rule::SimplicialTwin)
            .count();
        assert_eq!(removals, 2);
    }

    #[test]
    fn path_endpoints_are_not_twins() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(rr_simplicial_twin(&p4).is_none());
        let cherry = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(rr_simplicial_twin(&cherry).is_none());
        let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let rec = rr_simplicial_twin(&paw).unwrap();
        assert_eq!(rec.removed, vec![2]);
        let mut reduced = paw.clone();
        reduced.delete_vertex(2).unwrap();
        assert_eq!(
            oracle_irs(&paw, PrivateNeighborhood::Closed).unwrap(),
            oracle_irs(&reduced, PrivateNeighborhood::Closed).unwrap()
        );
    }

    #[test]
    fn independent_branch() {
        let g = Graph::with_vertices(12);
        let t = IrsThresholds::with_alpha_prime(1, 2, 2u32.into());
        // With α' = 2, α = R_1(2, 2) = 2 and T = R_1(3, 2) = 3.
        assert_eq!(saturate(&t.total), 3);
        let set = extract_with(&g, 1, 2, &t).unwrap();
        assert_eq!(set.len(), 2);
    }
}
