//! Matchings, the half-integral vertex-cover LP, crowns and 2-maximal
//! independent sets.

mod bipartite;
mod general;
mod independent;
mod lp;

use std::collections::{BTreeMap, BTreeSet};

pub use bipartite::{max_matching_bipartite, max_matching_bipartite_with_cover, BipartiteMatching};
pub use general::max_matching_general;
pub use independent::{
    greedy_maximal_independent_set, is_two_maximal, two_maximal_independent_set,
};
pub use lp::{crown_from_vclp, vclp_half_integral, CrownDecomposition, VclpPartition};

use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::Edge;

/// Edges stored as `(min, max)` pairs.
pub type Matching = BTreeSet<Edge>;

pub fn matched_vertices(m: &Matching) -> VertexSet {
    m.iter().flat_map(|&(u, v)| [u, v]).collect()
}

/// Partner of every matched vertex.
pub fn mates(m: &Matching) -> BTreeMap<Vertex, Vertex> {
    m.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect()
}

pub fn is_matching(g: &Graph, m: &Matching) -> bool {
    let mut seen = VertexSet::new();
    m.iter()
        .all(|&(u, v)| g.has_edge(u, v) && seen.insert(u) && seen.insert(v))
}

/// A matching whose endpoints induce exactly the matching edges.
pub fn is_induced_matching(g: &Graph, m: &Matching) -> bool {
    if !is_matching(g, m) {
        return false;
    }
    let ends = matched_vertices(m);
    let partner = mates(m);
    ends.iter().all(|&u| {
        g.neighbors(u)
            .intersection(&ends)
            .all(|&v| partner.get(&u) == Some(&v))
    })
}
