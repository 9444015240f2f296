//! Constructive Ramsey-type extractors for c-closed graphs: every function
//! returns an explicit clique, independent set or induced matching.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, big, saturate};
use crate::closure::require_c_closed;
use crate::error::{internal, invalid, precondition, Result};
use crate::graph::{Bipartition, Graph, Side, Vertex, VertexSet};
use crate::instance::normalize_edge;
use crate::matching::{
    is_induced_matching, is_matching, matched_vertices, max_matching_bipartite_with_cover,
    two_maximal_independent_set, Matching,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thresholds {
    pub c: usize,
    pub a: usize,
    pub b: usize,
    pub r_c: BigUint,
    pub q_c: BigUint,
    pub q1_c: BigUint,
    pub q2_c: BigUint,
}

pub fn thresholds(c: usize, a: usize, b: usize) -> Result<Thresholds> {
    if c == 0 || a == 0 || b == 0 {
        return invalid("c, a and b must be positive");
    }
    let (cb, ab, bb) = (big(c), big(a), big(b));
    Ok(Thresholds {
        c,
        a,
        b,
        r_c: bounds::r_c(&cb, &ab, &bb),
        q_c: bounds::q_c(&cb, &bb),
        q1_c: bounds::q1_c(&cb, &ab, &bb),
        q2_c: bounds::q2_c(&cb, &ab, &bb),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum CliqueOrIs {
    Clique(VertexSet),
    IndependentSet(VertexSet),
}

impl CliqueOrIs {
    pub fn is_valid(&self, g: &Graph) -> bool {
        match self {
            CliqueOrIs::Clique(s) => g.is_clique(s),
            CliqueOrIs::IndependentSet(s) => g.is_independent(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "elements", rename_all = "snake_case")]
pub enum CliqueOrIm {
    Clique(VertexSet),
    InducedMatching(Matching),
}

impl CliqueOrIm {
    pub fn is_valid(&self, g: &Graph) -> bool {
        match self {
            CliqueOrIm::Clique(s) => g.is_clique(s),
            CliqueOrIm::InducedMatching(m) => is_induced_matching(g, m),
        }
    }
}

/// Clique of size `a` or independent set of size `b` in a c-closed graph
/// with at least `R_c(a, b)` vertices.
pub fn clique_or_independent_set(g: &Graph, c: usize, a: usize, b: usize) -> Result<CliqueOrIs> {
    let t = thresholds(c, a, b)?;
    require_c_closed(g, c)?;
    if !bounds::reaches(g.vertex_count(), &t.r_c) {
        return precondition(format!(
            "{} vertices, need at least R_{c}({a}, {b}) = {}",
            g.vertex_count(),
            t.r_c
        ));
    }
    clique_or_is_core(g, a, b)
}

/// Works from a 2-maximal independent set `I`: either `|I| ≥ b`, or some
/// private closed neighborhood `N[v] \ N(I − v)` (always a clique) has at
/// least `a` vertices.
pub(crate) fn clique_or_is_core(g: &Graph, a: usize, b: usize) -> Result<CliqueOrIs> {
    if b == 0 {
        return Ok(CliqueOrIs::IndependentSet(VertexSet::new()));
    }
    if a == 0 {
        return Ok(CliqueOrIs::Clique(VertexSet::new()));
    }
    if a == 1 {
        if let Some(v) = g.vertices().next() {
            return Ok(CliqueOrIs::Clique(VertexSet::from([v])));
        }
    }
    let set = two_maximal_independent_set(g);
    if set.len() >= b {
        return Ok(CliqueOrIs::IndependentSet(
            set.into_iter().take(b).collect(),
        ));
    }
    for &v in &set {
        let private: VertexSet = g
            .closed_neighbors(v)
            .into_iter()
            .filter(|&u| g.neighbors(u).intersection(&set).all(|&w| w == v))
            .collect();
        if private.len() >= a {
            let clique: VertexSet = private.into_iter().take(a).collect();
            if !g.is_clique(&clique) {
                return internal("private neighborhood of a 2-maximal set is not a clique");
            }
            return Ok(CliqueOrIs::Clique(clique));
        }
    }
    internal(format!(
        "no clique of size {a} or independent set of size {b} found among {} vertices",
        g.vertex_count()
    ))
}

/// Induced matching of size `b` from a matching of size at least `2Δb`, by
/// repeatedly taking a matching edge and deleting its closed neighborhood.
pub fn im_from_bounded_degree(g: &Graph, m: &Matching, b: usize) -> Result<Matching> {
    if !is_matching(g, m) {
        return invalid("edge set is not a matching of the graph");
    }
    if b == 0 {
        return Ok(Matching::new());
    }
    let delta = g.max_degree();
    if delta == 0 || m.len() < 2 * delta * b {
        return precondition(format!(
            "matching of size {} is below 2·Δ·b = {}",
            m.len(),
            2 * delta * b
        ));
    }
    let out = peel(g, m, b);
    if out.len() < b {
        return internal("peeling ran out of matching edges");
    }
    Ok(out)
}

fn peel(g: &Graph, m: &Matching, b: usize) -> Matching {
    let mut dead = VertexSet::new();
    let mut out = Matching::new();
    for &(u, v) in m {
        if out.len() == b {
            break;
        }
        if dead.contains(&u) || dead.contains(&v) {
            continue;
        }
        out.insert((u, v));
        dead.extend(g.closed_neighbors(u));
        dead.extend(g.closed_neighbors(v));
    }
    out
}

/// Picks up to `b` candidates (in order) that each keep a neighbor outside
/// the others' neighborhoods, and matches each to its smallest such
/// neighbor.
fn private_neighbor_matching(
    g: &Graph,
    candidates: impl IntoIterator<Item = Vertex>,
    b: usize,
) -> Option<Matching> {
    let private = |chosen: &[Vertex], u: Vertex| -> Option<Vertex> {
        g.neighbors(u)
            .iter()
            .copied()
            .find(|&p| chosen.iter().all(|&w| w == u || !g.has_edge(w, p)))
    };
    let mut chosen: Vec<Vertex> = Vec::new();
    for v in candidates {
        if chosen.len() == b {
            break;
        }
        if chosen.iter().any(|&w| g.has_edge(w, v)) {
            continue;
        }
        chosen.push(v);
        if chosen.iter().any(|&u| private(&chosen, u).is_none()) {
            chosen.pop();
        }
    }
    if chosen.len() < b {
        return None;
    }
    Some(
        chosen
            .iter()
            .map(|&u| normalize_edge(u, private(&chosen, u).expect("checked on insertion")))
            .collect(),
    )
}

fn high_degree(g: &Graph, threshold: usize) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) >= threshold).collect()
}

/// Induced matching of size `b` in a c-closed bipartite graph with at least
/// `2b` vertices of degree at least `cb`.
pub fn im_from_high_degree(g: &Graph, parts: &Bipartition, c: usize, b: usize) -> Result<Matching> {
    parts.validate(g)?;
    if c == 0 {
        return invalid("c must be positive");
    }
    require_c_closed(g, c)?;
    if b == 0 {
        return Ok(Matching::new());
    }
    let heavy = high_degree(g, c * b);
    if heavy.len() < 2 * b {
        return precondition(format!(
            "{} vertices of degree at least {}, need {}",
            heavy.len(),
            c * b,
            2 * b
        ));
    }
    for side in [Side::Left, Side::Right] {
        let cands: Vec<Vertex> = heavy
            .iter()
            .copied()
            .filter(|&v| parts.side(v) == side)
            .collect();
        if cands.len() >= b {
            if let Some(m) = private_neighbor_matching(g, cands, b) {
                return Ok(m);
            }
        }
    }
    internal("high-degree vertices lack private neighbors")
}

/// Induced matching of size `b` in a c-closed bipartite graph with a
/// matching of size at least `Q_c(b) = 2cb² + 2b`.
pub fn im_bipartite_from_matching(
    g: &Graph,
    parts: &Bipartition,
    c: usize,
    m: &Matching,
    b: usize,
) -> Result<Matching> {
    parts.validate(g)?;
    if c == 0 {
        return invalid("c must be positive");
    }
    require_c_closed(g, c)?;
    if !is_matching(g, m) {
        return invalid("edge set is not a matching of the graph");
    }
    let q = bounds::q_c(&big(c), &big(b));
    if !bounds::reaches(m.len(), &q) {
        return precondition(format!(
            "matching of size {} is below Q_c(b) = {q}",
            m.len()
        ));
    }
    im_bipartite_core(g, parts, c, m, b)
}

/// Shared by the bipartite lemma and its non-bipartite extensions, where
/// `g` is a bipartite subgraph of a c-closed host and need not itself be
/// c-closed; the private-neighbor selection is checked directly.
fn im_bipartite_core(
    g: &Graph,
    parts: &Bipartition,
    c: usize,
    m: &Matching,
    b: usize,
) -> Result<Matching> {
    if b == 0 {
        return Ok(Matching::new());
    }
    let heavy = high_degree(g, c.saturating_mul(b));
    for side in [Side::Left, Side::Right] {
        let cands: Vec<Vertex> = heavy
            .iter()
            .copied()
            .filter(|&v| parts.side(v) == side)
            .collect();
        if cands.len() >= b {
            if let Some(found) = private_neighbor_matching(g, cands, b) {
                return Ok(found);
            }
        }
    }
    let rest = g.without(&heavy);
    let residual: Matching = m
        .iter()
        .copied()
        .filter(|(u, v)| !heavy.contains(u) && !heavy.contains(v))
        .collect();
    let out = peel(&rest, &residual, b);
    if out.len() < b {
        return internal(format!(
            "bipartite extraction found {} of {b} induced edges",
            out.len()
        ));
    }
    Ok(out)
}

/// Restricts `m` to the edges whose endpoint in `ends` lies in `keep`.
fn restrict(m: &Matching, keep: &VertexSet) -> Matching {
    m.iter()
        .copied()
        .filter(|(u, v)| keep.contains(u) || keep.contains(v))
        .collect()
}

fn ends_outside(m: &Matching, side: &VertexSet) -> VertexSet {
    matched_vertices(m).difference(side).copied().collect()
}

/// Clique of size `a` or induced matching of size `b`, given an independent
/// set `I` of size at least `Q'_c(a, b)` saturated by the matching `M`.
pub fn clique_or_im_saturating(
    g: &Graph,
    c: usize,
    set: &VertexSet,
    m: &Matching,
    a: usize,
    b: usize,
) -> Result<CliqueOrIm> {
    let t = thresholds(c, a, b)?;
    require_c_closed(g, c)?;
    if !g.is_independent(set) {
        return invalid("I is not an independent set");
    }
    if !is_matching(g, m) {
        return invalid("edge set is not a matching of the graph");
    }
    let saturating: Matching = m
        .iter()
        .copied()
        .filter(|(u, v)| set.contains(u) || set.contains(v))
        .collect();
    if saturating.len() < set.len() {
        return precondition("matching does not saturate I");
    }
    if !bounds::reaches(set.len(), &t.q1_c) {
        return precondition(format!(
            "|I| = {} is below Q'_c(a, b) = {}",
            set.len(),
            t.q1_c
        ));
    }
    if a == 1 {
        let v = *set.iter().next().expect("|I| ≥ Q' ≥ 1");
        return Ok(CliqueOrIm::Clique(VertexSet::from([v])));
    }
    saturating_core(g, set, &saturating, a, b, c)
}

fn saturating_core(
    g: &Graph,
    set: &VertexSet,
    m: &Matching,
    a: usize,
    b: usize,
    c: usize,
) -> Result<CliqueOrIm> {
    let other = ends_outside(m, set);
    let all_other: VertexSet = other.clone();
    let (bip, parts) = g.bipartite_between(set, &all_other);
    let mid = saturate(&bounds::r_c(&big(c), &big(a), &big(b)));
    let m1 = im_bipartite_core(&bip, &parts, c, m, mid)?;
    let h_ends = ends_outside(&m1, set);
    match clique_or_is_core(&g.induced_subgraph(&h_ends), a, b)? {
        CliqueOrIs::Clique(k) => Ok(CliqueOrIm::Clique(k)),
        CliqueOrIs::IndependentSet(j) => finish(g, restrict(&m1, &j), b),
    }
}

fn finish(g: &Graph, m: Matching, b: usize) -> Result<CliqueOrIm> {
    let out: Matching = m.into_iter().take(b).collect();
    if out.len() < b || !is_induced_matching(g, &out) {
        return internal("extracted edge set is not an induced matching");
    }
    Ok(CliqueOrIm::InducedMatching(out))
}

/// Clique of size `a` or induced matching of size `b`, given any matching
/// of size at least `Q''_c(a, b)`.
pub fn clique_or_im(g: &Graph, c: usize, m: &Matching, a: usize, b: usize) -> Result<CliqueOrIm> {
    let t = thresholds(c, a, b)?;
    require_c_closed(g, c)?;
    if !is_matching(g, m) {
        return invalid("edge set is not a matching of the graph");
    }
    if !bounds::reaches(m.len(), &t.q2_c) {
        return precondition(format!(
            "matching of size {} is below Q''_c(a, b) = {}",
            m.len(),
            t.q2_c
        ));
    }
    if a == 1 {
        let (u, _) = *m.iter().next().expect("|M| ≥ Q'' ≥ 1");
        return Ok(CliqueOrIm::Clique(VertexSet::from([u])));
    }
    let low: VertexSet = m.iter().map(|&(u, _)| u).collect();
    let high: VertexSet = m.iter().map(|&(_, v)| v).collect();
    let (bip, parts) = g.bipartite_between(&low, &high);
    let cb = big(c);
    let inner = bounds::r_c(&cb, &big(a), &big(b));
    let outer = saturate(&bounds::r_c(&cb, &big(a), &inner));
    let m1 = im_bipartite_core(&bip, &parts, c, m, outer)?;
    let high_ends: VertexSet = m1
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .filter(|v| high.contains(v))
        .collect();
    let j1 = match clique_or_is_core(&g.induced_subgraph(&high_ends), a, saturate(&inner))? {
        CliqueOrIs::Clique(k) => return Ok(CliqueOrIm::Clique(k)),
        CliqueOrIs::IndependentSet(j) => j,
    };
    let m2 = restrict(&m1, &j1);
    let low_ends: VertexSet = m2
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .filter(|v| low.contains(v))
        .collect();
    match clique_or_is_core(&g.induced_subgraph(&low_ends), a, b)? {
        CliqueOrIs::Clique(k) => Ok(CliqueOrIm::Clique(k)),
        CliqueOrIs::IndependentSet(j2) => finish(g, restrict(&m2, &j2), b),
    }
}

/// Induced matching of size `b` in a bipartite graph with at least
/// `⌈6Δ^{3/2}b⌉ + 2Δb` non-isolated vertices.
pub fn im_dense_bipartite(g: &Graph, parts: &Bipartition, b: usize) -> Result<Matching> {
    parts.validate(g)?;
    if b == 0 {
        return Ok(Matching::new());
    }
    let delta = g.max_degree();
    let need = bounds::dense_bipartite_threshold(delta, b);
    let have = g.non_isolated_count();
    if delta == 0 || !bounds::reaches(have, &need) {
        return precondition(format!("{have} non-isolated vertices, need {need}"));
    }
    let mm = max_matching_bipartite_with_cover(g, parts)?;
    if mm.matching.len() >= 2 * delta * b {
        let out = peel(g, &mm.matching, b);
        if out.len() == b {
            return Ok(out);
        }
        return internal("peeling ran out of matching edges");
    }
    for covered in [Side::Left, Side::Right] {
        let x_side: VertexSet = mm
            .cover
            .iter()
            .copied()
            .filter(|&v| parts.side(v) == covered)
            .collect();
        // Uncovered, non-isolated vertices on the other side; all their
        // neighbors lie in the cover.
        let light: VertexSet = g
            .vertices()
            .filter(|&v| {
                parts.side(v) != covered
                    && !mm.cover.contains(&v)
                    && g.degree(v) > 0
                    && g.degree(v) * g.degree(v) < delta
            })
            .collect();
        let (sub, _) = g.bipartite_between(&x_side, &light);
        let found = greedy_induced_matching(&sub);
        if found.len() >= b {
            return Ok(found.into_iter().take(b).collect());
        }
    }
    internal("neither side of the cover yields an induced matching")
}

/// Inclusion-maximal induced matching, grown over edges in id order.
pub fn greedy_induced_matching(g: &Graph) -> Matching {
    let mut blocked = VertexSet::new();
    let mut out = Matching::new();
    for (u, v) in g.edges() {
        if blocked.contains(&u) || blocked.contains(&v) {
            continue;
        }
        out.insert((u, v));
        blocked.extend(g.closed_neighbors(u));
        blocked.extend(g.closed_neighbors(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generate::disjoint_cliques;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    #[test]
    fn threshold_values() {
        assert_eq!(saturate(&thresholds(2, 3, 3).unwrap().r_c), 6);
        assert_eq!(saturate(&thresholds(1, 2, 2).unwrap().r_c), 2);
        assert_eq!(saturate(&thresholds(1, 1, 2).unwrap().q_c), 12);
        assert!(matches!(
            thresholds(0, 1, 1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn lemma_one_examples() {
        let c6 = cycle(6);
        let w = clique_or_independent_set(&c6, 2, 3, 3).unwrap();
        assert!(matches!(&w, CliqueOrIs::IndependentSet(s) if s.len() == 3));
        assert!(w.is_valid(&c6));

        let two_triangles = disjoint_cliques(2, 3).unwrap();
        let w = clique_or_independent_set(&two_triangles, 1, 3, 2).unwrap();
        assert!(w.is_valid(&two_triangles));

        let w = clique_or_independent_set(&c6, 2, 1, 4).unwrap();
        assert!(matches!(w, CliqueOrIs::Clique(s) if s.len() == 1));
    }

    #[test]
    fn lemma_one_tight_family_fails_precondition() {
        let g = disjoint_cliques(3, 3).unwrap();
        assert!(matches!(
            clique_or_independent_set(&g, 1, 4, 4),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            clique_or_independent_set(&cycle(4), 2, 2, 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn bounded_degree_examples() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let m: Matching = g.edges().collect();
        assert_eq!(im_from_bounded_degree(&g, &m, 1).unwrap().len(), 1);
        let c8 = cycle(8);
        let m: Matching = [(0, 1), (2, 3), (4, 5), (6, 7)].into_iter().collect();
        assert_eq!(im_from_bounded_degree(&c8, &m, 1).unwrap().len(), 1);
        assert!(matches!(
            im_from_bounded_degree(&c8, &m, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn high_degree_disjoint_neighborhoods() {
        let g = Graph::from_edges(6, &[(0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let parts = g.infer_bipartition().unwrap();
        let m = im_from_high_degree(&g, &parts, 2, 1).unwrap();
        assert_eq!(m.len(), 1);
        assert!(is_induced_matching(&g, &m));
    }

    #[test]
    fn dense_perfect_matching() {
        let edges: Vec<_> = (0..8).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = Graph::from_edges(16, &edges).unwrap();
        let parts = g.infer_bipartition().unwrap();
        let m = im_dense_bipartite(&g, &parts, 1).unwrap();
        assert_eq!(m.len(), 1);
        let edgeless = Graph::with_vertices(3);
        assert!(matches!(
            im_dense_bipartite(&edgeless, &Bipartition::default(), 1),
            Err(Error::Precondition(_))
        ));
    }
}
