//! Simple undirected graphs with stable vertex identifiers, plus the vertex
//! colorings and bipartitions that some problems attach to them.
//!
//! Identifiers are never reused: deleting a vertex leaves a gap, and fresh
//! vertices always receive an id larger than any id ever handed out. This
//! keeps reduction traces and witnesses meaningful across a whole pipeline.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, precondition, Error, Result};

pub type Vertex = u32;

pub type VertexSet = BTreeSet<Vertex>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adj: BTreeMap<Vertex, VertexSet>,
    next_id: Vertex,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` without edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for _ in 0..n {
            g.add_vertex();
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds a fresh vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        let v = self.next_id;
        self.adj.insert(v, VertexSet::new());
        self.next_id += 1;
        v
    }

    /// Inserts a vertex with a caller-chosen id. Used when replaying traces.
    pub fn insert_vertex(&mut self, v: Vertex) -> Result<()> {
        if self.adj.contains_key(&v) {
            return invalid(format!("vertex {v} already exists"));
        }
        self.adj.insert(v, VertexSet::new());
        self.next_id = self.next_id.max(v + 1);
        Ok(())
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return invalid(format!("self-loop on vertex {u}"));
        }
        self.require(u)?;
        self.require(v)?;
        self.adj.get_mut(&u).expect("checked").insert(v);
        self.adj.get_mut(&v).expect("checked").insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if !self.has_edge(u, v) {
            return invalid(format!("no edge {u}-{v}"));
        }
        self.adj.get_mut(&u).expect("checked").remove(&v);
        self.adj.get_mut(&v).expect("checked").remove(&u);
        Ok(())
    }

    /// In-place deletion of `v` and all incident edges.
    pub fn delete_vertex(&mut self, v: Vertex) -> Result<()> {
        let nbrs = self
            .adj
            .remove(&v)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown vertex {v}")))?;
        for u in nbrs {
            self.adj
                .get_mut(&u)
                .expect("symmetric adjacency")
                .remove(&v);
        }
        Ok(())
    }

    pub fn require(&self, v: Vertex) -> Result<()> {
        if self.adj.contains_key(&v) {
            Ok(())
        } else {
            invalid(format!("unknown vertex {v}"))
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    /// Id the next call to [`Graph::add_vertex`] will return.
    pub fn next_id(&self) -> Vertex {
        self.next_id
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Open neighborhood. Panics on an unknown vertex.
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        self.adj
            .get(&v)
            .unwrap_or_else(|| panic!("unknown vertex {v}"))
    }

    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        let mut n = self.neighbors(v).clone();
        n.insert(v);
        n
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    pub fn non_isolated_count(&self) -> usize {
        self.adj.values().filter(|n| !n.is_empty()).count()
    }

    /// Subgraph induced by `keep`, preserving vertex ids.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, nbrs)| (v, nbrs.intersection(keep).copied().collect()))
            .collect();
        Graph {
            adj,
            next_id: self.next_id,
        }
    }

    /// Graph minus the vertices in `drop`, preserving ids.
    pub fn without(&self, drop: &VertexSet) -> Graph {
        let keep = self.vertices().filter(|v| !drop.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Bipartite graph on `left ∪ right` keeping only edges between the two
    /// (disjoint) sides.
    pub fn bipartite_between(&self, left: &VertexSet, right: &VertexSet) -> (Graph, Bipartition) {
        let mut g = Graph {
            adj: BTreeMap::new(),
            next_id: self.next_id,
        };
        let mut parts = Bipartition::default();
        for &v in left.iter().chain(right) {
            g.adj.insert(v, VertexSet::new());
        }
        for &u in left {
            parts.set(u, Side::Left);
            for &v in self.neighbors(u).intersection(right) {
                g.adj.get_mut(&u).expect("inserted").insert(v);
                g.adj.get_mut(&v).expect("inserted").insert(u);
            }
        }
        for &v in right {
            parts.set(v, Side::Right);
        }
        (g, parts)
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&u| self.contains(u) && set.iter().all(|&v| u == v || self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&u| self.contains(u) && self.neighbors(u).intersection(set).next().is_none())
    }

    /// Vertices adjacent to every member of `set` (excluding `set` itself).
    pub fn common_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut iter = set.iter();
        let Some(&first) = iter.next() else {
            return self.vertex_set();
        };
        let mut common = self.neighbors(first).clone();
        for &v in iter {
            common = common.intersection(self.neighbors(v)).copied().collect();
        }
        common
    }

    /// `v` is simplicial if its neighborhood is a clique.
    pub fn is_simplicial(&self, v: Vertex) -> bool {
        self.is_clique(self.neighbors(v))
    }

    /// Structural validation: symmetric adjacency, no self-loops, no
    /// dangling ids.
    pub fn validate(&self) -> Result<()> {
        for (&u, nbrs) in &self.adj {
            if u >= self.next_id {
                return invalid(format!("vertex {u} is not below next id {}", self.next_id));
            }
            for &v in nbrs {
                if u == v {
                    return invalid(format!("self-loop on {u}"));
                }
                if !self.adj.get(&v).is_some_and(|n| n.contains(&u)) {
                    return invalid(format!("asymmetric edge {u}-{v}"));
                }
            }
        }
        Ok(())
    }

    /// Relabels vertices to `0..n` in increasing id order. Returns the new
    /// graph and the old id of each new vertex.
    pub fn compact(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertices().collect();
        let index: BTreeMap<Vertex, Vertex> = old
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as Vertex))
            .collect();
        let adj = self
            .adj
            .iter()
            .map(|(v, nbrs)| (index[v], nbrs.iter().map(|u| index[u]).collect()))
            .collect();
        (
            Graph {
                adj,
                next_id: old.len() as Vertex,
            },
            old,
        )
    }

    /// Two-colors the graph by BFS; the smallest id of each component goes
    /// left. `None` if the graph has an odd cycle.
    pub fn infer_bipartition(&self) -> Option<Bipartition> {
        let mut parts = Bipartition::default();
        for start in self.vertices() {
            if parts.sides.contains_key(&start) {
                continue;
            }
            parts.set(start, Side::Left);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = parts.side(u);
                for &v in self.neighbors(u) {
                    match parts.sides.get(&v) {
                        Some(&sv) if sv == su => return None,
                        Some(_) => {}
                        None => {
                            parts.set(v, su.other());
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
        Some(parts)
    }
}

/// Returns `g − v`. Closure never increases under vertex deletion.
pub fn remove_vertex(g: &Graph, v: Vertex) -> Result<Graph> {
    let mut h = g.clone();
    h.delete_vertex(v)?;
    Ok(h)
}

/// Returns `g` plus a fresh vertex whose neighborhood is exactly `clique`.
///
/// The result stays `c`-closed when `clique` is a maximal clique or has at
/// most `c − 1` vertices.
pub fn attach_simplicial(g: &Graph, c: usize, clique: &VertexSet) -> Result<(Graph, Vertex)> {
    for &v in clique {
        g.require(v)?;
    }
    if !g.is_clique(clique) {
        return invalid("attachment set is not a clique");
    }
    let maximal = g.common_neighborhood(clique).is_empty() && !clique.is_empty()
        || clique.is_empty() && g.is_empty();
    if clique.len() + 1 > c && !maximal {
        return precondition(format!(
            "clique of size {} is neither maximal nor smaller than c = {c}",
            clique.len()
        ));
    }
    let mut h = g.clone();
    let v = h.add_vertex();
    for &u in clique {
        h.add_edge(u, v)?;
    }
    Ok((h, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// Vertex coloring for bw-graphs. Vertices are black unless marked white.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    white: VertexSet,
}

impl Coloring {
    pub fn all_black() -> Self {
        Self::default()
    }

    pub fn color(&self, v: Vertex) -> Color {
        if self.white.contains(&v) {
            Color::White
        } else {
            Color::Black
        }
    }

    pub fn is_black(&self, v: Vertex) -> bool {
        !self.white.contains(&v)
    }

    pub fn set(&mut self, v: Vertex, color: Color) {
        match color {
            Color::White => {
                self.white.insert(v);
            }
            Color::Black => {
                self.white.remove(&v);
            }
        }
    }

    pub fn forget(&mut self, v: Vertex) {
        self.white.remove(&v);
    }

    pub fn white_vertices(&self) -> &VertexSet {
        &self.white
    }

    pub fn black_vertices(&self, g: &Graph) -> VertexSet {
        g.vertices().filter(|v| self.is_black(*v)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Side assignment for bipartite graphs. Unassigned vertices read as left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    sides: BTreeMap<Vertex, Side>,
}

impl Bipartition {
    pub fn side(&self, v: Vertex) -> Side {
        self.sides.get(&v).copied().unwrap_or(Side::Left)
    }

    pub fn set(&mut self, v: Vertex, side: Side) {
        self.sides.insert(v, side);
    }

    pub fn forget(&mut self, v: Vertex) {
        self.sides.remove(&v);
    }

    pub fn members(&self, g: &Graph, side: Side) -> VertexSet {
        g.vertices().filter(|&v| self.side(v) == side).collect()
    }

    /// Every edge of `g` must cross the two sides.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for (u, v) in g.edges() {
            if self.side(u) == self.side(v) {
                return Err(Error::InvalidBipartition(format!(
                    "edge {u}-{v} lies inside one side"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::compute_closure;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as Vertex)
            .map(|i| (i, (i + 1) % n as Vertex))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn triangle_minus_vertex_is_edge() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = remove_vertex(&k3, 2).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(!h.contains(2));
    }

    #[test]
    fn removing_from_c4_lowers_closure() {
        let c4 = cycle(4);
        assert_eq!(compute_closure(&c4).c, 3);
        let p3 = remove_vertex(&c4, 0).unwrap();
        assert_eq!(compute_closure(&p3).c, 2);
    }

    #[test]
    fn removing_isolated_vertex_keeps_edges() {
        let mut g = cycle(5);
        let iso = g.add_vertex();
        let before: Vec<_> = g.edges().collect();
        let h = remove_vertex(&g, iso).unwrap();
        assert_eq!(before, h.edges().collect::<Vec<_>>());
    }

    #[test]
    fn unknown_vertex_is_rejected() {
        let g = cycle(3);
        assert!(matches!(
            remove_vertex(&g, 9),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn ids_are_stable_after_deletion() {
        let mut g = Graph::with_vertices(3);
        g.delete_vertex(2).unwrap();
        assert_eq!(g.add_vertex(), 3);
    }

    #[test]
    fn attach_to_maximal_triangle() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let (h, v) = attach_simplicial(&k3, 2, &k3.vertex_set()).unwrap();
        assert_eq!(h.degree(v), 3);
        assert!(compute_closure(&h).c <= 2);
    }

    #[test]
    fn attach_to_small_clique_in_edge() {
        let e = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (h, v) = attach_simplicial(&e, 3, &VertexSet::from([0])).unwrap();
        assert_eq!(h.neighbors(v), &VertexSet::from([0]));
        assert!(compute_closure(&h).c <= 3);
    }

    #[test]
    fn attach_to_empty_set_adds_isolated_vertex() {
        let g = cycle(4);
        let (h, v) = attach_simplicial(&g, 3, &VertexSet::new()).unwrap();
        assert_eq!(h.degree(v), 0);
        assert_eq!(compute_closure(&h).c, compute_closure(&g).c);
    }

    #[test]
    fn attach_rejects_non_clique_and_large_non_maximal() {
        let c4 = cycle(4);
        assert!(matches!(
            attach_simplicial(&c4, 3, &VertexSet::from([0, 2])),
            Err(Error::InvalidArgument(_))
        ));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(
            attach_simplicial(&k4, 2, &VertexSet::from([0, 1, 2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn bipartition_inference() {
        assert!(cycle(5).infer_bipartition().is_none());
        let c6 = cycle(6);
        let parts = c6.infer_bipartition().unwrap();
        parts.validate(&c6).unwrap();
        assert_eq!(parts.side(0), Side::Left);
        assert_eq!(parts.side(1), Side::Right);
    }

    #[test]
    fn compact_relabels_in_order() {
        let mut g = cycle(4);
        g.delete_vertex(1).unwrap();
        let (h, old) = g.compact();
        assert_eq!(old, vec![0, 2, 3]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        h.validate().unwrap();
    }
}
