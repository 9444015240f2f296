use serde::{Deserialize, Serialize};

use crate::error::{internal, Result};
use crate::graph::{Bipartition, Graph, Side, Vertex, VertexSet};

use super::{
    matched_vertices, max_matching_bipartite, max_matching_bipartite_with_cover, Matching,
};

/// Half-integral optimum of the vertex-cover LP, split by value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VclpPartition {
    pub v0: VertexSet,
    pub v1: VertexSet,
    pub v_half: VertexSet,
}

impl VclpPartition {
    /// Twice the LP cost, which is always an integer.
    pub fn cost_twice(&self) -> usize {
        2 * self.v1.len() + self.v_half.len()
    }

    pub fn cost(&self) -> f64 {
        self.cost_twice() as f64 / 2.0
    }

    /// `x_v` in halves: 0, 1 or 2.
    pub fn halves(&self, v: Vertex) -> u8 {
        if self.v1.contains(&v) {
            2
        } else if self.v_half.contains(&v) {
            1
        } else {
            0
        }
    }

    pub fn is_feasible(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.halves(u) + self.halves(v) >= 2)
    }
}

/// Double cover: `v` becomes `2i` (left) and `2i + 1` (right) where `i` is
/// its rank; every edge `uv` becomes `u′v″` and `v′u″`. A minimum cover of
/// the double cover gives `x_v = |{v′, v″} ∩ cover| / 2`.
pub fn vclp_half_integral(g: &Graph) -> VclpPartition {
    let (cover_graph, parts, ids) = double_cover(g);
    let cover = max_matching_bipartite_with_cover(&cover_graph, &parts)
        .expect("double cover is bipartite")
        .cover;
    let mut p = VclpPartition::default();
    for (i, &v) in ids.iter().enumerate() {
        let i = i as Vertex;
        let hits = cover.contains(&(2 * i)) as u8 + cover.contains(&(2 * i + 1)) as u8;
        match hits {
            0 => p.v0.insert(v),
            1 => p.v_half.insert(v),
            _ => p.v1.insert(v),
        };
    }
    p
}

/// Bipartite double cover of `g` together with its sides and the original
/// id of each rank.
pub fn double_cover(g: &Graph) -> (Graph, Bipartition, Vec<Vertex>) {
    let (compact, ids) = g.compact();
    let n = compact.vertex_count();
    let mut cover = Graph::with_vertices(2 * n);
    let mut parts = Bipartition::default();
    for i in 0..n as Vertex {
        parts.set(2 * i, Side::Left);
        parts.set(2 * i + 1, Side::Right);
    }
    for (u, v) in compact.edges() {
        cover.add_edge(2 * u, 2 * v + 1).expect("fresh edge");
        cover.add_edge(2 * v, 2 * u + 1).expect("fresh edge");
    }
    (cover, parts, ids)
}

/// Crown `(I, H)`: `I` independent, `H = N(I)`, and a matching between them
/// that saturates `H`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrownDecomposition {
    pub i: VertexSet,
    pub h: VertexSet,
    pub matching: Matching,
}

impl CrownDecomposition {
    /// An empty crown signals that nothing can be built from it.
    pub fn is_empty(&self) -> bool {
        self.i.is_empty()
    }
}

/// Builds the crown with `H = V1` and `I = V0 ∩ V(M)` for a matching `M`
/// between `V0` and `V1` saturating `V1`. With `V1 = ∅` the crown is
/// `(V0, ∅)`, which is empty when `V0` is.
pub fn crown_from_vclp(g: &Graph, p: &VclpPartition) -> Result<CrownDecomposition> {
    if p.v1.is_empty() {
        return Ok(CrownDecomposition {
            i: p.v0.clone(),
            h: VertexSet::new(),
            matching: Matching::new(),
        });
    }
    let (bip, parts) = g.bipartite_between(&p.v0, &p.v1);
    let matching = max_matching_bipartite(&bip, &parts)?;
    if matching.len() < p.v1.len() {
        return internal(format!(
            "no matching saturates V1 ({} of {} matched)",
            matching.len(),
            p.v1.len()
        ));
    }
    let i = matched_vertices(&matching)
        .intersection(&p.v0)
        .copied()
        .collect();
    Ok(CrownDecomposition {
        i,
        h: p.v1.clone(),
        matching,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_is_half() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p = vclp_half_integral(&g);
        assert_eq!(p.v_half, VertexSet::from([0, 1]));
        assert_eq!(p.cost(), 1.0);
    }

    #[test]
    fn star_center_is_one() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = vclp_half_integral(&g);
        assert_eq!(p.v1, VertexSet::from([0]));
        assert_eq!(p.v0, VertexSet::from([1, 2, 3]));
        assert_eq!(p.cost_twice(), 2);
        let crown = crown_from_vclp(&g, &p).unwrap();
        assert_eq!(crown.h, VertexSet::from([0]));
        assert_eq!(crown.matching.len(), 1);
    }

    #[test]
    fn empty_graph_all_zero() {
        let g = Graph::with_vertices(3);
        let p = vclp_half_integral(&g);
        assert_eq!(p.v0.len(), 3);
        assert_eq!(p.cost_twice(), 0);
        let crown = crown_from_vclp(&g, &p).unwrap();
        assert_eq!(crown.i.len(), 3);
        assert!(crown.h.is_empty());
        assert!(crown_from_vclp(&Graph::new(), &VclpPartition::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn two_stars() {
        let g = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
        let crown = crown_from_vclp(&g, &vclp_half_integral(&g)).unwrap();
        assert_eq!(crown.h, VertexSet::from([0, 4]));
        assert_eq!(crown.matching.len(), 2);
        assert_eq!(crown.i.len(), 2);
    }
}
