use std::collections::{BTreeMap, VecDeque};

use crate::error::Result;
use crate::graph::{Bipartition, Graph, Side, Vertex, VertexSet};
use crate::instance::normalize_edge;

use super::Matching;

/// A maximum matching together with a vertex cover of the same size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub matching: Matching,
    pub cover: VertexSet,
}

pub fn max_matching_bipartite(g: &Graph, parts: &Bipartition) -> Result<Matching> {
    Ok(max_matching_bipartite_with_cover(g, parts)?.matching)
}

const FREE: usize = usize::MAX;

/// Hopcroft–Karp, followed by König's construction of a minimum vertex
/// cover from the final alternating forest.
pub fn max_matching_bipartite_with_cover(
    g: &Graph,
    parts: &Bipartition,
) -> Result<BipartiteMatching> {
    parts.validate(g)?;
    let left: Vec<Vertex> = parts.members(g, Side::Left).into_iter().collect();
    let right: Vec<Vertex> = parts.members(g, Side::Right).into_iter().collect();
    let right_index: BTreeMap<Vertex, usize> =
        right.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&u| g.neighbors(u).iter().map(|v| right_index[v]).collect())
        .collect();

    let mut hk = HopcroftKarp {
        adj: &adj,
        mate_left: vec![FREE; left.len()],
        mate_right: vec![FREE; right.len()],
        dist: vec![0; left.len()],
    };
    while hk.bfs() {
        for u in 0..left.len() {
            if hk.mate_left[u] == FREE {
                hk.dfs(u);
            }
        }
    }

    let matching: Matching = hk
        .mate_left
        .iter()
        .enumerate()
        .filter(|(_, &r)| r != FREE)
        .map(|(l, &r)| normalize_edge(left[l], right[r]))
        .collect();

    // Alternating reachability from free left vertices.
    let mut seen_left = vec![false; left.len()];
    let mut seen_right = vec![false; right.len()];
    let mut queue: VecDeque<usize> = (0..left.len())
        .filter(|&u| hk.mate_left[u] == FREE)
        .collect();
    for &u in &queue {
        seen_left[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &r in &adj[u] {
            if hk.mate_left[u] == r || seen_right[r] {
                continue;
            }
            seen_right[r] = true;
            let l = hk.mate_right[r];
            if l != FREE && !seen_left[l] {
                seen_left[l] = true;
                queue.push_back(l);
            }
        }
    }
    let cover: VertexSet = left
        .iter()
        .enumerate()
        .filter(|&(i, _)| !seen_left[i])
        .map(|(_, &v)| v)
        .chain(
            right
                .iter()
                .enumerate()
                .filter(|&(i, _)| seen_right[i])
                .map(|(_, &v)| v),
        )
        .collect();
    debug_assert_eq!(cover.len(), matching.len());
    Ok(BipartiteMatching { matching, cover })
}

struct HopcroftKarp<'a> {
    adj: &'a [Vec<usize>],
    mate_left: Vec<usize>,
    mate_right: Vec<usize>,
    dist: Vec<usize>,
}

impl HopcroftKarp<'_> {
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for u in 0..self.adj.len() {
            if self.mate_left[u] == FREE {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &r in &self.adj[u] {
                let l = self.mate_right[r];
                if l == FREE {
                    found = true;
                } else if self.dist[l] == usize::MAX {
                    self.dist[l] = self.dist[u] + 1;
                    queue.push_back(l);
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: usize) -> bool {
        for i in 0..self.adj[u].len() {
            let r = self.adj[u][i];
            let l = self.mate_right[r];
            if l == FREE || (self.dist[l] == self.dist[u] + 1 && self.dfs(l)) {
                self.mate_left[u] = r;
                self.mate_right[r] = u;
                return true;
            }
        }
        self.dist[u] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn bip(g: &Graph) -> Bipartition {
        g.infer_bipartition().unwrap()
    }

    #[test]
    fn examples() {
        let pm = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(max_matching_bipartite(&pm, &bip(&pm)).unwrap().len(), 3);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let res = max_matching_bipartite_with_cover(&star, &bip(&star)).unwrap();
        assert_eq!(res.matching.len(), 1);
        assert_eq!(res.cover, VertexSet::from([0]));
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        let res = max_matching_bipartite_with_cover(&c6, &bip(&c6)).unwrap();
        assert_eq!(res.matching.len(), 3);
        assert_eq!(res.cover.len(), 3);
    }

    #[test]
    fn rejects_bad_bipartition() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let parts = Bipartition::default();
        assert!(matches!(
            max_matching_bipartite(&k2, &parts),
            Err(Error::InvalidBipartition(_))
        ));
    }
}
