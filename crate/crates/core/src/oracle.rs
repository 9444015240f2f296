//! Exhaustive exact solvers. They enumerate vertex subsets as bitmasks,
//! size by size, each size in combinatorial-number-system order, so the
//! first hit is an optimum and also the colex-least one of that size.

use std::collections::HashMap;

use crate::error::{invalid, Error, Result};
use crate::graph::{Coloring, Graph, Vertex, VertexSet};
use crate::instance::{Instance, Problem, Witness, WitnessSet};
use crate::matching::{is_induced_matching, Matching};

pub const DEFAULT_LIMIT: usize = 16;
pub const HARD_LIMIT: usize = 22;

/// Which neighborhood of the other members a private neighbor must avoid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PrivateNeighborhood {
    /// `p ∉ N[u]`.
    #[default]
    Closed,
    /// `p ∉ N(u)`, the literal variant.
    Open,
}

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            limit: DEFAULT_LIMIT,
        }
    }
}

/// Graph relabelled to `0..n` with neighborhoods as bitmasks.
struct Masks {
    ids: Vec<Vertex>,
    open: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        let index: HashMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let open = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << index[u]))
            .collect();
        Masks { ids, open }
    }

    fn n(&self) -> usize {
        self.ids.len()
    }

    fn closed(&self, i: usize) -> u32 {
        self.open[i] | 1 << i
    }

    fn set_of(&self, mask: u32) -> VertexSet {
        members(mask).map(|i| self.ids[i]).collect()
    }
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

/// All `size`-subsets of `0..n` in colex order (Gosper's hack).
fn subsets(n: usize, size: usize) -> impl Iterator<Item = u32> {
    let end: u64 = 1 << n;
    let mut next: Option<u64> = if size <= n {
        Some((1u64 << size) - 1)
    } else {
        None
    };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= end {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            Some((((ripple ^ cur) >> 2) / low) | ripple)
        };
        Some(cur as u32)
    })
}

fn first_ascending(n: usize, mut ok: impl FnMut(u32) -> bool) -> Option<u32> {
    (0..=n).find_map(|s| subsets(n, s).find(|&m| ok(m)))
}

fn first_descending(n: usize, mut ok: impl FnMut(u32) -> bool) -> Option<u32> {
    (0..=n).rev().find_map(|s| subsets(n, s).find(|&m| ok(m)))
}

impl Oracle {
    pub fn new(limit: usize) -> Self {
        Oracle { limit }
    }

    fn masks(&self, g: &Graph) -> Result<Masks> {
        let cap = self.limit.min(HARD_LIMIT);
        if g.vertex_count() > cap {
            return Err(Error::ResourceLimit(format!(
                "oracle limited to {cap} vertices, graph has {}",
                g.vertex_count()
            )));
        }
        Ok(Masks::new(g))
    }

    pub fn max_independent_set(&self, g: &Graph) -> Result<VertexSet> {
        let m = self.masks(g)?;
        let best = first_descending(m.n(), |s| members(s).all(|i| m.open[i] & s == 0));
        Ok(m.set_of(best.unwrap_or(0)))
    }

    pub fn min_vertex_cover(&self, g: &Graph) -> Result<VertexSet> {
        let m = self.masks(g)?;
        let best = first_ascending(m.n(), |s| {
            (0..m.n()).all(|i| s >> i & 1 == 1 || m.open[i] & !s == 0)
        });
        Ok(m.set_of(best.unwrap_or(0)))
    }

    /// Smallest `D` with `|N[v] ∩ D| ≥ r` for every black `v` (every
    /// vertex without a coloring); `None` if no such set exists.
    pub fn min_threshold_dominating_set(
        &self,
        g: &Graph,
        coloring: Option<&Coloring>,
        r: usize,
    ) -> Result<Option<VertexSet>> {
        let m = self.masks(g)?;
        let demand: Vec<usize> = (0..m.n())
            .filter(|&i| coloring.is_none_or(|col| col.is_black(m.ids[i])))
            .collect();
        if demand
            .iter()
            .any(|&i| (m.closed(i).count_ones() as usize) < r)
        {
            return Ok(None);
        }
        let best = first_ascending(m.n(), |s| {
            demand
                .iter()
                .all(|&i| (m.closed(i) & s).count_ones() as usize >= r)
        });
        Ok(best.map(|s| m.set_of(s)))
    }

    pub fn min_dominating_set(&self, g: &Graph) -> Result<VertexSet> {
        Ok(self
            .min_threshold_dominating_set(g, None, 1)?
            .expect("every vertex dominates itself"))
    }

    /// Vertex subset `U` of even size with `G[U]` 1-regular, read back as
    /// its edges.
    pub fn max_induced_matching(&self, g: &Graph) -> Result<Matching> {
        let m = self.masks(g)?;
        let best = first_descending(m.n(), |s| {
            s.count_ones() % 2 == 0 && members(s).all(|i| (m.open[i] & s).count_ones() == 1)
        })
        .unwrap_or(0);
        Ok(members(best)
            .flat_map(|i| {
                let j = (m.open[i] & best).trailing_zeros() as usize;
                (i < j).then(|| (m.ids[i], m.ids[j]))
            })
            .collect())
    }

    pub fn max_irredundant_set(
        &self,
        g: &Graph,
        privacy: PrivateNeighborhood,
    ) -> Result<VertexSet> {
        let m = self.masks(g)?;
        let avoid = |i: usize| match privacy {
            PrivateNeighborhood::Closed => m.closed(i),
            PrivateNeighborhood::Open => m.open[i],
        };
        let best = first_descending(m.n(), |s| {
            members(s).all(|v| {
                let others = members(s)
                    .filter(|&u| u != v)
                    .fold(0, |acc, u| acc | avoid(u));
                m.closed(v) & !others != 0
            })
        });
        Ok(m.set_of(best.unwrap_or(0)))
    }

    /// Maximum matching size by memoized recursion over vertex masks.
    pub fn max_matching_size(&self, g: &Graph) -> Result<usize> {
        let m = self.masks(g)?;
        fn go(m: &Masks, rest: u32, memo: &mut HashMap<u32, usize>) -> usize {
            if rest == 0 {
                return 0;
            }
            if let Some(&v) = memo.get(&rest) {
                return v;
            }
            let i = rest.trailing_zeros() as usize;
            let without = rest & !(1 << i);
            let mut best = go(m, without, memo);
            for j in members(m.open[i] & without) {
                best = best.max(1 + go(m, without & !(1 << j), memo));
            }
            memo.insert(rest, best);
            best
        }
        let full = if m.n() == 32 {
            u32::MAX
        } else {
            (1u32 << m.n()) - 1
        };
        Ok(go(&m, full, &mut HashMap::new()))
    }

    /// Answer of the decision problem, by exhaustive search.
    pub fn decide(&self, inst: &Instance) -> Result<bool> {
        Ok(self.solve(inst)?.is_some())
    }

    /// An optimal witness when the instance is a Yes-instance.
    pub fn solve(&self, inst: &Instance) -> Result<Option<Witness>> {
        let g = &inst.graph;
        let k = inst.k;
        let p = inst.problem;
        let vertex_witness = |set: VertexSet, yes: bool| yes.then(|| Witness::vertices(p, set));
        Ok(match p {
            Problem::IndependentSet => {
                let s = self.max_independent_set(g)?;
                let yes = s.len() >= k;
                vertex_witness(s.into_iter().take(k).collect(), yes)
            }
            Problem::IrredundantSet => {
                let s = self.max_irredundant_set(g, PrivateNeighborhood::Closed)?;
                let yes = s.len() >= k;
                vertex_witness(s.into_iter().take(k).collect(), yes)
            }
            Problem::InducedMatching => {
                let m = self.max_induced_matching(g)?;
                (m.len() >= k).then(|| Witness::edges(p, m.into_iter().take(k)))
            }
            Problem::DominatingSet => {
                let s = self.min_dominating_set(g)?;
                let yes = s.len() <= k;
                vertex_witness(s, yes)
            }
            Problem::ThresholdDominatingSet | Problem::BwThresholdDominatingSet => self
                .min_threshold_dominating_set(g, inst.coloring.as_ref(), inst.threshold())?
                .filter(|s| s.len() <= k)
                .map(|s| Witness::vertices(p, s)),
        })
    }
}

pub fn oracle_is(g: &Graph) -> Result<usize> {
    Ok(Oracle::default().max_independent_set(g)?.len())
}

pub fn oracle_vc(g: &Graph) -> Result<usize> {
    Ok(Oracle::default().min_vertex_cover(g)?.len())
}

pub fn oracle_ds(g: &Graph) -> Result<usize> {
    Ok(Oracle::default().min_dominating_set(g)?.len())
}

/// `None` when some demanded vertex has fewer than `r` closed neighbors.
pub fn oracle_tds(g: &Graph, coloring: Option<&Coloring>, r: usize) -> Result<Option<usize>> {
    Ok(Oracle::default()
        .min_threshold_dominating_set(g, coloring, r)?
        .map(|s| s.len()))
}

pub fn oracle_im(g: &Graph) -> Result<usize> {
    Ok(Oracle::default().max_induced_matching(g)?.len())
}

pub fn oracle_irs(g: &Graph, privacy: PrivateNeighborhood) -> Result<usize> {
    Ok(Oracle::default().max_irredundant_set(g, privacy)?.len())
}

pub fn oracle_max_matching(g: &Graph) -> Result<usize> {
    Oracle::default().max_matching_size(g)
}

pub fn decide(inst: &Instance) -> Result<bool> {
    Oracle::default().decide(inst)
}

/// Size of a smallest subset of `0..universe` meeting every set.
pub fn min_hitting_set(universe: usize, family: &[VertexSet]) -> Result<usize> {
    if universe > HARD_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "hitting-set oracle limited to {HARD_LIMIT} elements"
        )));
    }
    let masks: Vec<u32> = family
        .iter()
        .map(|s| s.iter().fold(0u32, |m, &e| m | 1 << e))
        .collect();
    if masks.contains(&0) {
        return invalid("empty set cannot be hit");
    }
    Ok(
        first_ascending(universe, |h| masks.iter().all(|&s| s & h != 0))
            .expect("the whole universe hits every set")
            .count_ones() as usize,
    )
}

pub fn is_independent_set(g: &Graph, set: &VertexSet) -> bool {
    set.iter().all(|&v| g.contains(v)) && g.is_independent(set)
}

pub fn is_threshold_dominating(
    g: &Graph,
    coloring: Option<&Coloring>,
    r: usize,
    set: &VertexSet,
) -> bool {
    set.iter().all(|&v| g.contains(v))
        && g.vertices()
            .filter(|&v| coloring.is_none_or(|col| col.is_black(v)))
            .all(|v| g.closed_neighbors(v).intersection(set).count() >= r)
}

pub fn is_irredundant(g: &Graph, set: &VertexSet, privacy: PrivateNeighborhood) -> bool {
    if !set.iter().all(|&v| g.contains(v)) {
        return false;
    }
    set.iter().all(|&v| {
        g.closed_neighbors(v).iter().any(|&p| {
            set.iter().all(|&u| {
                u == v
                    || match privacy {
                        PrivateNeighborhood::Closed => p != u && !g.has_edge(u, p),
                        PrivateNeighborhood::Open => !g.has_edge(u, p),
                    }
            })
        })
    })
}

/// Problem-specific validity of a Yes-witness, including its size
/// against the budget `k`.
pub fn validate_witness(inst: &Instance, w: &Witness) -> Result<bool> {
    if w.problem != inst.problem {
        return invalid(format!(
            "witness for {} checked against a {} instance",
            w.problem, inst.problem
        ));
    }
    let g = &inst.graph;
    let k = inst.k;
    Ok(match (&w.set, inst.problem) {
        (WitnessSet::VertexSet(s), Problem::IndependentSet) => {
            s.len() >= k && is_independent_set(g, s)
        }
        (WitnessSet::VertexSet(s), Problem::IrredundantSet) => {
            s.len() >= k && is_irredundant(g, s, PrivateNeighborhood::Closed)
        }
        (WitnessSet::VertexSet(s), Problem::DominatingSet) => {
            s.len() <= k && is_threshold_dominating(g, None, 1, s)
        }
        (
            WitnessSet::VertexSet(s),
            Problem::ThresholdDominatingSet | Problem::BwThresholdDominatingSet,
        ) => {
            s.len() <= k && is_threshold_dominating(g, inst.coloring.as_ref(), inst.threshold(), s)
        }
        (WitnessSet::EdgeSet(m), Problem::InducedMatching) => {
            m.len() >= k && is_induced_matching(g, m)
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    #[test]
    fn gosper_counts() {
        assert_eq!(subsets(5, 2).count(), 10);
        assert_eq!(subsets(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets(3, 3).collect::<Vec<_>>(), vec![7]);
        assert_eq!(subsets(3, 4).count(), 0);
        assert_eq!(subsets(4, 2).collect::<Vec<_>>(), vec![3, 5, 6, 9, 10, 12]);
    }

    #[test]
    fn five_cycle() {
        let c5 = cycle(5);
        assert_eq!(oracle_is(&c5).unwrap(), 2);
        assert_eq!(oracle_ds(&c5).unwrap(), 2);
        assert_eq!(oracle_im(&c5).unwrap(), 1);
        assert_eq!(oracle_vc(&c5).unwrap(), 3);
        assert_eq!(oracle_max_matching(&c5).unwrap(), 2);
    }

    #[test]
    fn thresholds_and_irredundance() {
        assert_eq!(oracle_tds(&complete(3), None, 2).unwrap(), Some(2));
        assert_eq!(oracle_tds(&Graph::with_vertices(2), None, 2).unwrap(), None);
        assert_eq!(
            oracle_irs(&complete(5), PrivateNeighborhood::Closed).unwrap(),
            1
        );
        assert_eq!(
            oracle_irs(&complete(5), PrivateNeighborhood::Open).unwrap(),
            2
        );
        assert_eq!(
            oracle_irs(&Graph::with_vertices(4), PrivateNeighborhood::Closed).unwrap(),
            4
        );
        assert_eq!(
            oracle_irs(&Graph::new(), PrivateNeighborhood::Closed).unwrap(),
            0
        );
    }

    #[test]
    fn limits() {
        let big = Graph::with_vertices(17);
        assert!(matches!(oracle_is(&big), Err(Error::ResourceLimit(_))));
        assert_eq!(Oracle::new(20).max_independent_set(&big).unwrap().len(), 17);
        let huge = Graph::with_vertices(23);
        assert!(matches!(
            Oracle::new(64).max_independent_set(&huge),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn witness_checks() {
        let c4 = cycle(4);
        let inst = Instance::new(Problem::IndependentSet, c4.clone(), 2);
        assert!(validate_witness(
            &inst,
            &Witness::vertices(Problem::IndependentSet, [0, 2].into())
        )
        .unwrap());
        let ds = Instance::new(Problem::DominatingSet, cycle(6), 2);
        assert!(!validate_witness(
            &ds,
            &Witness::vertices(Problem::DominatingSet, [0, 1].into())
        )
        .unwrap());
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let im = Instance::new(Problem::InducedMatching, p4, 2);
        assert!(!validate_witness(
            &im,
            &Witness::edges(Problem::InducedMatching, [(0, 1), (2, 3)])
        )
        .unwrap());
        assert!(validate_witness(
            &im,
            &Witness::vertices(Problem::IndependentSet, VertexSet::new())
        )
        .is_err());
    }

    #[test]
    fn hitting_sets() {
        let family = vec![VertexSet::from([0, 1]), VertexSet::from([1, 2])];
        assert_eq!(min_hitting_set(3, &family).unwrap(), 1);
        assert_eq!(min_hitting_set(3, &[]).unwrap(), 0);
    }
}
