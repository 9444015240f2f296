//! Branching solver for threshold dominating set in c-closed graphs, and
//! its simplified dominating-set variant.

use crate::closure::require_c_closed;
use crate::error::{internal, invalid, Result};
use crate::graph::{Color, Coloring, Graph, Vertex, VertexSet};
use crate::instance::{Instance, Problem, Witness};
use crate::kernel::dominating_set::{lift_through_trace, removable_white, rr_clique};
use crate::matching::{is_two_maximal, two_maximal_independent_set};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: usize,
    pub leaves: usize,
    /// Largest `|P|` seen at a branching node.
    pub max_branch_width: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub answer: bool,
    pub witness: Option<Witness>,
    pub stats: SolveStats,
}

struct Search<'a> {
    inst: &'a Instance,
    c: usize,
    r: usize,
    ds_shortcut: bool,
    stats: SolveStats,
}

fn satisfied(g: &Graph, v: Vertex, d: &VertexSet, r: usize) -> bool {
    g.closed_neighbors(v).intersection(d).count() >= r
}

impl Search<'_> {
    fn branch(&mut self, kp: usize, d: &mut VertexSet) -> Result<Option<VertexSet>> {
        self.stats.nodes += 1;
        let g = &self.inst.graph;
        let blacks: VertexSet = self
            .inst
            .black_vertices()
            .into_iter()
            .filter(|&v| !satisfied(g, v, d, self.r))
            .collect();
        if blacks.is_empty() {
            return Ok(Some(d.clone()));
        }
        if kp == 0 {
            return Ok(None);
        }
        let gb = g.induced_subgraph(&blacks);
        let set = two_maximal_independent_set(&gb);
        if !is_two_maximal(&gb, &set) {
            return internal("independent set of the black vertices is not 2-maximal");
        }
        if set.len() > kp {
            let chosen: VertexSet = set.iter().copied().take(kp + 1).collect();
            let p: Vec<Vertex> = g
                .vertices()
                .filter(|&v| g.neighbors(v).intersection(&chosen).count() >= 2)
                .collect();
            let bound = (self.c - 1) * (kp + 1) * kp / 2;
            if p.len() > bound {
                return internal(format!("branching set of size {} exceeds {bound}", p.len()));
            }
            self.stats.max_branch_width = self.stats.max_branch_width.max(p.len());
            for v in p {
                if d.contains(&v) {
                    continue;
                }
                d.insert(v);
                let found = self.branch(kp - 1, d)?;
                d.remove(&v);
                if found.is_some() {
                    return Ok(found);
                }
            }
            return Ok(None);
        }
        self.stats.leaves += 1;
        if self.ds_shortcut {
            return Ok(Some(d.union(&set).copied().collect()));
        }
        Ok(self.leaf(kp, d, &blacks))
    }

    /// RR6 on the white vertices outside `d`, then every extension of `d`
    /// by at most `kp` vertices, smallest first.
    fn leaf(&self, kp: usize, d: &VertexSet, blacks: &VertexSet) -> Option<VertexSet> {
        let mut local = self.inst.clone();
        let mut col = Coloring::all_black();
        for v in local.graph.vertices().filter(|v| !blacks.contains(v)) {
            col.set(v, Color::White);
        }
        local.coloring = Some(col);
        while let Some((w, _)) = removable_white(&local, d) {
            local.remove_vertex(w).expect("vertex exists");
        }
        let g = &local.graph;
        let pool: Vec<Vertex> = g.vertices().filter(|v| !d.contains(v)).collect();
        for size in 0..=kp.min(pool.len()) {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let mut cand = d.clone();
                cand.extend(idx.iter().map(|&i| pool[i]));
                if blacks.iter().all(|&b| satisfied(g, b, &cand, self.r)) {
                    return Some(cand);
                }
                if !next_combination(&mut idx, pool.len()) {
                    break;
                }
            }
        }
        None
    }
}

/// Advances `idx` to the next `idx.len()`-combination of `0..n` in
/// lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn run(g: &Graph, c: usize, r: usize, k: usize, ds: bool) -> Result<Solution> {
    if c == 0 || r == 0 {
        return invalid("c and r must be positive");
    }
    require_c_closed(g, c)?;
    let problem = if ds {
        Problem::DominatingSet
    } else {
        Problem::ThresholdDominatingSet
    };
    let original = Instance::new(Problem::BwThresholdDominatingSet, g.clone(), k).with_r(r);
    let mut inst = original.clone();
    let mut trace = Vec::new();
    if !ds && c * k >= 2 && r <= k {
        while let Some(rec) = rr_clique(&inst, c) {
            inst = inst.apply(&rec)?;
            trace.push(rec);
        }
    }
    let mut search = Search {
        inst: &inst,
        c,
        r,
        ds_shortcut: ds,
        stats: SolveStats::default(),
    };
    let found = search.branch(k, &mut VertexSet::new())?;
    let stats = search.stats;
    let witness = match found {
        Some(d) => Some(Witness::vertices(
            problem,
            lift_through_trace(&original, &trace, &d)?,
        )),
        None => None,
    };
    Ok(Solution {
        answer: witness.is_some(),
        witness,
        stats,
    })
}

/// All vertices black, RR2 exhaustively, then the branching search.
pub fn solve_tds(g: &Graph, c: usize, r: usize, k: usize) -> Result<Solution> {
    run(g, c, r, k, false)
}

/// Dominating set: no RR2, and a small 2-maximal independent set of the
/// undominated vertices completes the solution directly.
pub fn solve_ds(g: &Graph, c: usize, k: usize) -> Result<Solution> {
    run(g, c, 1, k, true)
}
