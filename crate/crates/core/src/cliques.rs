use num_bigint::BigUint;

use crate::bounds::{big, pow};
use crate::closure::compute_closure;
use crate::graph::{Graph, Vertex, VertexSet};

/// All inclusion-maximal cliques, each sorted, in lexicographic order.
/// Bron–Kerbosch with a pivot maximizing `|P ∩ N(u)|`.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.is_empty() {
        return out;
    }
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, g.vertex_set(), VertexSet::new(), &mut out);
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<Vertex>,
    p: VertexSet,
    x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.iter().copied().collect());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| {
            (
                g.neighbors(u).intersection(&p).count(),
                std::cmp::Reverse(u),
            )
        })
        .expect("p is nonempty");
    let candidates: Vec<Vertex> = p.difference(g.neighbors(pivot)).copied().collect();
    let (mut p, mut x) = (p, x);
    for v in candidates {
        let nv = g.neighbors(v);
        r.push(v);
        bron_kerbosch(
            g,
            r,
            p.intersection(nv).copied().collect(),
            x.intersection(nv).copied().collect(),
            out,
        );
        r.pop();
        p.remove(&v);
        x.insert(v);
    }
}

/// Every clique with exactly `size` vertices drawn from `pool`, in
/// lexicographic order.
pub fn cliques_of_size(g: &Graph, pool: &VertexSet, size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend_cliques(g, pool.iter().copied().collect(), size, &mut cur, &mut out);
    out
}

fn extend_cliques(
    g: &Graph,
    cand: Vec<Vertex>,
    size: usize,
    cur: &mut Vec<Vertex>,
    out: &mut Vec<VertexSet>,
) {
    if cur.len() == size {
        out.push(cur.iter().copied().collect());
        return;
    }
    let need = size - cur.len();
    for (i, &v) in cand.iter().enumerate() {
        if cand.len() - i < need {
            break;
        }
        let next: Vec<Vertex> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
        cur.push(v);
        extend_cliques(g, next, size, cur, out);
        cur.pop();
    }
}

pub fn max_clique_size(g: &Graph) -> usize {
    maximal_cliques(g)
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

/// Checks `#cliques ≤ 3^{(c−1)/3}·n²` exactly by cubing both sides.
pub fn clique_count_bound_holds(g: &Graph) -> bool {
    let count = big(maximal_cliques(g).len());
    let c = compute_closure(g).c;
    let n = big(g.vertex_count());
    let lhs: BigUint = &count * &count * &count;
    let rhs = pow(3, c - 1) * n.pow(6);
    lhs <= rhs
}
