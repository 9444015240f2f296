//! Brute-force reference implementations for the integration tests. They
//! share no code with the library's oracle: every answer comes from a plain
//! loop over bitmasks.

#![allow(dead_code)]

use cclosure::instance::WitnessSet;
use cclosure::{Bipartition, Coloring, Graph, Instance, Problem, Side, Vertex, VertexSet, Witness};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Adjacency bitmasks over the vertices of `g` in id order.
pub struct Dense {
    pub ids: Vec<Vertex>,
    pub adj: Vec<u32>,
}

impl Dense {
    pub fn new(g: &Graph) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        assert!(ids.len() <= 24, "brute force limited to 24 vertices");
        let pos = |v: Vertex| ids.iter().position(|&x| x == v).unwrap();
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << pos(u)))
            .collect();
        Dense { ids, adj }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    fn closed(&self, i: usize) -> u32 {
        self.adj[i] | 1 << i
    }

    fn bits(mask: u32) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| mask >> i & 1 == 1)
    }

    fn masks(&self) -> std::ops::Range<u32> {
        0..1u32 << self.n()
    }

    fn mask_of(&self, set: &VertexSet) -> Option<u32> {
        set.iter().try_fold(0u32, |m, v| {
            self.ids.iter().position(|x| x == v).map(|i| m | 1 << i)
        })
    }
}

pub fn closure_scan(g: &Graph) -> usize {
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut c = 1;
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if !g.has_edge(u, v) {
                let common = vs
                    .iter()
                    .filter(|&&w| g.has_edge(u, w) && g.has_edge(v, w))
                    .count();
                c = c.max(common + 1);
            }
        }
    }
    c
}

pub fn max_independent_set(g: &Graph) -> usize {
    let d = Dense::new(g);
    d.masks()
        .filter(|&m| Dense::bits(m).all(|i| d.adj[i] & m == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn min_vertex_cover(g: &Graph) -> usize {
    let d = Dense::new(g);
    d.masks()
        .filter(|&m| (0..d.n()).all(|i| m >> i & 1 == 1 || d.adj[i] & !m == 0))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Smallest set whose closed neighborhoods meet every black vertex `r`
/// times; `None` if no set does.
pub fn min_threshold_dominating(g: &Graph, coloring: Option<&Coloring>, r: usize) -> Option<usize> {
    let d = Dense::new(g);
    let black: Vec<usize> = (0..d.n())
        .filter(|&i| coloring.is_none_or(|c| c.is_black(d.ids[i])))
        .collect();
    d.masks()
        .filter(|&m| {
            black
                .iter()
                .all(|&i| (d.closed(i) & m).count_ones() as usize >= r)
        })
        .map(|m| m.count_ones() as usize)
        .min()
}

pub fn min_dominating_set(g: &Graph) -> usize {
    min_threshold_dominating(g, None, 1).unwrap()
}

pub fn max_induced_matching(g: &Graph) -> usize {
    let d = Dense::new(g);
    d.masks()
        .filter(|&m| Dense::bits(m).all(|i| (d.adj[i] & m).count_ones() == 1))
        .map(|m| m.count_ones() as usize / 2)
        .max()
        .unwrap_or(0)
}

fn irredundant_mask(d: &Dense, m: u32) -> bool {
    Dense::bits(m).all(|v| {
        let others = Dense::bits(m & !(1 << v)).fold(0, |acc, u| acc | d.closed(u));
        d.closed(v) & !others != 0
    })
}

pub fn max_irredundant_set(g: &Graph) -> usize {
    let d = Dense::new(g);
    d.masks()
        .filter(|&m| irredundant_mask(&d, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Dynamic program over vertex subsets: the lowest vertex is either left
/// out or matched to one of its neighbors.
pub fn max_matching(g: &Graph) -> usize {
    let d = Dense::new(g);
    let full = (1u32 << d.n()) - 1;
    let mut best = vec![0usize; full as usize + 1];
    for m in 1..=full {
        let v = m.trailing_zeros() as usize;
        let rest = m & !(1 << v);
        let mut b = best[rest as usize];
        for u in Dense::bits(d.adj[v] & rest) {
            b = b.max(1 + best[(rest & !(1 << u)) as usize]);
        }
        best[m as usize] = b;
    }
    best[full as usize]
}

pub fn maximal_clique_count(g: &Graph) -> usize {
    let d = Dense::new(g);
    let n = d.n();
    if n == 0 {
        return 0;
    }
    d.masks()
        .filter(|&m| m != 0)
        .filter(|&m| Dense::bits(m).all(|i| d.closed(i) & m == m))
        .filter(|&m| (0..n).all(|j| m >> j & 1 == 1 || d.adj[j] & m != m))
        .count()
}

/// Smallest number of elements meeting every set; `None` for an element
/// count above 20.
pub fn min_hitting_set(universe: usize, family: &[VertexSet]) -> usize {
    (0..1u32 << universe)
        .filter(|&m| family.iter().all(|s| s.iter().any(|&e| m >> e & 1 == 1)))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn decide(inst: &Instance) -> bool {
    let g = &inst.graph;
    let k = inst.k;
    match inst.problem {
        Problem::IndependentSet => max_independent_set(g) >= k,
        Problem::DominatingSet => min_dominating_set(g) <= k,
        Problem::ThresholdDominatingSet | Problem::BwThresholdDominatingSet => {
            min_threshold_dominating(g, inst.coloring.as_ref(), inst.threshold())
                .is_some_and(|s| s <= k)
        }
        Problem::InducedMatching => max_induced_matching(g) >= k,
        Problem::IrredundantSet => max_irredundant_set(g) >= k,
    }
}

/// Independent witness check against the instance it claims to solve.
pub fn witness_ok(inst: &Instance, w: &Witness) -> bool {
    let g = &inst.graph;
    let d = Dense::new(g);
    match &w.set {
        WitnessSet::VertexSet(s) => {
            let Some(m) = d.mask_of(s) else {
                return false;
            };
            match inst.problem {
                Problem::IndependentSet => {
                    s.len() >= inst.k && Dense::bits(m).all(|i| d.adj[i] & m == 0)
                }
                Problem::IrredundantSet => s.len() >= inst.k && irredundant_mask(&d, m),
                _ => {
                    let r = inst.threshold();
                    s.len() <= inst.k
                        && (0..d.n())
                            .filter(|&i| {
                                inst.coloring.as_ref().is_none_or(|c| c.is_black(d.ids[i]))
                            })
                            .all(|i| (d.closed(i) & m).count_ones() as usize >= r)
                }
            }
        }
        WitnessSet::EdgeSet(edges) => {
            let ends: VertexSet = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            inst.problem == Problem::InducedMatching
                && edges.len() >= inst.k
                && ends.len() == 2 * edges.len()
                && edges.iter().all(|&(u, v)| g.has_edge(u, v))
                && ends
                    .iter()
                    .all(|&u| g.neighbors(u).intersection(&ends).count() == 1)
        }
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_vertices(n);
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_bipartite(rng: &mut ChaCha8Rng, n: usize, p: f64) -> (Graph, Bipartition) {
    let mut parts = Bipartition::default();
    for v in 0..n as Vertex {
        parts.set(
            v,
            if rng.random_bool(0.5) {
                Side::Left
            } else {
                Side::Right
            },
        );
    }
    let mut g = Graph::with_vertices(n);
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if parts.side(u) != parts.side(v) && rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    (g, parts)
}

pub fn random_coloring(rng: &mut ChaCha8Rng, g: &Graph, white: f64) -> Coloring {
    let mut col = Coloring::all_black();
    for v in g.vertices() {
        if rng.random_bool(white) {
            col.set(v, cclosure::Color::White);
        }
    }
    col
}

/// Adds `uv` unless it would break `c`-closure or push a degree above
/// `max_degree`.
pub fn add_if_closed(g: &mut Graph, u: Vertex, v: Vertex, c: usize, max_degree: usize) -> bool {
    if u == v || g.has_edge(u, v) || g.degree(u) >= max_degree || g.degree(v) >= max_degree {
        return false;
    }
    g.add_edge(u, v).unwrap();
    let breaks = |a: Vertex, b: Vertex, g: &Graph| {
        g.neighbors(b).iter().any(|&x| {
            x != a && !g.has_edge(a, x) && g.neighbors(a).intersection(g.neighbors(x)).count() >= c
        })
    };
    if breaks(u, v, g) || breaks(v, u, g) {
        g.remove_edge(u, v).unwrap();
        return false;
    }
    true
}

/// Random `c`-closed graph with degrees at most `max_degree`, built by
/// rejection; bipartite when `parts` is given.
pub fn random_closed(
    rng: &mut ChaCha8Rng,
    n: usize,
    c: usize,
    max_degree: usize,
    attempts: usize,
    parts: Option<&Bipartition>,
) -> Graph {
    let mut g = Graph::with_vertices(n);
    if n < 2 {
        return g;
    }
    for _ in 0..attempts {
        let u = rng.random_range(0..n) as Vertex;
        let v = rng.random_range(0..n) as Vertex;
        if parts.is_some_and(|p| p.side(u) == p.side(v)) {
            continue;
        }
        add_if_closed(&mut g, u, v, c, max_degree);
    }
    g
}

/// Maximum bipartite matching by augmenting paths, and the König cover
/// built from it. Panics if the cover check fails.
pub fn konig(g: &Graph, parts: &Bipartition) -> usize {
    let left: Vec<Vertex> = g
        .vertices()
        .filter(|&v| parts.side(v) == Side::Left)
        .collect();
    let mut mate: std::collections::BTreeMap<Vertex, Vertex> = Default::default();
    fn augment(
        g: &Graph,
        u: Vertex,
        seen: &mut VertexSet,
        mate: &mut std::collections::BTreeMap<Vertex, Vertex>,
    ) -> bool {
        for &v in g.neighbors(u) {
            if seen.insert(v) {
                let free = match mate.get(&v) {
                    None => true,
                    Some(&w) => augment(g, w, seen, mate),
                };
                if free {
                    mate.insert(v, u);
                    mate.insert(u, v);
                    return true;
                }
            }
        }
        false
    }
    let mut size = 0;
    for &u in &left {
        if augment(g, u, &mut VertexSet::new(), &mut mate) {
            size += 1;
        }
    }
    let mut reached = VertexSet::new();
    let mut stack: Vec<Vertex> = left
        .iter()
        .copied()
        .filter(|u| !mate.contains_key(u))
        .collect();
    reached.extend(stack.iter().copied());
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if reached.insert(v) {
                if let Some(&w) = mate.get(&v) {
                    if reached.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
    }
    let cover: VertexSet = g
        .vertices()
        .filter(|&v| (parts.side(v) == Side::Left) != reached.contains(&v))
        .collect();
    assert!(g
        .edges()
        .all(|(u, v)| cover.contains(&u) || cover.contains(&v)));
    assert_eq!(
        cover.len(),
        size,
        "König cover size differs from matching size"
    );
    size
}

/// All graphs on `n` vertices up to isomorphism, `n ≤ 7`. Each class is
/// represented by the labeling with the smallest edge bitmask.
pub fn nonisomorphic(n: usize) -> Vec<Graph> {
    assert!(n <= 7);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut index = [[0usize; 7]; 7];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let images: Vec<Vec<u32>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| 1 << index[p[u]][p[v]]).collect())
        .collect();
    let canon = |bits: u32| -> u32 {
        images
            .iter()
            .map(|img| Dense::bits(bits).fold(0, |m, i| m | img[i]))
            .min()
            .unwrap_or(0)
    };
    let candidates: Vec<u32> = if n <= 5 {
        (0..1u32 << pairs.len()).collect()
    } else {
        nonisomorphic(n - 1)
            .iter()
            .flat_map(|h| {
                let base = h
                    .edges()
                    .fold(0u32, |m, (u, v)| m | 1 << index[u as usize][v as usize]);
                (0..1u32 << (n - 1))
                    .map(move |nb| Dense::bits(nb).fold(base, |m, i| m | 1 << index[i][n - 1]))
            })
            .collect()
    };
    let classes: std::collections::BTreeSet<u32> = candidates.into_iter().map(canon).collect();
    classes
        .into_iter()
        .map(|bits| {
            let edges: Vec<(Vertex, Vertex)> = Dense::bits(bits)
                .map(|i| (pairs[i].0 as Vertex, pairs[i].1 as Vertex))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Every graph on `n` vertices obtained by adding one vertex to a graph
/// from `smaller`; covers all classes on `n` vertices when `smaller`
/// covers all classes on `n − 1`.
pub fn one_vertex_extensions(smaller: &[Graph]) -> impl Iterator<Item = Graph> + '_ {
    smaller.iter().flat_map(|h| {
        let n = h.vertex_count();
        (0..1u32 << n).map(move |nb| {
            let mut g = h.clone();
            let v = g.add_vertex();
            for u in Dense::bits(nb) {
                g.add_edge(u as Vertex, v).unwrap();
            }
            g
        })
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every labeled graph on `n` vertices, `n ≤ 6`.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 6);
    let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
        .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
        .collect();
    (0..1u32 << pairs.len()).map(move |bits| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn cycle(n: u32) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n as usize, &edges).unwrap()
}

pub fn path(n: u32) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n as usize, &edges).unwrap()
}

pub fn complete(n: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n as usize, &edges).unwrap()
}
