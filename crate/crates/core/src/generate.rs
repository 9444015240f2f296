//! Reproducible instance generators. All randomness comes from a ChaCha8
//! stream seeded with a single `u64`.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Model {
    /// `count` disjoint cliques on `size` vertices each.
    DisjointCliques {
        count: usize,
        size: usize,
    },
    /// Two nonadjacent hubs joined by `paths` paths of length two.
    Theta {
        paths: usize,
    },
    Er {
        n: usize,
        p: f64,
    },
    /// Erdős–Rényi, then edges added until the graph is `c`-closed.
    ClosureRepair {
        n: usize,
        p: f64,
        c: usize,
    },
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn generate(model: &Model, seed: u64) -> Result<Graph> {
    match *model {
        Model::DisjointCliques { count, size } => disjoint_cliques(count, size),
        Model::Theta { paths } => theta(paths),
        Model::Er { n, p } => {
            check_probability(p)?;
            Ok(er(n, p, &mut rng(seed)))
        }
        Model::ClosureRepair { n, p, c } => {
            check_probability(p)?;
            if c == 0 {
                return invalid("closure parameter must be positive");
            }
            Ok(closure_repair(er(n, p, &mut rng(seed)), c))
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        invalid(format!("edge probability {p} outside [0, 1]"))
    }
}

pub fn disjoint_cliques(count: usize, size: usize) -> Result<Graph> {
    if count == 0 || size == 0 {
        return invalid("clique count and size must be positive");
    }
    let mut g = Graph::with_vertices(count * size);
    for i in 0..count {
        let base = (i * size) as Vertex;
        for u in 0..size as Vertex {
            for v in u + 1..size as Vertex {
                g.add_edge(base + u, base + v)?;
            }
        }
    }
    Ok(g)
}

/// Hubs are vertices 0 and 1.
pub fn theta(paths: usize) -> Result<Graph> {
    if paths == 0 {
        return invalid("theta graph needs at least one path");
    }
    let mut g = Graph::with_vertices(2);
    for _ in 0..paths {
        let m = g.add_vertex();
        g.add_edge(0, m)?;
        g.add_edge(1, m)?;
    }
    Ok(g)
}

pub fn er<R: RngExt + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::with_vertices(n);
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// Repeatedly joins the lexicographically smallest nonadjacent pair with at
/// least `c` common neighbors.
pub fn closure_repair(mut g: Graph, c: usize) -> Graph {
    loop {
        let violating = g.vertices().find_map(|u| {
            g.vertices()
                .filter(|&v| v > u)
                .find(|&v| {
                    !g.has_edge(u, v) && g.neighbors(u).intersection(g.neighbors(v)).count() >= c
                })
                .map(|v| (u, v))
        });
        match violating {
            Some((u, v)) => g.add_edge(u, v).expect("nonadjacent pair"),
            None => return g,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{compute_closure, is_c_closed};

    #[test]
    fn disjoint_cliques_shape() {
        let g = generate(&Model::DisjointCliques { count: 2, size: 3 }, 0).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(crate::cliques::max_clique_size(&g), 3);
        assert_eq!(compute_closure(&g).c, 1);
    }

    #[test]
    fn theta_closure() {
        assert_eq!(compute_closure(&theta(5).unwrap()).c, 6);
    }

    #[test]
    fn er_edge_cases() {
        assert!(generate(&Model::Er { n: 0, p: 0.5 }, 1).unwrap().is_empty());
        assert!(generate(&Model::Er { n: 3, p: 1.5 }, 1).is_err());
        assert!(generate(&Model::DisjointCliques { count: 0, size: 3 }, 1).is_err());
    }

    #[test]
    fn reproducible() {
        let m = Model::ClosureRepair {
            n: 14,
            p: 0.3,
            c: 2,
        };
        let a = generate(&m, 42).unwrap();
        assert_eq!(a, generate(&m, 42).unwrap());
        assert!(is_c_closed(&a, 2).unwrap());
    }
}
