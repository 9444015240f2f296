use crate::graph::{Graph, Vertex, VertexSet};

/// Greedy maximal independent set, scanning vertices by id.
pub fn greedy_maximal_independent_set(g: &Graph) -> VertexSet {
    let mut set = VertexSet::new();
    extend_maximal(g, &mut set);
    set
}

fn extend_maximal(g: &Graph, set: &mut VertexSet) {
    for v in g.vertices() {
        if !set.contains(&v) && g.neighbors(v).is_disjoint(set) {
            set.insert(v);
        }
    }
}

/// First improving swap: some `v ∈ I` and nonadjacent `x, y ∉ I` whose only
/// neighbor in `I` is `v`.
fn find_swap(g: &Graph, set: &VertexSet) -> Option<(Vertex, Vertex, Vertex)> {
    for &v in set {
        let private: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&x| g.neighbors(x).intersection(set).count() == 1)
            .collect();
        for (i, &x) in private.iter().enumerate() {
            if let Some(&y) = private[i + 1..].iter().find(|&&y| !g.has_edge(x, y)) {
                return Some((v, x, y));
            }
        }
    }
    None
}

/// Maximal independent set that admits no one-out two-in improvement.
pub fn two_maximal_independent_set(g: &Graph) -> VertexSet {
    let mut set = greedy_maximal_independent_set(g);
    while let Some((v, x, y)) = find_swap(g, &set) {
        set.remove(&v);
        set.insert(x);
        set.insert(y);
        extend_maximal(g, &mut set);
    }
    set
}

/// Exhaustive check of independence, maximality and 2-maximality.
pub fn is_two_maximal(g: &Graph, set: &VertexSet) -> bool {
    if !g.is_independent(set) {
        return false;
    }
    let outside: Vec<Vertex> = g.vertices().filter(|v| !set.contains(v)).collect();
    if outside.iter().any(|&x| g.neighbors(x).is_disjoint(set)) {
        return false;
    }
    for &v in set {
        let mut rest = set.clone();
        rest.remove(&v);
        for (i, &x) in outside.iter().enumerate() {
            if !g.neighbors(x).is_disjoint(&rest) {
                continue;
            }
            for &y in &outside[i + 1..] {
                if !g.has_edge(x, y) && g.neighbors(y).is_disjoint(&rest) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let i = two_maximal_independent_set(&c5);
        assert_eq!(i.len(), 2);
        assert!(is_two_maximal(&c5, &i));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(two_maximal_independent_set(&k4).len(), 1);
        assert_eq!(
            two_maximal_independent_set(&Graph::with_vertices(4)).len(),
            4
        );
    }

    #[test]
    fn swap_improves_star() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(greedy_maximal_independent_set(&star), VertexSet::from([0]));
        let i = two_maximal_independent_set(&star);
        assert_eq!(i, VertexSet::from([1, 2, 3]));
    }
}
