//! Small hand-built graphs that exercise particular branches of the
//! factorization algorithms.

use crate::approx::path_with_triangle;
use crate::graph::{Graph, VertexId};
use crate::products::strong_product;

/// `P3 ⊠ P3` without a corner: prime, with both dispensable and
/// indispensable edges.
pub fn prime_with_dispensable_edges() -> Graph {
    let (g, _) = strong_product(&[Graph::path(3), Graph::path(3)]).expect("nonempty");
    let (h, _) = crate::graph::induced_subgraph(&g, &[1, 2, 3, 4, 5, 6, 7, 8]).expect("in range");
    h
}

/// `P3 ⊠ P4`, whose backbone is the two adjacent centers `5` and `6`.
/// Their neighborhoods share colored edges for both factors.
pub fn continuation_works() -> Graph {
    strong_product(&[Graph::path(3), Graph::path(4)])
        .expect("nonempty")
        .0
}

/// A thin prime graph with backbone `{1, 2, 3, 4}`.
///
/// Vertices `0..9` form `P3 ⊠ P3` with `3` at the center; `9`, `10` and
/// `11` hang off `4`. Both `⟨N[3]⟩` and `⟨N[4]⟩` are thin products of two
/// factors, but one factor of `⟨N[4]⟩` has no edge colored from `⟨N[3]⟩`,
/// so stepping from `3` to `4` needs the hypercube repair. Use
/// [`continuation_fails_order`] to reach that step first.
pub fn continuation_fails() -> Graph {
    // grid position (column, row) -> vertex
    let at = [[5, 2, 8], [6, 3, 4], [7, 1, 0]];
    let mut g = Graph::new(12);
    for a in 0..3usize {
        for b in 0..3usize {
            for c in 0..3usize {
                for d in 0..3usize {
                    let (u, v) = (at[a][b], at[c][d]);
                    if u < v && a.abs_diff(c) <= 1 && b.abs_diff(d) <= 1 {
                        g.add_edge(u, v);
                    }
                }
            }
        }
    }
    for (u, v) in [
        (4, 9),
        (4, 10),
        (4, 11),
        (9, 2),
        (9, 1),
        (9, 10),
        (9, 11),
        (10, 2),
        (11, 1),
    ] {
        g.add_edge(u, v);
    }
    g
}

pub fn continuation_fails_order() -> Vec<VertexId> {
    vec![3, 4, 1, 2]
}

/// `P3 ⊠ X` for the 4-cycle `X` with a triangle on one edge, relabeled so
/// that the backbone is the 4-cycle `3 - 0 - 1 - 2 - 3`.
///
/// Different backbone orders take different routes to the same factors:
/// [`order_with_edge_neighborhood`] has a failing continuation from `2` to
/// `1` that is resolved through `⟨N[2] ∪ N[1]⟩`, while [`order_with_nstar`]
/// never fails but leaves a vertex for the `N*` pass.
pub fn order_sensitive() -> Graph {
    let x = Graph::from_edges(5, [(0, 1), (0, 2), (0, 4), (1, 3), (2, 4), (3, 4)]);
    let (g, _) = strong_product(&[Graph::path(3), x]).expect("nonempty");
    let mut relabel = vec![usize::MAX; g.n()];
    for (new, old) in [6, 5, 9, 8].into_iter().enumerate() {
        relabel[old] = new;
    }
    for (next, slot) in (4..).zip(relabel.iter_mut().filter(|s| **s == usize::MAX)) {
        *slot = next;
    }
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (relabel[u], relabel[v])))
}

pub fn order_with_edge_neighborhood() -> Vec<VertexId> {
    vec![2, 1, 3, 0]
}

pub fn order_with_nstar() -> Vec<VertexId> {
    vec![3, 0, 2, 1]
}

/// Rows of `P3` strung around a 4-cycle, with the seam between the last and
/// the first row flipped. The middle row `0..4` is the backbone; the outer
/// rows are `4..8` and `8..12`. Every closed neighborhood is `P3 ⊠ P3` but
/// the graph is prime.
pub fn twisted_bundle() -> Graph {
    let id = |i: usize, j: usize| match j {
        0 => 4 + i,
        1 => i,
        _ => 8 + i,
    };
    let mut g = Graph::new(12);
    for i in 0..4 {
        g.add_edge(id(i, 0), id(i, 1));
        g.add_edge(id(i, 1), id(i, 2));
        let next = (i + 1) % 4;
        for j in 0..3usize {
            for k in 0..3usize {
                let k2 = if next == 0 { 2 - k } else { k };
                if j.abs_diff(k2) <= 1 {
                    g.add_edge(id(i, j), id(next, k));
                }
            }
        }
    }
    g
}

/// `P5 ⊠ P7^T` with a few diagonals removed. Vertex `8 * i + j`, with
/// `j = 7` the triangle apex, sits at path position `i` and triangle-path
/// position `j`.
pub fn perturbed_path_product() -> Graph {
    let mut g = path_product();
    for (u, v) in PERTURBATION {
        assert!(g.remove_edge(u, v), "({u}, {v}) is a diagonal");
    }
    g
}

/// The unperturbed `P5 ⊠ P7^T`.
pub fn path_product() -> Graph {
    strong_product(&[Graph::path(5), path_with_triangle(7)])
        .expect("nonempty")
        .0
}

const PERTURBATION: [(VertexId, VertexId); 3] = [(26, 35), (27, 39), (27, 34)];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::is_prime_oracle;
    use crate::skeleton::classical_strong_pfd;
    use crate::thinness::{backbone, is_thin};

    #[test]
    fn shapes() {
        let g = prime_with_dispensable_edges();
        assert_eq!((g.n(), g.m()), (8, 17));
        assert!(is_prime_oracle(&g).unwrap());

        assert_eq!(backbone(&continuation_works()).vertices, [5, 6]);

        let g = continuation_fails();
        assert!(is_thin(&g));
        assert_eq!(backbone(&g).vertices, [1, 2, 3, 4]);
        assert!(classical_strong_pfd(&g).unwrap().is_prime());

        let g = order_sensitive();
        assert_eq!(backbone(&g).vertices, [0, 1, 2, 3]);
        for (u, v) in [(3, 0), (0, 1), (1, 2), (2, 3)] {
            assert!(g.has_edge(u, v));
        }

        let g = twisted_bundle();
        assert_eq!((g.n(), g.m()), (12, 8 + 4 * 7));
        assert!(is_thin(&g));
        assert_eq!(backbone(&g).vertices, [0, 1, 2, 3]);
        assert!(classical_strong_pfd(&g).unwrap().is_prime());

        let g = perturbed_path_product();
        assert_eq!(path_product().m() - g.m(), 3);
        assert!(is_thin(&g));
        assert!(classical_strong_pfd(&g).unwrap().is_prime());
    }
}
