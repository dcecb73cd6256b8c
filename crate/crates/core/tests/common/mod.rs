#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spfd::approx::path_with_triangle;
use spfd::graph::Graph;
use spfd::oracle::{enumerate_connected_graphs, is_prime_oracle};
use spfd::thinness::is_thin;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected graph on `n` vertices: a random spanning tree plus edges
/// kept with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_thin(min: usize, max: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.gen_range(min..=max);
        let p = rng.gen_range(0.05..0.6);
        let g = random_connected(n, p, rng);
        if is_thin(&g) {
            return g;
        }
    }
}

/// Thin strong-prime graphs: paths, short cycles, paths with a triangle,
/// and every thin oracle-prime connected graph on 3 to 6 vertices.
pub fn prime_catalog() -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    for n in 3..=6 {
        out.push(Graph::path(n));
    }
    out.push(Graph::cycle(4));
    out.push(Graph::cycle(5));
    for n in 4..=6 {
        out.push(path_with_triangle(n));
    }
    for n in 3..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            if is_thin(&g)
                && is_prime_oracle(&g).unwrap()
                && !out.iter().any(|h| spfd::iso::isomorphic(h, &g).is_some())
            {
                out.push(g);
            }
        }
    }
    out
}

/// Catalog primes small and sparse enough for three-factor products.
pub fn small_primes(catalog: &[Graph]) -> Vec<Graph> {
    catalog
        .iter()
        .filter(|g| g.n() <= 4 || (g.n() == 5 && g.m() <= 5))
        .cloned()
        .collect()
}
