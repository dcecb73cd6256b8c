//! Brute-force ground truth for small graphs.
//!
//! Nothing here shares code with the factorization pipelines beyond the
//! product constructor and the isomorphism test: a graph on `n` vertices is
//! split by trying every pair of connected candidate factors whose orders
//! multiply to `n`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::iso::isomorphic;
use crate::products::{
    product_edge_count, same_factors, strong_product, Coordinates, Factorization, ProductKind,
};

pub const DEFAULT_LIMIT: usize = 10;

/// Largest order for which connected graphs are enumerated.
pub const MAX_ENUMERATED: usize = 7;

/// Every connected simple graph on `n` vertices, once per isomorphism class.
///
/// Each connected graph has a vertex whose removal keeps it connected, so
/// extending every class on `n - 1` vertices by a vertex with a nonempty
/// neighborhood reaches every class on `n`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATED {
        return Err(Error::TooLarge {
            n,
            limit: MAX_ENUMERATED,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::new(1)];
    for k in 1..n {
        let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<usize>> = HashMap::new();
        let mut next: Vec<Graph> = Vec::new();
        for base in &level {
            for mask in 1u32..(1 << k) {
                let mut g = base.clone();
                let v = g.add_vertex();
                for u in 0..k {
                    if mask & (1 << u) != 0 {
                        g.add_edge(u, v);
                    }
                }
                let bucket = buckets.entry(invariant(&g)).or_default();
                if bucket.iter().all(|&i| isomorphic(&next[i], &g).is_none()) {
                    bucket.push(next.len());
                    next.push(g);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Sorted (degree, sorted neighbor degrees) pairs.
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut out: Vec<(usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    out.sort_unstable();
    out
}

fn degree_multiset(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Some split `g ≅ a ⊠ b` with `2 ≤ |a| ≤ |b|`, including the product
/// witness mapping product vertex `i·|b| + j` to its host vertex.
fn splits(g: &Graph) -> Result<Vec<(Graph, Graph, Vec<VertexId>)>> {
    let n = g.n();
    let degrees = degree_multiset(g);
    let mut out = Vec::new();
    for a in (2..=n).take_while(|a| a * a <= n) {
        if n % a != 0 {
            continue;
        }
        let b = n / a;
        let small = enumerate_connected_graphs(a)?;
        let large = enumerate_connected_graphs(b)?;
        for fa in &small {
            for fb in &large {
                if product_edge_count(&[fa.clone(), fb.clone()], ProductKind::Strong) != g.m() {
                    continue;
                }
                let mut predicted: Vec<usize> = Vec::with_capacity(n);
                for x in fa.vertices() {
                    for y in fb.vertices() {
                        predicted.push((fa.degree(x) + 1) * (fb.degree(y) + 1) - 1);
                    }
                }
                predicted.sort_unstable();
                if predicted != degrees {
                    continue;
                }
                let (prod, _) = strong_product(&[fa.clone(), fb.clone()])?;
                if let Some(w) = isomorphic(&prod, g) {
                    out.push((fa.clone(), fb.clone(), w.images().to_vec()));
                }
            }
        }
    }
    Ok(out)
}

fn check(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), limit });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Prime factors of `g` with a coordinatization, by exhaustive search.
pub fn brute_force_pfd(g: &Graph, limit: usize) -> Result<Factorization> {
    check(g, limit)?;
    factor(g)
}

fn factor(g: &Graph) -> Result<Factorization> {
    let found = splits(g)?;
    let Some((a, b, witness)) = found.into_iter().next() else {
        return Ok(Factorization::prime(g, ProductKind::Strong));
    };
    let fa = factor(&a)?;
    let fb = factor(&b)?;
    let mut coords = vec![Vec::new(); g.n()];
    for (p, &host) in witness.iter().enumerate() {
        let (x, y) = (p / b.n(), p % b.n());
        let mut c = fa.coords.of(x).to_vec();
        c.extend_from_slice(fb.coords.of(y));
        coords[host] = c;
    }
    let mut factors = fa.factors;
    factors.extend(fb.factors);
    let dims = factors.iter().map(Graph::n).collect();
    Ok(Factorization {
        factors,
        coords: Coordinates::new(dims, coords)?,
        kind: ProductKind::Strong,
    })
}

pub fn is_prime_oracle(g: &Graph) -> Result<bool> {
    Ok(brute_force_pfd(g, DEFAULT_LIMIT)?.len() == 1)
}

/// Every prime multiset reachable through any sequence of splits. Unique
/// factorization says this has exactly one entry.
pub fn all_prime_multisets(g: &Graph, limit: usize) -> Result<Vec<Vec<Graph>>> {
    check(g, limit)?;
    let mut out: Vec<Vec<Graph>> = Vec::new();
    collect(g, &mut out)?;
    Ok(out)
}

fn collect(g: &Graph, out: &mut Vec<Vec<Graph>>) -> Result<()> {
    let found = splits(g)?;
    if found.is_empty() {
        push_unique(
            out,
            if g.n() == 1 {
                Vec::new()
            } else {
                vec![g.clone()]
            },
        );
        return Ok(());
    }
    for (a, b, _) in found {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        collect(&a, &mut left)?;
        collect(&b, &mut right)?;
        for l in &left {
            for r in &right {
                let mut both = l.clone();
                both.extend(r.iter().cloned());
                push_unique(out, both);
            }
        }
    }
    Ok(())
}

fn push_unique(out: &mut Vec<Vec<Graph>>, item: Vec<Graph>) {
    if !out.iter().any(|o| same_factors(o, &item)) {
        out.push(item);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        let three = enumerate_connected_graphs(3).unwrap();
        assert!(three.iter().any(|g| g.m() == 2) && three.iter().any(|g| g.m() == 3));
        assert!(enumerate_connected_graphs(8).is_err());
    }

    #[test]
    fn oracle_examples() {
        let f = brute_force_pfd(&Graph::complete(4), DEFAULT_LIMIT).unwrap();
        assert!(same_factors(
            &f.factors,
            &[Graph::complete(2), Graph::complete(2)]
        ));
        assert!(f.verify(&Graph::complete(4)));
        let (g, _) = strong_product(&[Graph::path(3), Graph::path(3)]).unwrap();
        let f = brute_force_pfd(&g, DEFAULT_LIMIT).unwrap();
        assert!(same_factors(&f.factors, &[Graph::path(3), Graph::path(3)]));
        assert!(f.verify(&g));
        assert!(is_prime_oracle(&Graph::cycle(5)).unwrap());
        assert!(is_prime_oracle(&Graph::path(3)).unwrap());
        assert!(!is_prime_oracle(&Graph::complete(4)).unwrap());
        assert_eq!(
            brute_force_pfd(&Graph::path(11), DEFAULT_LIMIT),
            Err(Error::TooLarge { n: 11, limit: 10 })
        );
    }

    #[test]
    fn eight_vertices() {
        let f = brute_force_pfd(&Graph::complete(8), DEFAULT_LIMIT).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(
            all_prime_multisets(&Graph::complete(8), 10).unwrap().len(),
            1
        );
    }
}
