//! Isomorphism testing for desk-scale graphs.
//!
//! Both graphs are colored jointly by iterated neighborhood refinement, so a
//! color means the same thing on either side. Whenever refinement stalls
//! with a non-singleton cell, one vertex of the smallest cell is
//! individualized on the left and matched against every candidate on the
//! right.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};

/// Returns an adjacency-preserving bijection `g1 → g2` if one exists.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Option<VertexMap> {
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return None;
    }
    let mut d1: Vec<usize> = g1.vertices().map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = g2.vertices().map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    if g1.n() == 0 {
        return Some(VertexMap::default());
    }
    let c1 = vec![0u32; g1.n()];
    let c2 = vec![0u32; g2.n()];
    search(g1, g2, c1, c2)
}

fn search(g1: &Graph, g2: &Graph, mut c1: Vec<u32>, mut c2: Vec<u32>) -> Option<VertexMap> {
    let classes = refine(g1, g2, &mut c1, &mut c2)?;
    if classes == g1.n() {
        let mut forward = vec![0; g1.n()];
        let mut by_color = vec![0; classes];
        for v in g2.vertices() {
            by_color[c2[v] as usize] = v;
        }
        for v in g1.vertices() {
            forward[v] = by_color[c1[v] as usize];
        }
        let map = VertexMap::new(forward).ok()?;
        return isomorphic_under_map(g1, g2, &map)
            .unwrap_or(false)
            .then_some(map);
    }
    // smallest non-singleton cell
    let mut sizes = vec![0usize; classes];
    for &c in &c1 {
        sizes[c as usize] += 1;
    }
    let target = (0..classes)
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| (sizes[c], c))
        .expect("some cell is not a singleton") as u32;
    let v = c1
        .iter()
        .position(|&c| c == target)
        .expect("cell is nonempty");
    let fresh = classes as u32;
    for u in g2.vertices().filter(|&u| c2[u] == target) {
        let mut n1 = c1.clone();
        let mut n2 = c2.clone();
        n1[v] = fresh;
        n2[u] = fresh;
        if let Some(map) = search(g1, g2, n1, n2) {
            return Some(map);
        }
    }
    None
}

/// Refines both colorings to a joint stable partition. Returns the number of
/// colors, or `None` when the color histograms diverge.
fn refine(g1: &Graph, g2: &Graph, c1: &mut [u32], c2: &mut [u32]) -> Option<usize> {
    let mut count = distinct(c1, c2)?;
    loop {
        let s1 = signatures(g1, c1);
        let s2 = signatures(g2, c2);
        let mut ids: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in s1.iter().chain(s2.iter()) {
            ids.insert(s, 0);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i as u32;
        }
        for (v, s) in s1.iter().enumerate() {
            c1[v] = ids[s];
        }
        for (v, s) in s2.iter().enumerate() {
            c2[v] = ids[s];
        }
        let next = distinct(c1, c2)?;
        if next == count {
            return Some(count);
        }
        count = next;
    }
}

fn signatures(g: &Graph, colors: &[u32]) -> Vec<(u32, Vec<u32>)> {
    g.vertices()
        .map(|v| {
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        })
        .collect()
}

fn distinct(c1: &[u32], c2: &[u32]) -> Option<usize> {
    let mut h1: BTreeMap<u32, usize> = BTreeMap::new();
    let mut h2: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in c1 {
        *h1.entry(c).or_default() += 1;
    }
    for &c in c2 {
        *h2.entry(c).or_default() += 1;
    }
    (h1 == h2).then_some(h1.len())
}

/// True iff the fixed bijection `map: V(g1) → V(g2)` preserves adjacency and
/// non-adjacency. Linear in the number of edges.
pub fn isomorphic_under_map(g1: &Graph, g2: &Graph, map: &VertexMap) -> Result<bool> {
    if map.len() != g1.n() || g1.n() != g2.n() || map.images().iter().any(|&v| v >= g2.n()) {
        return Err(Error::NotBijective);
    }
    if g1.m() != g2.m() {
        return Ok(false);
    }
    Ok(g1
        .edges()
        .all(|(u, v)| g2.has_edge(map.forward(u), map.forward(v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_path() {
        let p = Graph::path(3);
        let q = Graph::from_edges(3, [(2, 0), (0, 1)]);
        let w = isomorphic(&p, &q).expect("paths are isomorphic");
        assert!(isomorphic_under_map(&p, &q, &w).unwrap());
        assert!(isomorphic(&p, &Graph::complete(3)).is_none());
    }

    #[test]
    fn cycle_vs_k4_minus_matching() {
        let mut k = Graph::complete(4);
        k.remove_edge(0, 1);
        k.remove_edge(2, 3);
        assert!(isomorphic(&Graph::cycle(4), &k).is_some());
    }

    #[test]
    fn fixed_maps() {
        let p = Graph::path(3);
        assert!(isomorphic_under_map(&p, &p, &VertexMap::identity(3)).unwrap());
        let swap = VertexMap::new(vec![1, 0, 2]).unwrap();
        assert!(!isomorphic_under_map(&p, &p, &swap).unwrap());
        let k4 = Graph::complete(4);
        let perm = VertexMap::new(vec![3, 1, 0, 2]).unwrap();
        assert!(isomorphic_under_map(&k4, &k4, &perm).unwrap());
        let short = VertexMap::new(vec![0, 1]).unwrap();
        assert_eq!(
            isomorphic_under_map(&p, &p, &short),
            Err(Error::NotBijective)
        );
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // C6 vs two triangles: same degree sequence, not isomorphic
        let c6 = Graph::cycle(6);
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(isomorphic(&c6, &tt).is_none());
        // Petersen graph in two labelings
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let pet = Graph::from_edges(10, outer.chain(spokes).chain(inner));
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 4, 6];
        let pet2 = Graph::from_edges(10, pet.edges().map(|(u, v)| (perm[u], perm[v])));
        let w = isomorphic(&pet, &pet2).expect("relabeled Petersen");
        assert!(isomorphic_under_map(&pet, &pet2, &w).unwrap());
    }
}
