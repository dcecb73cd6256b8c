use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{connected_components, edge, induced_subgraph, Edge, Graph, VertexId};
use crate::products::{product_edge_count, Coordinates, Factorization, ProductKind};
use crate::skeleton::next_combination;

use super::coloring::{Color, PartialColoring};

/// Turns a product coloring of `g` into prime factors.
///
/// Color sets are tried by increasing size. For a set `S`, the component `A`
/// of vertex 0 under the colors in `S` and the component `A'` under the
/// remaining colors are candidate factors; every vertex projects onto `A`
/// through its component under the remaining colors and onto `A'` likewise.
/// `S` is accepted when `g` is the strong product of `⟨A⟩` and `⟨A'⟩` under
/// that projection pair. Accepted sets are removed from further search.
pub fn check_factors(g: &Graph, coloring: &PartialColoring) -> Result<Factorization> {
    let colors: Vec<Color> = coloring.canonical_colors();
    if colors.len() <= 1 || g.n() <= 1 {
        return Ok(Factorization::prime(g, ProductKind::Strong));
    }
    let color_of: HashMap<Edge, Color> = coloring.colored_edges().into_iter().collect();
    let index: HashMap<Color, usize> = colors.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let of = |u: VertexId, v: VertexId| color_of.get(&edge(u, v)).map(|c| index[c]);

    let all: Vec<usize> = (0..colors.len()).collect();
    let mut open = all.clone();
    let mut accepted: Vec<Split> = Vec::new();
    let mut size = 1;
    while size <= open.len() {
        let mut pick: Vec<usize> = (0..size).collect();
        let mut found = None;
        loop {
            let s: Vec<usize> = pick.iter().map(|&i| open[i]).collect();
            if let Some(split) = try_split(g, &s, &of) {
                found = Some((s, split));
                break;
            }
            if !next_combination(&mut pick, open.len()) {
                break;
            }
        }
        match found {
            Some((s, split)) => {
                open.retain(|i| !s.contains(i));
                accepted.push(split);
            }
            None => size += 1,
        }
    }

    let factors: Vec<Graph> = accepted
        .iter()
        .map(|s| Ok(induced_subgraph(g, &s.layer)?.0.without_labels()))
        .collect::<Result<_>>()?;
    let coords = g
        .vertices()
        .map(|v| accepted.iter().map(|s| s.coordinate[v]).collect())
        .collect();
    let dims = factors.iter().map(Graph::n).collect();
    let f = Factorization {
        factors,
        coords: Coordinates::new(dims, coords)?,
        kind: ProductKind::Strong,
    };
    if f.len() > 1 && !f.verify(g) {
        return Err(Error::Internal(
            "accepted color groups do not rebuild the graph".into(),
        ));
    }
    if f.len() <= 1 {
        return Ok(Factorization::prime(g, ProductKind::Strong));
    }
    Ok(f)
}

struct Split {
    /// Sorted vertices of the layer `A` through vertex 0.
    layer: Vec<VertexId>,
    /// Position within `layer` of each vertex's projection.
    coordinate: Vec<usize>,
}

fn try_split<F>(g: &Graph, s: &[usize], of: &F) -> Option<Split>
where
    F: Fn(VertexId, VertexId) -> Option<usize>,
{
    let inside = |u, v| of(u, v).is_some_and(|c| s.contains(&c));
    let outside = |u, v| of(u, v).is_some_and(|c| !s.contains(&c));
    let (a, pa) = projection(g, inside, outside)?;
    let (b, pb) = projection(g, outside, inside)?;
    if a.len() * b.len() != g.n() {
        return None;
    }
    let mut hit = vec![false; g.n()];
    for v in g.vertices() {
        if std::mem::replace(&mut hit[pa[v] * b.len() + pb[v]], true) {
            return None;
        }
    }
    let (ha, _) = induced_subgraph(g, &a).ok()?;
    let (hb, _) = induced_subgraph(g, &b).ok()?;
    if product_edge_count(&[ha.clone(), hb.clone()], ProductKind::Strong) != g.m() {
        return None;
    }
    let ok = g.edges().all(|(u, v)| {
        (pa[u] == pa[v] || ha.has_edge(pa[u], pa[v]))
            && (pb[u] == pb[v] || hb.has_edge(pb[u], pb[v]))
    });
    ok.then_some(Split {
        layer: a,
        coordinate: pa,
    })
}

/// The layer through vertex 0 under `along`, and for every vertex the
/// position of the layer vertex sharing its component under `across`.
fn projection<F1, F2>(g: &Graph, along: F1, across: F2) -> Option<(Vec<VertexId>, Vec<usize>)>
where
    F1: Fn(VertexId, VertexId) -> bool,
    F2: Fn(VertexId, VertexId) -> bool,
{
    let layer = component_of(g, 0, along);
    let comps = connected_components(g, across);
    let mut comp_of = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut slot = vec![usize::MAX; comps.len()];
    for (pos, &v) in layer.iter().enumerate() {
        if slot[comp_of[v]] != usize::MAX {
            return None;
        }
        slot[comp_of[v]] = pos;
    }
    let coords: Vec<usize> = g.vertices().map(|v| slot[comp_of[v]]).collect();
    if coords.contains(&usize::MAX) {
        return None;
    }
    Some((layer, coords))
}

fn component_of<F>(g: &Graph, root: VertexId, keep: F) -> Vec<VertexId>
where
    F: Fn(VertexId, VertexId) -> bool,
{
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut stack = vec![root];
    let mut out = vec![root];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] && keep(u, w) {
                seen[w] = true;
                out.push(w);
                stack.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::{same_factors, strong_product};

    fn colored_grid() -> (Graph, PartialColoring) {
        let (g, c) = strong_product(&[Graph::path(3), Graph::path(3)]).unwrap();
        let mut col = PartialColoring::new();
        let (c0, c1) = (col.fresh_color(), col.fresh_color());
        for (u, v) in g.edges() {
            let (a, b) = (c.of(u), c.of(v));
            if a[0] == b[0] {
                col.paint((u, v), c1);
            } else if a[1] == b[1] {
                col.paint((u, v), c0);
            }
        }
        (g, col)
    }

    #[test]
    fn grid_splits() {
        let (g, col) = colored_grid();
        let f = check_factors(&g, &col).unwrap();
        assert!(same_factors(&f.factors, &[Graph::path(3), Graph::path(3)]));
        assert!(f.verify(&g));
    }

    #[test]
    fn prime_with_two_colors_merges() {
        // C4 with its edges colored alternately looks like K2 □ K2
        let g = Graph::cycle(4);
        let mut col = PartialColoring::new();
        let (a, b) = (col.fresh_color(), col.fresh_color());
        col.paint((0, 1), a);
        col.paint((2, 3), a);
        col.paint((1, 2), b);
        col.paint((0, 3), b);
        let f = check_factors(&g, &col).unwrap();
        assert!(f.is_prime());
        assert!(f.verify(&g));
    }

    #[test]
    fn single_color() {
        let g = Graph::path(4);
        let mut col = PartialColoring::new();
        let a = col.fresh_color();
        for e in g.edges() {
            col.paint(e, a);
        }
        let f = check_factors(&g, &col).unwrap();
        assert_eq!(f.len(), 1);
    }
}
