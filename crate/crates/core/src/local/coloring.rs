//! Partial product colorings and the operations that stitch them together.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, VertexId};
use crate::products::{classify_edge, EdgeClass, Factorization};
use crate::skeleton::classical_strong_pfd;
use crate::thinness::s_partition;
use crate::union_find::UnionFind;

use super::subproduct::{Flavor, SubproductView};

pub type Color = usize;

/// Edge colors on part of a host graph. Color ids are merged through a
/// union-find; [`PartialColoring::color`] always answers with the canonical
/// representative.
#[derive(Clone, Debug, Default)]
pub struct PartialColoring {
    color_of: HashMap<Edge, Color>,
    merges: UnionFind,
    checked_vertices: HashSet<VertexId>,
    checked_edges: HashSet<Edge>,
}

impl PartialColoring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fresh_color(&mut self) -> Color {
        self.merges.push()
    }

    pub fn find(&self, c: Color) -> Color {
        self.merges.find(c)
    }

    pub fn merge(&mut self, a: Color, b: Color) {
        self.merges.union(a, b);
    }

    /// Canonical color of an edge, if colored.
    pub fn color(&self, u: VertexId, v: VertexId) -> Option<Color> {
        self.color_of.get(&edge(u, v)).map(|&c| self.find(c))
    }

    pub fn is_colored(&self, u: VertexId, v: VertexId) -> bool {
        self.color_of.contains_key(&edge(u, v))
    }

    /// Colors an uncolored edge; an already colored edge keeps its color and
    /// the two ids are merged.
    pub fn paint(&mut self, e: Edge, c: Color) {
        match self.color_of.get(&e) {
            Some(&old) => self.merge(old, c),
            None => {
                self.color_of.insert(e, c);
            }
        }
    }

    pub fn colored_len(&self) -> usize {
        self.color_of.len()
    }

    /// All colored edges with canonical colors, lexicographic.
    pub fn colored_edges(&self) -> Vec<(Edge, Color)> {
        let mut out: Vec<(Edge, Color)> = self
            .color_of
            .iter()
            .map(|(&e, &c)| (e, self.find(c)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Canonical colors present on at least one edge, ascending.
    pub fn canonical_colors(&self) -> Vec<Color> {
        let set: BTreeSet<Color> = self.color_of.values().map(|&c| self.find(c)).collect();
        set.into_iter().collect()
    }

    /// Edges grouped by canonical color.
    pub fn classes(&self) -> BTreeMap<Color, Vec<Edge>> {
        let mut out: BTreeMap<Color, Vec<Edge>> = BTreeMap::new();
        for (e, c) in self.colored_edges() {
            out.entry(c).or_default().push(e);
        }
        out
    }

    pub fn is_checked_vertex(&self, v: VertexId) -> bool {
        self.checked_vertices.contains(&v)
    }

    pub fn is_checked_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.checked_edges.contains(&edge(u, v))
    }

    pub fn mark_vertex(&mut self, v: VertexId) {
        self.checked_vertices.insert(v);
    }

    pub fn mark_edge(&mut self, u: VertexId, v: VertexId) {
        self.checked_edges.insert(edge(u, v));
    }

    pub fn checked_vertex_count(&self) -> usize {
        self.checked_vertices.len()
    }
}

/// The factorization of one view, with the data the covering needs.
#[derive(Clone, Debug)]
pub struct LocalFactoring {
    pub factorization: Factorization,
    pub thin: bool,
    /// Host vertices whose S-class inside the view is a singleton.
    pub singletons: Vec<VertexId>,
    /// Host edges satisfying the S1-condition inside the view.
    pub s1_edges: Vec<Edge>,
    /// S1 host edges that are Cartesian in the view, with their local factor.
    pub cartesian: Vec<(Edge, usize)>,
}

impl LocalFactoring {
    /// Number of nontrivial prime factors of the view.
    pub fn prime_count(&self) -> usize {
        self.factorization.len()
    }
}

pub fn factor_view(view: &SubproductView) -> Result<LocalFactoring> {
    let sub = &view.sub;
    let factorization = classical_strong_pfd(sub)?;
    let all: Vec<VertexId> = sub.vertices().collect();
    let part = s_partition(sub, &all)?;
    let single: Vec<bool> = all.iter().map(|&v| part.is_singleton(v)).collect();
    let mut s1_edges = Vec::new();
    let mut cartesian = Vec::new();
    for (a, b) in sub.edges() {
        if !(single[a] || single[b]) {
            continue;
        }
        let host = view.host_edge((a, b));
        s1_edges.push(host);
        if let EdgeClass::Cartesian(k) = classify_edge(&factorization.coords, a, b)? {
            cartesian.push((host, k));
        }
    }
    Ok(LocalFactoring {
        thin: part.len() == sub.n(),
        singletons: all
            .iter()
            .filter(|&&v| single[v])
            .map(|&v| view.embed.forward(v))
            .collect(),
        s1_edges,
        cartesian,
        factorization,
    })
}

/// Fresh colors handed out to one factored view.
#[derive(Clone, Debug)]
pub struct ViewColoring {
    pub flavor: Flavor,
    /// Host edge and its fresh color.
    pub colors: Vec<(Edge, Color)>,
    /// Fresh color of each local factor; `None` if no edge of it qualified.
    pub factor_colors: Vec<Option<Color>>,
}

impl ViewColoring {
    pub fn fresh_colors(&self) -> Vec<Color> {
        self.factor_colors.iter().flatten().copied().collect()
    }
}

/// Allocates one fresh color per local prime factor, assigns it to the
/// factor's S1 Cartesian edges, and marks singleton vertices and S1 edges as
/// checked. The edges are not painted yet; see [`combine_colorings`].
pub fn factor_subgraph(
    view: &SubproductView,
    factoring: &LocalFactoring,
    coloring: &mut PartialColoring,
) -> ViewColoring {
    let mut factor_colors = vec![None; factoring.prime_count()];
    let mut colors = Vec::with_capacity(factoring.cartesian.len());
    for &(e, k) in &factoring.cartesian {
        let c = *factor_colors[k].get_or_insert_with(|| coloring.fresh_color());
        colors.push((e, c));
    }
    for &v in &factoring.singletons {
        coloring.mark_vertex(v);
    }
    for &(u, v) in &factoring.s1_edges {
        coloring.mark_edge(u, v);
    }
    ViewColoring {
        flavor: view.flavor,
        colors,
        factor_colors,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuationReport {
    pub ok: bool,
    /// Fresh colors of the new view with no edge in the colored domain.
    pub failing_colors: Vec<Color>,
}

/// Whether every color of the new view already occurs on an edge of the
/// current colored domain. Call before [`combine_colorings`].
pub fn check_continuation(coloring: &PartialColoring, new: &ViewColoring) -> ContinuationReport {
    let mut anchored: HashSet<Color> = HashSet::new();
    for &((u, v), c) in &new.colors {
        if coloring.is_colored(u, v) {
            anchored.insert(c);
        }
    }
    let failing_colors: Vec<Color> = new
        .fresh_colors()
        .into_iter()
        .filter(|c| !anchored.contains(c))
        .collect();
    ContinuationReport {
        ok: failing_colors.is_empty(),
        failing_colors,
    }
}

/// Old colors stay on edges colored in both; their ids are merged with the
/// new ones. Returns the number of edges that were already colored.
pub fn combine_colorings(coloring: &mut PartialColoring, new: &ViewColoring) -> usize {
    let mut shared = 0;
    for &(e, c) in &new.colors {
        if coloring.color_of.contains_key(&e) {
            shared += 1;
        }
        coloring.paint(e, c);
    }
    shared
}

/// A factored closed neighborhood, kept so that its coordinates can be
/// recomputed under later merges.
#[derive(Clone, Debug)]
pub struct NeighborhoodRecord {
    pub view: SubproductView,
    pub factoring: LocalFactoring,
    pub colors: ViewColoring,
}

impl NeighborhoodRecord {
    /// Canonical color of each local factor under the current merges.
    fn canonical(&self, coloring: &PartialColoring) -> Vec<Option<Color>> {
        self.colors
            .factor_colors
            .iter()
            .map(|c| c.map(|c| coloring.find(c)))
            .collect()
    }

    /// Canonical colors in which `a` and `b` differ, reading coordinates off
    /// the local factorization grouped by the combined coloring.
    pub fn differing_colors(
        &self,
        coloring: &PartialColoring,
        a: VertexId,
        b: VertexId,
    ) -> Result<BTreeSet<Color>> {
        let sa = self.view.embed.inverse(a).ok_or(Error::InvalidVertex(a))?;
        let sb = self.view.embed.inverse(b).ok_or(Error::InvalidVertex(b))?;
        let coords = &self.factoring.factorization.coords;
        let (ca, cb) = (coords.of(sa), coords.of(sb));
        Ok(self
            .canonical(coloring)
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| ca[i] != cb[i])
            .filter_map(|(_, c)| c)
            .collect())
    }
}

/// Repairs a failed continuation from the colored region into `⟨N[child]⟩`
/// through the parent's neighborhood.
///
/// For each failing color `c`, the smallest edge `(parent, w)` of color `c`
/// in the new view is Cartesian in the host, while in `⟨N[parent]⟩` it joins
/// vertices differing in the coordinates `D`. The square spanned by those
/// coordinates with `(parent, w)` as a diagonal is a diagonalized hypercube,
/// which cannot be split across factors, so `D` and `c` are merged into one
/// color. Returns the merged groups as canonical colors before merging.
pub fn hypercube_color_repair(
    coloring: &mut PartialColoring,
    parent: &NeighborhoodRecord,
    parent_vertex: VertexId,
    new: &ViewColoring,
    failing: &[Color],
) -> Result<Vec<Vec<Color>>> {
    let mut groups = Vec::with_capacity(failing.len());
    for &c in failing {
        let representative = new
            .colors
            .iter()
            .filter(|&&((u, v), col)| col == c && (u == parent_vertex || v == parent_vertex))
            .map(|&((u, v), _)| if u == parent_vertex { v } else { u })
            .min()
            .ok_or_else(|| {
                Error::Internal(format!(
                    "no edge of color {c} at {parent_vertex}; a neighborhood is not thin"
                ))
            })?;
        let differing = parent.differing_colors(coloring, parent_vertex, representative)?;
        let mut group: Vec<Color> = differing.into_iter().collect();
        group.push(coloring.find(c));
        for &k in &group {
            coloring.merge(group[0], k);
        }
        groups.push(group);
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::local::subproduct::make_subproduct;
    use crate::products::strong_product;

    #[test]
    fn grid_neighborhood() {
        let (g, c) = strong_product(&[Graph::path(3), Graph::path(3)]).unwrap();
        let view = make_subproduct(&g, Flavor::OneNeighborhood(c.index(&[1, 1]))).unwrap();
        let lf = factor_view(&view).unwrap();
        let mut col = PartialColoring::new();
        let vc = factor_subgraph(&view, &lf, &mut col);
        assert_eq!(vc.fresh_colors().len(), 2);
        assert_eq!(vc.colors.len(), 12);
        assert_eq!(col.checked_vertex_count(), 9);
        combine_colorings(&mut col, &vc);
        assert_eq!(col.canonical_colors().len(), 2);
    }

    #[test]
    fn triangle_neighborhood() {
        let g = Graph::complete(3);
        let view = make_subproduct(&g, Flavor::OneNeighborhood(0)).unwrap();
        let lf = factor_view(&view).unwrap();
        let mut col = PartialColoring::new();
        let vc = factor_subgraph(&view, &lf, &mut col);
        assert!(vc.colors.is_empty());
        assert_eq!(col.checked_vertex_count(), 0);
    }

    #[test]
    fn prime_view_gets_one_color() {
        let g = Graph::path(4);
        let view = make_subproduct(&g, Flavor::EdgeNeighborhood(1, 2)).unwrap();
        let lf = factor_view(&view).unwrap();
        let mut col = PartialColoring::new();
        let vc = factor_subgraph(&view, &lf, &mut col);
        assert_eq!(vc.fresh_colors().len(), 1);
        assert_eq!(vc.colors.len(), 3);
    }

    #[test]
    fn continuation_inside_old_domain() {
        let (g, c) = strong_product(&[Graph::path(3), Graph::path(3)]).unwrap();
        let view = make_subproduct(&g, Flavor::OneNeighborhood(c.index(&[1, 1]))).unwrap();
        let lf = factor_view(&view).unwrap();
        let mut col = PartialColoring::new();
        let first = factor_subgraph(&view, &lf, &mut col);
        combine_colorings(&mut col, &first);
        let again = factor_subgraph(&view, &lf, &mut col);
        assert!(check_continuation(&col, &again).ok);
        assert_eq!(combine_colorings(&mut col, &again), 12);
        assert_eq!(col.canonical_colors().len(), 2);
        let before = col.colored_edges();
        let empty = ViewColoring {
            flavor: view.flavor,
            colors: Vec::new(),
            factor_colors: Vec::new(),
        };
        assert!(check_continuation(&col, &empty).ok);
        combine_colorings(&mut col, &empty);
        assert_eq!(col.colored_edges(), before);
    }
}
