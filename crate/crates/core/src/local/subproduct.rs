use std::fmt;

use crate::error::Result;
use crate::graph::{induced_subgraph, sorted, Edge, Graph, VertexId, VertexMap};

/// Which neighborhood a view covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `N[v]`
    OneNeighborhood(VertexId),
    /// `N[v] ∪ N[w]` for an edge `(v, w)`
    EdgeNeighborhood(VertexId, VertexId),
    /// `∪ N[x]` over `x ∈ N[v] ∩ N[w]` for an edge `(v, w)`
    NStar(VertexId, VertexId),
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::OneNeighborhood(v) => write!(f, "N[{v}]"),
            Flavor::EdgeNeighborhood(v, w) => write!(f, "N[{v}] ∪ N[{w}]"),
            Flavor::NStar(v, w) => write!(f, "N*({v}, {w})"),
        }
    }
}

/// An induced subgraph of the host together with its embedding.
#[derive(Clone, Debug)]
pub struct SubproductView {
    pub flavor: Flavor,
    pub sub: Graph,
    pub embed: VertexMap,
}

impl SubproductView {
    /// Host ids of the covered vertices, ascending.
    pub fn vertices(&self) -> &[VertexId] {
        self.embed.images()
    }

    pub fn host_edge(&self, (a, b): Edge) -> Edge {
        crate::graph::edge(self.embed.forward(a), self.embed.forward(b))
    }

    /// Host edges inside the view.
    pub fn host_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.sub.edges().map(|e| self.host_edge(e))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.embed.inverse(v).is_some()
    }
}

pub fn make_subproduct(g: &Graph, flavor: Flavor) -> Result<SubproductView> {
    let verts = match flavor {
        Flavor::OneNeighborhood(v) => {
            g.check_vertex(v)?;
            g.closed_nbhd(v)
        }
        Flavor::EdgeNeighborhood(v, w) => {
            g.check_edge(v, w)?;
            sorted::union(&g.closed_nbhd(v), &g.closed_nbhd(w))
        }
        Flavor::NStar(v, w) => {
            g.check_edge(v, w)?;
            let mut all = Vec::new();
            for x in sorted::intersect(&g.closed_nbhd(v), &g.closed_nbhd(w)) {
                all.extend(g.closed_nbhd(x));
            }
            all.sort_unstable();
            all.dedup();
            all
        }
    };
    let (sub, embed) = induced_subgraph(g, &verts)?;
    Ok(SubproductView { flavor, sub, embed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::products::strong_product;

    #[test]
    fn views() {
        let (g, c) = strong_product(&[Graph::path(3), Graph::path(3)]).unwrap();
        let center = c.index(&[1, 1]);
        let v = make_subproduct(&g, Flavor::OneNeighborhood(center)).unwrap();
        assert!(v.sub.same_structure(&g));
        let p3 = Graph::path(3);
        let v = make_subproduct(&p3, Flavor::NStar(0, 1)).unwrap();
        assert_eq!(v.vertices(), &[0, 1, 2]);
        let p5 = Graph::path(5);
        let v = make_subproduct(&p5, Flavor::EdgeNeighborhood(1, 2)).unwrap();
        assert_eq!(v.vertices(), &[0, 1, 2, 3]);
        assert!(v.sub.same_structure(&Graph::path(4)));
        assert_eq!(
            make_subproduct(&p5, Flavor::NStar(0, 2)).unwrap_err(),
            Error::NotAnEdge(0, 2)
        );
    }
}
