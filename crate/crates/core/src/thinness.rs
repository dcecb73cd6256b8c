//! The relation S (equal closed neighborhoods), thinness, the quotient G/S,
//! the S1-condition and the backbone.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{sorted, Graph, VertexId};

/// S-classes of `⟨domain⟩` relative to the ambient graph: `u ~ v` iff
/// `N[u] ∩ domain = N[v] ∩ domain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPartition {
    domain: Vec<VertexId>,
    classes: Vec<Vec<VertexId>>,
    class_of: HashMap<VertexId, usize>,
}

impl SPartition {
    pub fn domain(&self) -> &[VertexId] {
        &self.domain
    }

    /// Classes ordered by their smallest member; each class is sorted.
    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    pub fn class_of(&self, v: VertexId) -> Option<usize> {
        self.class_of.get(&v).copied()
    }

    pub fn class_size(&self, v: VertexId) -> Option<usize> {
        self.class_of(v).map(|c| self.classes[c].len())
    }

    pub fn is_singleton(&self, v: VertexId) -> bool {
        self.class_size(v) == Some(1)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn s_partition(g: &Graph, domain: &[VertexId]) -> Result<SPartition> {
    if domain.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut dom = domain.to_vec();
    dom.sort_unstable();
    dom.dedup();
    for &v in &dom {
        g.check_vertex(v)?;
    }
    let inside: HashSet<VertexId> = dom.iter().copied().collect();
    let mut by_key: HashMap<Vec<VertexId>, usize> = HashMap::new();
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    let mut class_of = HashMap::with_capacity(dom.len());
    // ascending domain order makes class ids follow smallest members
    for &v in &dom {
        let key: Vec<VertexId> = g
            .closed_nbhd(v)
            .into_iter()
            .filter(|w| inside.contains(w))
            .collect();
        let id = *by_key.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
        class_of.insert(v, id);
    }
    Ok(SPartition {
        domain: dom,
        classes,
        class_of,
    })
}

/// True iff no two vertices share a closed neighborhood. S-related vertices
/// are always adjacent, so checking edges suffices.
pub fn is_thin(g: &Graph) -> bool {
    g.edges()
        .all(|(u, v)| g.degree(u) != g.degree(v) || g.closed_nbhd(u) != g.closed_nbhd(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Graph,
    pub class_sizes: Vec<usize>,
    /// Host vertex → class index.
    pub class_map: Vec<usize>,
    pub classes: Vec<Vec<VertexId>>,
}

pub fn quotient(g: &Graph) -> Quotient {
    if g.n() == 0 {
        return Quotient {
            graph: Graph::new(0),
            class_sizes: Vec::new(),
            class_map: Vec::new(),
            classes: Vec::new(),
        };
    }
    let all: Vec<VertexId> = g.vertices().collect();
    let part = s_partition(g, &all).expect("nonempty domain");
    let class_map: Vec<usize> = g.vertices().map(|v| part.class_of[&v]).collect();
    let mut q = Graph::new(part.len());
    for (u, v) in g.edges() {
        let (a, b) = (class_map[u], class_map[v]);
        if a != b {
            q.add_edge(a, b);
        }
    }
    Quotient {
        graph: q,
        class_sizes: part.classes.iter().map(Vec::len).collect(),
        class_map,
        classes: part.classes,
    }
}

/// `|S_H(x)| = 1` or `|S_H(y)| = 1` for `H = ⟨domain⟩`.
pub fn satisfies_s1(g: &Graph, domain: &[VertexId], x: VertexId, y: VertexId) -> Result<bool> {
    let part = s_partition(g, domain)?;
    for v in [x, y] {
        if part.class_of(v).is_none() {
            return Err(Error::InvalidVertex(v));
        }
    }
    Ok(part.is_singleton(x) || part.is_singleton(y))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Backbone {
    pub vertices: Vec<VertexId>,
    /// Connectivity and domination are only guaranteed for thin inputs.
    pub guaranteed: bool,
}

/// Whether `|S_v(v)| = 1`: no neighbor `w` has `N[v] ⊆ N[w]`.
pub fn is_backbone_vertex(g: &Graph, v: VertexId) -> bool {
    let nv = g.closed_nbhd(v);
    g.neighbors(v)
        .iter()
        .all(|&w| g.degree(w) < g.degree(v) || !sorted::is_subset(&nv, &g.closed_nbhd(w)))
}

/// `B(G) = { v : |S_v(v)| = 1 }`, sorted.
pub fn backbone(g: &Graph) -> Backbone {
    Backbone {
        vertices: g.vertices().filter(|&v| is_backbone_vertex(g, v)).collect(),
        guaranteed: is_thin(g),
    }
}

/// Vertices with strictly maximal closed neighborhoods: no `w ≠ v` with
/// `N[v] ⊊ N[w]`. Computed independently of [`backbone`].
pub fn strictly_maximal(g: &Graph) -> Vec<VertexId> {
    let nbhds: Vec<Vec<VertexId>> = g.vertices().map(|v| g.closed_nbhd(v)).collect();
    g.vertices()
        .filter(|&v| {
            g.vertices()
                .all(|w| w == v || !sorted::is_proper_subset(&nbhds[v], &nbhds[w]))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackboneOrder {
    pub order: Vec<VertexId>,
    /// `parent[i]` is the BFS parent of `order[i]`; `None` for component roots.
    pub parent: Vec<Option<VertexId>>,
    pub components: usize,
}

/// BFS over `⟨B(G)⟩` from the smallest backbone vertex, one traversal per
/// component of `⟨B(G)⟩`, neighbors in ascending order.
pub fn backbone_bfs(g: &Graph) -> Result<BackboneOrder> {
    order_backbone(g, &backbone(g).vertices, None)
}

/// Like [`backbone_bfs`] but with neighbor ties broken by a seeded shuffle.
pub fn backbone_bfs_shuffled(g: &Graph, seed: u64) -> Result<BackboneOrder> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order_backbone(g, &backbone(g).vertices, Some(&mut rng))
}

pub(crate) fn order_backbone(
    g: &Graph,
    members: &[VertexId],
    mut rng: Option<&mut ChaCha8Rng>,
) -> Result<BackboneOrder> {
    if members.is_empty() {
        return Err(Error::EmptyBackbone);
    }
    let inside: HashSet<VertexId> = members.iter().copied().collect();
    let mut roots = members.to_vec();
    roots.sort_unstable();
    if let Some(r) = rng.as_deref_mut() {
        roots.shuffle(r);
    }
    let mut seen: HashSet<VertexId> = HashSet::new();
    let mut order = Vec::with_capacity(members.len());
    let mut parent = Vec::with_capacity(members.len());
    let mut components = 0;
    for root in roots {
        if !seen.insert(root) {
            continue;
        }
        components += 1;
        let mut head = order.len();
        order.push(root);
        parent.push(None);
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut next: Vec<VertexId> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|w| inside.contains(w) && !seen.contains(w))
                .collect();
            if let Some(r) = rng.as_deref_mut() {
                next.shuffle(r);
            }
            for w in next {
                seen.insert(w);
                order.push(w);
                parent.push(Some(u));
            }
        }
    }
    Ok(BackboneOrder {
        order,
        parent,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::strong_product;

    fn grid() -> Graph {
        strong_product(&[Graph::path(3), Graph::path(3)]).unwrap().0
    }

    #[test]
    fn s_partition_examples() {
        let k4 = Graph::complete(4);
        let all: Vec<_> = k4.vertices().collect();
        assert_eq!(
            s_partition(&k4, &all).unwrap().classes(),
            &[vec![0, 1, 2, 3]]
        );
        let p3 = Graph::path(3);
        assert_eq!(s_partition(&p3, &[0, 1, 2]).unwrap().len(), 3);
        assert_eq!(s_partition(&p3, &[0, 1]).unwrap().classes(), &[vec![0, 1]]);
        assert_eq!(s_partition(&p3, &[]), Err(Error::EmptySet));
    }

    #[test]
    fn thinness() {
        assert!(is_thin(&Graph::path(3)));
        assert!(!is_thin(&Graph::complete(4)));
        assert!(is_thin(&grid()));
    }

    #[test]
    fn quotients() {
        let q = quotient(&Graph::complete(4));
        assert_eq!(q.graph.n(), 1);
        assert_eq!(q.class_sizes, vec![4]);
        let q = quotient(&Graph::path(3));
        assert!(q.graph.same_structure(&Graph::path(3)));
        assert_eq!(q.class_sizes, vec![1, 1, 1]);
        let g = strong_product(&[Graph::complete(2), Graph::path(3)])
            .unwrap()
            .0;
        let q = quotient(&g);
        assert!(crate::iso::isomorphic(&q.graph, &Graph::path(3)).is_some());
        assert_eq!(q.class_sizes, vec![2, 2, 2]);
    }

    #[test]
    fn s1_condition() {
        let p3 = Graph::path(3);
        assert!(satisfies_s1(&p3, &[0, 1, 2], 0, 1).unwrap());
        assert!(!satisfies_s1(&Graph::complete(4), &[0, 1, 2, 3], 1, 3).unwrap());
        assert!(!satisfies_s1(&p3, &[0, 1], 0, 1).unwrap());
        assert_eq!(
            satisfies_s1(&p3, &[0, 1], 1, 2),
            Err(Error::InvalidVertex(2))
        );
    }

    #[test]
    fn backbones() {
        assert_eq!(backbone(&Graph::path(3)).vertices, vec![1]);
        assert_eq!(backbone(&grid()).vertices, vec![4]);
        assert_eq!(backbone(&Graph::path(5)).vertices, vec![1, 2, 3]);
        assert!(backbone(&Graph::complete(4)).vertices.is_empty());
        assert!(!backbone(&Graph::complete(4)).guaranteed);
    }

    #[test]
    fn backbone_orders() {
        assert_eq!(backbone_bfs(&Graph::path(3)).unwrap().order, vec![1]);
        let o = backbone_bfs(&Graph::path(5)).unwrap();
        assert_eq!(o.order, vec![1, 2, 3]);
        assert_eq!(o.parent, vec![None, Some(1), Some(2)]);
        assert_eq!(backbone_bfs(&Graph::complete(4)), Err(Error::EmptyBackbone));
    }
}
