//! Simple undirected graphs with dense vertex ids.
//!
//! Adjacency lists are kept sorted so that neighborhood intersections and
//! containment tests are linear merges. Edges can be added and removed and
//! vertices appended; existing vertex ids never change.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (VertexId, VertexId);

#[inline]
pub fn edge(u: VertexId, v: VertexId) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    ///
    /// Panics on self-loops or endpoints `>= n`; use the edge-list parser for
    /// untrusted input.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts an edge, returning `false` if it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n() && v < self.n(), "edge ({u}, {v}) out of range");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        if let Some(labels) = &mut self.labels {
            let id = labels.len();
            labels.push(id.to_string());
        }
        self.adj.len() - 1
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.n()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub(crate) fn check_edge(&self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(u, v))
        }
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `N[v]` as a sorted vector.
    pub fn closed_nbhd(&self, v: VertexId) -> Vec<VertexId> {
        let nb = &self.adj[v];
        let mut out = Vec::with_capacity(nb.len() + 1);
        let pos = nb.partition_point(|&w| w < v);
        out.extend_from_slice(&nb[..pos]);
        out.push(v);
        out.extend_from_slice(&nb[pos..]);
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The external label of `v`, falling back to its id.
    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.set_labels(labels);
        self
    }

    /// Labels every vertex with its decimal id unless labels already exist.
    pub fn with_default_labels(mut self) -> Self {
        if self.labels.is_none() {
            self.labels = Some((0..self.n()).map(|v| v.to_string()).collect());
        }
        self
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Structural equality, ignoring labels.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|nb| nb.len() + 1 == n)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| edge(i, (i + 1) % n)))
    }
}

/// An embedding of one vertex set into another.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMap {
    forward: Vec<VertexId>,
    inverse: HashMap<VertexId, VertexId>,
}

impl VertexMap {
    /// Builds a map from `forward[i] = image of i`. Fails if the images repeat.
    pub fn new(forward: Vec<VertexId>) -> Result<Self> {
        let mut inverse = HashMap::with_capacity(forward.len());
        for (i, &v) in forward.iter().enumerate() {
            if inverse.insert(v, i).is_some() {
                return Err(Error::NotBijective);
            }
        }
        Ok(VertexMap { forward, inverse })
    }

    pub fn identity(n: usize) -> Self {
        VertexMap::new((0..n).collect()).expect("identity is injective")
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self, v: VertexId) -> VertexId {
        self.forward[v]
    }

    pub fn inverse(&self, v: VertexId) -> Option<VertexId> {
        self.inverse.get(&v).copied()
    }

    pub fn images(&self) -> &[VertexId] {
        &self.forward
    }
}

/// `N_k[v]`, sorted.
pub fn closed_neighborhood(g: &Graph, v: VertexId, k: usize) -> Result<Vec<VertexId>> {
    g.check_vertex(v)?;
    if k == 0 {
        return Err(Error::Spec("neighborhood radius must be positive".into()));
    }
    let mut dist: HashMap<VertexId, usize> = HashMap::new();
    dist.insert(v, 0);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        if d == k {
            continue;
        }
        for &w in g.neighbors(u) {
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(d + 1);
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<VertexId> = dist.into_keys().collect();
    out.sort_unstable();
    Ok(out)
}

/// `⟨W⟩` with its embedding back into `g`. Sub-vertex `i` is the `i`-th
/// smallest member of `w`.
pub fn induced_subgraph(g: &Graph, w: &[VertexId]) -> Result<(Graph, VertexMap)> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut verts = w.to_vec();
    verts.sort_unstable();
    verts.dedup();
    for &v in &verts {
        g.check_vertex(v)?;
    }
    let map = VertexMap::new(verts).expect("deduplicated");
    let mut sub = Graph::new(map.len());
    for (i, &v) in map.images().iter().enumerate() {
        sub.adj[i] = g
            .neighbors(v)
            .iter()
            .filter_map(|&u| map.inverse(u))
            .collect();
        sub.adj[i].sort_unstable();
    }
    if let Some(labels) = g.labels() {
        sub.labels = Some(map.images().iter().map(|&v| labels[v].clone()).collect());
    }
    Ok((sub, map))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsOrder {
    pub order: Vec<VertexId>,
    /// `parent[i]` is the BFS parent of `order[i]`; `None` for the root.
    pub parent: Vec<Option<VertexId>>,
    /// False when `⟨allowed⟩` was disconnected and only the root's component
    /// was traversed.
    pub complete: bool,
}

/// Breadth-first order of `⟨allowed⟩` from `root`, neighbors visited in
/// ascending id order.
pub fn bfs_order(g: &Graph, root: VertexId, allowed: &[VertexId]) -> Result<BfsOrder> {
    g.check_vertex(root)?;
    let allowed: std::collections::HashSet<VertexId> = allowed.iter().copied().collect();
    if !allowed.contains(&root) {
        return Err(Error::InvalidVertex(root));
    }
    let mut seen = std::collections::HashSet::from([root]);
    let mut order = vec![root];
    let mut parent = vec![None];
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if allowed.contains(&w) && seen.insert(w) {
                order.push(w);
                parent.push(Some(u));
            }
        }
    }
    let complete = order.len() == allowed.len();
    Ok(BfsOrder {
        order,
        parent,
        complete,
    })
}

/// Components of the subgraph keeping only edges accepted by `keep`. Each
/// component is sorted; components are ordered by their smallest vertex.
pub fn connected_components<F>(g: &Graph, keep: F) -> Vec<Vec<VertexId>>
where
    F: Fn(VertexId, VertexId) -> bool,
{
    let mut comp = vec![usize::MAX; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if comp[w] == usize::MAX && keep(u, w) {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Sorted-slice set helpers.
pub(crate) mod sorted {
    use super::VertexId;

    pub fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
        let mut j = 0;
        for &x in a {
            while j < b.len() && b[j] < x {
                j += 1;
            }
            if j == b.len() || b[j] != x {
                return false;
            }
            j += 1;
        }
        true
    }

    pub fn is_proper_subset(a: &[VertexId], b: &[VertexId]) -> bool {
        a.len() < b.len() && is_subset(a, b)
    }

    pub fn intersect(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn union(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = a.iter().chain(b).copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}
