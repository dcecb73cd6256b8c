use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge, induced_subgraph, Edge, Graph, VertexId};

/// One edit. Vertex ids refer to the graph as it stands when the edit runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Edit {
    AddEdge(VertexId, VertexId),
    DeleteEdge(VertexId, VertexId),
    /// A new vertex joined to the listed vertices.
    AddVertex(Vec<VertexId>),
    /// Removes the vertex and its edges; later ids shift down by one.
    DeleteVertex(VertexId),
    /// A uniformly chosen non-edge.
    AddRandomEdge,
    /// A uniformly chosen edge among the candidates still present, or among
    /// all edges when no candidates are given, whose removal keeps the graph
    /// connected.
    DeleteRandomEdge(Option<Vec<Edge>>),
}

/// What an edit did, in terms of vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum EditRecord {
    AddedEdge {
        u: String,
        v: String,
    },
    DeletedEdge {
        u: String,
        v: String,
    },
    AddedVertex {
        label: String,
        edges: Vec<(String, String)>,
    },
    DeletedVertex {
        label: String,
        edges: Vec<(String, String)>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EditLog {
    pub records: Vec<EditRecord>,
}

impl std::fmt::Display for EditRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EditRecord::AddedEdge { u, v } => write!(f, "added edge {u} {v}"),
            EditRecord::DeletedEdge { u, v } => write!(f, "deleted edge {u} {v}"),
            EditRecord::AddedVertex { label, edges } => {
                write!(f, "added vertex {label} with {} edges", edges.len())
            }
            EditRecord::DeletedVertex { label, edges } => {
                write!(f, "deleted vertex {label} with {} edges", edges.len())
            }
        }
    }
}

impl EditLog {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Vertices plus edges that differ between the original and the edited
    /// graph once edits undoing each other cancel.
    pub fn net_distance(&self) -> usize {
        let mut vertices = Toggle::default();
        let mut edges = Toggle::default();
        for r in &self.records {
            match r {
                EditRecord::AddedEdge { u: a, v: b } | EditRecord::DeletedEdge { u: a, v: b } => {
                    edges.flip(pair(a, b));
                }
                EditRecord::AddedVertex { label, edges: es }
                | EditRecord::DeletedVertex { label, edges: es } => {
                    vertices.flip((label.clone(), String::new()));
                    for (a, b) in es {
                        edges.flip(pair(a, b));
                    }
                }
            }
        }
        vertices.0.len() + edges.0.len()
    }
}

#[derive(Default)]
struct Toggle(HashSet<(String, String)>);

impl Toggle {
    fn flip(&mut self, key: (String, String)) {
        if !self.0.remove(&key) {
            self.0.insert(key);
        }
    }
}

fn pair(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Applies `edits` in order. Unlabeled inputs get their ids as labels so the
/// log can name vertices across deletions. An edit that would create a loop
/// or parallel edge, remove something absent, or disconnect the graph is
/// rejected and nothing is returned.
pub fn perturb(g: &Graph, edits: &[Edit], seed: u64) -> Result<(Graph, EditLog)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = g.clone().with_default_labels();
    let mut log = EditLog::default();
    let mut next_label = cur.n();
    for (index, e) in edits.iter().enumerate() {
        let reject = |reason: String| Error::EditRejected { index, reason };
        let record = match e {
            Edit::AddEdge(u, v) => add_edge(&mut cur, *u, *v).map_err(reject)?,
            Edit::DeleteEdge(u, v) => delete_edge(&mut cur, *u, *v).map_err(reject)?,
            Edit::AddRandomEdge => {
                let missing: Vec<Edge> = cur
                    .vertices()
                    .flat_map(|u| (u + 1..cur.n()).map(move |v| (u, v)))
                    .filter(|&(u, v)| !cur.has_edge(u, v))
                    .collect();
                let &(u, v) = missing
                    .choose(&mut rng)
                    .ok_or_else(|| reject("graph is complete".into()))?;
                add_edge(&mut cur, u, v).map_err(reject)?
            }
            Edit::DeleteRandomEdge(pool) => {
                let pool: Vec<Edge> = match pool {
                    Some(p) => p.iter().map(|&(u, v)| edge(u, v)).collect(),
                    None => cur.edges().collect(),
                };
                let safe: Vec<Edge> = pool
                    .into_iter()
                    .filter(|&(u, v)| cur.has_edge(u, v) && keeps_connected(&cur, u, v))
                    .collect();
                let &(u, v) = safe
                    .choose(&mut rng)
                    .ok_or_else(|| reject("no candidate edge can be removed".into()))?;
                delete_edge(&mut cur, u, v).map_err(reject)?
            }
            Edit::AddVertex(nbrs) => {
                let mut nbrs = nbrs.clone();
                nbrs.sort_unstable();
                nbrs.dedup();
                if nbrs.is_empty() {
                    return Err(reject("an isolated vertex disconnects the graph".into()));
                }
                if let Some(&bad) = nbrs.iter().find(|&&u| u >= cur.n()) {
                    return Err(reject(format!("vertex {bad} does not exist")));
                }
                let labels: HashSet<String> = cur.labels().unwrap().iter().cloned().collect();
                while labels.contains(&next_label.to_string()) {
                    next_label += 1;
                }
                let label = next_label.to_string();
                next_label += 1;
                let v = cur.add_vertex();
                let mut all = cur.labels().unwrap().to_vec();
                all[v] = label.clone();
                cur.set_labels(all);
                for &u in &nbrs {
                    cur.add_edge(u, v);
                }
                EditRecord::AddedVertex {
                    edges: nbrs
                        .iter()
                        .map(|&u| (cur.label(u), label.clone()))
                        .collect(),
                    label,
                }
            }
            Edit::DeleteVertex(v) => {
                let v = *v;
                if v >= cur.n() {
                    return Err(reject(format!("vertex {v} does not exist")));
                }
                if cur.n() == 1 {
                    return Err(reject("cannot delete the last vertex".into()));
                }
                let rest: Vec<VertexId> = cur.vertices().filter(|&u| u != v).collect();
                let (next, _) = induced_subgraph(&cur, &rest)?;
                if !next.is_connected() {
                    return Err(reject(format!("deleting vertex {v} disconnects the graph")));
                }
                let label = cur.label(v);
                let edges = cur
                    .neighbors(v)
                    .iter()
                    .map(|&u| (cur.label(u), label.clone()))
                    .collect();
                cur = next;
                EditRecord::DeletedVertex { label, edges }
            }
        };
        log.records.push(record);
    }
    Ok((cur, log))
}

fn add_edge(g: &mut Graph, u: VertexId, v: VertexId) -> std::result::Result<EditRecord, String> {
    if u >= g.n() || v >= g.n() {
        return Err(format!("vertex {} does not exist", u.max(v)));
    }
    if u == v {
        return Err(format!("self-loop at {u}"));
    }
    if !g.add_edge(u, v) {
        return Err(format!("({u}, {v}) is already an edge"));
    }
    Ok(EditRecord::AddedEdge {
        u: g.label(u),
        v: g.label(v),
    })
}

fn delete_edge(g: &mut Graph, u: VertexId, v: VertexId) -> std::result::Result<EditRecord, String> {
    if !g.has_edge(u, v) {
        return Err(format!("({u}, {v}) is not an edge"));
    }
    if !keeps_connected(g, u, v) {
        return Err(format!("deleting ({u}, {v}) disconnects the graph"));
    }
    g.remove_edge(u, v);
    Ok(EditRecord::DeletedEdge {
        u: g.label(u),
        v: g.label(v),
    })
}

fn keeps_connected(g: &Graph, u: VertexId, v: VertexId) -> bool {
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    let mut stack = vec![u];
    while let Some(a) = stack.pop() {
        for &b in g.neighbors(a) {
            if (a, b) == (u, v) || (a, b) == (v, u) || seen[b] {
                continue;
            }
            if b == v {
                return true;
            }
            seen[b] = true;
            stack.push(b);
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::aligned_distance;
    use crate::products::{classify_edge, strong_product, EdgeClass};

    #[test]
    fn delete_random_diagonal() {
        let (g, c) = strong_product(&[Graph::path(3), Graph::path(3)]).unwrap();
        let diagonals: Vec<Edge> = g
            .edges()
            .filter(|&(u, v)| matches!(classify_edge(&c, u, v), Ok(EdgeClass::NonCartesian(_))))
            .collect();
        assert_eq!(diagonals.len(), 8);
        let (h, log) = perturb(&g, &[Edit::DeleteRandomEdge(Some(diagonals))], 7).unwrap();
        assert_eq!(h.m(), g.m() - 1);
        assert_eq!(log.len(), 1);
        let g = g.with_default_labels();
        assert_eq!(aligned_distance(&g, &h).unwrap(), 1);
        let (h2, _) = perturb(&g, &[Edit::DeleteRandomEdge(None)], 7).unwrap();
        let (h3, _) = perturb(&g, &[Edit::DeleteRandomEdge(None)], 7).unwrap();
        assert_eq!(h2, h3);
    }

    #[test]
    fn inverse_edits_cancel() {
        let (g, _) = strong_product(&[Graph::path(3), Graph::path(3)]).unwrap();
        let (h, log) = perturb(&g, &[Edit::DeleteEdge(0, 4), Edit::AddEdge(0, 4)], 1).unwrap();
        assert!(h.same_structure(&g));
        assert_eq!(log.len(), 2);
        assert_eq!(log.net_distance(), 0);
    }

    #[test]
    fn connectivity_guard() {
        let (h, _) = perturb(&Graph::cycle(4), &[Edit::DeleteEdge(0, 1)], 0).unwrap();
        assert!(crate::iso::isomorphic(&h, &Graph::path(4)).is_some());
        let err = perturb(&Graph::path(3), &[Edit::DeleteEdge(0, 1)], 0).unwrap_err();
        assert!(matches!(err, Error::EditRejected { index: 0, .. }));
        assert!(perturb(&Graph::path(3), &[Edit::DeleteVertex(1)], 0).is_err());
        assert!(perturb(&Graph::path(3), &[Edit::AddEdge(0, 0)], 0).is_err());
    }

    #[test]
    fn vertex_edits() {
        let g = Graph::path(3);
        let (h, log) = perturb(&g, &[Edit::AddVertex(vec![2]), Edit::DeleteVertex(0)], 0).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.labels().unwrap(), ["1", "2", "3"]);
        assert_eq!(log.net_distance(), 4);
        assert_eq!(aligned_distance(&g.with_default_labels(), &h).unwrap(), 4);
    }
}
