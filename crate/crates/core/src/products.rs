//! Strong and Cartesian products, coordinatizations, fibers and projections.
//!
//! Products of `n` factors are built directly with row-major numbering: the
//! last factor's coordinate varies fastest. A vertex of `G1 ⊠ ... ⊠ Gn` is
//! adjacent to another iff they differ somewhere and every differing
//! coordinate pair is an edge of its factor; for `□` exactly one coordinate
//! may differ.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::iso::isomorphic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Strong,
    Cartesian,
}

/// Per-vertex coordinate vectors, one entry per factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinates {
    dims: Vec<usize>,
    coords: Vec<Vec<VertexId>>,
}

impl Coordinates {
    pub fn new(dims: Vec<usize>, coords: Vec<Vec<VertexId>>) -> Result<Self> {
        for c in &coords {
            if c.len() != dims.len() {
                return Err(Error::Internal(format!(
                    "coordinate vector of length {} for {} factors",
                    c.len(),
                    dims.len()
                )));
            }
            if let Some((&x, &d)) = c.iter().zip(&dims).find(|(&x, &d)| x >= d) {
                return Err(Error::Internal(format!("coordinate {x} out of range {d}")));
            }
        }
        Ok(Coordinates { dims, coords })
    }

    /// Coordinates of the one-factor factorization of an `n`-vertex graph.
    pub fn identity(n: usize) -> Self {
        Coordinates {
            dims: vec![n],
            coords: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn factor_count(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of coordinatized host vertices.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn of(&self, v: VertexId) -> &[VertexId] {
        &self.coords[v]
    }

    /// Row-major index of a coordinate vector.
    pub fn index(&self, c: &[VertexId]) -> usize {
        c.iter()
            .zip(&self.dims)
            .fold(0, |acc, (&x, &d)| acc * d + x)
    }

    pub fn product_size(&self) -> usize {
        self.dims.iter().product()
    }

    /// True iff `v ↦ coords(v)` is a bijection onto the product vertex set.
    pub fn is_bijective(&self) -> bool {
        if self.len() != self.product_size() {
            return false;
        }
        let mut hit = vec![false; self.len()];
        for c in &self.coords {
            let i = self.index(c);
            if std::mem::replace(&mut hit[i], true) {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    /// Endpoints differ in exactly this coordinate.
    Cartesian(usize),
    /// Endpoints differ in all of these coordinates (at least two).
    NonCartesian(Vec<usize>),
}

/// A product decomposition of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<Graph>,
    pub coords: Coordinates,
    pub kind: ProductKind,
}

impl Factorization {
    /// The decomposition of a graph that does not split: one factor, itself,
    /// or no factor at all for `K1`.
    pub fn prime(g: &Graph, kind: ProductKind) -> Self {
        if g.n() == 1 {
            return Factorization {
                factors: Vec::new(),
                coords: Coordinates {
                    dims: Vec::new(),
                    coords: vec![Vec::new()],
                },
                kind,
            };
        }
        Factorization {
            factors: vec![g.clone().without_labels()],
            coords: Coordinates::identity(g.n()),
            kind,
        }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// At most one nontrivial factor.
    pub fn is_prime(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Checks that the product of the factors, under the stored coordinates,
    /// reproduces `host` exactly.
    pub fn verify(&self, host: &Graph) -> bool {
        let dims: Vec<usize> = self.factors.iter().map(Graph::n).collect();
        if dims != self.coords.dims || self.coords.len() != host.n() || !self.coords.is_bijective()
        {
            return false;
        }
        let adjacent = |u: VertexId, v: VertexId| {
            let (cu, cv) = (self.coords.of(u), self.coords.of(v));
            let mut differing = 0;
            for (f, (&a, &b)) in self.factors.iter().zip(cu.iter().zip(cv)) {
                if a != b {
                    if !f.has_edge(a, b) {
                        return false;
                    }
                    differing += 1;
                }
            }
            match self.kind {
                ProductKind::Strong => differing >= 1,
                ProductKind::Cartesian => differing == 1,
            }
        };
        host.m() == product_edge_count(&self.factors, self.kind)
            && host.edges().all(|(u, v)| adjacent(u, v))
    }
}

/// Edge count of the product of `factors`.
pub fn product_edge_count(factors: &[Graph], kind: ProductKind) -> usize {
    match kind {
        ProductKind::Strong => {
            let closed: usize = factors.iter().map(|f| f.n() + 2 * f.m()).product();
            let verts: usize = factors.iter().map(Graph::n).product();
            (closed - verts) / 2
        }
        ProductKind::Cartesian => {
            let verts: usize = factors.iter().map(Graph::n).product();
            factors.iter().map(|f| f.m() * (verts / f.n())).sum()
        }
    }
}

fn build_product(factors: &[Graph], kind: ProductKind) -> Result<(Graph, Coordinates)> {
    if factors.is_empty() {
        return Err(Error::NoFactors);
    }
    if factors.iter().any(|f| f.n() == 0) {
        return Err(Error::EmptySet);
    }
    let dims: Vec<usize> = factors.iter().map(Graph::n).collect();
    let total: usize = dims.iter().product();
    let mut coords = Vec::with_capacity(total);
    let mut cur = vec![0; dims.len()];
    for _ in 0..total {
        coords.push(cur.clone());
        for i in (0..dims.len()).rev() {
            cur[i] += 1;
            if cur[i] < dims[i] {
                break;
            }
            cur[i] = 0;
        }
    }
    let coords = Coordinates { dims, coords };
    let mut g = Graph::new(total);
    for v in 0..total {
        let cv = coords.of(v).to_vec();
        match kind {
            ProductKind::Cartesian => {
                for (i, f) in factors.iter().enumerate() {
                    for &w in f.neighbors(cv[i]) {
                        let mut cw = cv.clone();
                        cw[i] = w;
                        let u = coords.index(&cw);
                        if u > v {
                            g.add_edge(v, u);
                        }
                    }
                }
            }
            ProductKind::Strong => {
                let choices: Vec<Vec<VertexId>> = factors
                    .iter()
                    .zip(&cv)
                    .map(|(f, &x)| f.closed_nbhd(x))
                    .collect();
                let lens: Vec<usize> = choices.iter().map(Vec::len).collect();
                let mut pick = vec![0; choices.len()];
                loop {
                    let cw: Vec<VertexId> =
                        pick.iter().zip(&choices).map(|(&p, ch)| ch[p]).collect();
                    let u = coords.index(&cw);
                    if u > v {
                        g.add_edge(v, u);
                    }
                    if !advance(&mut pick, &lens) {
                        break;
                    }
                }
            }
        }
    }
    Ok((g, coords))
}

/// Odometer step over `0..lens[0] × ... × 0..lens[k-1]`; false after the last tuple.
fn advance(pick: &mut [usize], lens: &[usize]) -> bool {
    for i in (0..pick.len()).rev() {
        pick[i] += 1;
        if pick[i] < lens[i] {
            return true;
        }
        pick[i] = 0;
    }
    false
}

pub fn strong_product(factors: &[Graph]) -> Result<(Graph, Coordinates)> {
    build_product(factors, ProductKind::Strong)
}

pub fn cartesian_product(factors: &[Graph]) -> Result<(Graph, Coordinates)> {
    build_product(factors, ProductKind::Cartesian)
}

pub fn product(factors: &[Graph], kind: ProductKind) -> Result<(Graph, Coordinates)> {
    build_product(factors, kind)
}

pub fn classify_edge(coords: &Coordinates, u: VertexId, v: VertexId) -> Result<EdgeClass> {
    if u >= coords.len() {
        return Err(Error::InvalidVertex(u));
    }
    if v >= coords.len() {
        return Err(Error::InvalidVertex(v));
    }
    let differing: Vec<usize> = coords
        .of(u)
        .iter()
        .zip(coords.of(v))
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, _)| i)
        .collect();
    match differing.len() {
        0 => Err(Error::IdenticalCoordinates(u, v)),
        1 => Ok(EdgeClass::Cartesian(differing[0])),
        _ => Ok(EdgeClass::NonCartesian(differing)),
    }
}

/// Vertex set of the `j`-fiber through `x`.
pub fn fiber(coords: &Coordinates, host: &Graph, j: usize, x: VertexId) -> Result<Vec<VertexId>> {
    host.check_vertex(x)?;
    if j >= coords.factor_count() {
        return Err(Error::FactorIndex {
            index: j,
            count: coords.factor_count(),
        });
    }
    let cx = coords.of(x);
    Ok(host
        .vertices()
        .filter(|&v| {
            coords
                .of(v)
                .iter()
                .zip(cx)
                .enumerate()
                .all(|(i, (a, b))| i == j || a == b)
        })
        .collect())
}

/// `p_j(W)`, sorted and deduplicated.
pub fn project(coords: &Coordinates, w: &[VertexId], j: usize) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = w.iter().map(|&v| coords.of(v)[j]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// True iff the two factor lists agree as multisets up to isomorphism.
pub fn same_factors(a: &[Graph], b: &[Graph]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for fa in a {
        for (i, fb) in b.iter().enumerate() {
            if !used[i] && isomorphic(fa, fb).is_some() {
                used[i] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}
