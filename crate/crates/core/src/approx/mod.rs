//! Recognition of approximate strong products.
//!
//! The local covering runs directly on the input without passing to the
//! quotient, over a backbone that may fall apart into several components.
//! Views with at most `P` prime factors are ignored, so prime regions never
//! merge colors. No final isomorphism test is made: one connected component
//! of every color is taken as a candidate factor.

mod distance;
mod generate;
mod perturb;

use std::collections::HashMap;

pub use distance::aligned_distance;
pub use generate::{generate, generate_seeded, path_with_triangle};
pub use perturb::{perturb, Edit, EditLog, EditRecord};

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, VertexId};
use crate::local::{run_cover, Color, CoverSettings, Event, LocalStats, PartialColoring};
use crate::products::strong_product;
use crate::thinness::{backbone, order_backbone};

/// Which connected component of a color becomes its candidate factor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ComponentStrategy {
    Minimal,
    #[default]
    Maximal,
    /// The component through the smallest vertex carrying the color.
    Arbitrary,
}

impl std::str::FromStr for ComponentStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minimal" | "min" => Ok(ComponentStrategy::Minimal),
            "maximal" | "max" => Ok(ComponentStrategy::Maximal),
            "arbitrary" | "any" => Ok(ComponentStrategy::Arbitrary),
            other => Err(Error::Spec(format!("unknown strategy `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ApproxConfig {
    /// Views need more than this many prime factors to be used.
    pub min_prime_factors: usize,
    pub strategy: ComponentStrategy,
    pub use_edge_and_nstar: bool,
}

impl Default for ApproxConfig {
    fn default() -> Self {
        ApproxConfig {
            min_prime_factors: 1,
            strategy: ComponentStrategy::Maximal,
            use_edge_and_nstar: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub color: Color,
    /// Host vertices of the chosen component, ascending.
    pub vertices: Vec<VertexId>,
    /// The component spanned by the color's edges, on `0..vertices.len()`.
    pub graph: Graph,
    /// Number of components the color falls into.
    pub components: usize,
}

#[derive(Clone, Debug)]
pub struct ApproxResult {
    pub coloring: PartialColoring,
    /// One entry per canonical color, in color order.
    pub candidate_factors: Vec<Candidate>,
    /// Vertices outside every used view.
    pub skipped_regions: Vec<VertexId>,
    /// Strong product of the candidates, labeled so that aligned host
    /// vertices carry their host label.
    pub reconstructed: Option<Graph>,
    pub aligned_distance: Option<usize>,
    /// Whether all vertices served as centers because the backbone gave
    /// nothing usable.
    pub used_fallback: bool,
    pub order: Vec<VertexId>,
    pub events: Vec<Event>,
    pub stats: LocalStats,
}

/// Products larger than this many times the input are not rebuilt.
const RECONSTRUCT_FACTOR: usize = 16;

pub fn approx_factorize(g: &Graph, cfg: &ApproxConfig) -> Result<ApproxResult> {
    if cfg.min_prime_factors == 0 {
        return Err(Error::Spec("P must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let settings = CoverSettings {
        threshold: Some(cfg.min_prime_factors),
        use_edge_and_nstar: cfg.use_edge_and_nstar,
    };
    let members = backbone(g).vertices;
    let mut used_fallback = members.is_empty();
    let mut run = None;
    if !members.is_empty() {
        let order = order_backbone(g, &members, None)?.order;
        let cover = run_cover(g, &order, &settings)?;
        if cover.coloring.colored_len() > 0 {
            run = Some(cover);
        } else {
            used_fallback = true;
        }
    }
    let run = match run {
        Some(r) => r,
        None => {
            let all: Vec<VertexId> = g.vertices().collect();
            let order = order_backbone(g, &all, None)?.order;
            run_cover(g, &order, &settings)?
        }
    };

    let candidate_factors = candidates(g, &run.coloring, cfg.strategy);
    let skipped_regions = g.vertices().filter(|&v| !run.covered[v]).collect();
    let mut reconstructed = None;
    let mut distance = None;
    let size: usize = candidate_factors.iter().map(|c| c.graph.n()).product();
    if !candidate_factors.is_empty() && size <= RECONSTRUCT_FACTOR * g.n() {
        let product = aligned_product(g, &run.coloring, &candidate_factors)?;
        let host = if g.labels().is_some() {
            g.clone()
        } else {
            g.clone().with_default_labels()
        };
        distance = Some(aligned_distance(&host, &product)?);
        reconstructed = Some(product);
    }
    Ok(ApproxResult {
        coloring: run.coloring,
        candidate_factors,
        skipped_regions,
        reconstructed,
        aligned_distance: distance,
        used_fallback,
        order: run.order,
        events: run.events,
        stats: run.stats,
    })
}

fn candidates(
    g: &Graph,
    coloring: &PartialColoring,
    strategy: ComponentStrategy,
) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (color, edges) in coloring.classes() {
        let mut touched = vec![false; g.n()];
        for &(u, v) in &edges {
            touched[u] = true;
            touched[v] = true;
        }
        let comps: Vec<Vec<VertexId>> =
            connected_components(g, |u, v| coloring.color(u, v) == Some(color))
                .into_iter()
                .filter(|c| touched[c[0]])
                .collect();
        // components come out sorted by smallest member
        let pick = match strategy {
            ComponentStrategy::Minimal => comps.iter().min_by_key(|c| c.len()),
            ComponentStrategy::Maximal => comps.iter().rev().max_by_key(|c| c.len()),
            ComponentStrategy::Arbitrary => comps.first(),
        }
        .expect("a used color has an edge");
        let pos: HashMap<VertexId, usize> = pick.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut graph = Graph::new(pick.len());
        for &(u, v) in &edges {
            if let (Some(&a), Some(&b)) = (pos.get(&u), pos.get(&v)) {
                graph.add_edge(a, b);
            }
        }
        out.push(Candidate {
            color,
            vertices: pick.clone(),
            graph,
            components: comps.len(),
        });
    }
    out
}

/// The strong product of the candidates with host labels moved onto it.
///
/// A host vertex is first sent to the tuple of candidate vertices reached
/// through edges of the other colors, the first host vertex per tuple
/// winning. Host vertices left over are then placed greedily, most aligned
/// neighbors first, on the free product vertex whose adjacency to the
/// aligned vertices agrees best with theirs. Product vertices that remain
/// free get fresh `#i` labels.
fn aligned_product(g: &Graph, coloring: &PartialColoring, cands: &[Candidate]) -> Result<Graph> {
    let factors: Vec<Graph> = cands.iter().map(|c| c.graph.clone()).collect();
    let (product, coords) = strong_product(&factors)?;
    let mut image: Vec<Option<VertexId>> = vec![None; g.n()];
    let mut preimage: Vec<Option<VertexId>> = vec![None; product.n()];
    let mut tuple_of: Vec<Vec<Option<usize>>> = vec![Vec::with_capacity(cands.len()); g.n()];
    for cand in cands {
        let comps = connected_components(g, |u, v| {
            coloring.color(u, v).is_some_and(|c| c != cand.color)
        });
        let mut comp_of = vec![0; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut slot = vec![None; comps.len()];
        for (pos, &v) in cand.vertices.iter().enumerate() {
            slot[comp_of[v]].get_or_insert(pos);
        }
        for v in g.vertices() {
            tuple_of[v].push(slot[comp_of[v]]);
        }
    }
    for v in g.vertices() {
        let t: Option<Vec<usize>> = tuple_of[v].iter().copied().collect();
        if let Some(t) = t {
            let p = coords.index(&t);
            if preimage[p].is_none() {
                preimage[p] = Some(v);
                image[v] = Some(p);
            }
        }
    }
    extend_alignment(g, &product, &mut image, &mut preimage);
    let labels = preimage
        .iter()
        .enumerate()
        .map(|(i, v)| v.map_or_else(|| format!("#{i}"), |v| g.label(v)))
        .collect();
    Ok(product.with_labels(labels))
}

fn extend_alignment(
    g: &Graph,
    product: &Graph,
    image: &mut [Option<VertexId>],
    preimage: &mut [Option<VertexId>],
) {
    let mut given_up = vec![false; g.n()];
    loop {
        let next = g
            .vertices()
            .filter(|&v| image[v].is_none() && !given_up[v])
            .map(|v| {
                let placed = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| image[u].is_some())
                    .count();
                (placed, std::cmp::Reverse(v))
            })
            .filter(|&(placed, _)| placed > 0)
            .max();
        let Some((_, std::cmp::Reverse(v))) = next else {
            return;
        };
        let mut options: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .filter_map(|&u| image[u])
            .flat_map(|p| product.neighbors(p).iter().copied())
            .filter(|&p| preimage[p].is_none())
            .collect();
        options.sort_unstable();
        options.dedup();
        let score = |p: VertexId| -> isize {
            let agree = g
                .neighbors(v)
                .iter()
                .filter(|&&u| image[u].is_some_and(|q| product.has_edge(p, q)))
                .count();
            let extra = product
                .neighbors(p)
                .iter()
                .filter(|&&q| preimage[q].is_some_and(|w| !g.has_edge(v, w)))
                .count();
            agree as isize - extra as isize
        };
        let best = options
            .iter()
            .map(|&p| (score(p), std::cmp::Reverse(p)))
            .max();
        match best {
            Some((_, std::cmp::Reverse(p))) => {
                image[v] = Some(p);
                preimage[p] = Some(v);
            }
            None => given_up[v] = true,
        }
    }
}
