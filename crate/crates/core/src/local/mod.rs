//! Local prime factor decomposition.
//!
//! A thin graph is covered by closed neighborhoods of its backbone vertices,
//! visited in breadth-first order. Each neighborhood is factored on its own
//! and its Cartesian edges receive fresh colors, one per local factor; colors
//! meeting on a shared edge are identified. When a neighborhood brings a
//! color that touches nothing colored before, the coloring is repaired
//! through the parent neighborhood, or a larger subproduct around the edge
//! is factored instead. A second pass factors `N*` neighborhoods around
//! anything still unchecked, and the final coloring is turned into factors.
//!
//! Graphs that are not thin are factored through their quotient.

mod check;
mod coloring;
mod subproduct;

use std::collections::{HashMap, HashSet};

pub use check::check_factors;
pub use coloring::{
    check_continuation, combine_colorings, factor_subgraph, factor_view, hypercube_color_repair,
    Color, ContinuationReport, LocalFactoring, NeighborhoodRecord, PartialColoring, ViewColoring,
};
pub use subproduct::{make_subproduct, Flavor, SubproductView};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::products::{Factorization, ProductKind};
use crate::skeleton::{is_dispensable, reconstruct_from_quotient};
use crate::thinness::{backbone, backbone_bfs, backbone_bfs_shuffled, is_thin, quotient};

/// How the backbone is ordered before covering.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum BackboneOrdering {
    /// Breadth-first from the smallest vertex, ascending tie-break.
    #[default]
    Bfs,
    /// Breadth-first with roots and tie-breaks shuffled by the seed.
    Shuffled(u64),
    /// A caller-supplied order of all backbone vertices in which every
    /// vertex after the first is adjacent to an earlier one.
    Explicit(Vec<VertexId>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocalOptions {
    pub ordering: BackboneOrdering,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LocalStats {
    pub views_factored: usize,
    pub views_skipped: usize,
    pub continuation_failures: usize,
    pub repairs: usize,
    pub edge_neighborhoods: usize,
    pub nstar_first_loop: usize,
    pub nstar_second_loop: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Event {
    Factored {
        flavor: Flavor,
        prime_factors: usize,
        fresh: Vec<Color>,
    },
    /// A view with too few prime factors to be used.
    Skipped {
        flavor: Flavor,
        prime_factors: usize,
    },
    Continuation {
        from: VertexId,
        to: VertexId,
        ok: bool,
        failing: Vec<Color>,
    },
    Repair {
        parent: VertexId,
        child: VertexId,
        merged: Vec<Vec<Color>>,
    },
}

/// The state left behind by the covering passes.
#[derive(Clone, Debug)]
pub struct Cover {
    pub coloring: PartialColoring,
    pub order: Vec<VertexId>,
    pub events: Vec<Event>,
    pub stats: LocalStats,
    /// Vertices inside at least one used view.
    pub covered: Vec<bool>,
}

/// Knobs shared with the approximate variant.
#[derive(Clone, Debug)]
pub(crate) struct CoverSettings {
    /// Views with at most this many prime factors are ignored.
    pub threshold: Option<usize>,
    pub use_edge_and_nstar: bool,
}

impl Default for CoverSettings {
    fn default() -> Self {
        CoverSettings {
            threshold: None,
            use_edge_and_nstar: true,
        }
    }
}

struct State<'a> {
    g: &'a Graph,
    settings: &'a CoverSettings,
    coloring: PartialColoring,
    /// Factored closed neighborhoods; `None` when skipped.
    records: HashMap<VertexId, Option<NeighborhoodRecord>>,
    in_h: Vec<bool>,
    covered: Vec<bool>,
    events: Vec<Event>,
    stats: LocalStats,
}

impl<'a> State<'a> {
    /// Factors a view and assigns fresh colors, unless it is below the
    /// threshold. Nothing is painted yet.
    fn factor(&mut self, view: &SubproductView) -> Result<Option<(LocalFactoring, ViewColoring)>> {
        let lf = factor_view(view)?;
        if self
            .settings
            .threshold
            .is_some_and(|p| lf.prime_count() <= p)
        {
            self.stats.views_skipped += 1;
            self.events.push(Event::Skipped {
                flavor: view.flavor,
                prime_factors: lf.prime_count(),
            });
            return Ok(None);
        }
        let vc = factor_subgraph(view, &lf, &mut self.coloring);
        self.stats.views_factored += 1;
        for &v in view.vertices() {
            self.covered[v] = true;
        }
        self.events.push(Event::Factored {
            flavor: view.flavor,
            prime_factors: lf.prime_count(),
            fresh: vc.fresh_colors(),
        });
        Ok(Some((lf, vc)))
    }

    fn factor_and_combine(&mut self, flavor: Flavor) -> Result<()> {
        let view = make_subproduct(self.g, flavor)?;
        if let Some((_, vc)) = self.factor(&view)? {
            combine_colorings(&mut self.coloring, &vc);
        }
        Ok(())
    }

    /// Factors `⟨N[v]⟩` once and remembers it. Returns the fresh coloring
    /// when the view was factored just now.
    fn factor_neighborhood(&mut self, v: VertexId) -> Result<Option<ViewColoring>> {
        if self.records.contains_key(&v) {
            return Ok(None);
        }
        let view = make_subproduct(self.g, Flavor::OneNeighborhood(v))?;
        let out = self.factor(&view)?;
        let record = out.map(|(factoring, colors)| NeighborhoodRecord {
            view,
            factoring,
            colors,
        });
        let vc = record.as_ref().map(|r| r.colors.clone());
        self.records.insert(v, record);
        Ok(vc)
    }

    fn is_thin_neighborhood(&self, v: VertexId) -> bool {
        matches!(self.records.get(&v), Some(Some(r)) if r.factoring.thin)
    }

    /// The step taken for a neighbor `y` of the current vertex `x`.
    fn visit(&mut self, x: VertexId, y: VertexId) -> Result<()> {
        let Some(vc) = self.factor_neighborhood(y)? else {
            return Ok(());
        };
        let report = check_continuation(&self.coloring, &vc);
        combine_colorings(&mut self.coloring, &vc);
        self.events.push(Event::Continuation {
            from: x,
            to: y,
            ok: report.ok,
            failing: report.failing_colors.clone(),
        });
        if report.ok {
            return Ok(());
        }
        self.stats.continuation_failures += 1;
        if self.is_thin_neighborhood(x) && self.is_thin_neighborhood(y) {
            let parent = self.records[&x].as_ref().expect("thin record");
            let merged =
                hypercube_color_repair(&mut self.coloring, parent, x, &vc, &report.failing_colors)?;
            self.stats.repairs += 1;
            self.events.push(Event::Repair {
                parent: x,
                child: y,
                merged,
            });
            for &v in self.g.closed_nbhd(y).iter() {
                self.coloring.mark_vertex(v);
            }
            let view = &self.records[&y].as_ref().expect("factored").view;
            let edges: Vec<_> = view.host_edges().collect();
            for (u, v) in edges {
                self.coloring.mark_edge(u, v);
            }
        } else if self.settings.use_edge_and_nstar {
            let en = make_subproduct(self.g, Flavor::EdgeNeighborhood(x, y))?;
            let (sx, sy) = (
                en.embed.inverse(x).expect("x in view"),
                en.embed.inverse(y).expect("y in view"),
            );
            if is_dispensable(&en.sub, sx, sy)?.is_none() {
                self.stats.edge_neighborhoods += 1;
                if let Some((_, vc)) = self.factor(&en)? {
                    combine_colorings(&mut self.coloring, &vc);
                }
            } else {
                self.stats.nstar_first_loop += 1;
                self.factor_and_combine(Flavor::NStar(x, y))?;
            }
        }
        Ok(())
    }
}

/// Runs both covering passes over the vertices in `order`.
pub(crate) fn run_cover(g: &Graph, order: &[VertexId], settings: &CoverSettings) -> Result<Cover> {
    let mut st = State {
        g,
        settings,
        coloring: PartialColoring::new(),
        records: HashMap::new(),
        in_h: vec![false; g.n()],
        covered: vec![false; g.n()],
        events: Vec::new(),
        stats: LocalStats::default(),
    };
    let mut pending: HashSet<VertexId> = order.iter().copied().collect();
    for (i, &x) in order.iter().enumerate() {
        if let Some(vc) = st.factor_neighborhood(x)? {
            combine_colorings(&mut st.coloring, &vc);
        }
        for &v in g.closed_nbhd(x).iter() {
            st.in_h[v] = true;
        }
        let ys: Vec<VertexId> = order[i + 1..]
            .iter()
            .copied()
            .filter(|&y| pending.contains(&y) && g.has_edge(x, y))
            .collect();
        for y in ys {
            st.visit(x, y)?;
        }
        pending.remove(&x);
    }
    for v in g.vertices() {
        if !st.in_h[v] || st.coloring.is_checked_vertex(v) {
            continue;
        }
        let nb = g.neighbors(v);
        let w = nb
            .iter()
            .copied()
            .find(|&w| !st.coloring.is_checked_edge(v, w))
            .or_else(|| nb.first().copied());
        if let Some(w) = w {
            st.stats.nstar_second_loop += 1;
            st.factor_and_combine(Flavor::NStar(v, w))?;
        }
    }
    Ok(Cover {
        coloring: st.coloring,
        order: order.to_vec(),
        events: st.events,
        stats: st.stats,
        covered: st.covered,
    })
}

fn ordering(g: &Graph, opts: &LocalOptions) -> Result<Vec<VertexId>> {
    match &opts.ordering {
        BackboneOrdering::Bfs => Ok(backbone_bfs(g)?.order),
        BackboneOrdering::Shuffled(seed) => Ok(backbone_bfs_shuffled(g, *seed)?.order),
        BackboneOrdering::Explicit(order) => {
            let mut want = backbone(g).vertices;
            let mut got = order.clone();
            got.sort_unstable();
            want.sort_unstable();
            if got != want {
                return Err(Error::Spec(
                    "explicit order must list every backbone vertex once".into(),
                ));
            }
            for (i, &v) in order.iter().enumerate().skip(1) {
                if !order[..i].iter().any(|&u| g.has_edge(u, v)) {
                    return Err(Error::Spec(format!(
                        "backbone vertex {v} is not adjacent to an earlier one"
                    )));
                }
            }
            Ok(order.clone())
        }
    }
}

/// The covering of a thin connected graph, without the final factor check.
pub fn cover(g: &Graph, opts: &LocalOptions) -> Result<Cover> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_thin(g) {
        return Err(Error::NotThin);
    }
    let order = ordering(g, opts)?;
    run_cover(g, &order, &CoverSettings::default())
}

/// Strong prime factorization of a thin connected graph by local covering.
pub fn local_pfd(g: &Graph) -> Result<Factorization> {
    local_pfd_with(g, &LocalOptions::default()).map(|(f, _)| f)
}

pub fn local_pfd_with(g: &Graph, opts: &LocalOptions) -> Result<(Factorization, Cover)> {
    if g.n() == 1 {
        let run = Cover {
            coloring: PartialColoring::new(),
            order: Vec::new(),
            events: Vec::new(),
            stats: LocalStats::default(),
            covered: vec![true],
        };
        return Ok((Factorization::prime(g, ProductKind::Strong), run));
    }
    let run = cover(g, opts)?;
    let f = check_factors(g, &run.coloring)?;
    Ok((f, run))
}

/// Strong prime factorization of any connected graph: thin graphs directly,
/// others through the quotient.
pub fn pfd(g: &Graph) -> Result<Factorization> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if is_thin(g) {
        return local_pfd(g);
    }
    let quot = quotient(g);
    let qf = local_pfd(&quot.graph)?;
    reconstruct_from_quotient(g, &quot, &qf)
}
