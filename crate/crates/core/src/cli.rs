//! The `spfd` command line.
//!
//! Exit codes: 0 on success (including `--help` and `--version`), 1 for
//! usage errors and inputs a command cannot accept, 2 for unreadable input
//! formats, 3 when an internal consistency check fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::approx::{
    approx_factorize, generate_seeded, perturb, ApproxConfig, ComponentStrategy, Edit, EditLog,
};
use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::io::{
    emit_dot, emit_edge_list, emit_graph6, factor_coloring, factor_report, factorization_json,
    parse_edge_list, parse_graph6,
};
use crate::local::{local_pfd_with, pfd, BackboneOrdering, LocalOptions, PartialColoring};
use crate::oracle::{brute_force_pfd, enumerate_connected_graphs, DEFAULT_LIMIT, MAX_ENUMERATED};
use crate::products::{same_factors, Factorization};
use crate::skeleton::{cartesian_skeleton, classical_strong_pfd};
use crate::thinness::{backbone, backbone_bfs, backbone_bfs_shuffled, is_thin, quotient};

#[derive(Debug, Parser)]
#[command(
    name = "spfd",
    version,
    about = "Strong product factorization of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prime factors by the global skeleton pipeline
    Factor(FactorArgs),
    /// Prime factors by covering with local subproducts
    FactorLocal {
        #[command(flatten)]
        args: FactorArgs,
        /// Shuffle the backbone order with this seed
        #[arg(long, conflicts_with = "order")]
        seed: Option<u64>,
        /// Explicit backbone order, comma-separated labels
        #[arg(long)]
        order: Option<String>,
    },
    /// Cartesian skeleton: dispensable edges and their witnesses
    Skeleton(FactorArgs),
    /// Backbone vertices and their BFS order
    Backbone {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Quotient by equal closed neighborhoods
    Quotient(FactorArgs),
    /// Approximate factors of a perturbed product
    Approx {
        #[command(flatten)]
        args: FactorArgs,
        /// Use only subproducts with more than this many prime factors
        #[arg(short = 'P', default_value_t = 1)]
        min_prime_factors: usize,
        #[arg(long, value_enum, default_value_t = Strategy::Maximal)]
        strategy: Strategy,
        /// Skip the edge- and N*-neighborhood fallbacks
        #[arg(long)]
        neighborhoods_only: bool,
    },
    /// Build a graph from a generator expression, e.g. `strong(path(3), cycle(4))`
    Generate {
        spec: String,
        /// Seed for random generators that name none
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        out: GraphFormat,
    },
    /// Apply edits: `add U V`, `del U V`, `add-vertex U,V,..`, `del-vertex U`,
    /// `add-random`, `del-random`
    Perturb {
        #[command(flatten)]
        input: Input,
        #[arg(long = "edit", value_name = "EDIT")]
        edits: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force factorization for small graphs
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare all pipelines with the oracle on every small connected graph
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Edge-list file; stdin when absent or `-`
    #[arg(long = "in", value_name = "FILE")]
    path: Option<PathBuf>,
    /// Read graph6 instead of an edge list
    #[arg(long)]
    graph6: bool,
}

#[derive(Debug, Args)]
struct FactorArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    out: OutFormat,
    /// Machine-readable report; overrides --out
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Dot,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edges,
    Dot,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Minimal,
    Maximal,
    Arbitrary,
}

impl From<Strategy> for ComponentStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Minimal => ComponentStrategy::Minimal,
            Strategy::Maximal => ComponentStrategy::Maximal,
            Strategy::Arbitrary => ComponentStrategy::Arbitrary,
        }
    }
}

enum Failure {
    Usage(String),
    Format(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Format { .. } => Failure::Format(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line on `args` (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, &mut std::io::stdin().lock(), out) {
        Ok(()) => 0,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (1, m),
                Failure::Format(m) => (2, m),
                Failure::Internal(m) => (3, m),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn read_graph(input: &Input, stdin: &mut dyn std::io::Read) -> Result<Graph, Failure> {
    let text = match &input.path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    if input.graph6 {
        Ok(parse_graph6(&text)?.with_default_labels())
    } else {
        Ok(parse_edge_list(&text)?)
    }
}

fn print_json(out: &mut dyn Write, v: &serde_json::Value) -> Outcome {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("serializable")
    )?;
    Ok(())
}

fn dispatch(cmd: Command, stdin: &mut dyn std::io::Read, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Factor(args) => {
            let g = read_graph(&args.input, stdin)?;
            let f = classical_strong_pfd(&g)?;
            check(&g, &f)?;
            let col = factor_coloring(&g, &f)?;
            emit_factorization(out, &g, &f, &col, &args, json!({}))
        }
        Command::FactorLocal { args, seed, order } => {
            let g = read_graph(&args.input, stdin)?;
            if !is_thin(&g) {
                if order.is_some() {
                    return Err(Failure::Usage("--order needs a thin graph".into()));
                }
                let f = pfd(&g)?;
                check(&g, &f)?;
                let col = factor_coloring(&g, &f)?;
                let extra = json!({ "thin": false });
                return emit_factorization(out, &g, &f, &col, &args, extra);
            }
            let ordering = match (seed, order) {
                (Some(s), _) => BackboneOrdering::Shuffled(s),
                (None, Some(o)) => BackboneOrdering::Explicit(resolve_list(&g, &o)?),
                (None, None) => BackboneOrdering::Bfs,
            };
            let (f, cover) = local_pfd_with(&g, &LocalOptions { ordering })?;
            check(&g, &f)?;
            let s = cover.stats;
            let extra = json!({
                "thin": true,
                "order": cover.order.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
                "colors": cover.coloring.canonical_colors().len(),
                "stats": {
                    "views_factored": s.views_factored,
                    "continuation_failures": s.continuation_failures,
                    "repairs": s.repairs,
                    "edge_neighborhoods": s.edge_neighborhoods,
                    "nstar_first_loop": s.nstar_first_loop,
                    "nstar_second_loop": s.nstar_second_loop,
                },
            });
            emit_factorization(out, &g, &f, &cover.coloring, &args, extra)
        }
        Command::Skeleton(args) => {
            let g = read_graph(&args.input, stdin)?;
            let sk = cartesian_skeleton(&g)?;
            if args.json {
                let lab = |e: &(VertexId, VertexId)| (g.label(e.0), g.label(e.1));
                return print_json(
                    out,
                    &json!({
                        "kept": sk.kept.iter().map(lab).collect::<Vec<_>>(),
                        "removed": sk.removed.iter().zip(&sk.witness)
                            .map(|(e, &z)| json!({ "edge": lab(e), "witness": g.label(z) }))
                            .collect::<Vec<_>>(),
                    }),
                );
            }
            match args.out {
                OutFormat::Edges => {
                    let h = sk
                        .skeleton
                        .clone()
                        .with_labels(g.labels().unwrap_or_default().to_vec());
                    write!(out, "{}", emit_edge_list(&h))?;
                }
                OutFormat::Dot => {
                    let mut col = PartialColoring::new();
                    let c = col.fresh_color();
                    for &e in &sk.kept {
                        col.paint(e, c);
                    }
                    write!(out, "{}", emit_dot(&g, Some(&col)))?;
                }
                OutFormat::Text => {
                    writeln!(
                        out,
                        "{} edges kept, {} dispensable",
                        sk.kept.len(),
                        sk.removed.len()
                    )?;
                    for (&(u, v), &z) in sk.removed.iter().zip(&sk.witness) {
                        writeln!(
                            out,
                            "  {} {} dispensable by {}",
                            g.label(u),
                            g.label(v),
                            g.label(z)
                        )?;
                    }
                }
            }
            Ok(())
        }
        Command::Backbone { input, seed, json } => {
            let g = read_graph(&input, stdin)?;
            let b = backbone(&g);
            let order = match seed {
                Some(s) => backbone_bfs_shuffled(&g, s),
                None => backbone_bfs(&g),
            };
            let order = match order {
                Ok(o) => Some(o),
                Err(Error::EmptyBackbone) => None,
                Err(e) => return Err(e.into()),
            };
            let labels = |vs: &[VertexId]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();
            if json {
                return print_json(
                    out,
                    &json!({
                        "backbone": labels(&b.vertices),
                        "guaranteed": b.guaranteed,
                        "order": order.as_ref().map(|o| labels(&o.order)),
                        "components": order.as_ref().map_or(0, |o| o.components),
                    }),
                );
            }
            if b.vertices.is_empty() {
                writeln!(out, "backbone: empty")?;
                return Ok(());
            }
            writeln!(out, "backbone: {}", labels(&b.vertices).join(" "))?;
            if !b.guaranteed {
                writeln!(
                    out,
                    "graph is not thin: connectivity and domination not guaranteed"
                )?;
            }
            if let Some(o) = order {
                writeln!(
                    out,
                    "order ({} component{}):",
                    o.components,
                    if o.components == 1 { "" } else { "s" }
                )?;
                for (v, p) in o.order.iter().zip(&o.parent) {
                    match p {
                        Some(p) => writeln!(out, "  {} from {}", g.label(*v), g.label(*p))?,
                        None => writeln!(out, "  {} root", g.label(*v))?,
                    }
                }
            }
            Ok(())
        }
        Command::Quotient(args) => {
            let g = read_graph(&args.input, stdin)?;
            let q = quotient(&g);
            let names: Vec<String> = q.classes.iter().map(|c| g.label(c[0])).collect();
            let qg = q.graph.clone().with_labels(names.clone());
            if args.json {
                return print_json(
                    out,
                    &json!({
                        "classes": q.classes.iter().map(|c| c.iter().map(|&v| g.label(v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                        "edges": q.graph.edges().collect::<Vec<_>>(),
                    }),
                );
            }
            match args.out {
                OutFormat::Edges => write!(out, "{}", emit_edge_list(&qg))?,
                OutFormat::Dot => write!(out, "{}", emit_dot(&qg, None))?,
                OutFormat::Text => {
                    writeln!(out, "{} classes from {} vertices", q.classes.len(), g.n())?;
                    for (i, c) in q.classes.iter().enumerate() {
                        let members: Vec<String> = c.iter().map(|&v| g.label(v)).collect();
                        writeln!(out, "  class {i} (size {}): {}", c.len(), members.join(" "))?;
                    }
                    writeln!(out, "edges:")?;
                    for (a, b) in q.graph.edges() {
                        writeln!(out, "  {a} {b}")?;
                    }
                }
            }
            Ok(())
        }
        Command::Approx {
            args,
            min_prime_factors,
            strategy,
            neighborhoods_only,
        } => {
            let g = read_graph(&args.input, stdin)?;
            let cfg = ApproxConfig {
                min_prime_factors,
                strategy: strategy.into(),
                use_edge_and_nstar: !neighborhoods_only,
            };
            let r = approx_factorize(&g, &cfg)?;
            let cand_edges = |c: &crate::approx::Candidate| {
                c.graph
                    .edges()
                    .map(|(a, b)| (g.label(c.vertices[a]), g.label(c.vertices[b])))
                    .collect::<Vec<_>>()
            };
            if args.json {
                return print_json(
                    out,
                    &json!({
                        "candidates": r.candidate_factors.iter().map(|c| json!({
                            "vertices": c.vertices.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
                            "edges": cand_edges(c),
                            "components": c.components,
                        })).collect::<Vec<_>>(),
                        "skipped": r.skipped_regions.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
                        "aligned_distance": r.aligned_distance,
                        "fallback": r.used_fallback,
                    }),
                );
            }
            match args.out {
                OutFormat::Dot => write!(out, "{}", emit_dot(&g, Some(&r.coloring)))?,
                OutFormat::Edges => {
                    for (k, c) in r.candidate_factors.iter().enumerate() {
                        writeln!(out, "# candidate {k}")?;
                        for (a, b) in cand_edges(c) {
                            writeln!(out, "{a} {b}")?;
                        }
                    }
                }
                OutFormat::Text => {
                    writeln!(
                        out,
                        "{} candidate factor{}",
                        r.candidate_factors.len(),
                        if r.candidate_factors.len() == 1 {
                            ""
                        } else {
                            "s"
                        }
                    )?;
                    for (k, c) in r.candidate_factors.iter().enumerate() {
                        writeln!(
                            out,
                            "\ncandidate {k}: {} vertices, {} edges (1 of {} components)",
                            c.graph.n(),
                            c.graph.m(),
                            c.components
                        )?;
                        let es: Vec<String> = cand_edges(c)
                            .iter()
                            .map(|(a, b)| format!("{a}-{b}"))
                            .collect();
                        writeln!(out, "  edges: {}", es.join(" "))?;
                    }
                    if !r.skipped_regions.is_empty() {
                        let s: Vec<String> =
                            r.skipped_regions.iter().map(|&v| g.label(v)).collect();
                        writeln!(out, "\nnot covered: {}", s.join(" "))?;
                    }
                    if let Some(d) = r.aligned_distance {
                        writeln!(out, "aligned distance to the product of candidates: {d}")?;
                    }
                }
            }
            Ok(())
        }
        Command::Generate {
            spec,
            seed,
            out: fmt,
        } => {
            let g = generate_seeded(&spec, seed)?.with_default_labels();
            match fmt {
                GraphFormat::Edges => write!(out, "{}", emit_edge_list(&g))?,
                GraphFormat::Dot => write!(out, "{}", emit_dot(&g, None))?,
                GraphFormat::Graph6 => writeln!(out, "{}", emit_graph6(&g))?,
            }
            Ok(())
        }
        Command::Perturb {
            input,
            edits,
            seed,
            json,
        } => {
            let mut g = read_graph(&input, stdin)?;
            let mut log = EditLog::default();
            for (i, text) in edits.iter().enumerate() {
                let edit = parse_edit(&g, text)?;
                let (next, step) =
                    perturb(&g, &[edit], seed.wrapping_add(i as u64)).map_err(|e| match e {
                        Error::EditRejected { reason, .. } => {
                            Failure::Usage(format!("edit {i} (`{text}`) rejected: {reason}"))
                        }
                        other => other.into(),
                    })?;
                g = next;
                log.records.extend(step.records);
            }
            if json {
                return print_json(
                    out,
                    &json!({
                        "log": log.records,
                        "net_distance": log.net_distance(),
                        "edges": g.edges().map(|(u, v)| (g.label(u), g.label(v))).collect::<Vec<_>>(),
                    }),
                );
            }
            for r in &log.records {
                writeln!(out, "# {r}")?;
            }
            writeln!(out, "# net distance {}", log.net_distance())?;
            write!(out, "{}", emit_edge_list(&g))?;
            Ok(())
        }
        Command::Oracle { input, limit, json } => {
            let g = read_graph(&input, stdin)?;
            let f = brute_force_pfd(&g, limit)?;
            if json {
                return print_json(
                    out,
                    &serde_json::to_value(factorization_json(&g, &f)).expect("serializable"),
                );
            }
            if f.len() <= 1 {
                writeln!(out, "prime")?;
            } else {
                writeln!(out, "{} prime factors", f.len())?;
                for h in &f.factors {
                    let es: Vec<String> = h.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                    writeln!(out, "  {} vertices: {}", h.n(), es.join(" "))?;
                }
            }
            Ok(())
        }
        Command::Selftest { max_n } => {
            if max_n > MAX_ENUMERATED {
                return Err(Failure::Usage(format!(
                    "--max-n is at most {MAX_ENUMERATED}"
                )));
            }
            let mut bad = Vec::new();
            for n in 1..=max_n {
                let graphs = enumerate_connected_graphs(n)?;
                for g in &graphs {
                    let oracle = brute_force_pfd(g, max_n)?;
                    let global = classical_strong_pfd(g)?;
                    let local = pfd(g)?;
                    if !same_factors(&oracle.factors, &global.factors)
                        || !same_factors(&oracle.factors, &local.factors)
                    {
                        bad.push(emit_graph6(g));
                    }
                }
                writeln!(out, "n={n}: {} graphs", graphs.len())?;
            }
            if bad.is_empty() {
                writeln!(out, "all pipelines agree with the oracle")?;
                Ok(())
            } else {
                Err(Failure::Internal(format!(
                    "disagreement on {}",
                    bad.join(", ")
                )))
            }
        }
    }
}

fn check(g: &Graph, f: &Factorization) -> Outcome {
    if f.verify(g) {
        Ok(())
    } else {
        Err(Failure::Internal("factors do not rebuild the input".into()))
    }
}

fn emit_factorization(
    out: &mut dyn Write,
    g: &Graph,
    f: &Factorization,
    coloring: &PartialColoring,
    args: &FactorArgs,
    mut extra: serde_json::Value,
) -> Outcome {
    if args.json {
        let mut v = serde_json::to_value(factorization_json(g, f)).expect("serializable");
        if let (Some(obj), Some(more)) = (v.as_object_mut(), extra.as_object_mut()) {
            obj.append(more);
        }
        return print_json(out, &v);
    }
    match args.out {
        OutFormat::Text => write!(out, "{}", factor_report(g, f))?,
        OutFormat::Dot => {
            for line in factor_report(g, f).lines() {
                writeln!(out, "// {line}")?;
            }
            write!(out, "{}", emit_dot(g, Some(coloring)))?;
        }
        OutFormat::Edges => {
            for (k, h) in f.factors.iter().enumerate() {
                writeln!(out, "# factor {k}")?;
                write!(out, "{}", emit_edge_list(&h.clone().with_default_labels()))?;
            }
        }
    }
    Ok(())
}

fn resolve(g: &Graph, label: &str) -> Result<VertexId, Failure> {
    g.vertices()
        .find(|&v| g.label(v) == label)
        .ok_or_else(|| Failure::Usage(format!("no vertex labeled `{label}`")))
}

fn resolve_list(g: &Graph, list: &str) -> Result<Vec<VertexId>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| resolve(g, s))
        .collect()
}

fn parse_edit(g: &Graph, text: &str) -> Result<Edit, Failure> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let bad = || Failure::Usage(format!("cannot parse edit `{text}`"));
    Ok(match words.as_slice() {
        ["add", u, v] => Edit::AddEdge(resolve(g, u)?, resolve(g, v)?),
        ["del", u, v] => Edit::DeleteEdge(resolve(g, u)?, resolve(g, v)?),
        ["add-vertex", list] => Edit::AddVertex(resolve_list(g, list)?),
        ["del-vertex", u] => Edit::DeleteVertex(resolve(g, u)?),
        ["add-random"] => Edit::AddRandomEdge,
        ["del-random"] => Edit::DeleteRandomEdge(None),
        _ => return Err(bad()),
    })
}
