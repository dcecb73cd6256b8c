//! Text formats: labeled edge lists, graph6, Graphviz DOT, factor reports.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::local::PartialColoring;
use crate::products::{classify_edge, EdgeClass, Factorization};

/// Parses lines `u v` with arbitrary whitespace-free labels. Labels get ids
/// in order of first appearance; a line with a single label declares a
/// vertex. `#` starts a comment. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |t: &str| -> usize {
        if let Some(&id) = ids.get(t) {
            return id;
        }
        ids.insert(t.to_string(), labels.len());
        labels.push(t.to_string());
        labels.len() - 1
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [a] => {
                intern(a);
            }
            [a, b] => {
                if a == b {
                    return Err(Error::Format {
                        line,
                        message: format!("self-loop at `{a}`"),
                    });
                }
                edges.push((intern(a), intern(b)));
            }
            _ => {
                return Err(Error::Format {
                    line,
                    message: format!("expected `u v`, found {} fields", tokens.len()),
                })
            }
        }
    }
    Ok(Graph::from_edges(labels.len(), edges).with_labels(labels))
}

/// Edges in lexicographic order, one `u v` line each, using labels. Vertex
/// declaration lines are prepended when edges alone would not reproduce the
/// vertex order on parsing.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for (u, v) in g.edges() {
        for w in [u, v] {
            if !std::mem::replace(&mut seen[w], true) {
                order.push(w);
            }
        }
    }
    let natural = order.len() == g.n() && order.iter().enumerate().all(|(i, &v)| i == v);
    if !natural {
        for v in g.vertices() {
            let _ = writeln!(out, "{}", g.label(v));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

/// Reads the first graph of a graph6 file, with or without the
/// `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .lines()
        .map(|l| l.trim_start_matches(">>graph6<<").trim())
        .find(|l| !l.is_empty())
        .ok_or(Error::Format {
            line: 1,
            message: "no graph6 data".into(),
        })?;
    let bad = |message: &str| Error::Format {
        line: 1,
        message: message.to_string(),
    };
    let bytes: Vec<u8> = line.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("graph6 bytes must lie in 63..=126"));
    }
    let vals: Vec<usize> = bytes.iter().map(|&b| (b - 63) as usize).collect();
    let (n, rest) = match vals.as_slice() {
        [63, 63, tail @ ..] if tail.len() >= 6 => {
            (tail[..6].iter().fold(0, |a, &x| a << 6 | x), &tail[6..])
        }
        [63, tail @ ..] if tail.len() >= 3 => {
            (tail[..3].iter().fold(0, |a, &x| a << 6 | x), &tail[3..])
        }
        [x, tail @ ..] if *x < 63 => (*x, tail),
        _ => return Err(bad("truncated graph6 header")),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if rest.len() * 6 < pairs {
        return Err(bad("graph6 adjacency is truncated"));
    }
    let bit = |k: usize| rest[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8);
    } else if n < 258_048 {
        out.push(63);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8));
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f",
];

/// Undirected DOT. With a coloring, colored edges take a palette color by
/// the rank of their canonical color and the rest are dashed gray.
pub fn emit_dot(g: &Graph, coloring: Option<&PartialColoring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(&g.label(v)));
    }
    let rank: HashMap<usize, usize> = coloring
        .map(|c| {
            c.canonical_colors()
                .into_iter()
                .enumerate()
                .map(|(i, c)| (c, i))
                .collect()
        })
        .unwrap_or_default();
    for (u, v) in g.edges() {
        match coloring {
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
            Some(c) => match c.color(u, v) {
                Some(k) => {
                    let r = rank[&k];
                    let _ = writeln!(
                        out,
                        "  {u} -- {v} [color=\"{}\", penwidth=2, class=\"c{r}\"];",
                        PALETTE[r % PALETTE.len()]
                    );
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v} [style=dashed, color=gray];");
                }
            },
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A coloring giving every Cartesian edge of a factorization the index of
/// its factor.
pub fn factor_coloring(g: &Graph, f: &Factorization) -> Result<PartialColoring> {
    let mut col = PartialColoring::new();
    let colors: Vec<usize> = (0..f.len()).map(|_| col.fresh_color()).collect();
    if f.len() <= 1 {
        if let Some(&c) = colors.first() {
            for e in g.edges() {
                col.paint(e, c);
            }
        }
        return Ok(col);
    }
    for (u, v) in g.edges() {
        if let EdgeClass::Cartesian(k) = classify_edge(&f.coords, u, v)? {
            col.paint((u, v), colors[k]);
        }
    }
    Ok(col)
}

/// One block per factor: vertex count, edge list, and the coordinate of
/// every host vertex in that factor.
pub fn factor_report(g: &Graph, f: &Factorization) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} vertices, {} edges, {} prime factor{}",
        g.n(),
        g.m(),
        f.len(),
        if f.len() == 1 { "" } else { "s" }
    );
    for (k, h) in f.factors.iter().enumerate() {
        let _ = writeln!(out, "\nfactor {k}: {} vertices, {} edges", h.n(), h.m());
        let edges: Vec<String> = h.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        let _ = writeln!(out, "  edges: {}", edges.join(" "));
        let _ = writeln!(out, "  coordinates:");
        for v in g.vertices() {
            let _ = writeln!(out, "    {} -> {}", g.label(v), f.coords.of(v)[k]);
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct FactorJson {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct FactorizationJson {
    pub vertices: usize,
    pub edges: usize,
    pub prime: bool,
    pub factors: Vec<FactorJson>,
    /// Host label and its coordinate tuple.
    pub coordinates: Vec<(String, Vec<usize>)>,
}

pub fn factorization_json(g: &Graph, f: &Factorization) -> FactorizationJson {
    FactorizationJson {
        vertices: g.n(),
        edges: g.m(),
        prime: f.len() <= 1,
        factors: f
            .factors
            .iter()
            .map(|h| FactorJson {
                vertices: h.n(),
                edges: h.edges().collect(),
            })
            .collect(),
        coordinates: g
            .vertices()
            .map(|v| (g.label(v), f.coords.of(v).to_vec()))
            .collect(),
    }
}
