use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `|V(g) △ V(h)| + |E(g) △ E(h)|` with vertices identified by label.
///
/// This is the distance under one fixed alignment, so it bounds the true
/// edit distance from above.
pub fn aligned_distance(g: &Graph, h: &Graph) -> Result<usize> {
    let (lg, lh) = match (g.labels(), h.labels()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Unlabeled),
    };
    let vg: HashSet<&str> = lg.iter().map(String::as_str).collect();
    let vh: HashSet<&str> = lh.iter().map(String::as_str).collect();
    let eg = labeled_edges(g, lg);
    let eh = labeled_edges(h, lh);
    Ok(vg.symmetric_difference(&vh).count() + eg.symmetric_difference(&eh).count())
}

fn labeled_edges<'a>(g: &Graph, labels: &'a [String]) -> HashSet<(&'a str, &'a str)> {
    g.edges()
        .map(|(u, v)| {
            let (a, b) = (labels[u].as_str(), labels[v].as_str());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}
