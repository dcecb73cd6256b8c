//! Trace the local cover on graphs where color continuation succeeds, fails
//! and is repaired, or depends on the backbone order.

use spfd::fixtures;
use spfd::graph::Graph;
use spfd::local::{local_pfd_with, BackboneOrdering, LocalOptions};

fn trace(name: &str, g: &Graph, ordering: BackboneOrdering) -> spfd::Result<()> {
    let (f, cover) = local_pfd_with(g, &LocalOptions { ordering })?;
    println!("{name}: {} factors, order {:?}", f.len(), cover.order);
    for e in &cover.events {
        println!("  {e:?}");
    }
    println!("  {:?}", cover.stats);
    Ok(())
}

fn main() -> spfd::Result<()> {
    trace(
        "adjacent centers",
        &fixtures::continuation_works(),
        BackboneOrdering::Bfs,
    )?;
    trace(
        "hypercube repair",
        &fixtures::continuation_fails(),
        BackboneOrdering::Explicit(fixtures::continuation_fails_order()),
    )?;
    let g = fixtures::order_sensitive();
    trace(
        "edge-neighborhood route",
        &g,
        BackboneOrdering::Explicit(fixtures::order_with_edge_neighborhood()),
    )?;
    trace(
        "N* route",
        &g,
        BackboneOrdering::Explicit(fixtures::order_with_nstar()),
    )?;
    Ok(())
}
