//! A non-thin graph, its quotient, and how complete factors come back.

use spfd::graph::Graph;
use spfd::local::pfd;
use spfd::products::strong_product;
use spfd::thinness::{is_thin, quotient};

fn main() -> spfd::Result<()> {
    let (g, _) = strong_product(&[Graph::complete(2), Graph::path(3), Graph::cycle(4)])?;
    let q = quotient(&g);
    println!("input: {} vertices, thin: {}", g.n(), is_thin(&g));
    println!(
        "quotient: {} vertices, class sizes {:?}",
        q.graph.n(),
        q.class_sizes
    );
    let f = pfd(&g)?;
    for (i, h) in f.factors.iter().enumerate() {
        println!("factor {i}: {} vertices, {} edges", h.n(), h.m());
    }
    Ok(())
}
