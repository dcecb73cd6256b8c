//! Backbone of a thin product and the BFS order the local cover walks.

use spfd::graph::Graph;
use spfd::products::strong_product;
use spfd::thinness::{backbone, backbone_bfs, backbone_bfs_shuffled};

fn main() -> spfd::Result<()> {
    let (g, coords) = strong_product(&[Graph::path(4), Graph::path(5)])?;
    let b = backbone(&g);
    println!(
        "{} of {} vertices are in the backbone:",
        b.vertices.len(),
        g.n()
    );
    for &v in &b.vertices {
        println!("  {v} at {:?}", coords.of(v));
    }
    println!("bfs order:      {:?}", backbone_bfs(&g)?.order);
    println!("shuffled order: {:?}", backbone_bfs_shuffled(&g, 11)?.order);
    Ok(())
}
