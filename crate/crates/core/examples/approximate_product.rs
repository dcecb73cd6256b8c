//! Delete a few diagonals from `P5 ⊠ P7^T` and recover the factors.

use spfd::approx::{approx_factorize, ApproxConfig};
use spfd::fixtures;

fn main() -> spfd::Result<()> {
    let g = fixtures::perturbed_path_product();
    let r = approx_factorize(&g, &ApproxConfig::default())?;
    println!(
        "{} colors, {} vertices outside every used view",
        r.candidate_factors.len(),
        r.skipped_regions.len()
    );
    for c in &r.candidate_factors {
        println!(
            "  color {}: {} vertices, {} edges, largest of {} components",
            c.color,
            c.graph.n(),
            c.graph.m(),
            c.components
        );
    }
    if let Some(d) = r.aligned_distance {
        println!("distance to the product of candidates: {d}");
    }
    println!("{:?}", r.stats);
    Ok(())
}
