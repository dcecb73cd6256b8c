//! List the dispensable edges of `P3 ⊠ P3` and the vertex that certifies each.

use spfd::graph::Graph;
use spfd::products::strong_product;
use spfd::skeleton::cartesian_skeleton;

fn main() -> spfd::Result<()> {
    let (g, coords) = strong_product(&[Graph::path(3), Graph::path(3)])?;
    let s = cartesian_skeleton(&g)?;
    println!("kept {} edges, removed {}", s.kept.len(), s.removed.len());
    for (&(u, v), &z) in s.removed.iter().zip(&s.witness) {
        println!(
            "  {:?} - {:?} dispensable by {:?}",
            coords.of(u),
            coords.of(v),
            coords.of(z)
        );
    }
    Ok(())
}
