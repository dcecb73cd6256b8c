//! A prime graph bundle that locally looks like `P3 ⊠ C4`.

use spfd::approx::{approx_factorize, ApproxConfig, ComponentStrategy};
use spfd::fixtures;
use spfd::local::pfd;

fn main() -> spfd::Result<()> {
    let g = fixtures::twisted_bundle();
    println!("exact factorization: {} factor(s)", pfd(&g)?.len());
    for strategy in [ComponentStrategy::Minimal, ComponentStrategy::Maximal] {
        let cfg = ApproxConfig {
            strategy,
            ..ApproxConfig::default()
        };
        let r = approx_factorize(&g, &cfg)?;
        let sizes: Vec<(usize, usize)> = r
            .candidate_factors
            .iter()
            .map(|c| (c.graph.n(), c.graph.m()))
            .collect();
        println!(
            "{strategy:?} candidates (vertices, edges): {sizes:?}, distance {:?}",
            r.aligned_distance
        );
    }
    Ok(())
}
