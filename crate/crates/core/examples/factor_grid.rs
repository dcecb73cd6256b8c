//! Factor a strong product of a path and a cycle with both pipelines.

use spfd::graph::Graph;
use spfd::io::factor_report;
use spfd::local::local_pfd;
use spfd::products::strong_product;
use spfd::skeleton::classical_strong_pfd;

fn main() -> spfd::Result<()> {
    let (g, _) = strong_product(&[Graph::path(4), Graph::cycle(5)])?;
    let global = classical_strong_pfd(&g)?;
    let local = local_pfd(&g)?;
    print!("{}", factor_report(&g, &local));
    println!();
    println!(
        "global pipeline found {} factors, local {}",
        global.len(),
        local.len()
    );
    println!(
        "product of local factors rebuilds the input: {}",
        local.verify(&g)
    );
    Ok(())
}
