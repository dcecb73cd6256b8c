//! Compare both pipelines with brute force on every connected graph up to
//! six vertices.

use spfd::local::pfd;
use spfd::oracle::{brute_force_pfd, enumerate_connected_graphs};
use spfd::products::same_factors;
use spfd::skeleton::classical_strong_pfd;

fn main() -> spfd::Result<()> {
    for n in 1..=6 {
        let graphs = enumerate_connected_graphs(n)?;
        let mut composite = 0;
        for g in &graphs {
            let oracle = brute_force_pfd(g, 6)?;
            assert!(same_factors(
                &oracle.factors,
                &classical_strong_pfd(g)?.factors
            ));
            assert!(same_factors(&oracle.factors, &pfd(g)?.factors));
            composite += usize::from(oracle.len() > 1);
        }
        println!(
            "n={n}: {} graphs, {composite} composite, all agree",
            graphs.len()
        );
    }
    Ok(())
}
