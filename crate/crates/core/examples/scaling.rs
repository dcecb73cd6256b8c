//! Time the local algorithm on `P_n ⊠ P_5` as `n` doubles.

use std::time::Instant;

use spfd::graph::Graph;
use spfd::local::local_pfd;
use spfd::products::strong_product;

fn main() -> spfd::Result<()> {
    let mut last = None;
    for n in [10, 20, 40, 80, 160] {
        let (g, _) = strong_product(&[Graph::path(n), Graph::path(5)])?;
        let best = (0..5)
            .map(|_| {
                let t = Instant::now();
                local_pfd(&g).map(|_| t.elapsed())
            })
            .collect::<spfd::Result<Vec<_>>>()?
            .into_iter()
            .min()
            .expect("five runs");
        let ratio = last.map(|l: std::time::Duration| best.as_secs_f64() / l.as_secs_f64());
        println!(
            "n={n:4} vertices={:4} {:8.2} ms  ratio {}",
            g.n(),
            best.as_secs_f64() * 1e3,
            ratio.map_or("-".into(), |r| format!("{r:.2}"))
        );
        last = Some(best);
    }
    Ok(())
}
