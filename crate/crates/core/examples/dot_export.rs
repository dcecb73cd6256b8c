//! Write the product coloring of a factorization as Graphviz DOT.

use spfd::approx::generate;
use spfd::io::{emit_dot, factor_coloring};
use spfd::local::pfd;

fn main() -> spfd::Result<()> {
    let g = generate("strong(path(3), path_with_triangle(4))")?;
    let f = pfd(&g)?;
    let coloring = factor_coloring(&g, &f)?;
    print!("{}", emit_dot(&g, Some(&coloring)));
    Ok(())
}
