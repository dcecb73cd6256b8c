//! Prime factor decomposition of graphs with respect to the strong product.
//!
//! Two decomposition pipelines are provided. [`skeleton::classical_strong_pfd`]
//! works globally: it strips a complete factor, passes to the quotient by
//! equal closed neighborhoods, computes the Cartesian skeleton and factors
//! that with respect to the Cartesian product. [`local::pfd`] covers the graph
//! by small subproducts (closed neighborhoods and their relatives), factors
//! each one, and stitches the local edge colorings into a global one.
//!
//! The [`approx`] module runs the local machinery on perturbed products and
//! extracts approximate factors; [`oracle`] is an independent brute-force
//! factorizer for small graphs.
//!
//! ```
//! use spfd::{graph::Graph, products::strong_product, local::pfd};
//!
//! let (g, _) = strong_product(&[Graph::path(3), Graph::path(4)]).unwrap();
//! let f = pfd(&g).unwrap();
//! assert_eq!(f.factors.len(), 2);
//! assert!(f.verify(&g));
//! ```

pub mod approx;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod iso;
pub mod local;
pub mod oracle;
pub mod products;
pub mod skeleton;
pub mod thinness;
pub mod union_find;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexId, VertexMap};
pub use products::{Coordinates, Factorization, ProductKind};
