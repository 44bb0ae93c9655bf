//! graphon-lab: exact and Monte Carlo machinery for graphons and the random
//! graphs G(n,W) they generate — stepfunctions, structured {0,1}-valued
//! graphons, subgraph densities, and entropy computations, all with exact
//! rational arithmetic where feasibility allows.

pub mod bigraph;
pub mod constructions;
pub mod densities;
pub mod entropy;
pub mod error;
pub mod graph;
pub mod info;
pub mod sampling;
pub mod spec;
pub mod step;

pub use bigraph::Bigraph;
pub use error::{Error, Result};
pub use graph::LabeledGraph;
pub use sampling::RngStream;
pub use spec::GraphonSpec;
pub use step::{Delta1Bound, StepFunction};
