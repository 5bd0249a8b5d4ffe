//! Distance-`k` metric dimension of graphs: exact solver, closed forms,
//! extremal constructions and an experiment harness.

pub mod bitset;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod lab;
pub mod solver;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Diameter, Graph, TruncatedMetric, TwinPartition};
pub use solver::{solve_dim, solve_dim_k, Certificate, Method, SolveOptions};
