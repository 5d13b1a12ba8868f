//! Exact broadcast independence, packing and independence numbers of small
//! graphs, the independent-set witness families that certify
//! `α ≥ α_b / 2`-type bounds from a broadcast, and a seeded randomized
//! construction of graphs with large girth and minimum degree whose ratio
//! `α_b / α` approaches 2.

mod bitset;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod solvers;
pub mod witness;

pub use error::{Error, Result};
pub use extremal::{run_construction, ConstructionOptions, ConstructionReport};
pub use graph::{families, Graph};
pub use io::{parse_graph, serialize_graph, Format};
pub use solvers::{Broadcast, Budget, SolverResult};
pub use witness::{verify_witness, witness_thm1, witness_thm3i, witness_thm3ii, Theorem, WitnessFamily, Xi};
