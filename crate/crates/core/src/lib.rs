//! Path partitions and path covers of graphs: verification, exact search,
//! and the structural-parameter algorithms (DAG matching, XP terminal
//! enumeration, neighborhood-diversity ILP, vertex-cover matching) together
//! with generators for the hardness reductions.

pub mod checker;
pub mod dag_pp;
pub mod forge;
pub mod graph;
pub mod ilp;
pub mod io;
pub mod matching;
pub mod nd;
pub mod oracle;
pub mod random;
pub mod spp_xp;
pub mod vc;

pub use checker::{CoverMode, PathKind, PathSystem, Variant};
pub use graph::{DistanceMatrix, Graph, GraphError};
