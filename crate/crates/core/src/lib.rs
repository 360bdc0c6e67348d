//! Exact Roman domination and Roman bondage numbers for small graphs.
//!
//! * [`graph`] and [`format`]: bit-row graphs and the edge-list format.
//! * [`family`]: complete multipartite graphs and (n-3)-regular graphs.
//! * [`roman`]: `gamma_R` and `gamma` with optimal witnesses.
//! * [`bondage`] and [`witness`]: exact bondage numbers by deepening
//!   subset search, and explicit bondage sets for the two families.
//! * [`oracle`]: closed-form values for the families.
//! * [`audit`]: structural checks on minimum bondage sets.
//! * [`cli`]: the `rbond` command line.

pub mod audit;
pub mod bondage;
pub mod cli;
pub mod family;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod roman;
pub mod witness;

pub use bondage::{bondage_classical, bondage_roman, BondageError, BondageResult, SearchOptions};
pub use family::{CoCycleSpec, PartiteSpec};
pub use graph::{Edge, EdgeSet, Graph, GraphError, VertexSet};
pub use roman::{gamma, gamma_roman, is_valid_rdf, GammaResult, RomanAssignment};
