//! Reconstruction of netlists from gate inventories and a target function,
//! and the frozen canonical circuits that came out of it.

mod canonical;
mod constraints;
mod search;

pub use canonical::{
    canonical_circuit, canonical_circuits, canonical_comparison, CanonicalCircuit, CANONICAL_NAMES,
    PROVENANCE,
};
pub use constraints::{ConstraintsError, SearchConstraints};
pub use search::{
    estimate_space, search_netlist, SearchError, SearchOptions, SearchResult, DEFAULT_CEILING,
    MAX_SEARCH_INPUTS,
};
