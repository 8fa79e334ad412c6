//! Cost metrics, functional equivalence and parity checks.

mod compare;
mod counts;
mod metrics;
mod spec;

pub use compare::{
    comparison_report, ComparisonReport, ComparisonRow, ExistingDesign, EXISTING_DESIGNS,
};
pub use counts::{LogicCounts, LogicDelta};
pub use metrics::{
    functional_equivalence, garbage_and_constants, parity_preservation, quantum_cost,
    total_logical_calculation, AnalysisError, Binding, CircuitParity, Equivalence, GateTally,
    MetricsReport, Mismatch, QuantumCost, SymbolicCost, REPORT_KEYS,
};
pub use spec::{SpecFunction, SPEC_NAMES};
