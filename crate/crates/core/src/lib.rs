//! Reversible logic toolkit: a small gate library, netlists with a text
//! format, exhaustive simulation, cost metrics, and bounded reconstruction
//! of adder/subtractor circuits.

pub mod analysis;
pub mod bits;
pub mod gate;
pub mod netlist;
pub mod reconstruct;
pub mod table;

pub use analysis::{LogicCounts, MetricsReport, SpecFunction};
pub use bits::BitVector;
pub use gate::{eval_gate, Gate, GateKind, GateLibrary};
pub use netlist::{Circuit, ValidatedCircuit};
pub use table::TruthTable;
