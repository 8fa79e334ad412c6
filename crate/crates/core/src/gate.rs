//! The reversible gate library.
//!
//! Every gate is an n×n bijection on its ports. Port 0 is the first line the
//! gate is placed on; for all multi-line gates here it is the control and
//! passes through unchanged.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::analysis::LogicCounts;
use crate::bits::BitVector;
use crate::table::{self, EnumerationTooLarge, ParityCheck, TruthTable};

/// Quantum cost assumed for the TR gate unless configured otherwise.
pub const DEFAULT_TR_COST: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GateError {
    #[error("gate {gate} expects {expected} input bits, got {found}")]
    WidthMismatch {
        gate: &'static str,
        expected: usize,
        found: usize,
    },
}

/// The gates known to the toolkit. The declaration order is the order terms
/// appear in symbolic cost expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Mux,
    Feynman,
    DoubleFeynman,
    Fredkin,
    Tr,
    Not,
}

impl GateKind {
    pub const ALL: [GateKind; 6] = [
        GateKind::Mux,
        GateKind::Feynman,
        GateKind::DoubleFeynman,
        GateKind::Fredkin,
        GateKind::Tr,
        GateKind::Not,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GateKind::Mux => "MUX",
            GateKind::Feynman => "FEYNMAN",
            GateKind::DoubleFeynman => "DOUBLE_FEYNMAN",
            GateKind::Fredkin => "FREDKIN",
            GateKind::Tr => "TR",
            GateKind::Not => "NOT",
        }
    }

    /// Short letter used in cost formulas such as `2m+2F`.
    pub fn letter(self) -> &'static str {
        match self {
            GateKind::Mux => "m",
            GateKind::Feynman => "F",
            GateKind::DoubleFeynman => "D",
            GateKind::Fredkin => "fr",
            GateKind::Tr => "TR",
            GateKind::Not => "N",
        }
    }

    /// Resolves a canonical name or a common alias.
    pub fn from_name(name: &str) -> Option<Self> {
        let kind = match name.to_ascii_uppercase().as_str() {
            "MUX" | "MG" => GateKind::Mux,
            "FEYNMAN" | "FG" | "CNOT" => GateKind::Feynman,
            "DOUBLE_FEYNMAN" | "F2G" => GateKind::DoubleFeynman,
            "FREDKIN" | "FRG" => GateKind::Fredkin,
            "TR" => GateKind::Tr,
            "NOT" => GateKind::Not,
            _ => return None,
        };
        Some(kind)
    }

    pub fn width(self) -> usize {
        match self {
            GateKind::Not => 1,
            GateKind::Feynman => 2,
            _ => 3,
        }
    }

    pub fn equations(self) -> &'static str {
        match self {
            GateKind::Mux => "P=A, Q=A^B^C, R=A'C^AB",
            GateKind::Feynman => "P=A, Q=A^B",
            GateKind::DoubleFeynman => "P=A, Q=A^B, R=A^C",
            GateKind::Fredkin => "P=A, Q=A'B^AC, R=A'C^AB",
            GateKind::Tr => "P=A, Q=A^B, R=AB'^C",
            GateKind::Not => "P=A'",
        }
    }

    /// XOR/AND/NOT operations appearing in the output equations.
    pub fn logic_counts(self) -> LogicCounts {
        match self {
            GateKind::Mux => LogicCounts::new(3, 2, 1),
            GateKind::Feynman => LogicCounts::new(1, 0, 0),
            GateKind::DoubleFeynman => LogicCounts::new(2, 0, 0),
            GateKind::Fredkin => LogicCounts::new(2, 4, 2),
            GateKind::Tr => LogicCounts::new(2, 1, 1),
            GateKind::Not => LogicCounts::new(0, 0, 1),
        }
    }

    /// True when swapping the two target ports yields the same gate.
    pub fn targets_commute(self) -> bool {
        matches!(self, GateKind::DoubleFeynman | GateKind::Fredkin)
    }

    /// Applies the gate to port bits packed with port 0 in bit 0.
    pub(crate) fn apply(self, x: u64) -> u64 {
        let bit = |i: u32| (x >> i) & 1;
        let (a, b, c) = (bit(0), bit(1), bit(2));
        let na = a ^ 1;
        match self {
            GateKind::Not => na,
            GateKind::Feynman => a | (a ^ b) << 1,
            GateKind::DoubleFeynman => a | (a ^ b) << 1 | (a ^ c) << 2,
            GateKind::Fredkin => a | ((na & b) ^ (a & c)) << 1 | ((na & c) ^ (a & b)) << 2,
            GateKind::Mux => a | (a ^ b ^ c) << 1 | ((na & c) ^ (a & b)) << 2,
            GateKind::Tr => a | (a ^ b) << 1 | ((a & (b ^ 1)) ^ c) << 2,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gate {
    kind: GateKind,
    quantum_cost: u32,
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn width(&self) -> usize {
        self.kind.width()
    }

    pub fn quantum_cost(&self) -> u32 {
        self.quantum_cost
    }

    pub fn logic_counts(&self) -> LogicCounts {
        self.kind.logic_counts()
    }

    pub fn equations(&self) -> &'static str {
        self.kind.equations()
    }
}

/// The gate catalog. Costs are fixed except TR, whose cost is configurable.
#[derive(Debug, Clone)]
pub struct GateLibrary {
    gates: BTreeMap<GateKind, Gate>,
}

impl Default for GateLibrary {
    fn default() -> Self {
        Self::with_tr_cost(DEFAULT_TR_COST)
    }
}

impl GateLibrary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_tr_cost(tr_cost: u32) -> Self {
        let gates = GateKind::ALL
            .iter()
            .map(|&kind| {
                let quantum_cost = match kind {
                    GateKind::Mux => 4,
                    GateKind::Feynman => 1,
                    GateKind::DoubleFeynman => 2,
                    GateKind::Fredkin => 5,
                    GateKind::Tr => tr_cost,
                    GateKind::Not => 1,
                };
                (kind, Gate { kind, quantum_cost })
            })
            .collect();
        Self { gates }
    }

    pub fn gate(&self, kind: GateKind) -> &Gate {
        &self.gates[&kind]
    }

    /// Looks a gate up by name or alias.
    pub fn get(&self, name: &str) -> Option<&Gate> {
        GateKind::from_name(name).map(|k| self.gate(k))
    }

    pub fn tr_cost(&self) -> u32 {
        self.gate(GateKind::Tr).quantum_cost
    }

    pub fn iter(&self) -> impl Iterator<Item = &Gate> {
        self.gates.values()
    }
}

pub fn eval_gate(gate: &Gate, input: &BitVector) -> Result<BitVector, GateError> {
    if input.width() != gate.width() {
        return Err(GateError::WidthMismatch {
            gate: gate.name(),
            expected: gate.width(),
            found: input.width(),
        });
    }
    let out = gate.kind.apply(input.encoding());
    Ok(BitVector::decode(out, gate.width()).expect("gate output fits its width"))
}

pub fn gate_truth_table(gate: &Gate) -> Result<TruthTable, EnumerationTooLarge> {
    gate_truth_table_bounded(gate, table::DEFAULT_ENUMERATION_BOUND)
}

pub fn gate_truth_table_bounded(
    gate: &Gate,
    bound: usize,
) -> Result<TruthTable, EnumerationTooLarge> {
    table::check_bound(gate.width(), bound)?;
    let w = gate.width();
    Ok(TruthTable::tabulate(w, w, |x| {
        eval_gate(gate, &x).expect("width matches")
    }))
}

/// Exhaustive parity check over all `2^n` inputs of the gate.
pub fn is_parity_preserving_gate(gate: &Gate) -> ParityCheck {
    let table = gate_truth_table(gate).expect("library gates are narrow");
    table::is_parity_preserving(&table)
}
