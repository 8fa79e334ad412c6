use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use super::{InputRole, ValidatedCircuit};
use crate::bits::BitVector;
use crate::gate::eval_gate;
use crate::table::{self, EnumerationTooLarge, TruthTable, DEFAULT_ENUMERATION_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("no value given for input `{0}`")]
    MissingInput(String),
    #[error("`{0}` is not an input of this circuit")]
    ExtraInput(String),
    #[error("circuit has no named inputs")]
    NoFreeInputs,
    #[error(transparent)]
    TooLarge(#[from] EnumerationTooLarge),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMode {
    /// Every line is enumerated; constant roles are ignored.
    AllLines,
    /// Only named inputs are enumerated; constants stay pinned.
    FreeInputs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simulation {
    /// Named output values keyed by label.
    pub outputs: BTreeMap<String, bool>,
    /// Final value of every line.
    pub state: BitVector,
    /// 1-based indices of garbage lines.
    pub garbage: Vec<usize>,
}

/// Runs every instance in order on a full line state.
pub(crate) fn run(circuit: &ValidatedCircuit, initial: BitVector) -> BitVector {
    circuit.steps().fold(initial, |mut state, (gate, lines)| {
        let ports: Vec<bool> = lines.iter().map(|&l| state.get(l)).collect();
        let input = BitVector::from_bools(&ports).expect("gate width is positive");
        let output = eval_gate(gate, &input).expect("validated arity");
        for (port, &l) in lines.iter().enumerate() {
            state.set(l, output.get(port));
        }
        state
    })
}

/// Initial line state for a free-input assignment packed in input order.
pub(crate) fn initial_state(circuit: &ValidatedCircuit, free: u64) -> BitVector {
    let mut state = BitVector::zeros(circuit.line_count()).expect("validated line count");
    let mut next = 0;
    for (i, line) in circuit.lines.iter().enumerate() {
        let value = match line.input {
            InputRole::Const(v) => v,
            InputRole::Named(_) => {
                let v = (free >> next) & 1 == 1;
                next += 1;
                v
            }
        };
        state.set(i, value);
    }
    state
}

pub fn simulate(
    circuit: &ValidatedCircuit,
    free_inputs: &BTreeMap<String, bool>,
) -> Result<Simulation, SimError> {
    for label in free_inputs.keys() {
        if !circuit.named_inputs().any(|(_, l)| l == label) {
            return Err(SimError::ExtraInput(label.clone()));
        }
    }
    let mut packed = 0u64;
    for (n, (_, label)) in circuit.named_inputs().enumerate() {
        let v = *free_inputs
            .get(label)
            .ok_or_else(|| SimError::MissingInput(label.to_string()))?;
        packed |= u64::from(v) << n;
    }
    let state = run(circuit, initial_state(circuit, packed));
    let outputs = circuit
        .named_outputs()
        .map(|(i, label)| (label.to_string(), state.get(i)))
        .collect();
    Ok(Simulation {
        outputs,
        state,
        garbage: circuit.garbage_lines().map(|i| i + 1).collect(),
    })
}

pub fn circuit_truth_table(
    circuit: &ValidatedCircuit,
    mode: TableMode,
) -> Result<TruthTable, SimError> {
    circuit_truth_table_bounded(circuit, mode, DEFAULT_ENUMERATION_BOUND)
}

/// Enumerates the circuit. In [`TableMode::FreeInputs`] the input column
/// holds the named inputs in line order and the output column holds the
/// full final line state.
pub fn circuit_truth_table_bounded(
    circuit: &ValidatedCircuit,
    mode: TableMode,
    bound: usize,
) -> Result<TruthTable, SimError> {
    let lines = circuit.line_count();
    let width = match mode {
        TableMode::AllLines => lines,
        TableMode::FreeInputs => circuit.named_inputs().count(),
    };
    if width == 0 {
        return Err(SimError::NoFreeInputs);
    }
    table::check_bound(width, bound)?;
    let rows = (0..1u64 << width)
        .into_par_iter()
        .map(|x| {
            let input = BitVector::decode(x, width).expect("in range");
            let start = match mode {
                TableMode::AllLines => input,
                TableMode::FreeInputs => initial_state(circuit, x),
            };
            (input, run(circuit, start))
        })
        .collect();
    Ok(TruthTable::from_sorted_rows(width, lines, rows))
}
