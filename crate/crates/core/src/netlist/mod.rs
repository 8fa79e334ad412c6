//! Circuit netlists: lines with input/output roles and an ordered list of
//! gate instances. Instances run in listed order; there is no fan-out and
//! no feedback.

mod format;
mod sim;

use std::collections::HashSet;
use std::ops::Deref;

use thiserror::Error;

use crate::gate::{Gate, GateLibrary};

pub use format::{parse_netlist, serialize_netlist, ParseError, ParseErrorKind};
pub(crate) use sim::initial_state as initial_state_of;
pub use sim::{
    circuit_truth_table, circuit_truth_table_bounded, simulate, SimError, Simulation, TableMode,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InputRole {
    Named(String),
    Const(bool),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OutputRole {
    Named(String),
    Garbage,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    pub input: InputRole,
    pub output: OutputRole,
}

impl Line {
    pub fn input(label: impl Into<String>) -> Self {
        Self {
            input: InputRole::Named(label.into()),
            output: OutputRole::Garbage,
        }
    }

    pub fn constant(value: bool) -> Self {
        Self {
            input: InputRole::Const(value),
            output: OutputRole::Garbage,
        }
    }

    pub fn with_output(mut self, label: impl Into<String>) -> Self {
        self.output = OutputRole::Named(label.into());
        self
    }
}

/// A gate placed on lines. Line indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GateInstance {
    pub gate: String,
    pub lines: Vec<usize>,
}

impl GateInstance {
    pub fn new(gate: impl Into<String>, lines: impl Into<Vec<usize>>) -> Self {
        Self {
            gate: gate.into(),
            lines: lines.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub name: String,
    pub lines: Vec<Line>,
    pub instances: Vec<GateInstance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetlistError {
    #[error("circuit has no lines")]
    NoLines,
    #[error("instance {position}: unknown gate `{name}`")]
    UnknownGate { position: usize, name: String },
    #[error("instance {position}: gate {gate} takes {expected} lines, got {found}")]
    Arity {
        position: usize,
        gate: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("instance {position}: line {line} out of range 1..={count}")]
    LineOutOfRange {
        position: usize,
        line: usize,
        count: usize,
    },
    #[error("instance {position}: line {line} used twice")]
    DuplicateLine { position: usize, line: usize },
    #[error("label `{0}` used more than once")]
    DuplicateLabel(String),
}

impl Circuit {
    pub fn new(name: impl Into<String>, lines: Vec<Line>) -> Self {
        Self {
            name: name.into(),
            lines,
            instances: Vec::new(),
        }
    }

    /// Appends an instance; builder style.
    pub fn gate(mut self, gate: impl Into<String>, lines: impl Into<Vec<usize>>) -> Self {
        self.instances.push(GateInstance::new(gate, lines));
        self
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    /// Named inputs as (line index 0-based, label), in line order.
    pub fn named_inputs(&self) -> impl Iterator<Item = (usize, &str)> {
        self.lines
            .iter()
            .enumerate()
            .filter_map(|(i, l)| match &l.input {
                InputRole::Named(s) => Some((i, s.as_str())),
                InputRole::Const(_) => None,
            })
    }

    /// Named outputs as (line index 0-based, label), in line order.
    pub fn named_outputs(&self) -> impl Iterator<Item = (usize, &str)> {
        self.lines
            .iter()
            .enumerate()
            .filter_map(|(i, l)| match &l.output {
                OutputRole::Named(s) => Some((i, s.as_str())),
                OutputRole::Garbage => None,
            })
    }

    pub fn garbage_lines(&self) -> impl Iterator<Item = usize> + '_ {
        self.lines
            .iter()
            .enumerate()
            .filter(|(_, l)| l.output == OutputRole::Garbage)
            .map(|(i, _)| i)
    }

    pub fn constant_lines(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.lines
            .iter()
            .enumerate()
            .filter_map(|(i, l)| match l.input {
                InputRole::Const(v) => Some((i, v)),
                InputRole::Named(_) => None,
            })
    }

    pub fn validate(&self, library: &GateLibrary) -> Result<ValidatedCircuit, NetlistError> {
        let count = self.lines.len();
        if count == 0 {
            return Err(NetlistError::NoLines);
        }
        let mut labels = HashSet::new();
        for line in &self.lines {
            let names = [
                match &line.input {
                    InputRole::Named(s) => Some(s),
                    InputRole::Const(_) => None,
                },
                match &line.output {
                    OutputRole::Named(s) => Some(s),
                    OutputRole::Garbage => None,
                },
            ];
            for name in names.into_iter().flatten() {
                if !labels.insert(name.as_str()) {
                    return Err(NetlistError::DuplicateLabel(name.clone()));
                }
            }
        }
        let mut gates = Vec::with_capacity(self.instances.len());
        for (idx, inst) in self.instances.iter().enumerate() {
            let position = idx + 1;
            let gate = *library
                .get(&inst.gate)
                .ok_or_else(|| NetlistError::UnknownGate {
                    position,
                    name: inst.gate.clone(),
                })?;
            if inst.lines.len() != gate.width() {
                return Err(NetlistError::Arity {
                    position,
                    gate: gate.name(),
                    expected: gate.width(),
                    found: inst.lines.len(),
                });
            }
            let mut used = HashSet::new();
            for &line in &inst.lines {
                if line == 0 || line > count {
                    return Err(NetlistError::LineOutOfRange {
                        position,
                        line,
                        count,
                    });
                }
                if !used.insert(line) {
                    return Err(NetlistError::DuplicateLine { position, line });
                }
            }
            gates.push(gate);
        }
        Ok(ValidatedCircuit {
            circuit: self.clone(),
            gates,
        })
    }
}

/// A circuit whose invariants have been checked, with its gates resolved
/// against a library.
#[derive(Debug, Clone)]
pub struct ValidatedCircuit {
    circuit: Circuit,
    gates: Vec<Gate>,
}

impl ValidatedCircuit {
    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    /// Resolved gate and 0-based line tuple for each instance, in order.
    pub fn steps(&self) -> impl Iterator<Item = (&Gate, Vec<usize>)> {
        self.gates
            .iter()
            .zip(&self.circuit.instances)
            .map(|(g, inst)| (g, inst.lines.iter().map(|l| l - 1).collect()))
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn into_inner(self) -> Circuit {
        self.circuit
    }
}

impl Deref for ValidatedCircuit {
    type Target = Circuit;

    fn deref(&self) -> &Circuit {
        &self.circuit
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_lines() -> Circuit {
        Circuit::new(
            "t",
            vec![
                Line::input("A").with_output("P"),
                Line::constant(false).with_output("Q"),
                Line::input("B"),
            ],
        )
    }

    #[test]
    fn well_formed_mux_is_valid() {
        let lib = GateLibrary::new();
        let c = three_lines().gate("MUX", [1, 3, 2]);
        let v = c.validate(&lib).unwrap();
        assert_eq!(v.gates().len(), 1);
        assert_eq!(v.steps().next().unwrap().1, vec![0, 2, 1]);
    }

    #[test]
    fn fan_out_is_rejected() {
        let lib = GateLibrary::new();
        let c = three_lines().gate("FEYNMAN", [2, 2]);
        assert_eq!(
            c.validate(&lib).unwrap_err(),
            NetlistError::DuplicateLine {
                position: 1,
                line: 2
            }
        );
    }

    #[test]
    fn unknown_gate_is_rejected() {
        let lib = GateLibrary::new();
        let c = three_lines().gate("NOT", [1]).gate("XYZ", [1, 2, 3]);
        assert_eq!(
            c.validate(&lib).unwrap_err(),
            NetlistError::UnknownGate {
                position: 2,
                name: "XYZ".into()
            }
        );
    }

    #[test]
    fn range_arity_and_labels() {
        let lib = GateLibrary::new();
        assert!(matches!(
            three_lines().gate("MUX", [1, 2, 9]).validate(&lib),
            Err(NetlistError::LineOutOfRange {
                line: 9,
                count: 3,
                ..
            })
        ));
        assert!(matches!(
            three_lines().gate("MUX", [1, 2]).validate(&lib),
            Err(NetlistError::Arity {
                expected: 3,
                found: 2,
                ..
            })
        ));
        let mut c = three_lines();
        c.lines[2].output = OutputRole::Named("A".into());
        assert_eq!(
            c.validate(&lib).unwrap_err(),
            NetlistError::DuplicateLabel("A".into())
        );
        assert_eq!(
            Circuit::new("e", vec![]).validate(&lib).unwrap_err(),
            NetlistError::NoLines
        );
    }

    #[test]
    fn role_queries() {
        let c = three_lines();
        assert_eq!(c.named_inputs().collect::<Vec<_>>(), [(0, "A"), (2, "B")]);
        assert_eq!(c.named_outputs().collect::<Vec<_>>(), [(0, "P"), (1, "Q")]);
        assert_eq!(c.garbage_lines().collect::<Vec<_>>(), [2]);
        assert_eq!(c.constant_lines().collect::<Vec<_>>(), [(1, false)]);
    }
}
