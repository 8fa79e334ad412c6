use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{LogicCounts, SpecFunction};
use crate::bits::BitVector;
use crate::gate::{GateKind, GateLibrary};
use crate::netlist::{circuit_truth_table, SimError, TableMode, ValidatedCircuit};
use crate::table::ParityCheck;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("spec label `{0}` is not bound to a circuit label")]
    UnboundLabel(String),
    #[error("circuit input `{0}` is not driven by the spec")]
    UnusedCircuitInput(String),
    #[error("no metrics report for `{0}`")]
    MissingReport(String),
    #[error(transparent)]
    Sim(#[from] SimError),
}

/// Multiset of gates, ordered as terms appear in cost formulas.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GateTally(BTreeMap<GateKind, u32>);

impl GateTally {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: &[(GateKind, u32)]) -> Self {
        let mut t = Self::new();
        for &(k, n) in counts {
            t.add(k, n);
        }
        t
    }

    pub fn add(&mut self, kind: GateKind, n: u32) {
        if n > 0 {
            *self.0.entry(kind).or_default() += n;
        }
    }

    pub fn count(&self, kind: GateKind) -> u32 {
        self.0.get(&kind).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GateKind, u32)> + '_ {
        self.0.iter().map(|(&k, &n)| (k, n))
    }

    pub fn numeric_cost(&self, library: &GateLibrary) -> u64 {
        self.iter()
            .map(|(k, n)| u64::from(n) * u64::from(library.gate(k).quantum_cost()))
            .sum()
    }

    /// Cost with every term except TR substituted, plus the TR multiplicity.
    pub fn symbolic_cost(&self, library: &GateLibrary) -> SymbolicCost {
        let fixed = self
            .iter()
            .filter(|(k, _)| *k != GateKind::Tr)
            .map(|(k, n)| i64::from(n) * i64::from(library.gate(k).quantum_cost()))
            .sum();
        SymbolicCost {
            fixed,
            tr: i64::from(self.count(GateKind::Tr)),
        }
    }
}

/// Formats as `2m+5F+1TR`; the empty tally prints `0`.
impl fmt::Display for GateTally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, n)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{n}{}", k.letter())?;
        }
        Ok(())
    }
}

/// A cost of the form `fixed + tr·TR` with TR left symbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolicCost {
    pub fixed: i64,
    pub tr: i64,
}

impl SymbolicCost {
    pub fn minus(self, other: SymbolicCost) -> SymbolicCost {
        SymbolicCost {
            fixed: self.fixed - other.fixed,
            tr: self.tr - other.tr,
        }
    }
}

impl fmt::Display for SymbolicCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tr {
            0 => write!(f, "{}", self.fixed),
            tr => write!(f, "{}{:+}TR", self.fixed, tr),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumCost {
    pub numeric: u64,
    pub symbolic: GateTally,
}

pub fn quantum_cost(circuit: &ValidatedCircuit) -> QuantumCost {
    let mut symbolic = GateTally::new();
    let mut numeric = 0;
    for gate in circuit.gates() {
        symbolic.add(gate.kind(), 1);
        numeric += u64::from(gate.quantum_cost());
    }
    QuantumCost { numeric, symbolic }
}

pub fn total_logical_calculation(circuit: &ValidatedCircuit) -> LogicCounts {
    circuit.gates().iter().map(|g| g.logic_counts()).sum()
}

/// (garbage outputs, constant inputs)
pub fn garbage_and_constants(circuit: &ValidatedCircuit) -> (usize, usize) {
    (
        circuit.garbage_lines().count(),
        circuit.constant_lines().count(),
    )
}

/// Spec label to circuit label. Labels missing from the map bind to the
/// circuit label of the same name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Binding(BTreeMap<String, String>);

impl Binding {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn with(mut self, spec_label: &str, circuit_label: &str) -> Self {
        self.0.insert(spec_label.into(), circuit_label.into());
        self
    }

    pub fn resolve<'a>(&'a self, spec_label: &'a str) -> &'a str {
        self.0.get(spec_label).map_or(spec_label, String::as_str)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Spec inputs, in spec order.
    pub inputs: Vec<(String, bool)>,
    pub expected: Vec<(String, bool)>,
    pub actual: Vec<(String, bool)>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[(String, bool)]| {
            v.iter()
                .map(|(k, b)| format!("{k}={}", u8::from(*b)))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "inputs {} expected {} got {}",
            join(&self.inputs),
            join(&self.expected),
            join(&self.actual)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    /// Least spec input (by encoding) where the circuit disagrees.
    pub witness: Option<Mismatch>,
}

pub fn functional_equivalence(
    circuit: &ValidatedCircuit,
    spec: &SpecFunction,
    binding: &Binding,
) -> Result<Equivalence, AnalysisError> {
    let circuit_inputs: HashMap<&str, usize> = circuit
        .named_inputs()
        .enumerate()
        .map(|(pos, (_, label))| (label, pos))
        .collect();
    let circuit_outputs: HashMap<&str, usize> =
        circuit.named_outputs().map(|(line, l)| (l, line)).collect();

    let mut input_pos = Vec::with_capacity(spec.inputs().len());
    for label in spec.inputs() {
        let target = binding.resolve(label);
        let pos = *circuit_inputs
            .get(target)
            .ok_or_else(|| AnalysisError::UnboundLabel(label.clone()))?;
        input_pos.push(pos);
    }
    if let Some((_, extra)) = circuit
        .named_inputs()
        .enumerate()
        .find(|(pos, _)| !input_pos.contains(pos))
    {
        return Err(AnalysisError::UnusedCircuitInput(extra.1.to_string()));
    }
    let mut output_line = Vec::with_capacity(spec.outputs().len());
    for label in spec.outputs() {
        let target = binding.resolve(label);
        let line = *circuit_outputs
            .get(target)
            .ok_or_else(|| AnalysisError::UnboundLabel(label.clone()))?;
        output_line.push(line);
    }

    let table = circuit_truth_table(circuit, TableMode::FreeInputs)?;
    for x in 0..1u64 << spec.inputs().len() {
        let free = input_pos
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &pos)| acc | (((x >> j) & 1) << pos));
        let state = table.output(free);
        let actual = output_line
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, &line)| {
                acc | (u64::from(state.get(line)) << k)
            });
        let expected = spec.eval(x);
        if actual != expected {
            let named = |labels: &[String], word: u64| {
                labels
                    .iter()
                    .enumerate()
                    .map(|(k, l)| (l.clone(), (word >> k) & 1 == 1))
                    .collect()
            };
            return Ok(Equivalence {
                equivalent: false,
                witness: Some(Mismatch {
                    inputs: named(spec.inputs(), x),
                    expected: named(spec.outputs(), expected),
                    actual: named(spec.outputs(), actual),
                }),
            });
        }
    }
    Ok(Equivalence {
        equivalent: true,
        witness: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircuitParity {
    /// Over every vector of every line; witness is a full line vector.
    pub strict: ParityCheck,
    /// Over named inputs with constants pinned; witness is the initial
    /// line state including constants.
    pub free_inputs: ParityCheck,
}

pub fn parity_preservation(circuit: &ValidatedCircuit) -> Result<CircuitParity, AnalysisError> {
    let all = circuit_truth_table(circuit, TableMode::AllLines)?;
    let strict = ParityCheck::over(all.rows());

    let free_inputs = if circuit.named_inputs().next().is_none() {
        // nothing to enumerate: the single reachable state is the constants
        let mut start = BitVector::zeros(circuit.line_count()).expect("validated");
        for (i, v) in circuit.constant_lines() {
            start.set(i, v);
        }
        let row = [(start, all.output(start.encoding()))];
        ParityCheck::over(&row)
    } else {
        let free = circuit_truth_table(circuit, TableMode::FreeInputs)?;
        let rows: Vec<(BitVector, BitVector)> = free
            .rows()
            .iter()
            .map(|(x, out)| {
                (
                    crate::netlist::initial_state_of(circuit, x.encoding()),
                    *out,
                )
            })
            .collect();
        ParityCheck::over(&rows)
    };
    Ok(CircuitParity {
        strict,
        free_inputs,
    })
}

/// Every metric for one circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricsReport {
    pub circuit_name: String,
    pub quantum_cost: QuantumCost,
    pub gate_count: usize,
    pub garbage_outputs: usize,
    pub constant_inputs: usize,
    pub logic_counts: LogicCounts,
    pub parity: CircuitParity,
    /// `None` when no reference function was given.
    pub equivalence: Option<Equivalence>,
    pub notes: Vec<String>,
}

/// Column order of the tabular export.
pub const REPORT_KEYS: [&str; 11] = [
    "circuit",
    "quantum_cost",
    "quantum_cost_symbolic",
    "garbage_outputs",
    "constant_inputs",
    "tlc_xor",
    "tlc_and",
    "tlc_not",
    "parity_strict",
    "parity_free_inputs",
    "equivalence",
];

impl MetricsReport {
    pub fn compute(
        circuit: &ValidatedCircuit,
        spec: Option<(&SpecFunction, &Binding)>,
    ) -> Result<Self, AnalysisError> {
        let quantum_cost = quantum_cost(circuit);
        let (garbage_outputs, constant_inputs) = garbage_and_constants(circuit);
        let equivalence = spec
            .map(|(s, b)| functional_equivalence(circuit, s, b))
            .transpose()?;
        Ok(Self {
            circuit_name: circuit.name.clone(),
            gate_count: circuit.instances.len(),
            quantum_cost,
            garbage_outputs,
            constant_inputs,
            logic_counts: total_logical_calculation(circuit),
            parity: parity_preservation(circuit)?,
            equivalence,
            notes: Vec::new(),
        })
    }

    fn values(&self) -> [String; 11] {
        [
            self.circuit_name.clone(),
            self.quantum_cost.numeric.to_string(),
            self.quantum_cost.symbolic.to_string(),
            self.garbage_outputs.to_string(),
            self.constant_inputs.to_string(),
            self.logic_counts.xor.to_string(),
            self.logic_counts.and.to_string(),
            self.logic_counts.not.to_string(),
            self.parity.strict.preserving.to_string(),
            self.parity.free_inputs.preserving.to_string(),
            match &self.equivalence {
                Some(e) => e.equivalent.to_string(),
                None => "unchecked".to_string(),
            },
        ]
    }

    /// `key = value` lines, followed by witnesses for failed checks.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in REPORT_KEYS.iter().zip(self.values()) {
            let _ = writeln!(out, "{k} = {v}");
        }
        if let Some(w) = self.parity.strict.witness {
            let _ = writeln!(out, "parity_strict_witness = {w}");
        }
        if let Some(w) = self.parity.free_inputs.witness {
            let _ = writeln!(out, "parity_free_inputs_witness = {w}");
        }
        if let Some(w) = self.equivalence.as_ref().and_then(|e| e.witness.as_ref()) {
            let _ = writeln!(out, "equivalence_witness = {w}");
        }
        for note in &self.notes {
            let _ = writeln!(out, "note = {note}");
        }
        out
    }

    pub fn csv_header() -> String {
        REPORT_KEYS.join(",")
    }

    pub fn csv_row(&self) -> String {
        self.values().join(",")
    }
}
