//! Proposed-versus-existing comparison of the four adder/subtractor designs.
//!
//! Only the metric totals of the earlier designs are known, so the
//! comparison is metric-level: quantum cost (with TR kept symbolic) and the
//! XOR/AND/NOT operation counts.

use std::fmt::Write as _;

use super::metrics::{AnalysisError, GateTally, MetricsReport};
use super::LogicCounts;
use crate::gate::{GateKind, GateLibrary};

/// Metric totals of an earlier design.
#[derive(Debug, Clone, Copy)]
pub struct ExistingDesign {
    /// Name of the proposed circuit this design is compared with.
    pub circuit: &'static str,
    pub gates: &'static [(GateKind, u32)],
    /// Cost formula in the original lettering (`f` Feynman, `fr` Fredkin).
    pub formula: &'static str,
    pub logic_counts: LogicCounts,
}

pub const EXISTING_DESIGNS: [ExistingDesign; 4] = [
    ExistingDesign {
        circuit: "HALF_ADDSUB_R",
        gates: &[(GateKind::Feynman, 2), (GateKind::Fredkin, 2)],
        formula: "2f+2fr",
        logic_counts: LogicCounts::new(6, 8, 4),
    },
    ExistingDesign {
        circuit: "FULL_ADDSUB_R",
        gates: &[
            (GateKind::Feynman, 5),
            (GateKind::Fredkin, 2),
            (GateKind::Tr, 1),
        ],
        formula: "5f+2fr+1TR",
        logic_counts: LogicCounts::new(10, 9, 4),
    },
    ExistingDesign {
        circuit: "PP_HALF_SUB",
        gates: &[(GateKind::Fredkin, 1), (GateKind::DoubleFeynman, 1)],
        formula: "1fr+1D",
        logic_counts: LogicCounts::new(4, 4, 2),
    },
    ExistingDesign {
        circuit: "PP_FULL_SUB",
        gates: &[(GateKind::Fredkin, 1), (GateKind::DoubleFeynman, 3)],
        formula: "1fr+3D",
        logic_counts: LogicCounts::new(10, 4, 2),
    },
];

impl ExistingDesign {
    pub fn tally(&self) -> GateTally {
        GateTally::from_counts(self.gates)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub circuit: String,
    pub proposed_qc: u64,
    pub proposed_qc_symbolic: String,
    pub existing_qc: u64,
    pub existing_qc_symbolic: String,
    /// proposed − existing, numeric
    pub qc_delta: i64,
    /// proposed − existing with TR terms kept symbolic
    pub qc_delta_symbolic: String,
    pub proposed_tlc: LogicCounts,
    pub existing_tlc: LogicCounts,
    pub garbage_outputs: usize,
    pub constant_inputs: usize,
    pub parity_strict: bool,
    pub parity_free_inputs: bool,
    pub equivalence: Option<bool>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub tr_cost: u32,
    pub rows: Vec<ComparisonRow>,
}

const CSV_HEADER: &str =
    "circuit,proposed_qc,proposed_qc_symbolic,existing_qc,existing_qc_symbolic,\
qc_delta,qc_delta_symbolic,proposed_tlc,existing_tlc,tlc_delta,garbage_outputs,constant_inputs,\
parity_strict,parity_free_inputs,equivalence";

/// Pairs each proposed report with its earlier design. Reports are matched
/// by circuit name; all four must be present.
pub fn comparison_report(
    proposed: &[MetricsReport],
    library: &GateLibrary,
) -> Result<ComparisonReport, AnalysisError> {
    let rows = EXISTING_DESIGNS
        .iter()
        .map(|existing| {
            let report = proposed
                .iter()
                .find(|r| r.circuit_name == existing.circuit)
                .ok_or_else(|| AnalysisError::MissingReport(existing.circuit.to_string()))?;
            let old = existing.tally();
            let new = &report.quantum_cost.symbolic;
            let existing_qc = old.numeric_cost(library);
            Ok(ComparisonRow {
                circuit: existing.circuit.to_string(),
                proposed_qc: report.quantum_cost.numeric,
                proposed_qc_symbolic: new.to_string(),
                existing_qc,
                existing_qc_symbolic: existing.formula.to_string(),
                qc_delta: report.quantum_cost.numeric as i64 - existing_qc as i64,
                qc_delta_symbolic: new
                    .symbolic_cost(library)
                    .minus(old.symbolic_cost(library))
                    .to_string(),
                proposed_tlc: report.logic_counts,
                existing_tlc: existing.logic_counts,
                garbage_outputs: report.garbage_outputs,
                constant_inputs: report.constant_inputs,
                parity_strict: report.parity.strict.preserving,
                parity_free_inputs: report.parity.free_inputs.preserving,
                equivalence: report.equivalence.as_ref().map(|e| e.equivalent),
                notes: report.notes.clone(),
            })
        })
        .collect::<Result<_, AnalysisError>>()?;
    Ok(ComparisonReport {
        tr_cost: library.tr_cost(),
        rows,
    })
}

fn verdict(v: Option<bool>) -> String {
    v.map_or_else(|| "unchecked".to_string(), |b| b.to_string())
}

impl ComparisonReport {
    pub fn row(&self, circuit: &str) -> Option<&ComparisonRow> {
        self.rows.iter().find(|r| r.circuit == circuit)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "tr_cost = {}", self.tr_cost);
        for r in &self.rows {
            let _ = writeln!(out);
            let _ = writeln!(out, "[{}]", r.circuit);
            let _ = writeln!(
                out,
                "quantum_cost = {} ({}) vs existing {} ({}), delta {} ({})",
                r.proposed_qc,
                r.proposed_qc_symbolic,
                r.existing_qc,
                r.existing_qc_symbolic,
                r.qc_delta,
                r.qc_delta_symbolic
            );
            let _ = writeln!(
                out,
                "total_logical_calculation = {} vs existing {}, delta {}",
                r.proposed_tlc,
                r.existing_tlc,
                r.proposed_tlc.delta(r.existing_tlc)
            );
            let _ = writeln!(out, "garbage_outputs = {}", r.garbage_outputs);
            let _ = writeln!(out, "constant_inputs = {}", r.constant_inputs);
            let _ = writeln!(out, "parity_strict = {}", r.parity_strict);
            let _ = writeln!(out, "parity_free_inputs = {}", r.parity_free_inputs);
            let _ = writeln!(out, "equivalence = {}", verdict(r.equivalence));
            for note in &r.notes {
                let _ = writeln!(out, "note = {note}");
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.circuit,
                r.proposed_qc,
                r.proposed_qc_symbolic,
                r.existing_qc,
                r.existing_qc_symbolic,
                r.qc_delta,
                r.qc_delta_symbolic,
                r.proposed_tlc,
                r.existing_tlc,
                r.proposed_tlc.delta(r.existing_tlc),
                r.garbage_outputs,
                r.constant_inputs,
                r.parity_strict,
                r.parity_free_inputs,
                verdict(r.equivalence)
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn existing_costs_substitute_catalog_values() {
        let lib = GateLibrary::new();
        let qc: Vec<u64> = EXISTING_DESIGNS
            .iter()
            .map(|d| d.tally().numeric_cost(&lib))
            .collect();
        // 2·1+2·5, 5·1+2·5+TR, 5+2, 5+3·2
        assert_eq!(qc, vec![12, 15 + 4, 7, 11]);
    }

    #[test]
    fn missing_report_is_an_error() {
        let err = comparison_report(&[], &GateLibrary::new()).unwrap_err();
        assert_eq!(err, AnalysisError::MissingReport("HALF_ADDSUB_R".into()));
    }
}
