//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! before asserting, so the verdicts can be read from the test log.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use revlogic::analysis::{
    garbage_and_constants, parity_preservation, quantum_cost, total_logical_calculation,
};
use revlogic::gate::{gate_truth_table, is_parity_preserving_gate};
use revlogic::netlist::{
    circuit_truth_table, parse_netlist, serialize_netlist, simulate, InputRole, TableMode,
};
use revlogic::reconstruct::{
    canonical_circuit, canonical_circuits, canonical_comparison, search_netlist, SearchConstraints,
    SearchOptions,
};
use revlogic::table::is_reversible;
use revlogic::{BitVector, GateKind, GateLibrary, LogicCounts, ValidatedCircuit};

fn verdict(n: u32, title: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {n:>2} PASS  {title}");
    } else {
        println!("criterion {n:>2} FAIL  {title}: {}", failures.join("; "));
    }
    assert!(
        failures.is_empty(),
        "criterion {n} failed: {}",
        failures.join("; ")
    );
}

fn check<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        failures.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn canonical(name: &str) -> ValidatedCircuit {
    canonical_circuit(name)
        .unwrap()
        .circuit
        .validate(&GateLibrary::new())
        .unwrap()
}

#[test]
fn criterion_01_gate_costs() {
    let lib = GateLibrary::new();
    let mut f = Vec::new();
    for (kind, qc) in [
        (GateKind::Feynman, 1),
        (GateKind::DoubleFeynman, 2),
        (GateKind::Fredkin, 5),
        (GateKind::Mux, 4),
    ] {
        check(&mut f, kind.name(), lib.gate(kind).quantum_cost(), qc);
    }
    verdict(1, "gate quantum costs F=1 D=2 fr=5 m=4", &f);
}

#[test]
fn criterion_02_bijectivity() {
    let lib = GateLibrary::new();
    let mut f = Vec::new();
    for g in lib.iter() {
        if !is_reversible(&gate_truth_table(g).unwrap()) {
            f.push(format!("gate {} is not a bijection", g.name()));
        }
    }
    for c in canonical_circuits() {
        let v = c.circuit.validate(&lib).unwrap();
        let t = circuit_truth_table(&v, TableMode::AllLines).unwrap();
        if !is_reversible(&t) {
            f.push(format!("circuit {} is not a bijection", c.name));
        }
    }
    verdict(2, "catalog gates and canonical circuits are bijections", &f);
}

/// Runs every free-input vector through `simulate` and compares the named
/// outputs with `reference`.
fn exhaustive(
    f: &mut Vec<String>,
    name: &str,
    inputs: &[&str],
    reference: impl Fn(&[bool]) -> Vec<(&'static str, bool)>,
) {
    let c = canonical(name);
    for x in 0..1u32 << inputs.len() {
        let bits: Vec<bool> = (0..inputs.len()).map(|k| (x >> k) & 1 == 1).collect();
        let assignment: BTreeMap<String, bool> = inputs
            .iter()
            .map(|s| s.to_string())
            .zip(bits.iter().copied())
            .collect();
        let sim = simulate(&c, &assignment).unwrap();
        for (label, want) in reference(&bits) {
            if sim.outputs[label] != want {
                f.push(format!("{name} {label} wrong at {assignment:?}"));
            }
        }
    }
}

#[test]
fn criterion_03_functional_correctness() {
    let mut f = Vec::new();
    exhaustive(&mut f, "PP_HALF_SUB", &["A", "B"], |v| {
        let (a, b) = (v[0], v[1]);
        vec![("Diff", a ^ b), ("Borrow", !a & b)]
    });
    exhaustive(&mut f, "PP_FULL_SUB", &["A", "B", "C"], |v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        vec![("Diff", a ^ b ^ c), ("Borr", (!a & b) ^ (!a & c) ^ (b & c))]
    });
    // Ctrl = 0 adds, Ctrl = 1 subtracts.
    exhaustive(&mut f, "HALF_ADDSUB_R", &["A", "B", "Ctrl"], |v| {
        let (a, b, s) = (v[0], v[1], v[2]);
        vec![
            ("SumDiff", a ^ b),
            ("CarryBorrow", if s { !a & b } else { a & b }),
        ]
    });
    exhaustive(&mut f, "FULL_ADDSUB_R", &["A", "B", "Cin", "Ctrl"], |v| {
        let (a, b, c, s) = (v[0], v[1], v[2], v[3]);
        let carry = (a & b) ^ ((a ^ b) & c);
        let borrow = (!a & b) ^ (!a & c) ^ (b & c);
        vec![
            ("SumDiff", a ^ b ^ c),
            ("CarryBorrow", if s { borrow } else { carry }),
        ]
    });
    verdict(
        3,
        "canonical circuits match their equations on every input",
        &f,
    );
}

#[test]
fn criterion_04_circuit_quantum_costs() {
    let mut f = Vec::new();
    for (name, numeric, symbolic) in [
        ("PP_HALF_SUB", 6, "1m+1D"),
        ("PP_FULL_SUB", 10, "1m+3D"),
        ("HALF_ADDSUB_R", 10, "2m+2F"),
        ("FULL_ADDSUB_R", 17, "2m+5F+1TR"),
    ] {
        let qc = quantum_cost(&canonical(name));
        check(
            &mut f,
            name,
            (qc.numeric, qc.symbolic.to_string()),
            (numeric, symbolic.to_string()),
        );
    }
    let lib = GateLibrary::new();
    let full = quantum_cost(&canonical("FULL_ADDSUB_R"))
        .symbolic
        .symbolic_cost(&lib);
    check(
        &mut f,
        "FULL_ADDSUB_R symbolic",
        full.to_string(),
        "13+1TR".to_string(),
    );
    for tr in [0, 7] {
        let v = canonical_circuit("FULL_ADDSUB_R")
            .unwrap()
            .circuit
            .validate(&GateLibrary::with_tr_cost(tr))
            .unwrap();
        check(
            &mut f,
            "FULL_ADDSUB_R with TR cost",
            quantum_cost(&v).numeric,
            13 + u64::from(tr),
        );
    }
    verdict(4, "circuit quantum costs 6, 10, 10, 13+TR", &f);
}

#[test]
fn criterion_05_total_logical_calculation() {
    let mut f = Vec::new();
    for (name, want) in [
        ("HALF_ADDSUB_R", LogicCounts::new(8, 6, 2)),
        ("FULL_ADDSUB_R", LogicCounts::new(13, 5, 3)),
        ("PP_HALF_SUB", LogicCounts::new(5, 2, 1)),
        ("PP_FULL_SUB", LogicCounts::new(9, 2, 1)),
    ] {
        check(
            &mut f,
            name,
            total_logical_calculation(&canonical(name)),
            want,
        );
    }
    verdict(
        5,
        "total logical calculation (8,6,2) (13,5,3) (5,2,1) (9,2,1)",
        &f,
    );
}

#[test]
fn criterion_06_garbage_and_constants() {
    let mut f = Vec::new();
    check(
        &mut f,
        "PP_HALF_SUB",
        garbage_and_constants(&canonical("PP_HALF_SUB")),
        (2, 2),
    );
    check(
        &mut f,
        "PP_FULL_SUB",
        garbage_and_constants(&canonical("PP_FULL_SUB")),
        (4, 1),
    );
    verdict(
        6,
        "garbage/constants PP_HALF_SUB (2,2), PP_FULL_SUB (4,1)",
        &f,
    );
}

#[test]
fn criterion_07_comparison_table() {
    let cmp = canonical_comparison(&GateLibrary::new()).unwrap();
    let mut f = Vec::new();
    for (name, existing, proposed) in [
        ("HALF_ADDSUB_R", 12, 10),
        ("PP_HALF_SUB", 7, 6),
        ("PP_FULL_SUB", 11, 10),
    ] {
        let row = cmp.row(name).unwrap();
        check(
            &mut f,
            name,
            (row.existing_qc, row.proposed_qc),
            (existing, proposed),
        );
        check(
            &mut f,
            name,
            row.qc_delta,
            proposed as i64 - existing as i64,
        );
    }
    let full = cmp.row("FULL_ADDSUB_R").unwrap();
    // TR cancels: (5 + 10 + TR) - (8 + 5 + TR) = 2 in favour of the proposal.
    check(
        &mut f,
        "FULL_ADDSUB_R symbolic delta",
        full.qc_delta_symbolic.as_str(),
        "-2",
    );
    check(
        &mut f,
        "FULL_ADDSUB_R existing",
        full.existing_qc_symbolic.as_str(),
        "5f+2fr+1TR",
    );
    check(
        &mut f,
        "FULL_ADDSUB_R proposed",
        full.proposed_qc_symbolic.as_str(),
        "2m+5F+1TR",
    );
    for tr in [0, 4, 11] {
        let c = canonical_comparison(&GateLibrary::with_tr_cost(tr)).unwrap();
        check(
            &mut f,
            "FULL_ADDSUB_R delta with TR cost",
            c.row("FULL_ADDSUB_R").unwrap().qc_delta,
            -2,
        );
    }
    verdict(
        7,
        "comparison: 12 vs 10, 7 vs 6, 11 vs 10, full A/S improves by 2",
        &f,
    );
}

#[test]
fn criterion_08_parity() {
    let lib = GateLibrary::new();
    let mut f = Vec::new();
    for kind in [GateKind::DoubleFeynman, GateKind::Fredkin] {
        check(
            &mut f,
            kind.name(),
            is_parity_preserving_gate(lib.gate(kind)).preserving,
            true,
        );
    }
    let mux = is_parity_preserving_gate(lib.gate(GateKind::Mux));
    check(&mut f, "MUX", mux.preserving, false);
    check(
        &mut f,
        "MUX witness",
        mux.witness,
        Some(BitVector::from_bits(&[1, 0, 0]).unwrap()),
    );

    let cmp = canonical_comparison(&lib).unwrap();
    let text = cmp.to_text();
    for c in canonical_circuits() {
        let p = parity_preservation(&c.circuit.validate(&lib).unwrap()).unwrap();
        let row = cmp.row(c.name).unwrap();
        check(
            &mut f,
            c.name,
            (row.parity_strict, row.parity_free_inputs),
            (p.strict.preserving, p.free_inputs.preserving),
        );
        println!(
            "    {}: parity_strict = {}, parity_free_inputs = {}",
            c.name, p.strict.preserving, p.free_inputs.preserving
        );
    }
    check(
        &mut f,
        "report lines",
        text.matches("parity_strict = ").count(),
        4,
    );
    check(
        &mut f,
        "report lines",
        text.matches("parity_free_inputs = ").count(),
        4,
    );
    verdict(
        8,
        "parity suite: D and fr preserve parity, MUX fails at (1,0,0), circuit verdicts recorded",
        &f,
    );
}

#[test]
fn criterion_09_reconstruction_search() {
    let lib = GateLibrary::new();
    let constraints = SearchConstraints::parse(
        "inventory MUX 1\nlines 3 3\nconst0 1 1\nconst1 0 0\ntarget HALF_SUB\n",
    )
    .unwrap();
    let mut f = Vec::new();
    let start = Instant::now();
    let outputs: Vec<Vec<u8>> = [1, 4]
        .into_iter()
        .map(|workers| {
            let r = search_netlist(
                &constraints,
                &lib,
                &SearchOptions {
                    workers: Some(workers),
                    ..Default::default()
                },
            )
            .unwrap();
            if !r.exhausted {
                f.push(format!("not exhausted with {workers} workers"));
            }
            let mux_a0b = r.candidates.iter().any(|c| {
                c.instances.iter().any(|g| {
                    let role = |l: usize| &c.lines[l - 1].input;
                    g.gate == "MUX"
                        && *role(g.lines[0]) == InputRole::Named("A".into())
                        && *role(g.lines[1]) == InputRole::Const(false)
                        && *role(g.lines[2]) == InputRole::Named("B".into())
                })
            });
            if !mux_a0b {
                f.push(format!("no MUX(A,0,B) candidate with {workers} workers"));
            }
            let mut bytes =
                format!("explored = {}\nexhausted = {}\n", r.explored, r.exhausted).into_bytes();
            for c in &r.candidates {
                bytes.extend(serialize_netlist(c).into_bytes());
            }
            bytes
        })
        .collect();
    let elapsed = start.elapsed();
    if outputs[0] != outputs[1] {
        f.push("output differs between 1 and 4 workers".into());
    }
    if elapsed >= Duration::from_secs(5) {
        f.push(format!("took {elapsed:?}"));
    }
    verdict(
        9,
        "search {1 MUX, 3 lines, one 0} finds MUX(A,0,B), exhausted, deterministic, < 5 s",
        &f,
    );
}

#[test]
fn criterion_10_round_trip() {
    let mut f = Vec::new();
    for c in canonical_circuits() {
        let text = serialize_netlist(&c.circuit);
        match parse_netlist(&text) {
            Ok(back) => {
                check(&mut f, c.name, &back, &c.circuit);
                check(&mut f, c.name, serialize_netlist(&back), text);
            }
            Err(e) => f.push(format!("{}: {e}", c.name)),
        }
    }
    verdict(
        10,
        "parse(serialize(c)) is byte-exact for canonical netlists",
        &f,
    );
}
