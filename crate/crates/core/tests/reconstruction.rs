use revlogic::analysis::parity_preservation;
use revlogic::netlist::serialize_netlist;
use revlogic::reconstruct::{
    canonical_circuit, search_netlist, SearchConstraints, SearchError, SearchOptions, SearchResult,
};
use revlogic::{Circuit, GateLibrary};

fn run(text: &str) -> SearchResult {
    let c = SearchConstraints::parse(text).unwrap();
    search_netlist(&c, &GateLibrary::new(), &SearchOptions::default()).unwrap()
}

fn body(c: &Circuit) -> String {
    let mut c = c.clone();
    c.name.clear();
    serialize_netlist(&c)
}

fn contains_canonical(r: &SearchResult, name: &str) -> bool {
    let want = body(&canonical_circuit(name).unwrap().circuit);
    r.candidates.iter().any(|c| body(c) == want)
}

fn any_parity_preserving(r: &SearchResult) -> bool {
    let lib = GateLibrary::new();
    r.candidates.iter().any(|c| {
        let p = parity_preservation(&c.validate(&lib).unwrap()).unwrap();
        p.strict.preserving || p.free_inputs.preserving
    })
}

#[test]
fn single_mux_realizes_the_half_subtractor() {
    let r = run("inventory MUX 1\nlines 3 3\nconst0 1 1\nconst1 0 0\ntarget HALF_SUB\n");
    assert!(r.exhausted);
    assert_eq!(r.candidates.len(), 1);
    let text = serialize_netlist(&r.candidates[0]);
    // MUX(A, 0, B): Q = A^B on the constant line, R = A'B on B's line.
    assert!(text.contains("line 3 const 0\ngate MUX 1 3 2\noutput 2 Borrow\noutput 3 Diff\n"));
}

#[test]
fn pp_half_sub_inventory() {
    let r = run(
        "inventory MUX 1\ninventory F2G 1\nlines 4 4\nconst0 0 2\nconst1 0 2\ntarget HALF_SUB\n",
    );
    assert!(r.exhausted);
    assert_eq!(r.estimated, 1728);
    assert_eq!(r.candidates.len(), 39);
    assert!(contains_canonical(&r, "PP_HALF_SUB"));
    assert!(!any_parity_preserving(&r));
}

#[test]
fn half_addsub_inventory() {
    let r = run("inventory MUX 2\ninventory FEYNMAN 2\nlines 4 4\ntarget HALF_ADDSUB\n");
    assert!(r.exhausted);
    assert!(contains_canonical(&r, "HALF_ADDSUB_R"));
    assert!(any_parity_preserving(&r));
}

#[test]
fn pp_full_sub_inventory_on_four_lines() {
    let r = run("inventory MUX 1\ninventory F2G 3\nlines 4 4\ntarget FULL_SUB\n");
    assert!(r.exhausted);
    assert_eq!(r.candidates.len(), 468);
    assert!(contains_canonical(&r, "PP_FULL_SUB"));
    assert!(!any_parity_preserving(&r));
}

#[test]
fn full_sub_garbage_tracks_constants() {
    // With 3 inputs and 2 outputs every candidate has one more garbage line
    // than constants, so (4 garbage, 1 constant) cannot occur.
    let r = run("inventory MUX 1\ninventory F2G 3\nlines 4 4\nconst1 0 0\ntarget FULL_SUB\n");
    for c in &r.candidates {
        let garbage = c.garbage_lines().count();
        let constants = c.constant_lines().count();
        assert_eq!(garbage, constants + 1, "{}", c.name);
    }
}

#[test]
fn full_addsub_inventory_exceeds_the_ceiling() {
    let c = SearchConstraints::parse(
        "inventory MUX 2\ninventory FEYNMAN 5\ninventory TR 1\nlines 8 8\nconst0 4 4\nconst1 0 0\ntarget FULL_ADDSUB\n",
    )
    .unwrap();
    let err = search_netlist(&c, &GateLibrary::new(), &SearchOptions::default()).unwrap_err();
    assert!(matches!(err, SearchError::SpaceTooLarge { .. }));
}
