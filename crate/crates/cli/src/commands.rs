use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use revlogic::analysis::{functional_equivalence, parity_preservation, Binding, MetricsReport};
use revlogic::gate::is_parity_preserving_gate;
use revlogic::netlist::{
    circuit_truth_table, parse_netlist, serialize_netlist, simulate, TableMode,
};
use revlogic::reconstruct::{
    canonical_circuit, canonical_comparison, search_netlist, SearchConstraints, SearchOptions,
    CANONICAL_NAMES, PROVENANCE,
};
use revlogic::{GateLibrary, SpecFunction, ValidatedCircuit};

use crate::{Cli, Command, Format};

/// Outcome of a command that ran to completion.
pub enum Verdict {
    Pass,
    Fail,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl From<Verdict> for ExitCode {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => ExitCode::SUCCESS,
            Verdict::Fail => ExitCode::from(1),
        }
    }
}

type Result<T> = std::result::Result<T, String>;

pub fn run(cli: &Cli) -> Result<Verdict> {
    let lib = GateLibrary::with_tr_cost(cli.tr_cost);
    let fmt = cli.format;
    match &cli.command {
        Command::Gates => gates(&lib, fmt),
        Command::Simulate { inputs, file } => {
            let c = load(file, &lib)?;
            sim(&c, inputs, fmt)
        }
        Command::Table { file } => table(&load(file, &lib)?, fmt),
        Command::Metrics { spec, bind, file } => {
            let c = load(file, &lib)?;
            let spec = spec.as_deref().map(spec_by_name).transpose()?;
            let binding = binding(bind)?;
            let report = MetricsReport::compute(&c, spec.as_ref().map(|s| (s, &binding)))
                .map_err(|e| e.to_string())?;
            match fmt {
                Format::Text => print!("{}", report.to_text()),
                Format::Csv => println!("{}\n{}", MetricsReport::csv_header(), report.csv_row()),
            }
            Ok(report.equivalence.is_none_or(|e| e.equivalent).into())
        }
        Command::Verify { spec, bind, file } => verify(
            &load(file, &lib)?,
            &spec_by_name(spec)?,
            &binding(bind)?,
            fmt,
        ),
        Command::Parity { file } => parity(&load(file, &lib)?, fmt),
        Command::Compare => {
            let cmp = canonical_comparison(&lib).map_err(|e| e.to_string())?;
            match fmt {
                Format::Text => print!("{}", cmp.to_text()),
                Format::Csv => print!("{}", cmp.to_csv()),
            }
            Ok(Verdict::Pass)
        }
        Command::Search {
            constraints,
            output,
            ceiling,
            workers,
        } => search(
            constraints,
            output.as_deref(),
            &SearchOptions {
                ceiling: *ceiling,
                workers: *workers,
            },
            &lib,
        ),
        Command::Canon { name, output } => canon(name, output.as_deref()),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path, lib: &GateLibrary) -> Result<ValidatedCircuit> {
    let text = read(path)?;
    let circuit = parse_netlist(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    circuit
        .validate(lib)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn spec_by_name(name: &str) -> Result<SpecFunction> {
    SpecFunction::by_name(name).ok_or_else(|| format!("unknown spec `{name}`"))
}

fn binding(pairs: &[String]) -> Result<Binding> {
    pairs.iter().try_fold(Binding::identity(), |b, pair| {
        let (s, c) = pair
            .split_once('=')
            .ok_or_else(|| format!("binding `{pair}` is not SPEC=CIRCUIT"))?;
        Ok(b.with(s.trim(), c.trim()))
    })
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn gates(lib: &GateLibrary, fmt: Format) -> Result<Verdict> {
    let mut out = String::new();
    if fmt == Format::Csv {
        out.push_str(
            "gate,letter,width,quantum_cost,tlc_xor,tlc_and,tlc_not,parity_preserving,equations\n",
        );
    }
    for g in lib.iter() {
        let parity = is_parity_preserving_gate(g);
        let lc = g.logic_counts();
        match fmt {
            Format::Text => {
                let _ = write!(
                    out,
                    "{} letter={} width={} quantum_cost={} logic={} parity_preserving={}",
                    g.name(),
                    g.kind().letter(),
                    g.width(),
                    g.quantum_cost(),
                    lc,
                    parity.preserving
                );
                if let Some(w) = parity.witness {
                    let _ = write!(out, " parity_witness={w}");
                }
                let _ = writeln!(out, " equations=\"{}\"", g.equations());
            }
            Format::Csv => {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    g.name(),
                    g.kind().letter(),
                    g.width(),
                    g.quantum_cost(),
                    lc.xor,
                    lc.and,
                    lc.not,
                    parity.preserving,
                    csv_quote(g.equations())
                );
            }
        }
    }
    print!("{out}");
    Ok(Verdict::Pass)
}

fn parse_bit(label: &str, v: &str) -> Result<bool> {
    match v {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(format!("input `{label}` must be 0 or 1, got `{v}`")),
    }
}

fn sim(c: &ValidatedCircuit, inputs: &[String], fmt: Format) -> Result<Verdict> {
    let mut values = BTreeMap::new();
    for binding in inputs {
        let (k, v) = binding
            .split_once('=')
            .ok_or_else(|| format!("input binding `{binding}` is not K=V"))?;
        let k = k.trim();
        if values
            .insert(k.to_string(), parse_bit(k, v.trim())?)
            .is_some()
        {
            return Err(format!("input `{k}` given twice"));
        }
    }
    let result = simulate(c, &values).map_err(|e| e.to_string())?;
    let mut out = String::new();
    if fmt == Format::Csv {
        out.push_str("line,label,value\n");
    }
    let rows = c
        .named_outputs()
        .map(|(i, label)| (i + 1, label.to_string(), result.outputs[label]))
        .chain(
            result
                .garbage
                .iter()
                .map(|&l| (l, "garbage".to_string(), result.state.get(l - 1))),
        );
    for (line, label, v) in rows {
        let v = u8::from(v);
        let _ = match (fmt, label.as_str()) {
            (Format::Csv, _) => writeln!(out, "{line},{label},{v}"),
            (Format::Text, "garbage") => writeln!(out, "garbage {line} = {v}"),
            (Format::Text, _) => writeln!(out, "{label} = {v}"),
        };
    }
    print!("{out}");
    Ok(Verdict::Pass)
}

fn table(c: &ValidatedCircuit, fmt: Format) -> Result<Verdict> {
    let t = circuit_truth_table(c, TableMode::FreeInputs).map_err(|e| e.to_string())?;
    let inputs: Vec<&str> = c.named_inputs().map(|(_, l)| l).collect();
    let outputs: Vec<String> = c
        .lines
        .iter()
        .enumerate()
        .map(|(i, line)| match &line.output {
            revlogic::netlist::OutputRole::Named(l) => l.clone(),
            revlogic::netlist::OutputRole::Garbage => format!("g{}", i + 1),
        })
        .collect();
    let bits = |v: &revlogic::BitVector, sep: &str| {
        v.iter()
            .map(|b| if b { "1" } else { "0" })
            .collect::<Vec<_>>()
            .join(sep)
    };
    let mut out = String::new();
    match fmt {
        Format::Text => {
            let _ = writeln!(out, "{} | {}", inputs.join(" "), outputs.join(" "));
            for (i, o) in t.rows() {
                let _ = writeln!(out, "{} | {}", bits(i, " "), bits(o, " "));
            }
        }
        Format::Csv => {
            let _ = writeln!(out, "{},{}", inputs.join(","), outputs.join(","));
            for (i, o) in t.rows() {
                let _ = writeln!(out, "{},{}", bits(i, ","), bits(o, ","));
            }
        }
    }
    print!("{out}");
    Ok(Verdict::Pass)
}

fn verify(
    c: &ValidatedCircuit,
    spec: &SpecFunction,
    binding: &Binding,
    fmt: Format,
) -> Result<Verdict> {
    let eq = functional_equivalence(c, spec, binding).map_err(|e| e.to_string())?;
    let witness = eq.witness.as_ref().map(ToString::to_string);
    match fmt {
        Format::Text => {
            println!("circuit = {}", c.name);
            println!("spec = {}", spec.name());
            println!("equivalence = {}", eq.equivalent);
            if let Some(w) = &witness {
                println!("equivalence_witness = {w}");
            }
        }
        Format::Csv => {
            println!("circuit,spec,equivalence,witness");
            println!(
                "{},{},{},{}",
                c.name,
                spec.name(),
                eq.equivalent,
                csv_quote(witness.as_deref().unwrap_or(""))
            );
        }
    }
    Ok(eq.equivalent.into())
}

/// Fails unless both verdicts hold.
fn parity(c: &ValidatedCircuit, fmt: Format) -> Result<Verdict> {
    let p = parity_preservation(c).map_err(|e| e.to_string())?;
    let w = |x: Option<revlogic::BitVector>| x.map(|v| v.to_string()).unwrap_or_default();
    match fmt {
        Format::Text => {
            println!("circuit = {}", c.name);
            println!("parity_strict = {}", p.strict.preserving);
            println!("parity_free_inputs = {}", p.free_inputs.preserving);
            if let Some(v) = p.strict.witness {
                println!("parity_strict_witness = {v}");
            }
            if let Some(v) = p.free_inputs.witness {
                println!("parity_free_inputs_witness = {v}");
            }
        }
        Format::Csv => {
            println!("circuit,parity_strict,parity_free_inputs,parity_strict_witness,parity_free_inputs_witness");
            println!(
                "{},{},{},{},{}",
                c.name,
                p.strict.preserving,
                p.free_inputs.preserving,
                w(p.strict.witness),
                w(p.free_inputs.witness)
            );
        }
    }
    Ok((p.strict.preserving && p.free_inputs.preserving).into())
}

fn search(
    path: &Path,
    output: Option<&Path>,
    options: &SearchOptions,
    lib: &GateLibrary,
) -> Result<Verdict> {
    let constraints =
        SearchConstraints::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let result = search_netlist(&constraints, lib, options).map_err(|e| e.to_string())?;
    let mut summary = String::new();
    let _ = writeln!(summary, "target = {}", constraints.target.name());
    let _ = writeln!(summary, "inventory = {}", constraints.inventory);
    let _ = writeln!(summary, "estimated = {}", result.estimated);
    let _ = writeln!(summary, "explored = {}", result.explored);
    let _ = writeln!(summary, "exhausted = {}", result.exhausted);
    let _ = writeln!(summary, "candidates = {}", result.candidates.len());
    match output {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for c in &result.candidates {
                let file = format!("{}.net", c.name);
                let _ = writeln!(summary, "candidate = {file}");
                let p = dir.join(&file);
                fs::write(&p, serialize_netlist(c)).map_err(|e| format!("{}: {e}", p.display()))?;
            }
            let p = dir.join("summary.txt");
            fs::write(&p, &summary).map_err(|e| format!("{}: {e}", p.display()))?;
            print!("{summary}");
        }
        None => {
            print!("{summary}");
            for c in &result.candidates {
                print!("\n{}", serialize_netlist(c));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn canon(name: &str, output: Option<&Path>) -> Result<Verdict> {
    let c = canonical_circuit(name).ok_or_else(|| {
        format!(
            "unknown canonical circuit `{name}` (expected one of {})",
            CANONICAL_NAMES.join(", ")
        )
    })?;
    let mut text = String::new();
    let _ = writeln!(text, "# spec: {}", c.spec.name());
    let _ = writeln!(text, "# origin: {}", c.origin);
    let _ = writeln!(text, "# provenance: {PROVENANCE}");
    for d in &c.deviations {
        let _ = writeln!(text, "# deviation: {d}");
    }
    text.push_str(&serialize_netlist(&c.circuit));
    match output {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(Verdict::Pass)
}
