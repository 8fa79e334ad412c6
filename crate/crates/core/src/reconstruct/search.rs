//! Bounded exhaustive netlist search.
//!
//! Inputs sit on the first lines in target order, followed by constant-0
//! lines and then constant-1 lines. Any netlist can be relabeled into this
//! layout, so fixing it loses no circuits. Each line is simulated as a
//! truth-table column (bit `x` = value under input assignment `x`), which
//! screens a whole netlist with a handful of word operations. Survivors are
//! re-verified row by row through the ordinary simulator.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use super::SearchConstraints;
use crate::analysis::{functional_equivalence, AnalysisError, Binding, SpecFunction};
use crate::gate::{GateKind, GateLibrary};
use crate::netlist::{serialize_netlist, Circuit, GateInstance, Line, NetlistError};

/// Default cap on the (unpruned) number of netlists a search may cover.
pub const DEFAULT_CEILING: u64 = 10_000_000;

/// Columns are 64-bit words, so at most six target inputs.
pub const MAX_SEARCH_INPUTS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub ceiling: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_CEILING,
            workers: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Deduplicated, sorted by canonical serialization.
    pub candidates: Vec<Circuit>,
    /// Complete netlists screened by simulation.
    pub explored: u64,
    /// Size of the space before pruning.
    pub estimated: u128,
    /// The whole space was covered.
    pub exhausted: bool,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("search space of {estimated} netlists exceeds the ceiling of {ceiling}")]
    SpaceTooLarge { estimated: u128, ceiling: u64 },
    #[error("target has {0} inputs; the search handles at most {MAX_SEARCH_INPUTS}")]
    TooManyInputs(usize),
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("candidate failed re-verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Netlist(#[from] NetlistError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// Lines a gate can change.
fn changed_lines(kind: GateKind) -> usize {
    kind.width().saturating_sub(1).max(1)
}

/// Ordered line tuples for a gate on `lines` lines, one per distinct action.
fn tuples(kind: GateKind, lines: usize) -> Vec<Vec<usize>> {
    let w = kind.width();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(w);
    fn rec(lines: usize, w: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == w {
            out.push(cur.clone());
            return;
        }
        for l in 0..lines {
            if !cur.contains(&l) {
                cur.push(l);
                rec(lines, w, cur, out);
                cur.pop();
            }
        }
    }
    rec(lines, w, &mut cur, &mut out);
    if kind.targets_commute() {
        out.retain(|t| t[1] < t[2]);
    }
    out
}

/// All distinct orderings of a gate multiset, lexicographic.
fn orderings(items: &[GateKind]) -> Vec<Vec<GateKind>> {
    let mut items = items.to_vec();
    items.sort();
    let mut out = vec![items.clone()];
    // next_permutation
    while let Some(i) = (1..items.len()).rev().find(|&i| items[i - 1] < items[i]) {
        let j = (i..items.len())
            .rev()
            .find(|&j| items[j] > items[i - 1])
            .unwrap();
        items.swap(i - 1, j);
        items[i..].reverse();
        out.push(items.clone());
    }
    out
}

fn apply(kind: GateKind, cols: &mut [u64], t: &[usize], mask: u64) {
    let a = cols[t[0]];
    match kind {
        GateKind::Not => cols[t[0]] = !a & mask,
        GateKind::Feynman => cols[t[1]] ^= a,
        GateKind::DoubleFeynman => {
            cols[t[1]] ^= a;
            cols[t[2]] ^= a;
        }
        GateKind::Fredkin => {
            let swap = a & (cols[t[1]] ^ cols[t[2]]);
            cols[t[1]] ^= swap;
            cols[t[2]] ^= swap;
        }
        GateKind::Mux => {
            let (b, c) = (cols[t[1]], cols[t[2]]);
            cols[t[1]] = a ^ b ^ c;
            cols[t[2]] = (!a & c) | (a & b);
        }
        GateKind::Tr => {
            let (b, c) = (cols[t[1]], cols[t[2]]);
            cols[t[1]] = a ^ b;
            cols[t[2]] = ((a & !b) ^ c) & mask;
        }
    }
}

/// Lexicographically least assignment of distinct lines to target columns.
fn bind_outputs(cols: &[u64], targets: &[u64]) -> Option<Vec<usize>> {
    fn rec(cols: &[u64], targets: &[u64], used: &mut Vec<usize>) -> bool {
        let k = used.len();
        if k == targets.len() {
            return true;
        }
        for (l, &c) in cols.iter().enumerate() {
            if c == targets[k] && !used.contains(&l) {
                used.push(l);
                if rec(cols, targets, used) {
                    return true;
                }
                used.pop();
            }
        }
        false
    }
    let mut used = Vec::with_capacity(targets.len());
    rec(cols, targets, &mut used).then_some(used)
}

/// One branch of the top-level partition.
struct Branch {
    lines: usize,
    zeros: usize,
    ones: usize,
    order: Vec<GateKind>,
}

struct Ctx<'a> {
    target: &'a SpecFunction,
    targets: Vec<u64>,
    mask: u64,
    tuples: Vec<Vec<Vec<usize>>>,
    order: &'a [GateKind],
    /// Lines the gates from position `i` onward can change in total.
    capacity: Vec<usize>,
    zeros: usize,
    ones: usize,
}

struct Found {
    explored: u64,
    circuits: Vec<Circuit>,
}

impl Ctx<'_> {
    fn dfs(&self, depth: usize, cols: &mut Vec<u64>, chosen: &mut Vec<usize>, found: &mut Found) {
        if depth == self.order.len() {
            found.explored += 1;
            if let Some(binding) = bind_outputs(cols, &self.targets) {
                found.circuits.push(self.build(chosen, &binding));
            }
            return;
        }
        // each remaining gate rewrites a bounded number of lines, so targets
        // absent from every line must fit in that budget
        let missing = self.targets.iter().filter(|t| !cols.contains(t)).count();
        if missing > self.capacity[depth] {
            return;
        }
        let kind = self.order[depth];
        for (ti, t) in self.tuples[depth].iter().enumerate() {
            if depth > 0 && self.order[depth - 1] == kind {
                // adjacent disjoint gates commute; keep one order
                let prev = &self.tuples[depth - 1][chosen[depth - 1]];
                if prev.iter().all(|l| !t.contains(l)) && t < prev {
                    continue;
                }
            } else if depth > 0 && kind < self.order[depth - 1] {
                let prev = &self.tuples[depth - 1][chosen[depth - 1]];
                if prev.iter().all(|l| !t.contains(l)) {
                    continue;
                }
            }
            let saved: Vec<u64> = t.iter().map(|&l| cols[l]).collect();
            apply(kind, cols, t, self.mask);
            chosen.push(ti);
            self.dfs(depth + 1, cols, chosen, found);
            chosen.pop();
            for (&l, v) in t.iter().zip(saved) {
                cols[l] = v;
            }
        }
    }

    fn build(&self, chosen: &[usize], binding: &[usize]) -> Circuit {
        let n_in = self.target.inputs().len();
        let line_count = n_in + self.zeros + self.ones;
        let mut lines: Vec<Line> = (0..line_count)
            .map(|i| {
                if i < n_in {
                    Line::input(self.target.inputs()[i].clone())
                } else {
                    Line::constant(i >= n_in + self.zeros)
                }
            })
            .collect();
        for (k, &l) in binding.iter().enumerate() {
            lines[l] = lines[l]
                .clone()
                .with_output(self.target.outputs()[k].clone());
        }
        let instances: Vec<(GateKind, Vec<usize>)> = self
            .order
            .iter()
            .zip(chosen)
            .enumerate()
            .map(|(d, (&k, &ti))| (k, self.tuples[d][ti].clone()))
            .collect();
        canonical_relabel(lines, instances, n_in)
    }
}

/// Renumbers constant lines of equal value by first use so that circuits
/// differing only in which same-valued constant they use coincide.
fn canonical_relabel(
    lines: Vec<Line>,
    instances: Vec<(GateKind, Vec<usize>)>,
    n_in: usize,
) -> Circuit {
    let n = lines.len();
    let first_use = |l: usize| {
        instances
            .iter()
            .enumerate()
            .find_map(|(i, (_, t))| t.iter().position(|&x| x == l).map(|p| (i, p)))
            .unwrap_or((usize::MAX, 0))
    };
    let mut order: Vec<usize> = (0..n).collect();
    order[n_in..].sort_by_key(|&l| (lines[l].input.clone(), first_use(l), l));
    let mut new_index = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let mut circuit = Circuit::new(
        "candidate",
        order.iter().map(|&l| lines[l].clone()).collect(),
    );
    circuit.instances = instances
        .into_iter()
        .map(|(k, t)| {
            GateInstance::new(
                k.name(),
                t.iter().map(|&l| new_index[l] + 1).collect::<Vec<_>>(),
            )
        })
        .collect();
    circuit
}

fn branches(c: &SearchConstraints) -> Vec<Branch> {
    let n_in = c.target.inputs().len();
    let n_out = c.target.outputs().len();
    let gates: Vec<GateKind> = c
        .inventory
        .iter()
        .flat_map(|(k, n)| std::iter::repeat_n(k, n as usize))
        .collect();
    let widest = gates.iter().map(|k| k.width()).max().unwrap_or(1);
    let mut out = Vec::new();
    for lines in c.lines.clone() {
        if lines < n_in || lines < n_out || lines < widest {
            continue;
        }
        let consts = lines - n_in;
        for zeros in 0..=consts {
            let ones = consts - zeros;
            if !c.const0.contains(&zeros) || !c.const1.contains(&ones) {
                continue;
            }
            for order in orderings(&gates) {
                out.push(Branch {
                    lines,
                    zeros,
                    ones,
                    order,
                });
            }
        }
    }
    out
}

/// Unpruned size of the space the constraints describe.
pub fn estimate_space(c: &SearchConstraints) -> u128 {
    branches(c)
        .iter()
        .map(|b| {
            b.order
                .iter()
                .map(|&k| tuples(k, b.lines).len() as u128)
                .fold(1u128, u128::saturating_mul)
        })
        .fold(0u128, u128::saturating_add)
}

pub fn search_netlist(
    constraints: &SearchConstraints,
    library: &GateLibrary,
    options: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    let target = &constraints.target;
    let n_in = target.inputs().len();
    if n_in > MAX_SEARCH_INPUTS {
        return Err(SearchError::TooManyInputs(n_in));
    }
    let estimated = estimate_space(constraints);
    if estimated > u128::from(options.ceiling) {
        return Err(SearchError::SpaceTooLarge {
            estimated,
            ceiling: options.ceiling,
        });
    }

    let rows = 1u32 << n_in;
    let mask = if rows == 64 {
        u64::MAX
    } else {
        (1u64 << rows) - 1
    };
    let input_col = |j: usize| (0..rows).fold(0u64, |acc, x| acc | ((u64::from(x) >> j) & 1) << x);
    let targets: Vec<u64> = (0..target.outputs().len())
        .map(|k| target.output_column(k))
        .collect();

    let run_branch = |b: &Branch| {
        let capacity = (0..=b.order.len())
            .map(|d| b.order[d..].iter().map(|&k| changed_lines(k)).sum())
            .collect();
        let ctx = Ctx {
            target,
            targets: targets.clone(),
            mask,
            tuples: b.order.iter().map(|&k| tuples(k, b.lines)).collect(),
            order: &b.order,
            capacity,
            zeros: b.zeros,
            ones: b.ones,
        };
        let mut cols: Vec<u64> = (0..b.lines)
            .map(|l| {
                if l < n_in {
                    input_col(l)
                } else if l < n_in + b.zeros {
                    0
                } else {
                    mask
                }
            })
            .collect();
        let mut found = Found {
            explored: 0,
            circuits: Vec::new(),
        };
        ctx.dfs(0, &mut cols, &mut Vec::new(), &mut found);
        found
    };

    let work = branches(constraints);
    let collect = || work.par_iter().map(run_branch).collect::<Vec<Found>>();
    let results = match options.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()?
            .install(collect),
        None => collect(),
    };

    let explored = results.iter().map(|f| f.explored).sum();
    let unique: BTreeSet<String> = results
        .into_iter()
        .flat_map(|f| f.circuits)
        .map(|c| serialize_netlist(&c))
        .collect();
    let mut candidates = Vec::with_capacity(unique.len());
    for (i, text) in unique.into_iter().enumerate() {
        let mut c = crate::netlist::parse_netlist(&text).expect("serializer output parses");
        c.name = format!("{}_{}", target.name().to_ascii_lowercase(), i + 1);
        let verdict = functional_equivalence(&c.validate(library)?, target, &Binding::identity())?;
        if !verdict.equivalent {
            return Err(SearchError::Verification(format!(
                "{}: {}",
                c.name,
                verdict.witness.map(|w| w.to_string()).unwrap_or_default()
            )));
        }
        candidates.push(c);
    }
    Ok(SearchResult {
        candidates,
        explored,
        estimated,
        exhausted: true,
    })
}
