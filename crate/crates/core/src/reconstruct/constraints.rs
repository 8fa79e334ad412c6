use std::ops::RangeInclusive;

use thiserror::Error;

use crate::analysis::{GateTally, SpecFunction};
use crate::gate::GateKind;

/// What a reconstructed netlist must look like.
#[derive(Debug, Clone)]
pub struct SearchConstraints {
    /// Exact gate multiset every candidate uses.
    pub inventory: GateTally,
    pub lines: RangeInclusive<usize>,
    /// Allowed number of constant-0 lines.
    pub const0: RangeInclusive<usize>,
    /// Allowed number of constant-1 lines.
    pub const1: RangeInclusive<usize>,
    pub target: SpecFunction,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("constraints line {line}: {message}")]
pub struct ConstraintsError {
    pub line: usize,
    pub message: String,
}

impl SearchConstraints {
    /// Constraints with unbounded constant budgets.
    pub fn new(inventory: GateTally, lines: RangeInclusive<usize>, target: SpecFunction) -> Self {
        Self {
            inventory,
            lines,
            const0: 0..=usize::MAX,
            const1: 0..=usize::MAX,
            target,
        }
    }

    pub fn with_const0(mut self, range: RangeInclusive<usize>) -> Self {
        self.const0 = range;
        self
    }

    pub fn with_const1(mut self, range: RangeInclusive<usize>) -> Self {
        self.const1 = range;
        self
    }

    /// Parses the line-oriented constraints format:
    ///
    /// ```text
    /// inventory MUX 2
    /// inventory FEYNMAN 2
    /// lines 4 4
    /// const0 0 2
    /// const1 0 0
    /// target HALF_ADDSUB
    /// ```
    ///
    /// `inventory` may repeat; `const0`/`const1` default to unbounded.
    pub fn parse(text: &str) -> Result<Self, ConstraintsError> {
        let mut inventory = GateTally::new();
        let mut lines = None;
        let mut const0 = 0..=usize::MAX;
        let mut const1 = 0..=usize::MAX;
        let mut target = None;
        for (n, raw) in text.lines().enumerate() {
            let err = |message: String| ConstraintsError {
                line: n + 1,
                message,
            };
            let body = raw.split('#').next().unwrap_or("");
            let words: Vec<&str> = body.split_whitespace().collect();
            let Some((&key, args)) = words.split_first() else {
                continue;
            };
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| err(format!("`{s}` is not a valid number")))
            };
            let range = |args: &[&str]| match args {
                [lo, hi] => {
                    let (lo, hi) = (num(lo)?, num(hi)?);
                    if lo > hi {
                        return Err(err(format!("empty range {lo}..{hi}")));
                    }
                    Ok(lo..=hi)
                }
                _ => Err(err(format!("`{key}` takes two numbers"))),
            };
            match key {
                "inventory" => {
                    let [name, count] = args else {
                        return Err(err("`inventory` takes a gate name and a count".into()));
                    };
                    let kind = GateKind::from_name(name)
                        .ok_or_else(|| err(format!("unknown gate `{name}`")))?;
                    let count =
                        u32::try_from(num(count)?).map_err(|_| err("count too large".into()))?;
                    inventory.add(kind, count);
                }
                "lines" => lines = Some(range(args)?),
                "const0" => const0 = range(args)?,
                "const1" => const1 = range(args)?,
                "target" => {
                    let [name] = args else {
                        return Err(err("`target` takes one function name".into()));
                    };
                    target = Some(
                        SpecFunction::by_name(name)
                            .ok_or_else(|| err(format!("unknown target `{name}`")))?,
                    );
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        let end = text.lines().count() + 1;
        let missing = |what: &str| ConstraintsError {
            line: end,
            message: format!("missing `{what}`"),
        };
        Ok(Self {
            inventory,
            lines: lines.ok_or_else(|| missing("lines"))?,
            const0,
            const1,
            target: target.ok_or_else(|| missing("target"))?,
        })
    }
}
