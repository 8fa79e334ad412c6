//! Reference multi-output Boolean functions the circuits are checked against.

use std::fmt;

use crate::netlist::{circuit_truth_table, SimError, TableMode, ValidatedCircuit};

/// A total function from named input bits to named output bits, stored as a
/// lookup table. Input `j` is bit `j` of the row index; output `i` is bit `i`
/// of the stored word.
#[derive(Clone, PartialEq, Eq)]
pub struct SpecFunction {
    name: String,
    inputs: Vec<String>,
    outputs: Vec<String>,
    table: Vec<u64>,
}

/// Names accepted by [`SpecFunction::by_name`].
pub const SPEC_NAMES: [&str; 8] = [
    "HALF_ADDER",
    "FULL_ADDER",
    "HALF_SUB",
    "FULL_SUB",
    "HALF_ADDSUB",
    "FULL_ADDSUB",
    "HALF_ADDSUB_INV",
    "FULL_ADDSUB_INV",
];

fn carry(a: bool, b: bool, c: bool) -> bool {
    (a & b) ^ ((a ^ b) & c)
}

fn borrow(a: bool, b: bool, c: bool) -> bool {
    (!a & b) ^ (!a & c) ^ (b & c)
}

impl SpecFunction {
    /// Tabulates `f` over every assignment of `inputs`.
    pub fn from_fn(
        name: impl Into<String>,
        inputs: &[&str],
        outputs: &[&str],
        f: impl Fn(&[bool]) -> Vec<bool>,
    ) -> Self {
        let n = inputs.len();
        assert!(n < 32, "too many inputs for a lookup table");
        let table = (0..1u64 << n)
            .map(|x| {
                let bits: Vec<bool> = (0..n).map(|j| (x >> j) & 1 == 1).collect();
                let out = f(&bits);
                assert_eq!(out.len(), outputs.len(), "output arity");
                out.iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i))
            })
            .collect();
        Self {
            name: name.into(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            outputs: outputs.iter().map(|s| s.to_string()).collect(),
            table,
        }
    }

    pub fn half_adder() -> Self {
        Self::from_fn("HALF_ADDER", &["A", "B"], &["Sum", "Carry"], |x| {
            vec![x[0] ^ x[1], x[0] & x[1]]
        })
    }

    pub fn full_adder() -> Self {
        Self::from_fn("FULL_ADDER", &["A", "B", "Cin"], &["Sum", "Cout"], |x| {
            vec![x[0] ^ x[1] ^ x[2], carry(x[0], x[1], x[2])]
        })
    }

    pub fn half_sub() -> Self {
        Self::from_fn("HALF_SUB", &["A", "B"], &["Diff", "Borrow"], |x| {
            vec![x[0] ^ x[1], !x[0] & x[1]]
        })
    }

    pub fn full_sub() -> Self {
        Self::from_fn("FULL_SUB", &["A", "B", "C"], &["Diff", "Borr"], |x| {
            vec![x[0] ^ x[1] ^ x[2], borrow(x[0], x[1], x[2])]
        })
    }

    /// `Ctrl = 0` adds, `Ctrl = 1` subtracts.
    pub fn half_addsub() -> Self {
        Self::half_addsub_with("HALF_ADDSUB", true)
    }

    /// `Ctrl = 0` adds, `Ctrl = 1` subtracts.
    pub fn full_addsub() -> Self {
        Self::full_addsub_with("FULL_ADDSUB", true)
    }

    /// Opposite control convention: `Ctrl = 1` adds.
    pub fn half_addsub_inverted() -> Self {
        Self::half_addsub_with("HALF_ADDSUB_INV", false)
    }

    /// Opposite control convention: `Ctrl = 1` adds.
    pub fn full_addsub_inverted() -> Self {
        Self::full_addsub_with("FULL_ADDSUB_INV", false)
    }

    fn half_addsub_with(name: &str, one_subtracts: bool) -> Self {
        Self::from_fn(
            name,
            &["A", "B", "Ctrl"],
            &["SumDiff", "CarryBorrow"],
            |x| {
                let sub = x[2] == one_subtracts;
                let cb = if sub { !x[0] & x[1] } else { x[0] & x[1] };
                vec![x[0] ^ x[1], cb]
            },
        )
    }

    fn full_addsub_with(name: &str, one_subtracts: bool) -> Self {
        Self::from_fn(
            name,
            &["A", "B", "Cin", "Ctrl"],
            &["SumDiff", "CarryBorrow"],
            |x| {
                let sub = x[3] == one_subtracts;
                let cb = if sub {
                    borrow(x[0], x[1], x[2])
                } else {
                    carry(x[0], x[1], x[2])
                };
                vec![x[0] ^ x[1] ^ x[2], cb]
            },
        )
    }

    /// `n` inputs `I1..In` passed straight to outputs `O1..On`.
    pub fn identity(n: usize) -> Self {
        let ins: Vec<String> = (1..=n).map(|i| format!("I{i}")).collect();
        let outs: Vec<String> = (1..=n).map(|i| format!("O{i}")).collect();
        let ins: Vec<&str> = ins.iter().map(String::as_str).collect();
        let outs: Vec<&str> = outs.iter().map(String::as_str).collect();
        Self::from_fn("IDENTITY", &ins, &outs, <[bool]>::to_vec)
    }

    pub fn by_name(name: &str) -> Option<Self> {
        let f = match name.to_ascii_uppercase().as_str() {
            "HALF_ADDER" => Self::half_adder(),
            "FULL_ADDER" => Self::full_adder(),
            "HALF_SUB" => Self::half_sub(),
            "FULL_SUB" => Self::full_sub(),
            "HALF_ADDSUB" => Self::half_addsub(),
            "FULL_ADDSUB" => Self::full_addsub(),
            "HALF_ADDSUB_INV" => Self::half_addsub_inverted(),
            "FULL_ADDSUB_INV" => Self::full_addsub_inverted(),
            other => {
                let n = other.strip_prefix("IDENTITY")?.parse().ok()?;
                if n == 0 || n > 16 {
                    return None;
                }
                Self::identity(n)
            }
        };
        Some(f)
    }

    /// The function a circuit computes from its named inputs to its named
    /// outputs, both in line order.
    pub fn of_circuit(circuit: &ValidatedCircuit) -> Result<Self, SimError> {
        let table = circuit_truth_table(circuit, TableMode::FreeInputs)?;
        let out_lines: Vec<usize> = circuit.named_outputs().map(|(i, _)| i).collect();
        let words = table
            .rows()
            .iter()
            .map(|(_, o)| {
                out_lines
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (k, &l)| acc | (u64::from(o.get(l)) << k))
            })
            .collect();
        Ok(Self {
            name: circuit.name.clone(),
            inputs: circuit.named_inputs().map(|(_, l)| l.to_string()).collect(),
            outputs: circuit
                .named_outputs()
                .map(|(_, l)| l.to_string())
                .collect(),
            table: words,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    /// Packed outputs for the packed input assignment `x`.
    pub fn eval(&self, x: u64) -> u64 {
        self.table[x as usize]
    }

    /// Column of output `k` over all inputs, row `x` in bit `x`.
    pub fn output_column(&self, k: usize) -> u64 {
        assert!(self.inputs.len() <= 6, "column needs at most 64 rows");
        self.table
            .iter()
            .enumerate()
            .fold(0u64, |acc, (x, w)| acc | (((w >> k) & 1) << x))
    }
}

impl fmt::Debug for SpecFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpecFunction")
            .field("name", &self.name)
            .field("inputs", &self.inputs)
            .field("outputs", &self.outputs)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Hand-written rows, input order as listed, outputs (first, second).
    #[test]
    fn half_functions() {
        let rows = [(0, 0), (1, 0), (0, 1), (1, 1)];
        let hs = SpecFunction::half_sub();
        let ha = SpecFunction::half_adder();
        let expect_sub = [0b00, 0b01, 0b11, 0b00];
        let expect_add = [0b00, 0b01, 0b01, 0b10];
        for (x, _) in rows.iter().enumerate() {
            assert_eq!(hs.eval(x as u64), expect_sub[x]);
            assert_eq!(ha.eval(x as u64), expect_add[x]);
        }
    }

    #[test]
    fn full_sub_matches_borrow_table() {
        // A - B - C: borrow whenever B + C > A
        let fs = SpecFunction::full_sub();
        for x in 0..8u64 {
            let (a, b, c) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
            let diff = (a + 2 - b - c) & 1;
            let borr = u64::from(b + c > a);
            assert_eq!(fs.eval(x), diff | borr << 1, "row {x}");
        }
    }

    #[test]
    fn full_adder_is_arithmetic() {
        let fa = SpecFunction::full_adder();
        for x in 0..8u64 {
            let s = (x & 1) + ((x >> 1) & 1) + ((x >> 2) & 1);
            assert_eq!(fa.eval(x), (s & 1) | (s >> 1) << 1);
        }
    }

    #[test]
    fn addsub_control_conventions() {
        let f = SpecFunction::full_addsub();
        let g = SpecFunction::full_addsub_inverted();
        let add = SpecFunction::full_adder();
        let sub = SpecFunction::full_sub();
        for x in 0..8u64 {
            assert_eq!(f.eval(x), add.eval(x));
            assert_eq!(f.eval(x | 8), sub.eval(x));
            assert_eq!(g.eval(x), sub.eval(x));
            assert_eq!(g.eval(x | 8), add.eval(x));
        }
        let h = SpecFunction::half_addsub();
        for x in 0..4u64 {
            assert_eq!(h.eval(x), SpecFunction::half_adder().eval(x));
            assert_eq!(h.eval(x | 4), SpecFunction::half_sub().eval(x));
        }
    }

    #[test]
    fn lookup_by_name() {
        for name in SPEC_NAMES {
            assert_eq!(SpecFunction::by_name(name).unwrap().name(), name);
        }
        assert_eq!(
            SpecFunction::by_name("identity3").unwrap().inputs().len(),
            3
        );
        assert!(SpecFunction::by_name("IDENTITY0").is_none());
        assert!(SpecFunction::by_name("NOPE").is_none());
    }

    #[test]
    fn columns() {
        let hs = SpecFunction::half_sub();
        assert_eq!(hs.output_column(0), 0b0110);
        assert_eq!(hs.output_column(1), 0b0100);
    }
}
