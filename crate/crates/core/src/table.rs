//! Truth tables and the predicates defined over them.

use std::collections::HashSet;

use thiserror::Error;

use crate::bits::BitVector;

/// Default limit on the number of lines an exhaustive enumeration may cover.
pub const DEFAULT_ENUMERATION_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("enumerating {width} lines exceeds the bound of {bound}")]
pub struct EnumerationTooLarge {
    pub width: usize,
    pub bound: usize,
}

pub(crate) fn check_bound(width: usize, bound: usize) -> Result<(), EnumerationTooLarge> {
    if width > bound {
        Err(EnumerationTooLarge { width, bound })
    } else {
        Ok(())
    }
}

/// Rows in ascending order of input encoding, one per input vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    input_width: usize,
    output_width: usize,
    rows: Vec<(BitVector, BitVector)>,
}

impl TruthTable {
    /// Builds a table from rows. Rows must cover every input exactly once;
    /// they are sorted by input encoding.
    pub fn from_rows(mut rows: Vec<(BitVector, BitVector)>) -> Option<Self> {
        let (first_in, first_out) = rows.first().copied()?;
        let input_width = first_in.width();
        let output_width = first_out.width();
        if input_width >= 64 || rows.len() != 1usize << input_width {
            return None;
        }
        if rows
            .iter()
            .any(|(i, o)| i.width() != input_width || o.width() != output_width)
        {
            return None;
        }
        rows.sort_by_key(|(i, _)| i.encoding());
        if rows
            .iter()
            .enumerate()
            .any(|(n, (i, _))| i.encoding() != n as u64)
        {
            return None;
        }
        Some(Self {
            input_width,
            output_width,
            rows,
        })
    }

    /// Table of an arbitrary function over `{0,1}^input_width`.
    pub(crate) fn tabulate(
        input_width: usize,
        output_width: usize,
        f: impl Fn(BitVector) -> BitVector,
    ) -> Self {
        let rows = (0..1u64 << input_width)
            .map(|x| {
                let input = BitVector::decode(x, input_width).expect("width in range");
                let output = f(input);
                debug_assert_eq!(output.width(), output_width);
                (input, output)
            })
            .collect();
        Self {
            input_width,
            output_width,
            rows,
        }
    }

    pub(crate) fn from_sorted_rows(
        input_width: usize,
        output_width: usize,
        rows: Vec<(BitVector, BitVector)>,
    ) -> Self {
        debug_assert_eq!(rows.len(), 1usize << input_width);
        Self {
            input_width,
            output_width,
            rows,
        }
    }

    pub fn input_width(&self) -> usize {
        self.input_width
    }

    pub fn output_width(&self) -> usize {
        self.output_width
    }

    pub fn rows(&self) -> &[(BitVector, BitVector)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Output for the input with the given encoding.
    pub fn output(&self, input_encoding: u64) -> BitVector {
        self.rows[input_encoding as usize].1
    }

    /// Output encodings in row order.
    pub fn permutation(&self) -> Vec<u64> {
        self.rows.iter().map(|(_, o)| o.encoding()).collect()
    }
}

/// True iff the output column is a permutation of the input domain.
pub fn is_reversible(table: &TruthTable) -> bool {
    if table.input_width != table.output_width {
        return false;
    }
    let mut seen = HashSet::with_capacity(table.rows.len());
    table.rows.iter().all(|(_, o)| seen.insert(o.encoding()))
}

/// Outcome of a parity-preservation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityCheck {
    pub preserving: bool,
    /// Least input (by encoding) whose parity differs from its output's.
    pub witness: Option<BitVector>,
}

impl ParityCheck {
    pub(crate) fn over<'a>(rows: impl IntoIterator<Item = &'a (BitVector, BitVector)>) -> Self {
        let witness = rows
            .into_iter()
            .find(|(i, o)| i.parity() != o.parity())
            .map(|(i, _)| *i);
        Self {
            preserving: witness.is_none(),
            witness,
        }
    }
}

/// Parity equality on every row of the table.
pub fn is_parity_preserving(table: &TruthTable) -> ParityCheck {
    ParityCheck::over(table.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: &[u8]) -> BitVector {
        BitVector::from_bits(bits).unwrap()
    }

    #[test]
    fn constant_map_is_not_reversible() {
        let t = TruthTable::tabulate(2, 2, |_| bv(&[0, 0]));
        assert!(!is_reversible(&t));
    }

    #[test]
    fn identity_is_reversible_and_parity_preserving() {
        let t = TruthTable::tabulate(3, 3, |x| x);
        assert!(is_reversible(&t));
        assert!(is_parity_preserving(&t).preserving);
        assert_eq!(t.permutation(), (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn width_change_is_not_reversible() {
        let t = TruthTable::tabulate(2, 3, |x| BitVector::decode(x.encoding(), 3).unwrap());
        assert!(!is_reversible(&t));
    }

    #[test]
    fn from_rows_requires_total_domain() {
        let rows = vec![(bv(&[1]), bv(&[0])), (bv(&[0]), bv(&[1]))];
        let t = TruthTable::from_rows(rows).unwrap();
        assert_eq!(t.rows()[0].0, bv(&[0]));
        assert!(TruthTable::from_rows(vec![(bv(&[1]), bv(&[0]))]).is_none());
        assert!(TruthTable::from_rows(vec![(bv(&[1]), bv(&[0])), (bv(&[1]), bv(&[0]))]).is_none());
    }

    #[test]
    fn parity_witness_is_least_encoding() {
        // flips bit 0 whenever bit 1 is set
        let t = TruthTable::tabulate(2, 2, |x| {
            BitVector::decode(x.encoding() ^ (x.encoding() >> 1), 2).unwrap()
        });
        let check = is_parity_preserving(&t);
        assert!(!check.preserving);
        assert_eq!(check.witness, Some(bv(&[0, 1])));
    }
}
