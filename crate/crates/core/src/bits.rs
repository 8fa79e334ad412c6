//! Fixed-width bit vectors used for line states and truth-table rows.
//!
//! Element 0 of a vector is the first line. The integer encoding places the
//! first line in the least significant bit, so `encoding() == Σ bit_i · 2^i`.

use std::fmt;

use thiserror::Error;

/// Largest width a [`BitVector`] can hold.
pub const MAX_WIDTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitError {
    #[error("bit vector width must be between 1 and {MAX_WIDTH}, got {0}")]
    BadWidth(usize),
    #[error("bit value at position {index} is {value}, expected 0 or 1")]
    NotABit { index: usize, value: u8 },
    #[error("encoding {value} does not fit in {width} bits")]
    EncodingOverflow { value: u64, width: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    bits: u64,
    width: u8,
}

impl BitVector {
    /// All-zero vector of the given width.
    pub fn zeros(width: usize) -> Result<Self, BitError> {
        check_width(width)?;
        Ok(Self {
            bits: 0,
            width: width as u8,
        })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self, BitError> {
        check_width(bits.len())?;
        let mut v = 0u64;
        for (index, &value) in bits.iter().enumerate() {
            match value {
                0 => {}
                1 => v |= 1 << index,
                _ => return Err(BitError::NotABit { index, value }),
            }
        }
        Ok(Self {
            bits: v,
            width: bits.len() as u8,
        })
    }

    pub fn from_bools(bits: &[bool]) -> Result<Self, BitError> {
        check_width(bits.len())?;
        let v = bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i));
        Ok(Self {
            bits: v,
            width: bits.len() as u8,
        })
    }

    /// Decodes an integer produced by [`BitVector::encoding`].
    pub fn decode(value: u64, width: usize) -> Result<Self, BitError> {
        check_width(width)?;
        if width < 64 && value >> width != 0 {
            return Err(BitError::EncodingOverflow { value, width });
        }
        Ok(Self {
            bits: value,
            width: width as u8,
        })
    }

    /// Integer encoding with the first line as bit 0.
    pub fn encoding(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    /// Bit at position `index` (0-based, first line is 0).
    ///
    /// Panics if `index` is out of range.
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.width(), "bit index {index} out of range");
        (self.bits >> index) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.width(), "bit index {index} out of range");
        if value {
            self.bits |= 1 << index;
        } else {
            self.bits &= !(1 << index);
        }
    }

    /// XOR of all bits.
    pub fn parity(&self) -> bool {
        self.bits.count_ones() % 2 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.width()).map(move |i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }
}

fn check_width(width: usize) -> Result<(), BitError> {
    if width == 0 || width > MAX_WIDTH {
        Err(BitError::BadWidth(width))
    } else {
        Ok(())
    }
}

/// Prints the bits first line first, e.g. `(A=1, B=0, C=0)` prints as `100`.
impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}
