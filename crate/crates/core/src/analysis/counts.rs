use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

/// Number of two-input XOR (α), two-input AND (β) and NOT (δ) operations in
/// a set of output equations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LogicCounts {
    pub xor: u32,
    pub and: u32,
    pub not: u32,
}

impl LogicCounts {
    pub const ZERO: LogicCounts = LogicCounts::new(0, 0, 0);

    pub const fn new(xor: u32, and: u32, not: u32) -> Self {
        Self { xor, and, not }
    }

    pub fn scaled(self, n: u32) -> Self {
        Self::new(self.xor * n, self.and * n, self.not * n)
    }

    /// Componentwise `self - other`.
    pub fn delta(self, other: LogicCounts) -> LogicDelta {
        LogicDelta {
            xor: i64::from(self.xor) - i64::from(other.xor),
            and: i64::from(self.and) - i64::from(other.and),
            not: i64::from(self.not) - i64::from(other.not),
        }
    }
}

impl Add for LogicCounts {
    type Output = LogicCounts;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.xor + rhs.xor, self.and + rhs.and, self.not + rhs.not)
    }
}

impl AddAssign for LogicCounts {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sum for LogicCounts {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

/// Formats as `8α+6β+2δ`.
impl fmt::Display for LogicCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}α+{}β+{}δ", self.xor, self.and, self.not)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LogicDelta {
    pub xor: i64,
    pub and: i64,
    pub not: i64,
}

impl fmt::Display for LogicDelta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}α{:+}β{:+}δ", self.xor, self.and, self.not)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn counts() -> impl Strategy<Value = LogicCounts> {
        (0u32..1000, 0u32..1000, 0u32..1000).prop_map(|(a, b, c)| LogicCounts::new(a, b, c))
    }

    proptest! {
        #[test]
        fn addition_is_a_commutative_monoid(a in counts(), b in counts(), c in counts()) {
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a + LogicCounts::ZERO, a);
        }
    }

    #[test]
    fn display() {
        assert_eq!(LogicCounts::new(8, 6, 2).to_string(), "8α+6β+2δ");
        let d = LogicCounts::new(8, 6, 2).delta(LogicCounts::new(6, 8, 4));
        assert_eq!(d.to_string(), "+2α-2β-2δ");
        assert_eq!(
            LogicCounts::new(3, 2, 1).scaled(2),
            LogicCounts::new(6, 4, 2)
        );
    }
}
