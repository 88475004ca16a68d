//! Value-semantics kernel: variables, literals, cubes, DNF formulas,
//! assignments and truth tables.
//!
//! Variables are 1-based (`A1`, `A2`, ...). Cubes and assignments store one
//! bit per variable, variable `Ak` at bit `k - 1`. Truth-table rows use the
//! opposite convention: `A1` is the most significant bit of the row number,
//! so rows ascend `00..0`, `00..1`, ..., `11..1`.

mod cube;
mod dnf;
mod table;

use std::fmt;

pub use cube::Cube;
pub use dnf::Dnf;
pub use table::{
    count_sat, equivalent, evaluate, truth_table, witness, RowCap, TruthTable, DEFAULT_MAX_VARS,
    HARD_MAX_VARS,
};

pub(crate) use table::RowDnf;

/// A propositional variable `A<index>`, `index >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(u32);

impl VarId {
    /// Returns `None` for index 0.
    pub const fn new(index: u32) -> Option<VarId> {
        if index == 0 {
            None
        } else {
            Some(VarId(index))
        }
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub(crate) const fn bit(self) -> usize {
        (self.0 - 1) as usize
    }

    pub(crate) const fn from_bit(bit: usize) -> VarId {
        VarId(bit as u32 + 1)
    }

    /// Checks `1 <= index <= n`.
    pub fn in_range(index: u32, n: usize) -> crate::Result<VarId> {
        match VarId::new(index) {
            Some(v) if (index as usize) <= n => Ok(v),
            _ => Err(crate::Error::IndexOutOfRange { index, n }),
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

/// A variable or its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: VarId,
    pub polarity: Polarity,
}

impl Literal {
    pub fn new(var: VarId, polarity: Polarity) -> Literal {
        Literal { var, polarity }
    }

    /// `A<index>`. Panics on index 0.
    pub fn pos(index: u32) -> Literal {
        Literal::new(
            VarId::new(index).expect("variable index 0"),
            Polarity::Positive,
        )
    }

    /// `A<index>'`. Panics on index 0.
    pub fn neg(index: u32) -> Literal {
        Literal::new(
            VarId::new(index).expect("variable index 0"),
            Polarity::Negative,
        )
    }

    pub fn is_positive(self) -> bool {
        self.polarity == Polarity::Positive
    }

    pub fn negate(self) -> Literal {
        Literal::new(self.var, self.polarity.flip())
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Positive => write!(f, "{}", self.var),
            Polarity::Negative => write!(f, "{}'", self.var),
        }
    }
}

/// A value for each of `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    n: usize,
    bits: Vec<u64>,
}

impl Assignment {
    /// All variables false.
    pub fn zeros(n: usize) -> Assignment {
        Assignment {
            n,
            bits: vec![0; n.div_ceil(64)],
        }
    }

    /// `values[k - 1]` is the value of `Ak`.
    pub fn from_values(values: &[bool]) -> Assignment {
        let mut asg = Assignment::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            if v {
                asg.bits[i / 64] |= 1 << (i % 64);
            }
        }
        asg
    }

    /// The assignment of truth-table row `row` (A1 most significant).
    pub fn from_row(row: u64, n: usize) -> Assignment {
        assert!(n <= 64, "row encoding supports at most 64 variables");
        let mut asg = Assignment::zeros(n);
        for k in 1..=n {
            if (row >> (n - k)) & 1 == 1 {
                asg.bits[(k - 1) / 64] |= 1 << ((k - 1) % 64);
            }
        }
        asg
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Panics if `var` is beyond `n`.
    pub fn value(&self, var: VarId) -> bool {
        assert!(
            (var.index() as usize) <= self.n,
            "{var} is beyond n = {}",
            self.n
        );
        (self.bits[var.bit() / 64] >> (var.bit() % 64)) & 1 == 1
    }

    pub fn set(&mut self, var: VarId, value: bool) {
        assert!(
            (var.index() as usize) <= self.n,
            "{var} is beyond n = {}",
            self.n
        );
        let mask = 1u64 << (var.bit() % 64);
        if value {
            self.bits[var.bit() / 64] |= mask;
        } else {
            self.bits[var.bit() / 64] &= !mask;
        }
    }

    pub fn values(&self) -> Vec<bool> {
        (1..=self.n as u32).map(|k| self.value(VarId(k))).collect()
    }

    /// Row number in truth-table order; `None` above 64 variables.
    pub fn row(&self) -> Option<u64> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.values()
                .iter()
                .fold(0u64, |acc, &v| (acc << 1) | u64::from(v)),
        )
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Display for Assignment {
    /// `(0,0,1)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if v { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn var_zero_rejected() {
        assert!(VarId::new(0).is_none());
        assert_eq!(VarId::new(3).unwrap().to_string(), "A3");
        assert!(VarId::in_range(5, 4).is_err());
        assert!(VarId::in_range(4, 4).is_ok());
    }

    #[test]
    fn row_encoding_puts_a1_first() {
        let asg = Assignment::from_row(0b001, 3);
        assert_eq!(asg.values(), vec![false, false, true]);
        assert_eq!(asg.to_string(), "(0,0,1)");
        assert_eq!(asg.row(), Some(1));
        let asg = Assignment::from_row(0b1110, 4);
        assert_eq!(asg.to_string(), "(1,1,1,0)");
        for r in 0..16 {
            assert_eq!(Assignment::from_row(r, 4).row(), Some(r));
        }
    }

    #[test]
    fn literal_display() {
        assert_eq!(Literal::neg(2).to_string(), "A2'");
        assert_eq!(Literal::pos(10).to_string(), "A10");
        assert_eq!(Literal::neg(2).negate(), Literal::pos(2));
    }
}
