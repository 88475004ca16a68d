use std::fmt;

use rayon::prelude::*;

use super::{Assignment, Dnf};
use crate::{Error, Result};

/// Default limit on the variable count of exhaustive (row-by-row) paths.
pub const DEFAULT_MAX_VARS: usize = 20;

/// Absolute limit; `2^30` rows is 128 MiB per table.
pub const HARD_MAX_VARS: usize = 30;

/// Variable-count limit for anything that enumerates `2^n` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowCap(usize);

impl RowCap {
    /// Caps above [`HARD_MAX_VARS`] are rejected.
    pub fn new(max_vars: usize) -> Result<RowCap> {
        if max_vars > HARD_MAX_VARS {
            return Err(Error::Capacity {
                n: max_vars,
                cap: HARD_MAX_VARS,
            });
        }
        Ok(RowCap(max_vars))
    }

    pub fn max_vars(self) -> usize {
        self.0
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::Capacity { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for RowCap {
    fn default() -> Self {
        RowCap(DEFAULT_MAX_VARS)
    }
}

/// The value of a function on all `2^n` rows. Row `r` lives at bit `r % 64`
/// of word `r / 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

const PAR_CHUNK_WORDS: usize = 1024;

impl TruthTable {
    pub fn build(x: &Dnf, n: usize, cap: RowCap) -> Result<TruthTable> {
        cap.check(n)?;
        x.check_vars(n)?;
        let compiled = RowDnf::compile(x, n);
        let rows = 1u64 << n;
        let mut words = vec![0u64; word_count(n)];
        let fill = |base: usize, chunk: &mut [u64]| {
            for (w, word) in chunk.iter_mut().enumerate() {
                let start = ((base + w) as u64) * 64;
                let end = (start + 64).min(rows);
                let mut bits = 0u64;
                for r in start..end {
                    if compiled.eval(r) {
                        bits |= 1 << (r - start);
                    }
                }
                *word = bits;
            }
        };
        if words.len() > PAR_CHUNK_WORDS {
            words
                .par_chunks_mut(PAR_CHUNK_WORDS)
                .enumerate()
                .for_each(|(i, chunk)| fill(i * PAR_CHUNK_WORDS, chunk));
        } else {
            fill(0, &mut words);
        }
        Ok(TruthTable { n, words })
    }

    /// Constant-true table, the neutral element for [`TruthTable::and`].
    pub fn ones(n: usize, cap: RowCap) -> Result<TruthTable> {
        cap.check(n)?;
        let mut t = TruthTable {
            n,
            words: vec![!0u64; word_count(n)],
        };
        t.clear_padding();
        Ok(t)
    }

    /// `bits[r]` is row `r`. Panics unless the length is a power of two.
    pub fn from_bits(bits: &[bool]) -> TruthTable {
        assert!(bits.len().is_power_of_two(), "length must be 2^n");
        let n = bits.len().trailing_zeros() as usize;
        let mut words = vec![0u64; word_count(n)];
        for (r, &b) in bits.iter().enumerate() {
            if b {
                words[r / 64] |= 1 << (r % 64);
            }
        }
        TruthTable { n, words }
    }

    fn clear_padding(&mut self) {
        if self.n < 6 {
            self.words[0] &= (1u64 << (1u64 << self.n)) - 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> u64 {
        1 << self.n
    }

    pub fn get(&self, row: u64) -> bool {
        assert!(row < self.rows(), "row {row} out of range");
        (self.words[(row / 64) as usize] >> (row % 64)) & 1 == 1
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn count_zeros(&self) -> u64 {
        self.rows() - self.count_ones()
    }

    pub fn is_all_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// First row with value 1.
    pub fn first_one(&self) -> Option<u64> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|i| i as u64 * 64 + u64::from(self.words[i].trailing_zeros()))
    }

    /// Row-wise AND. Panics if the variable counts differ.
    pub fn and(&self, other: &TruthTable) -> TruthTable {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    pub fn and_assign(&mut self, other: &TruthTable) {
        assert_eq!(
            self.n, other.n,
            "truth tables over different variable counts"
        );
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.rows()).map(move |r| self.get(r))
    }

    /// `0`/`1` per row, ascending.
    pub fn bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 8 {
            write!(f, "TruthTable(n={}, {})", self.n, self.bit_string())
        } else {
            write!(f, "TruthTable(n={}, ones={})", self.n, self.count_ones())
        }
    }
}

fn word_count(n: usize) -> usize {
    ((1usize << n) / 64).max(1)
}

/// A DNF compiled to row-coordinate masks, for `n <= 64`.
#[derive(Debug, Clone)]
pub(crate) struct RowDnf {
    cubes: Vec<(u64, u64)>,
}

impl RowDnf {
    pub(crate) fn compile(x: &Dnf, n: usize) -> RowDnf {
        RowDnf {
            cubes: x.cubes().iter().map(|c| c.row_masks(n)).collect(),
        }
    }

    #[inline]
    pub(crate) fn eval(&self, row: u64) -> bool {
        self.cubes.iter().any(|&(m, v)| row & m == v)
    }
}

/// Value of `x` under `asg`.
pub fn evaluate(x: &Dnf, asg: &Assignment) -> Result<bool> {
    x.evaluate(asg)
}

/// Truth table of `x` over `n` variables, under the default cap.
pub fn truth_table(x: &Dnf, n: usize) -> Result<TruthTable> {
    TruthTable::build(x, n, RowCap::default())
}

/// Number of rows on which `x` is true.
pub fn count_sat(x: &Dnf, n: usize) -> Result<u64> {
    Ok(truth_table(x, n)?.count_ones())
}

/// First row (in table order) where every formula of `xs` is true.
pub fn witness(xs: &[Dnf], n: usize) -> Result<Option<Assignment>> {
    let mut acc = TruthTable::ones(n, RowCap::default())?;
    for x in xs {
        acc.and_assign(&truth_table(x, n)?);
    }
    Ok(acc.first_one().map(|r| Assignment::from_row(r, n)))
}

/// Identical truth tables.
pub fn equivalent(x: &Dnf, y: &Dnf, n: usize) -> Result<bool> {
    Ok(truth_table(x, n)? == truth_table(y, n)?)
}
