//! Truth tables as CSV: one column per variable, then one per formula.

use std::fmt::Write as _;

use jointex_core::{Error, Family, Result, RowCap, TruthTable};

/// Cells beyond this many (rows times columns) are refused.
pub const MAX_CELLS: u64 = 1 << 28;

/// Which conjunction columns to emit after the variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjunctions {
    /// Every non-empty subset, by size then lexicographically.
    All,
    /// The singles, then the `k`-subsets when `k >= 2`.
    Size(usize),
}

impl std::str::FromStr for Conjunctions {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Conjunctions, String> {
        if s == "all" {
            return Ok(Conjunctions::All);
        }
        match s.strip_prefix("k=").map(str::parse::<usize>) {
            Some(Ok(k)) if k >= 1 => Ok(Conjunctions::Size(k)),
            _ => Err(format!("expected `all` or `k=<k>` with k >= 1, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvTable {
    pub n: usize,
    pub labels: Vec<String>,
    pub columns: Vec<TruthTable>,
}

impl CsvTable {
    /// Subsets (1-based, ascending members) in column order.
    pub fn subsets(n: usize, which: Conjunctions) -> Result<Vec<Vec<usize>>> {
        let sizes: Vec<usize> = match which {
            Conjunctions::All => (1..=n).collect(),
            Conjunctions::Size(k) if k > n => {
                return Err(Error::InvalidK { k, count: n });
            }
            Conjunctions::Size(1) => vec![1],
            Conjunctions::Size(k) => vec![1, k],
        };
        let columns: u64 = sizes.iter().map(|&k| binomial(n as u64, k as u64)).sum();
        if n >= 63 || (columns + n as u64).saturating_mul(1 << n) > MAX_CELLS {
            return Err(Error::Capacity {
                n,
                cap: max_n_for(which),
            });
        }
        Ok(sizes
            .into_iter()
            .flat_map(|k| itertools::Itertools::combinations(1..=n, k))
            .collect())
    }

    pub fn build(fam: &Family, which: Conjunctions, cap: RowCap) -> Result<CsvTable> {
        let n = fam.n;
        cap.check(n)?;
        let subsets = CsvTable::subsets(n, which)?;
        let singles: Vec<TruthTable> = fam
            .propositions
            .iter()
            .map(|p| TruthTable::build(p, n, cap))
            .collect::<Result<_>>()?;
        let mut labels = Vec::with_capacity(subsets.len());
        let mut columns = Vec::with_capacity(subsets.len());
        for s in subsets {
            labels.push(s.iter().map(|j| format!("P_{j}")).collect::<String>());
            let mut t = singles[s[0] - 1].clone();
            for &j in &s[1..] {
                t.and_assign(&singles[j - 1]);
            }
            columns.push(t);
        }
        Ok(CsvTable { n, labels, columns })
    }

    /// Header plus `2^n` rows, `,` separated, each line ending in `\n`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let vars = (1..=self.n).map(|k| format!("A_{k}"));
        let header: Vec<String> = vars.chain(self.labels.iter().cloned()).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in 0..1u64 << self.n {
            for k in 1..=self.n {
                let bit = (row >> (self.n - k)) & 1;
                let _ = write!(out, "{}{bit}", if k > 1 { "," } else { "" });
            }
            for t in &self.columns {
                out.push(',');
                out.push(if t.get(row) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Largest `n` the cell limit admits for `which`.
fn max_n_for(which: Conjunctions) -> usize {
    (1..63)
        .take_while(|&n| {
            let columns: u64 = match which {
                Conjunctions::All => (1u64 << n) - 1,
                Conjunctions::Size(k) if k <= 1 => n,
                Conjunctions::Size(k) => n + binomial(n, k as u64),
            };
            (columns + n).saturating_mul(1 << n) <= MAX_CELLS
        })
        .last()
        .unwrap_or(0) as usize
}
