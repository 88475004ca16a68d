//! Deciding k-way mutual exclusion, and checking the family's defining
//! property two independent ways.
//!
//! *Exhaustive* checks build truth tables and test every requested subset
//! conjunction row by row. *Symbolic* checks never enumerate rows: they
//! work on the tableau of e-terms (row `i` = proposition `P_i`, column `j` =
//! the negated variable, blank diagonal), verify the pairwise cube
//! identities that make cross terms vanish, and compute each (n-1)-way
//! leave-one-out product by cube algebra. That product must collapse to the
//! single cube with only `A_j` negated; any two such cubes conflict, so the
//! full product is zero while every smaller product contains a satisfiable
//! (n-1)-way product.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::boolcore::{Assignment, Cube, Dnf, RowCap, TruthTable, VarId};
use crate::construction::{eterm_unchecked, family, Family};
use crate::{Error, Result};

/// Exhaustive mode scans every subset when `n` is at most this.
pub const FULL_SCAN_DEFAULT_MAX: usize = 12;

/// Symbolic mode checks observations over all index tuples up to this `n`;
/// above it, over a fixed spread of indices (see [`orbit_indices`]).
pub const OBS_ALL_TUPLES_MAX: usize = 32;

/// Failures kept per observation; counts are always complete.
const MAX_RECORDED_FAILURES: usize = 64;

fn require_n(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::TooFewVariables { what, n, min })
    } else {
        Ok(())
    }
}

fn var(i: usize) -> VarId {
    VarId::new(i as u32).expect("1-based index")
}

/// The cube with every one of `A1..An` positive except those in `negated`.
pub fn full_cube(n: usize, negated: &[usize]) -> Cube {
    let w = n.div_ceil(64);
    let mut words = Cube::full_buffer(n);
    for &k in negated {
        words[w + (k - 1) / 64] &= !(1u64 << ((k - 1) % 64));
    }
    Cube::from_buffer(words)
}

/// Grid of e-terms; entry `(i, j)` is the e-term of `P_i` negating `A_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    n: usize,
    entries: Vec<Option<Cube>>,
}

impl Tableau {
    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based; `None` on the diagonal. Panics out of range.
    pub fn get(&self, i: usize, j: usize) -> Option<&Cube> {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.entries[(i - 1) * self.n + (j - 1)].as_ref()
    }

    /// Non-blank entries of column `j` as `(row, cube)`.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, &Cube)> + '_ {
        (1..=self.n).filter_map(move |i| self.get(i, j).map(|c| (i, c)))
    }

    /// Non-blank entries of row `i` in column order.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &Cube)> + '_ {
        (1..=self.n).filter_map(move |j| self.get(i, j).map(|c| (j, c)))
    }
}

pub fn tableau(n: usize) -> Result<Tableau> {
    require_n("tableau", n, 3)?;
    let entries = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| (i != j).then(|| eterm_unchecked(var(i), var(j), n)))
        .collect();
    Ok(Tableau { n, entries })
}

/// Which index tuples an observation check covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coverage {
    AllTuples,
    /// Only tuples whose row and column indices all lie in this set.
    Indices(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservationFailure {
    pub observation: u8,
    /// Tableau positions `(row, column)` involved.
    pub entries: Vec<(usize, usize)>,
    pub product: Cube,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservationReport {
    pub n: usize,
    pub coverage: Coverage,
    pub obs1_ok: bool,
    pub obs2_ok: bool,
    pub obs3_ok: bool,
    /// Ordered same-column pairs checked.
    pub obs1_pairs: usize,
    /// Whole-column products checked.
    pub obs1_columns: usize,
    /// Unordered cross-column, non-symmetric pairs checked.
    pub obs2_pairs: usize,
    /// Symmetric pairs `t(m,j), t(j,m)` checked.
    pub obs3_pairs: usize,
    /// Double-negative cube against a further entry, checked.
    pub obs3_extensions: usize,
    pub failures: Vec<ObservationFailure>,
    pub failure_counts: [usize; 3],
}

impl ObservationReport {
    pub fn ok(&self) -> bool {
        self.obs1_ok && self.obs2_ok && self.obs3_ok
    }
}

/// The spread of indices used when `n` is too large for all tuples: both
/// ends, the middle, and the first word boundary when present. Any tuple of
/// up to four distinct indices has a same-pattern image inside it, and the
/// family is invariant under relabelling variables.
pub fn orbit_indices(n: usize) -> Vec<usize> {
    let mut idx = vec![1, 2, n / 2, n / 2 + 1, n - 1, n];
    if n >= 66 {
        idx.extend([64, 65]);
    }
    idx.retain(|&i| (1..=n).contains(&i));
    idx.sort_unstable();
    idx.dedup();
    idx
}

/// Checks the three pairwise identities over every index tuple.
pub fn check_observations(n: usize) -> Result<ObservationReport> {
    require_n("observation check", n, 4)?;
    observations(n, (1..=n).collect(), Coverage::AllTuples)
}

/// As [`check_observations`], restricted to tuples drawn from `indices`.
pub fn check_observations_on(n: usize, indices: &[usize]) -> Result<ObservationReport> {
    require_n("observation check", n, 4)?;
    let mut idx = indices.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::IndexOutOfRange {
            index: bad as u32,
            n,
        });
    }
    let coverage = if idx.len() == n {
        Coverage::AllTuples
    } else {
        Coverage::Indices(idx.clone())
    };
    observations(n, idx, coverage)
}

struct Failures {
    list: Vec<ObservationFailure>,
    counts: [usize; 3],
}

impl Failures {
    fn record(&mut self, observation: u8, entries: Vec<(usize, usize)>, product: Cube) {
        let slot = &mut self.counts[observation as usize - 1];
        *slot += 1;
        if *slot <= MAX_RECORDED_FAILURES {
            self.list.push(ObservationFailure {
                observation,
                entries,
                product,
            });
        }
    }
}

fn observations(n: usize, idx: Vec<usize>, coverage: Coverage) -> Result<ObservationReport> {
    // local grid over the chosen indices
    let size = idx.len();
    let grid: Vec<Option<Cube>> = idx
        .iter()
        .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
        .map(|(i, j)| (i != j).then(|| eterm_unchecked(var(i), var(j), n)))
        .collect();
    let at = |a: usize, b: usize| grid[a * size + b].as_ref();
    let mut fails = Failures {
        list: Vec::new(),
        counts: [0; 3],
    };
    let mut report = ObservationReport {
        n,
        coverage,
        obs1_ok: false,
        obs2_ok: false,
        obs3_ok: false,
        obs1_pairs: 0,
        obs1_columns: 0,
        obs2_pairs: 0,
        obs3_pairs: 0,
        obs3_extensions: 0,
        failures: Vec::new(),
        failure_counts: [0; 3],
    };

    // 1: same column
    for (cj, &j) in idx.iter().enumerate() {
        let expected = full_cube(n, &[j]);
        for (cm, &m) in idx.iter().enumerate() {
            for (cp, &p) in idx.iter().enumerate() {
                if m == p || m == j || p == j {
                    continue;
                }
                report.obs1_pairs += 1;
                let prod = at(cm, cj).unwrap().and(at(cp, cj).unwrap());
                if prod != expected {
                    fails.record(1, vec![(m, j), (p, j)], prod);
                }
            }
        }
        let whole = (1..=n).filter(|&i| i != j).fold(Cube::top(), |acc, i| {
            acc.and(&eterm_unchecked(var(i), var(j), n))
        });
        report.obs1_columns += 1;
        if whole != expected {
            let entries = (1..=n).filter(|&i| i != j).map(|i| (i, j)).collect();
            fails.record(1, entries, whole);
        }
    }

    // 2: different columns, not a symmetric pair
    let cells: Vec<(usize, usize)> = (0..size)
        .flat_map(|a| (0..size).map(move |b| (a, b)))
        .filter(|(a, b)| a != b)
        .collect();
    for (x, &(a1, b1)) in cells.iter().enumerate() {
        for &(a2, b2) in &cells[x + 1..] {
            if b1 == b2 || (a1 == b2 && a2 == b1) {
                continue;
            }
            report.obs2_pairs += 1;
            let prod = at(a1, b1).unwrap().and(at(a2, b2).unwrap());
            if !prod.is_bottom() {
                fails.record(2, vec![(idx[a1], idx[b1]), (idx[a2], idx[b2])], prod);
            }
        }
    }

    // 3: symmetric pairs give the double negative, which kills everything else
    for a in 0..size {
        for b in a + 1..size {
            let (m, j) = (idx[a], idx[b]);
            report.obs3_pairs += 1;
            let double = at(a, b).unwrap().and(at(b, a).unwrap());
            let expected = full_cube(n, &[m, j]);
            if double != expected {
                fails.record(3, vec![(m, j), (j, m)], double.clone());
            }
            for &(c, d) in &cells {
                if (c, d) == (a, b) || (c, d) == (b, a) {
                    continue;
                }
                report.obs3_extensions += 1;
                let prod = double.and(at(c, d).unwrap());
                if !prod.is_bottom() {
                    fails.record(3, vec![(m, j), (j, m), (idx[c], idx[d])], prod);
                }
            }
        }
    }

    report.obs1_ok = fails.counts[0] == 0;
    report.obs2_ok = fails.counts[1] == 0;
    report.obs3_ok = fails.counts[2] == 0;
    report.failures = fails.list;
    report.failure_counts = fails.counts;
    Ok(report)
}

fn check_size(acc: &Dnf, n: usize, context: impl fmt::Display) -> Result<()> {
    if acc.len() > n {
        return Err(Error::Invariant(format!(
            "intermediate product {context} has {} cubes, more than n = {n}",
            acc.len()
        )));
    }
    Ok(())
}

/// `P_1 ⋯ P_n` without `P_j`, conjoined in ascending order.
///
/// Fails unless the product is exactly the single cube negating only `A_j`.
pub fn leave_one_out(n: usize, j: VarId) -> Result<Cube> {
    require_n("leave-one-out product", n, 4)?;
    VarId::in_range(j.index(), n)?;
    let fam = family(n)?;
    let j = j.index() as usize;
    let mut acc: Option<Dnf> = None;
    for (i, p) in fam.propositions.iter().enumerate() {
        if i + 1 == j {
            continue;
        }
        let next = match acc {
            None => p.clone(),
            Some(a) => a.and(p),
        };
        check_size(&next, n, format_args!("up to P_{}", i + 1))?;
        acc = Some(next);
    }
    let product = acc.expect("n >= 4");
    expect_column_cube(&product, n, j)
}

fn expect_column_cube(product: &Dnf, n: usize, j: usize) -> Result<Cube> {
    let expected = full_cube(n, &[j]);
    match product.as_single_cube() {
        Some(c) if *c == expected => Ok(expected),
        _ => Err(Error::Invariant(format!(
            "leave-one-out product without P_{j} is {product}, expected {expected}"
        ))),
    }
}

/// All `n` leave-one-out products plus the full product.
///
/// Shares work through prefix products `P_1 ⋯ P_m` and suffix products
/// `P_m ⋯ P_n`, so the product without `P_j` is `prefix(j-1) ∧ suffix(j+1)`.
/// Returns raw products; callers compare them against the expected cubes.
pub fn leave_one_out_products(fam: &Family) -> Result<(Vec<Dnf>, Dnf)> {
    let n = fam.n;
    let props = &fam.propositions;
    // suffix[m] = P_{m+1} ⋯ P_n (0-based m), suffix[n] = 1
    let mut suffix: Vec<Dnf> = vec![Dnf::one(); n + 1];
    for m in (0..n).rev() {
        let s = if m + 1 == n {
            props[m].clone()
        } else {
            props[m].and(&suffix[m + 1])
        };
        check_size(&s, n, format_args!("P_{}..P_{n}", m + 1))?;
        suffix[m] = s;
    }
    let mut products = Vec::with_capacity(n);
    let mut prefix = Dnf::one();
    for j in 0..n {
        let without = if j == 0 {
            suffix[1].clone()
        } else if j + 1 == n {
            prefix.clone()
        } else {
            prefix.and(&suffix[j + 1])
        };
        check_size(&without, n, format_args!("without P_{}", j + 1))?;
        products.push(without);
        prefix = if j == 0 {
            props[0].clone()
        } else {
            prefix.and(&props[j])
        };
        check_size(&prefix, n, format_args!("P_1..P_{}", j + 1))?;
        // suffix[j+1] is not needed again
        suffix[j + 1] = Dnf::zero();
    }
    Ok((products, prefix))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Symbolic,
    Both,
}

impl Mode {
    fn exhaustive(self) -> bool {
        matches!(self, Mode::Exhaustive | Mode::Both)
    }

    fn symbolic(self) -> bool {
        matches!(self, Mode::Symbolic | Mode::Both)
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Mode, String> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "symbolic" => Ok(Mode::Symbolic),
            "both" => Ok(Mode::Both),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Symbolic => "symbolic",
            Mode::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    /// Enumerate every subset conjunction (within the cap) and check the
    /// observations over all tuples regardless of `n`.
    pub full_scan: bool,
    pub cap: RowCap,
}

/// Subset conjunctions of one size found nonzero by enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetCount {
    pub k: usize,
    pub subsets: u64,
    pub nonzero: u64,
}

/// Evidence for the product without `P_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeaveOneOut {
    pub j: usize,
    /// Symbolic product, when it was a single cube.
    pub cube: Option<Cube>,
    /// Symbolic product equals the expected cube.
    pub symbolic_ok: Option<bool>,
    /// Number of satisfying rows of the truth-table product.
    pub rows: Option<u64>,
    pub witness: Option<Assignment>,
    /// Truth table of the symbolic cube equals the truth-table product.
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub n: usize,
    pub mode: Mode,
    /// All checked component conjunctions are nonzero (and, in symbolic
    /// mode, the observation identities hold).
    pub component_ok: bool,
    pub joint_zero: bool,
    /// Enumerated subset counts, ascending `k`; empty when not scanned.
    pub scan: Vec<SubsetCount>,
    /// Components smaller than this size were implied, not enumerated.
    pub implied_below: Option<usize>,
    pub observations: Option<ObservationReport>,
    pub details: Vec<LeaveOneOut>,
    /// Pairs of leave-one-out cubes checked to conflict.
    pub disjoint_pairs: usize,
}

impl TheoremReport {
    pub fn verified(&self) -> bool {
        self.component_ok && self.joint_zero
    }
}

pub fn verify_theorem(n: usize, mode: Mode, opts: &VerifyOptions) -> Result<TheoremReport> {
    require_n("theorem check", n, 2)?;
    if mode.symbolic() {
        require_n("symbolic check", n, 4)?;
    }
    if mode.exhaustive() {
        opts.cap.check(n)?;
    }
    let fam = family(n)?;
    let mut report = TheoremReport {
        n,
        mode,
        component_ok: true,
        joint_zero: true,
        scan: Vec::new(),
        implied_below: None,
        observations: None,
        details: (1..=n)
            .map(|j| LeaveOneOut {
                j,
                cube: None,
                symbolic_ok: None,
                rows: None,
                witness: None,
                agrees: None,
            })
            .collect(),
        disjoint_pairs: 0,
    };
    if n == 2 {
        report.details.clear();
    }

    if mode.symbolic() {
        symbolic(&fam, opts, &mut report)?;
    }
    let scan_rows = mode.exhaustive() || (opts.full_scan && opts.cap.check(n).is_ok());
    if scan_rows {
        exhaustive(&fam, opts, mode.exhaustive(), &mut report)?;
    }
    if mode == Mode::Both {
        for d in &mut report.details {
            if let (Some(cube), Some(_)) = (&d.cube, d.rows) {
                let sym = TruthTable::build(&Dnf::from(cube.clone()), n, opts.cap)?;
                let prod = fam
                    .propositions
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| i + 1 != d.j)
                    .map(|(_, p)| TruthTable::build(p, n, opts.cap))
                    .try_fold(TruthTable::ones(n, opts.cap)?, |acc, t| {
                        t.map(|t| acc.and(&t))
                    })?;
                d.agrees = Some(sym == prod);
            } else {
                d.agrees = Some(false);
            }
            if d.agrees == Some(false) {
                report.component_ok = false;
            }
        }
    }
    Ok(report)
}

fn symbolic(fam: &Family, opts: &VerifyOptions, report: &mut TheoremReport) -> Result<()> {
    let n = fam.n;
    let obs = if n <= OBS_ALL_TUPLES_MAX || opts.full_scan {
        check_observations(n)?
    } else {
        check_observations_on(n, &orbit_indices(n))?
    };
    let obs_ok = obs.ok();
    report.observations = Some(obs);

    let (products, joint) = leave_one_out_products(fam)?;
    let mut cubes = Vec::with_capacity(n);
    let mut all_ok = true;
    for (d, product) in report.details.iter_mut().zip(&products) {
        let ok = expect_column_cube(product, n, d.j).is_ok();
        d.cube = product.as_single_cube().cloned();
        d.symbolic_ok = Some(ok);
        all_ok &= ok;
        cubes.push(d.cube.clone().unwrap_or_else(Cube::top));
    }
    let mut disjoint = true;
    for (a, b) in (0..n).tuple_combinations() {
        report.disjoint_pairs += 1;
        disjoint &= cubes[a].conflicts_with(&cubes[b]);
    }
    report.component_ok &= obs_ok && all_ok;
    report.joint_zero &= disjoint && joint.is_zero();
    report.implied_below = Some(n - 1);
    Ok(())
}

fn exhaustive(
    fam: &Family,
    opts: &VerifyOptions,
    decide: bool,
    report: &mut TheoremReport,
) -> Result<()> {
    let n = fam.n;
    let tables: Vec<TruthTable> = fam
        .propositions
        .iter()
        .map(|p| TruthTable::build(p, n, opts.cap))
        .collect::<Result<_>>()?;
    let mut joint = TruthTable::ones(n, opts.cap)?;
    for t in &tables {
        joint.and_assign(t);
    }
    let joint_zero = joint.is_all_zero();

    let full = opts.full_scan || n <= FULL_SCAN_DEFAULT_MAX;
    let mut component_ok = true;
    if full {
        let scan = subset_scan(&tables, 2);
        component_ok = scan
            .iter()
            .filter(|c| c.k < n)
            .all(|c| c.nonzero == c.subsets);
        report.scan = scan;
        report.implied_below = None;
    }
    if n >= 3 {
        let mut nonzero = 0;
        for d in &mut report.details {
            let mut prod = TruthTable::ones(n, opts.cap)?;
            for (i, t) in tables.iter().enumerate() {
                if i + 1 != d.j {
                    prod.and_assign(t);
                }
            }
            d.rows = Some(prod.count_ones());
            d.witness = prod.first_one().map(|r| Assignment::from_row(r, n));
            if d.witness.is_some() {
                nonzero += 1;
            }
        }
        if !full {
            component_ok = nonzero == n as u64;
            report.scan = vec![
                SubsetCount {
                    k: n - 1,
                    subsets: n as u64,
                    nonzero,
                },
                SubsetCount {
                    k: n,
                    subsets: 1,
                    nonzero: u64::from(!joint_zero),
                },
            ];
            if decide {
                report.implied_below = Some(n - 1);
            }
        }
    } else if !full {
        report.scan = vec![SubsetCount {
            k: n,
            subsets: 1,
            nonzero: u64::from(!joint_zero),
        }];
    }
    report.component_ok &= component_ok;
    report.joint_zero &= joint_zero;
    Ok(())
}

/// Counts nonzero subset conjunctions of every size from `min_k` up, by
/// depth-first extension of running products.
pub fn subset_scan(tables: &[TruthTable], min_k: usize) -> Vec<SubsetCount> {
    let m = tables.len();
    let mut counts: Vec<SubsetCount> = (0..=m)
        .map(|k| SubsetCount {
            k,
            subsets: 0,
            nonzero: 0,
        })
        .collect();
    fn walk(
        tables: &[TruthTable],
        start: usize,
        depth: usize,
        acc: &TruthTable,
        counts: &mut [SubsetCount],
    ) {
        for i in start..tables.len() {
            let next = acc.and(&tables[i]);
            let k = depth + 1;
            counts[k].subsets += 1;
            if !next.is_all_zero() {
                counts[k].nonzero += 1;
                walk(tables, i + 1, k, &next, counts);
            } else {
                // every superset is zero too
                let rest = tables.len() - i - 1;
                for extra in 1..=rest {
                    counts[k + extra].subsets += binomial(rest as u64, extra as u64);
                }
            }
        }
    }
    if let Some(first) = tables.first() {
        let top = TruthTable::from_bits(&vec![true; 1usize << first.n()]);
        walk(tables, 0, 0, &top, &mut counts);
    }
    counts.into_iter().filter(|c| c.k >= min_k.max(1)).collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Zero/nonzero status of one subset conjunction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetEntry {
    /// 1-based positions in the input list, ascending.
    pub members: Vec<usize>,
    pub zero: bool,
    pub witness: Option<Assignment>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionReport {
    pub n: usize,
    pub k: usize,
    /// In lexicographic order of `members`.
    pub entries: Vec<SubsetEntry>,
}

impl ExclusionReport {
    pub fn all_zero(&self) -> bool {
        self.entries.iter().all(|e| e.zero)
    }

    pub fn all_nonzero(&self) -> bool {
        self.entries.iter().all(|e| !e.zero)
    }
}

/// Decides every `k`-subset conjunction of `formulas` over `n` variables.
pub fn k_way_report(formulas: &[Dnf], k: usize, n: usize, cap: RowCap) -> Result<ExclusionReport> {
    if k < 2 || k > formulas.len() {
        return Err(Error::InvalidK {
            k,
            count: formulas.len(),
        });
    }
    cap.check(n)?;
    let tables: Vec<TruthTable> = formulas
        .iter()
        .map(|f| TruthTable::build(f, n, cap))
        .collect::<Result<_>>()?;
    let subsets: Vec<Vec<usize>> = (0..formulas.len()).combinations(k).collect();
    let entries = subsets
        .into_par_iter()
        .map(|subset| {
            let mut prod = tables[subset[0]].clone();
            for &i in &subset[1..] {
                prod.and_assign(&tables[i]);
            }
            let witness = prod.first_one().map(|r| Assignment::from_row(r, n));
            SubsetEntry {
                members: subset.iter().map(|i| i + 1).collect(),
                zero: witness.is_none(),
                witness,
            }
        })
        .collect();
    Ok(ExclusionReport { n, k, entries })
}
