//! The coin-toss reading of the family.
//!
//! `n` fair coins are tossed together, Head = 0 and Tail = 1, coin `k` being
//! variable `A_k`. Group `j` holds every coin except coin `n - j + 1`, and
//! event `S_j` is "group `j` shows exactly one Head", which is proposition
//! `P_{n-j+1}`. Any two (indeed any `n - 1`) events can occur together, but
//! all `n` never do.

use std::fmt::Write as _;

use itertools::Itertools;
use num_rational::Ratio;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::boolcore::{Dnf, RowCap, RowDnf, TruthTable, VarId};
use crate::construction::family;
use crate::{Error, Result};

/// Samples per independently seeded shard of [`simulate`].
pub const SHARD_SAMPLES: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoinEvent {
    /// `j` in `S_j`, 1-based.
    pub group_index: usize,
    pub excluded_coin: VarId,
    pub predicate: Dnf,
}

impl CoinEvent {
    /// Coins in the group, ascending.
    pub fn coins(&self, n: usize) -> Vec<VarId> {
        (1..=n as u32)
            .filter(|&k| k != self.excluded_coin.index())
            .filter_map(VarId::new)
            .collect()
    }

    pub fn label(&self) -> String {
        format!("S_{}", self.group_index)
    }
}

pub fn coin_events(n: usize) -> Result<Vec<CoinEvent>> {
    if n < 3 {
        return Err(Error::TooFewVariables {
            what: "coin events",
            n,
            min: 3,
        });
    }
    let fam = family(n)?;
    Ok((1..=n)
        .map(|j| {
            let excluded = n - j + 1;
            CoinEvent {
                group_index: j,
                excluded_coin: VarId::new(excluded as u32).expect("excluded >= 1"),
                predicate: fam.propositions[excluded - 1].clone(),
            }
        })
        .collect())
}

/// An exact probability `count / 2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Probability {
    pub count: u64,
    pub n: usize,
}

impl Probability {
    pub fn denominator(self) -> u64 {
        1 << self.n
    }

    /// Reduced rational value.
    pub fn ratio(self) -> Ratio<u64> {
        Ratio::new(self.count, self.denominator())
    }

    pub fn as_f64(self) -> f64 {
        self.count as f64 / self.denominator() as f64
    }

    /// `count/2^n`, unreduced.
    pub fn exact(self) -> String {
        format!("{}/{}", self.count, self.denominator())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairProbability {
    pub i: usize,
    pub j: usize,
    pub p: Probability,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbReport {
    pub n: usize,
    /// `singles[j - 1]` is `Pr[S_j]`.
    pub singles: Vec<Probability>,
    /// `Pr[S_i S_j]` for `i < j`, lexicographic.
    pub pairs: Vec<PairProbability>,
    pub joint: Probability,
}

pub fn exact_probs(n: usize, cap: RowCap) -> Result<ProbReport> {
    cap.check(n)?;
    let events = coin_events(n)?;
    let tables: Vec<TruthTable> = events
        .iter()
        .map(|e| TruthTable::build(&e.predicate, n, cap))
        .collect::<Result<_>>()?;
    let prob = |count| Probability { count, n };
    let singles = tables.iter().map(|t| prob(t.count_ones())).collect();
    let pairs = (0..n)
        .tuple_combinations()
        .map(|(a, b)| PairProbability {
            i: a + 1,
            j: b + 1,
            p: prob(tables[a].and(&tables[b]).count_ones()),
        })
        .collect();
    let mut joint = TruthTable::ones(n, cap)?;
    for t in &tables {
        joint.and_assign(t);
    }
    Ok(ProbReport {
        n,
        singles,
        pairs,
        joint: prob(joint.count_ones()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    /// Occurrences of each `S_j`.
    pub singles: Vec<u64>,
    /// Occurrences of `S_i S_j`, same order as [`ProbReport::pairs`].
    pub pairs: Vec<(usize, usize, u64)>,
    pub joint_occurrences: u64,
}

impl SimReport {
    pub fn single_freq(&self, j: usize) -> f64 {
        self.singles[j - 1] as f64 / self.samples as f64
    }

    pub fn pair_freq(&self, i: usize, j: usize) -> Option<f64> {
        self.pairs
            .iter()
            .find(|&&(a, b, _)| (a, b) == (i, j))
            .map(|&(_, _, c)| c as f64 / self.samples as f64)
    }

    pub fn joint_freq(&self) -> f64 {
        self.joint_occurrences as f64 / self.samples as f64
    }
}

/// Draws `samples` uniform tosses of `n` coins and counts event occurrences.
///
/// Samples are split into shards of [`SHARD_SAMPLES`]; shard `s` draws from
/// ChaCha8 seeded with `seed` on stream `s`. Shard boundaries are fixed, so
/// the report depends only on `(n, samples, seed)`, never on scheduling.
pub fn simulate(n: usize, samples: u64, seed: u64) -> Result<SimReport> {
    let events = compile_events(n, samples)?;
    Ok(run_shards(&events, n, samples, seed))
}

/// [`simulate`] on a dedicated pool of `workers` threads.
pub fn simulate_with_workers(
    n: usize,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<SimReport> {
    let events = compile_events(n, samples)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    Ok(pool.install(|| run_shards(&events, n, samples, seed)))
}

fn compile_events(n: usize, samples: u64) -> Result<Vec<RowDnf>> {
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    if n > 64 {
        return Err(Error::Capacity { n, cap: 64 });
    }
    Ok(coin_events(n)?
        .iter()
        .map(|e| RowDnf::compile(&e.predicate, n))
        .collect())
}

#[derive(Clone)]
struct Tally {
    singles: Vec<u64>,
    pairs: Vec<u64>,
    joint: u64,
}

impl Tally {
    fn new(n: usize) -> Tally {
        Tally {
            singles: vec![0; n],
            pairs: vec![0; n * (n - 1) / 2],
            joint: 0,
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.singles.iter_mut().zip(other.singles) {
            *a += b;
        }
        for (a, b) in self.pairs.iter_mut().zip(other.pairs) {
            *a += b;
        }
        self.joint += other.joint;
        self
    }
}

fn run_shards(events: &[RowDnf], n: usize, samples: u64, seed: u64) -> SimReport {
    let mask = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let shards = samples.div_ceil(SHARD_SAMPLES);
    let tally = (0..shards)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(s);
            let count = SHARD_SAMPLES.min(samples - s * SHARD_SAMPLES);
            let mut t = Tally::new(n);
            let mut hit = vec![false; n];
            for _ in 0..count {
                let row = rng.next_u64() & mask;
                for (h, e) in hit.iter_mut().zip(events) {
                    *h = e.eval(row);
                }
                for (c, &h) in t.singles.iter_mut().zip(&hit) {
                    *c += u64::from(h);
                }
                let mut p = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        t.pairs[p] += u64::from(hit[a] && hit[b]);
                        p += 1;
                    }
                }
                t.joint += u64::from(hit.iter().all(|&h| h));
            }
            t
        })
        .reduce(|| Tally::new(n), Tally::merge);
    let pairs = (0..n)
        .tuple_combinations()
        .zip(tally.pairs)
        .map(|((a, b), c)| (a + 1, b + 1, c))
        .collect();
    SimReport {
        n,
        samples,
        seed,
        singles: tally.singles,
        pairs,
        joint_occurrences: tally.joint,
    }
}

/// Aligned text table of exact probabilities, optionally with simulated
/// frequencies alongside.
pub fn render_text(exact: &ProbReport, sim: Option<&SimReport>) -> String {
    let mut rows: Vec<(String, Probability, Option<u64>)> = Vec::new();
    for (j, p) in exact.singles.iter().enumerate() {
        let s = sim.map(|s| s.singles[j]);
        rows.push((format!("S_{}", j + 1), *p, s));
    }
    for (k, pp) in exact.pairs.iter().enumerate() {
        let s = sim.map(|s| s.pairs[k].2);
        rows.push((format!("S_{}S_{}", pp.i, pp.j), pp.p, s));
    }
    let joint_label = (1..=exact.n).map(|j| format!("S_{j}")).join("");
    rows.push((joint_label, exact.joint, sim.map(|s| s.joint_occurrences)));

    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(5).max(5);
    let exact_width = rows
        .iter()
        .map(|r| r.1.exact().len())
        .max()
        .unwrap_or(5)
        .max(5);
    let mut out = String::new();
    let _ = writeln!(out, "n = {} coins, Head = 0, Tail = 1", exact.n);
    for j in 1..=exact.n {
        let _ = writeln!(
            out,
            "S_{j}: group without coin {} shows exactly one Head (P_{})",
            exact.n - j + 1,
            exact.n - j + 1
        );
    }
    if let Some(s) = sim {
        let _ = writeln!(out, "simulated: {} samples, seed {}", s.samples, s.seed);
    }
    let _ = write!(
        out,
        "{:<width$}  {:>exact_width$}  {:>9}",
        "event", "exact", "reduced"
    );
    if sim.is_some() {
        let _ = write!(out, "  {:>10}  {:>9}", "count", "freq");
    }
    out.push('\n');
    for (label, p, count) in rows {
        let _ = write!(
            out,
            "{label:<width$}  {:>exact_width$}  {:>9}",
            p.exact(),
            p.ratio().to_string()
        );
        if let (Some(c), Some(s)) = (count, sim) {
            let _ = write!(out, "  {c:>10}  {:>9.6}", c as f64 / s.samples as f64);
        }
        out.push('\n');
    }
    out
}

/// `key=value` lines; exact probabilities as unreduced `count/2^n`.
pub fn render_kv(exact: &ProbReport, sim: Option<&SimReport>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n={}", exact.n);
    let _ = writeln!(out, "denominator={}", exact.joint.denominator());
    for (j, p) in exact.singles.iter().enumerate() {
        let _ = writeln!(out, "exact.S_{}={}", j + 1, p.exact());
    }
    for pp in &exact.pairs {
        let _ = writeln!(out, "exact.S_{}S_{}={}", pp.i, pp.j, pp.p.exact());
    }
    let _ = writeln!(out, "exact.joint={}", exact.joint.exact());
    if let Some(s) = sim {
        let _ = writeln!(out, "sim.samples={}", s.samples);
        let _ = writeln!(out, "sim.seed={}", s.seed);
        for (j, c) in s.singles.iter().enumerate() {
            let _ = writeln!(out, "sim.S_{}={}", j + 1, c);
        }
        for (i, j, c) in &s.pairs {
            let _ = writeln!(out, "sim.S_{i}S_{j}={c}");
        }
        let _ = writeln!(out, "sim.joint={}", s.joint_occurrences);
    }
    out
}
