//! Brute-force partition oracles: enumeration, the crank statistic, hook
//! lengths and t-core counts. Nothing here touches generating functions.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Default cap on `n` for exhaustive enumeration (p(60) ≈ 10^6).
pub const DEFAULT_ORACLE_LIMIT: u32 = 60;

/// Environment variable overriding [`DEFAULT_ORACLE_LIMIT`].
pub const ORACLE_LIMIT_ENV: &str = "QCRANK_ORACLE_LIMIT";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the enumeration limit {limit} (set {ORACLE_LIMIT_ENV} to raise it)")]
    TooLarge { n: u32, limit: u32 },
    #[error("t must be at least 2, got {0}")]
    BadT(u32),
    #[error("parts must be positive and non-increasing: {0:?}")]
    InvalidPartition(Vec<u32>),
}

pub fn oracle_limit() -> u32 {
    std::env::var(ORACLE_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
}

/// An integer partition, parts in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, OracleError> {
        let ok = parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(OracleError::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Self {
        let largest = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=largest)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Self { parts }
    }

    pub fn crank_stats(&self) -> CrankStats {
        let ones = self.parts.iter().filter(|&&p| p == 1).count() as u32;
        CrankStats {
            largest: self.parts.first().copied().unwrap_or(0),
            ones,
            bigcount: self.parts.iter().filter(|&&p| p > ones).count() as u32,
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Ingredients of the crank: largest part, number of ones, and number of
/// parts strictly larger than the number of ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrankStats {
    pub largest: u32,
    pub ones: u32,
    pub bigcount: u32,
}

impl CrankStats {
    pub fn crank(&self) -> i64 {
        if self.ones == 0 {
            self.largest as i64
        } else {
            self.bigcount as i64 - self.ones as i64
        }
    }
}

/// Andrews–Garvan crank. The empty partition has crank 0.
pub fn crank(partition: &Partition) -> i64 {
    partition.crank_stats().crank()
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>, OracleError> {
    let limit = oracle_limit();
    if n > limit {
        return Err(OracleError::TooLarge { n, limit });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, n, &mut stack, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        stack.push(part);
        fill(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// Number of partitions of `n` with crank `m`, for `0 ≤ n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrankTable {
    n_max: u32,
    counts: BTreeMap<(u32, i64), u64>,
}

impl CrankTable {
    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn count(&self, m: i64, n: u32) -> u64 {
        self.counts.get(&(n, m)).copied().unwrap_or(0)
    }

    /// Non-zero `(m, M(m, n))` for a fixed `n`, ascending in `m`.
    pub fn row(&self, n: u32) -> Vec<(i64, u64)> {
        self.counts.range((n, i64::MIN)..=(n, i64::MAX)).map(|(&(_, m), &c)| (m, c)).collect()
    }

    pub fn total(&self, n: u32) -> u64 {
        self.row(n).iter().map(|(_, c)| c).sum()
    }

    /// `(m, n, M(m, n))` ordered by `n` then `m`.
    pub fn entries(&self) -> impl Iterator<Item = (i64, u32, u64)> + '_ {
        self.counts.iter().map(|(&(n, m), &c)| (m, n, c))
    }
}

pub fn crank_table(n_max: u32) -> Result<CrankTable, OracleError> {
    let mut counts = BTreeMap::new();
    for n in 0..=n_max {
        for p in enumerate_partitions(n)? {
            *counts.entry((n, crank(&p))).or_insert(0) += 1;
        }
    }
    Ok(CrankTable { n_max, counts })
}

/// Hook lengths of every cell of the Young diagram, sorted descending.
pub fn hook_multiset(partition: &Partition) -> Vec<u32> {
    let conj = partition.conjugate();
    let mut hooks = Vec::with_capacity(partition.weight() as usize);
    for (i, &row) in partition.parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts[j as usize] - i as u32 - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    hooks
}

pub fn is_t_core(partition: &Partition, t: u32) -> bool {
    hook_multiset(partition).iter().all(|h| h % t != 0)
}

/// p^{(t)}(n): partitions of `n` with no hook length divisible by `t`.
pub fn count_t_core(n: u32, t: u32) -> Result<u64, OracleError> {
    if t < 2 {
        return Err(OracleError::BadT(t));
    }
    Ok(enumerate_partitions(n)?.iter().filter(|p| is_t_core(p, t)).count() as u64)
}
