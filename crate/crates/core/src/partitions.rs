//! Partition numbers, the non-separable degree-sequence count `d_ns`,
//! Hakimi's admissibility test and the enumeration of `DNSG(n)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// A finite non-increasing sequence of non-negative integers.
///
/// Sequences compare lexicographically, so "descending order" of a set of
/// them means largest first part first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Rejects input that is not non-increasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "degree sequence {parts:?} is not non-increasing"
            )));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts into non-increasing order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Parses `3,3,2`. Parts may be given in any order; the result is sorted.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty degree sequence".into()));
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad degree {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unsorted(parts))
    }
}

impl<'de> Deserialize<'de> for DegreeSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Self::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Why a sequence fails Hakimi's test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotNonIncreasing,
    TooShort {
        len: usize,
    },
    PartBelowTwo {
        part: u32,
    },
    OddSum {
        sum: u64,
    },
    /// `d_1 > d_2 + ... + d_r - 2r + 4`
    Inequality {
        largest: u32,
        bound: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotNonIncreasing => f.write_str("parts are not non-increasing"),
            Violation::TooShort { len } => write!(f, "length {len} is below 2"),
            Violation::PartBelowTwo { part } => write!(f, "part {part} is below 2"),
            Violation::OddSum { sum } => write!(f, "degree sum {sum} is odd"),
            Violation::Inequality { largest, bound } => write!(
                f,
                "largest part {largest} exceeds d_2 + ... + d_r - 2r + 4 = {bound}"
            ),
        }
    }
}

/// First failed condition of Hakimi's characterization, or `None` when a
/// non-separable multigraph with degree sequence `d` exists.
pub fn hakimi_violation(d: &DegreeSequence) -> Option<Violation> {
    let parts = d.parts();
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Some(Violation::NotNonIncreasing);
    }
    if parts.len() < 2 {
        return Some(Violation::TooShort { len: parts.len() });
    }
    if let Some(&part) = parts.iter().find(|&&p| p < 2) {
        return Some(Violation::PartBelowTwo { part });
    }
    let sum = d.sum();
    if sum % 2 == 1 {
        return Some(Violation::OddSum { sum });
    }
    let r = parts.len() as i64;
    let bound = (sum - u64::from(parts[0])) as i64 - 2 * r + 4;
    if i64::from(parts[0]) > bound {
        return Some(Violation::Inequality {
            largest: parts[0],
            bound,
        });
    }
    None
}

/// Hakimi's test: even sum and `d_1 <= d_2 + ... + d_r - 2r + 4`, for
/// sequences of length at least 2 with all parts at least 2. Anything outside
/// those hypotheses is rejected.
pub fn hakimi_admissible(d: &DegreeSequence) -> bool {
    hakimi_violation(d).is_none()
}

static PARTITION_TABLE: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// `p(k)`, the number of unrestricted partitions of `k`, via Euler's
/// pentagonal-number recurrence. Values are memoized process-wide.
pub fn partition_count(k: i64) -> Result<BigUint> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!(
            "partition number of negative {k}"
        )));
    }
    let k = k as usize;
    let mut table = PARTITION_TABLE.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= k {
        let i = table.len();
        // signed accumulation; p(i) = sum_{j>=1} (-1)^{j+1} [p(i - g(j)) + p(i - g(-j))]
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > i {
                break;
            }
            let mut term = BigInt::from(table[i - g1].clone());
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= i {
                term += BigInt::from(table[i - g2].clone());
            }
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        table.push(acc.to_biguint().expect("partition numbers are positive"));
    }
    Ok(table[k].clone())
}

/// Number of degree sequences with the given (even) degree sum that have a
/// non-separable multigraph realization:
/// `p(2m) - p(2m-1) - sum_{j=0}^{m-2} p(j)` for `degree_sum = 2m`, `m >= 2`.
///
/// The argument is the degree sum, not `m`.
pub fn dns_count(degree_sum: u64) -> Result<BigInt> {
    if degree_sum < 4 || degree_sum % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "d_ns needs an even degree sum >= 4, got {degree_sum}"
        )));
    }
    let m = degree_sum / 2;
    let s = degree_sum as i64;
    let mut out = BigInt::from(partition_count(s)?) - BigInt::from(partition_count(s - 1)?);
    for j in 0..=(m as i64 - 2) {
        out -= BigInt::from(partition_count(j)?);
    }
    Ok(out)
}

/// `DNSG(n)`: partitions of `2n` into at least three parts, all at least 2,
/// that satisfy `d_1 <= d_2 + ... + d_r - 2r + 4`. Returned in descending
/// lexicographic order.
pub fn enumerate_dnsg(n: u32) -> Result<Vec<DegreeSequence>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "DNSG(n) needs n >= 2, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    descend(2 * n, n - 1, &mut parts, &mut |parts| {
        if parts.len() >= 3 {
            let d = DegreeSequence::from_sorted_unchecked(parts.to_vec());
            if hakimi_admissible(&d) {
                out.push(d);
            }
        }
    });
    Ok(out)
}

/// Calls `emit` on every partition of `remaining` (appended to `parts`) into
/// parts in `[2, cap]`, largest-first.
fn descend(remaining: u32, cap: u32, parts: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        emit(parts);
        return;
    }
    for p in (2..=cap.min(remaining)).rev() {
        parts.push(p);
        descend(remaining - p, p, parts, emit);
        parts.pop();
    }
}
