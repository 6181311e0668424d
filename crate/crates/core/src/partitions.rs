//! Partitions of natural numbers and bounded partition windows.
//!
//! A partition is a weakly decreasing finite sequence of positive naturals;
//! the empty sequence is the zero partition. Partitions index the monomial
//! and Schur bases used everywhere else, so this module is deliberately
//! small, exact and allocation-light.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, WittError};

/// A partition: weakly decreasing positive parts, no trailing zeros stored.
///
/// Reads beyond the stored length return 0, matching the usual convention
/// that λ_i = 0 for large i.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Creates a partition from weakly decreasing parts.
    ///
    /// Trailing zeros are stripped; interior zeros followed by a positive
    /// part, or increasing sequences, panic.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Creates a partition from arbitrary parts by sorting them descending.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// The zero partition (empty sequence).
    pub fn zero() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle a^b: the part `a` repeated `b` times.
    pub fn rect(a: u32, b: u32) -> Self {
        if a == 0 {
            return Partition::zero();
        }
        Partition {
            parts: vec![a; b as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part (0 for the zero partition).
    pub fn max_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// True iff μ ⊆ self, i.e. μ_i ≤ self_i for all i.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.parts.len() <= self.parts.len()
            && mu.parts.iter().zip(&self.parts).all(|(m, s)| m <= s)
    }

    /// The conjugate partition λ′ with λ′_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::with_capacity(self.max_part() as usize);
        for j in 1..=self.max_part() {
            cols.push(self.parts.iter().filter(|&&p| p >= j).count() as u32);
        }
        Partition::new(cols)
    }

    /// Componentwise sum (λ₁+μ₁, λ₂+μ₂, …).
    pub fn part_sum(&self, mu: &Partition) -> Partition {
        let n = self.parts.len().max(mu.parts.len());
        Partition::new((0..n).map(|i| self[i] + mu[i]).collect())
    }

    /// λ ⊎ μ: weakly decreasing sort of the multiset union of parts.
    pub fn interleave(&self, mu: &Partition) -> Partition {
        let mut parts: Vec<u32> = self.parts.iter().chain(&mu.parts).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// (rλ₁, rλ₂, …) for r ≥ 1.
    pub fn scale(&self, r: u32) -> Result<Partition> {
        if r == 0 {
            return Err(WittError::InvalidInput(
                "scale factor must be at least 1".into(),
            ));
        }
        Ok(Partition {
            parts: self.parts.iter().map(|p| p * r).collect(),
        })
    }
}

impl Index<usize> for Partition {
    type Output = u32;

    fn index(&self, index: usize) -> &u32 {
        self.parts.get(index).unwrap_or(&0)
    }
}

/// Canonical order: graded by size, then lexicographically descending on
/// parts, so (2) sorts before (1,1). This is the enumeration order and the
/// iteration order of every coefficient map.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Canonical text encoding `[3,2,1]`; the zero partition is `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = WittError;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| {
                WittError::InvalidInput(format!("partition must look like [3,2,1], got {s:?}"))
            })?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::zero());
        }
        let parts: Vec<u32> = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| WittError::InvalidInput(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(WittError::InvalidInput(format!(
                "partition parts must be weakly decreasing: {s:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(WittError::InvalidInput(format!(
                "partition parts must be positive (use [] for zero): {s:?}"
            )));
        }
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite truncation of the infinite partition set: bounds on size and
/// optionally on largest part and length. Membership is the conjunction of
/// the stated bounds.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PartitionWindow {
    pub max_size: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_part: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_length: Option<u32>,
}

impl PartitionWindow {
    /// Window bounded by size only.
    pub fn by_size(max_size: u32) -> Self {
        PartitionWindow {
            max_size,
            max_part: None,
            max_length: None,
        }
    }

    /// Window bounded by size, largest part and length.
    pub fn new(max_size: u32, max_part: u32, max_length: u32) -> Self {
        PartitionWindow {
            max_size,
            max_part: Some(max_part),
            max_length: Some(max_length),
        }
    }

    pub fn admits(&self, lambda: &Partition) -> bool {
        lambda.size() <= self.max_size
            && self.max_part.map_or(true, |p| lambda.max_part() <= p)
            && self
                .max_length
                .map_or(true, |l| lambda.length() as u32 <= l)
    }

    /// All partitions in the window, graded by size and lexicographically
    /// descending within each size; deterministic.
    pub fn enumerate(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for k in 0..=self.max_size {
            let mut stack = Vec::new();
            self.collect_of_size(k, self.max_part.unwrap_or(k), &mut stack, &mut out);
        }
        out
    }

    fn collect_of_size(
        &self,
        remaining: u32,
        max_next: u32,
        stack: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(stack.clone()));
            return;
        }
        if let Some(l) = self.max_length {
            if stack.len() as u32 >= l {
                return;
            }
        }
        for next in (1..=max_next.min(remaining)).rev() {
            stack.push(next);
            self.collect_of_size(remaining - next, next, stack, out);
            stack.pop();
        }
    }
}

/// All partitions of exactly `n`, largest-first (lexicographically
/// descending), with no further bounds.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let all = PartitionWindow::by_size(n).enumerate();
    all.into_iter().filter(|p| p.size() == n).collect()
}
