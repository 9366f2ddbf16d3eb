//! Integer partitions, hook lengths, core tests and the beta-set
//! correspondence.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition
/// is a valid value.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let positive = parts.iter().all(|&p| p >= 1);
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if positive && decreasing {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Hook length of every cell, one row per part.
    ///
    /// Cell `(i, j)` has arm `parts[i] - j - 1` and leg equal to the number
    /// of lower rows reaching past column `j`.
    pub fn hook_lengths(&self) -> Vec<Vec<u64>> {
        let len = self.parts.len();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                let mut leg = len - 1 - i;
                let mut below = len;
                (0..row)
                    .map(|j| {
                        // parts are decreasing, so shrink the leg from the bottom
                        while below > i + 1 && self.parts[below - 1] <= j {
                            below -= 1;
                            leg -= 1;
                        }
                        (row - j - 1) + leg as u64 + 1
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_a_core(&self, a: u64) -> bool {
        assert!(a >= 1, "core modulus must be positive");
        self.hook_lengths().iter().flatten().all(|h| h % a != 0)
    }

    /// Whether the partition is an `a`-core for every modulus listed.
    pub fn is_simultaneous_core(&self, moduli: &[u64]) -> bool {
        assert!(
            moduli.iter().all(|&a| a >= 1),
            "core modulus must be positive"
        );
        self.hook_lengths()
            .iter()
            .flatten()
            .all(|h| moduli.iter().all(|a| h % a != 0))
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// First-column hook lengths.
    pub fn beta_set(&self) -> BetaSet {
        let len = self.parts.len() as u64;
        let hooks = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (len - 1 - i as u64))
            .collect();
        BetaSet { hooks }
    }

    /// The unique partition whose first-column hooks are `beta`.
    pub fn from_beta_set(beta: &BetaSet) -> Partition {
        let m = beta.hooks.len() as u64;
        let parts = beta
            .hooks
            .iter()
            .enumerate()
            .map(|(i, &h)| h - (m - 1 - i as u64))
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Strictly decreasing positive integers: the first-column hook lengths of
/// a partition.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct BetaSet {
    hooks: Vec<u64>,
}

impl BetaSet {
    /// Rejects anything that is not strictly decreasing and positive. Weakly
    /// decreasing input never arises as a first column of hooks.
    pub fn new(hooks: Vec<u64>) -> Result<Self> {
        let positive = hooks.iter().all(|&h| h >= 1);
        let strict = hooks.windows(2).all(|w| w[0] > w[1]);
        if positive && strict {
            Ok(BetaSet { hooks })
        } else {
            Err(Error::InvalidBetaSet(hooks))
        }
    }

    /// Builds a beta-set from an unordered collection of distinct positive
    /// integers.
    pub fn from_elements<I: IntoIterator<Item = u64>>(elements: I) -> Result<Self> {
        let mut hooks: Vec<u64> = elements.into_iter().collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        BetaSet::new(hooks)
    }

    pub fn hooks(&self) -> &[u64] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.hooks.binary_search_by(|h| x.cmp(h)).is_ok()
    }

    /// True iff no two elements differ by exactly one. On beta-sets this is
    /// equivalent to the originating partition having distinct parts.
    pub fn gap_test(&self) -> bool {
        self.hooks.windows(2).all(|w| w[0] - w[1] != 1)
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_beta_set(self)
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.hooks)
    }
}

impl FromStr for BetaSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(trimmed);
        let inner = if inner.trim().is_empty() && trimmed.starts_with('{') {
            "empty"
        } else {
            inner
        };
        BetaSet::new(parse_list(inner)?)
    }
}

impl TryFrom<Vec<u64>> for BetaSet {
    type Error = Error;

    fn try_from(hooks: Vec<u64>) -> Result<Self> {
        BetaSet::new(hooks)
    }
}

impl From<BetaSet> for Vec<u64> {
    fn from(b: BetaSet) -> Self {
        b.hooks
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[u64]) -> fmt::Result {
    if items.is_empty() {
        return f.write_str("empty");
    }
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Parses `"15,7,6,3,1"` or the token `"empty"`.
pub(crate) fn parse_list(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("empty") {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
        })
        .collect()
}
