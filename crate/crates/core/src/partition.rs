use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of a positive integer: a non-empty, non-increasing list of
/// positive parts.
///
/// Values are normalized once on construction, so every other routine in the
/// crate may assume the parts are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
    weight: u64,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        let weight = parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow("summing partition parts"))?;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts, weight })
    }

    /// Accepts signed input so that negative values are reported as such
    /// instead of failing to parse.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        let parts = values
            .iter()
            .map(|&v| {
                if v <= 0 {
                    Err(Error::NonPositivePart(v as i128))
                } else {
                    Ok(v as u64)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    /// Caller guarantees `parts` is non-empty, positive and non-increasing.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(!parts.is_empty());
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts.
    pub fn size(&self) -> usize {
        self.parts.len()
    }

    pub fn largest(&self) -> u64 {
        self.parts[0]
    }

    /// The parts from 0-based index `start` onwards, or `None` when that
    /// leaves nothing.
    pub fn suffix(&self, start: usize) -> Option<Partition> {
        if start >= self.parts.len() {
            return None;
        }
        Some(Partition::from_sorted_unchecked(self.parts[start..].to_vec()))
    }

    /// Running sums `p_1, p_1 + p_2, ...`.
    pub fn prefix_sums(&self) -> Vec<u64> {
        self.parts
            .iter()
            .scan(0u64, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }
}

/// Shorthand for [`Partition::new`].
pub fn make_partition(values: &[u64]) -> Result<Partition> {
    Partition::new(values.to_vec())
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

/// Space separated parts, e.g. `3 2 2 1 1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses whitespace or comma separated integers.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| Error::ParsePart(t.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::from_signed(&values)
    }
}
