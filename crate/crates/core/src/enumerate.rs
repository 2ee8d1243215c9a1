use crate::error::{Error, Result};
use crate::partition::Partition;

/// Partitions of `n` with at most `max_parts` parts, in reverse lexicographic
/// order: `(n)` first when allowed, then descending first part.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u64>>,
    max_parts: usize,
}

impl Partitions {
    fn new(n: u64, max_parts: usize) -> Self {
        Partitions {
            current: Some(vec![n]),
            max_parts,
        }
    }

    fn advance(&mut self) {
        let Some(parts) = self.current.as_mut() else {
            return;
        };
        // Find the rightmost part that can be lowered by one while the freed
        // amount still fits into the remaining slots.
        let mut tail: u64 = 0;
        for i in (0..parts.len()).rev() {
            let lowered = parts[i] - 1;
            let refill = tail + 1;
            let slots = (self.max_parts - i - 1) as u64;
            if lowered >= 1 && refill <= lowered.saturating_mul(slots) {
                parts.truncate(i);
                parts.push(lowered);
                let mut rest = refill;
                while rest > 0 {
                    let p = rest.min(lowered);
                    parts.push(p);
                    rest -= p;
                }
                return;
            }
            tail += parts[i];
        }
        self.current = None;
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.clone()?;
        self.advance();
        Some(Partition::from_sorted_unchecked(out))
    }
}

/// Every partition of `n` into at most `max_parts` parts, each exactly once.
pub fn enumerate_partitions(n: u64, max_parts: usize) -> Result<Partitions> {
    if n == 0 {
        return Err(Error::ZeroArgument { name: "n" });
    }
    if max_parts == 0 {
        return Err(Error::ZeroArgument { name: "max_parts" });
    }
    Ok(Partitions::new(n, max_parts.min(n as usize)))
}

/// Partitions of `n` with exactly `parts` parts, in the same order as
/// [`enumerate_partitions`].
pub fn enumerate_partitions_exact(n: u64, parts: usize) -> Result<impl Iterator<Item = Partition>> {
    Ok(enumerate_partitions(n, parts)?.filter(move |p| p.size() == parts))
}

/// Number of partitions of `n` into at most `max_parts` parts, by the
/// recurrence `p(n, m) = p(n - m, m) + p(n, m - 1)`.
pub fn count_partitions(n: u64, max_parts: usize) -> Result<u128> {
    if max_parts == 0 {
        return Err(Error::ZeroArgument { name: "max_parts" });
    }
    let n = usize::try_from(n).map_err(|_| Error::Overflow("sizing the count table"))?;
    let m_max = max_parts.min(n.max(1));
    // row[j] = p(j, m) for the current m
    let mut row = vec![0u128; n + 1];
    row[0] = 1;
    for m in 1..=m_max {
        for j in m..=n {
            row[j] = row[j]
                .checked_add(row[j - m])
                .ok_or(Error::Overflow("counting partitions"))?;
        }
    }
    Ok(row[n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn listed(n: u64, m: usize) -> Vec<Vec<u64>> {
        enumerate_partitions(n, m)
            .unwrap()
            .map(|p| p.parts().to_vec())
            .collect()
    }

    #[test]
    fn small_listings() {
        assert_eq!(listed(4, 2), vec![vec![4], vec![3, 1], vec![2, 2]]);
        assert_eq!(listed(7, 1), vec![vec![7]]);
        assert_eq!(listed(1, 3), vec![vec![1]]);
        assert_eq!(
            listed(5, 5),
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1]
            ]
        );
        assert_eq!(listed(9, 3).len(), 12);
    }

    #[test]
    fn exact_size_filter() {
        let three: Vec<_> = enumerate_partitions_exact(6, 3)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(three, vec!["4 1 1", "3 2 1", "2 2 2"]);
    }

    #[test]
    fn counts() {
        assert_eq!(count_partitions(4, 2).unwrap(), 3);
        assert_eq!(count_partitions(0, 3).unwrap(), 1);
        assert_eq!(count_partitions(9, 3).unwrap(), 12);
        assert_eq!(count_partitions(100, 100).unwrap(), 190_569_292);
        assert!(count_partitions(3, 0).is_err());
    }

    #[test]
    fn enumeration_matches_count() {
        for n in 1..=40u64 {
            for m in 1..=8usize {
                let all = listed(n, m);
                let unique: HashSet<_> = all.iter().cloned().collect();
                assert_eq!(unique.len(), all.len(), "duplicates for n={n} m={m}");
                assert_eq!(all.len() as u128, count_partitions(n, m).unwrap(), "n={n} m={m}");
                assert!(all.iter().all(|p| p.len() <= m && p.iter().sum::<u64>() == n));
                let mut sorted = all.clone();
                sorted.sort_by(|a, b| b.cmp(a));
                assert_eq!(sorted, all, "order for n={n} m={m}");
            }
        }
    }
}
