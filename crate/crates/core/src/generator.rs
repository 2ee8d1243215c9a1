//! The greedy minimum generator and its size.
//!
//! Starting from the residual `r = n`, each step takes the part `ceil(r / k)`
//! and subtracts it, until nothing is left. The parts come out non-increasing
//! because the residual strictly decreases.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

fn check_domain(n: u64, k: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroArgument { name: "n" });
    }
    if k == 0 {
        return Err(Error::ZeroArgument { name: "k" });
    }
    Ok(())
}

/// The smallest partition of `n` that generates every partition of `n` into
/// at most `k` parts.
pub fn minimal_generator(n: u64, k: u64) -> Result<Partition> {
    check_domain(n, k)?;
    let mut parts = Vec::new();
    let mut residual = n;
    while residual > 0 {
        let part = residual.div_ceil(k);
        parts.push(part);
        residual -= part;
    }
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Number of parts of [`minimal_generator`]`(n, k)`, without building it.
///
/// Uses the equivalent step `r -> floor((k - 1) r / k)`.
pub fn generator_size(n: u64, k: u64) -> Result<usize> {
    check_domain(n, k)?;
    let k = k as u128;
    let mut residual = n as u128;
    let mut size = 0;
    while residual > 0 {
        residual = (k - 1) * residual / k;
        size += 1;
    }
    Ok(size)
}

/// `generator_size(n, k)` for every `n` in `0..=n_max` (index 0 holds 0),
/// filled bottom-up so that whole ranges cost one pass.
pub fn generator_sizes(n_max: u64, k: u64) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(Error::ZeroArgument { name: "k" });
    }
    let len = usize::try_from(n_max)
        .ok()
        .and_then(|n| n.checked_add(1))
        .ok_or(Error::Overflow("sizing the table"))?;
    let mut sizes = vec![0usize; len];
    for n in 1..len {
        let rest = n - (n as u64).div_ceil(k) as usize;
        sizes[n] = 1 + sizes[rest];
    }
    Ok(sizes)
}

/// `ceil(log_{k/(k-1)} n) + 1`, computed exactly as `t + 1` for the smallest
/// `t` with `k^t >= n (k-1)^t`. For `k = 1` the logarithm is undefined and
/// the result is 1, which is also the true size.
pub fn size_upper_bound(n: u64, k: u64) -> Result<u64> {
    check_domain(n, k)?;
    if k == 1 {
        return Ok(1);
    }
    let mut lhs = BigUint::from(1u32);
    let mut rhs = BigUint::from(n);
    let mut t = 0u64;
    while lhs < rhs {
        lhs *= k;
        rhs *= k - 1;
        t += 1;
    }
    Ok(t + 1)
}

/// [`size_upper_bound`] for every `n` in `1..=n_max`; entry `i` holds the
/// bound for `n = i + 1`.
///
/// The bound is non-decreasing in `n`, so one power iteration is shared by
/// the whole range.
pub fn size_upper_bounds(n_max: u64, k: u64) -> Result<Vec<u64>> {
    check_domain(n_max, k)?;
    if k == 1 {
        return Ok(vec![1; n_max as usize]);
    }
    let mut out = Vec::with_capacity(n_max as usize);
    let mut t = 0u64;
    let mut k_pow = BigUint::from(1u32);
    let mut km1_pow = BigUint::from(1u32);
    for n in 1..=n_max {
        while k_pow < &km1_pow * n {
            k_pow *= k;
            km1_pow *= k - 1;
            t += 1;
        }
        out.push(t + 1);
    }
    Ok(out)
}

/// Grid of generator sizes, one row per `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeTable {
    pub n_max: u64,
    pub k_max: u64,
    /// `rows[k - 1][n - 1]`
    pub rows: Vec<Vec<usize>>,
}

impl SizeTable {
    pub fn compute(n_max: u64, k_max: u64) -> Result<Self> {
        check_domain(n_max, k_max)?;
        let rows = (1..=k_max)
            .map(|k| generator_sizes(n_max, k).map(|s| s[1..].to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SizeTable { n_max, k_max, rows })
    }

    pub fn get(&self, n: u64, k: u64) -> Option<usize> {
        if n == 0 || k == 0 {
            return None;
        }
        self.rows
            .get(k as usize - 1)
            .and_then(|row| row.get(n as usize - 1))
            .copied()
    }
}

/// Header line of `n` values, then one line per `k`, right aligned.
impl fmt::Display for SizeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widest = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .chain([self.n_max.to_string().len(), self.k_max.to_string().len()])
            .max()
            .unwrap_or(1);
        let w = widest + 1;
        write!(f, "{:>w$}", "k\\n")?;
        for n in 1..=self.n_max {
            write!(f, "{n:>w$}")?;
        }
        writeln!(f)?;
        for (i, row) in self.rows.iter().enumerate() {
            write!(f, "{:>w$}", i + 1)?;
            for v in row {
                write!(f, "{v:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
