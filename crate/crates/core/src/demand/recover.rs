use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::instance::{id_order, ExpandedInstance};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// One copy served wholly by one fulfiller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyAssignment {
    pub copy_id: String,
    pub fulfiller: String,
    pub amount: u64,
}

impl CopyAssignment {
    pub fn list_from_json(text: &str) -> Result<Vec<CopyAssignment>> {
        serde_json::from_str(text).map_err(|e| Error::InvalidAssignment(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitEntry {
    pub customer: String,
    pub fulfiller: String,
    pub amount: u64,
}

/// Amount of each customer's demand served by each fulfiller, ordered by
/// customer then fulfiller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SplitAssignment {
    pub entries: Vec<SplitEntry>,
}

impl SplitAssignment {
    pub fn amounts(&self, customer: &str) -> Vec<(&str, u64)> {
        self.entries
            .iter()
            .filter(|e| e.customer == customer)
            .map(|e| (e.fulfiller.as_str(), e.amount))
            .collect()
    }

    /// The per-fulfiller amounts of one customer as a partition of its
    /// demand.
    pub fn induced_partition(&self, customer: &str) -> Option<Partition> {
        let parts: Vec<u64> = self.amounts(customer).into_iter().map(|(_, a)| a).collect();
        Partition::new(parts).ok()
    }
}

/// `A: f1=5, f2=3, f3=1`, one line per customer.
impl fmt::Display for SplitAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut current: Option<&str> = None;
        for e in &self.entries {
            if current == Some(e.customer.as_str()) {
                write!(f, ", {}={}", e.fulfiller, e.amount)?;
            } else {
                if current.is_some() {
                    writeln!(f)?;
                }
                write!(f, "{}: {}={}", e.customer, e.fulfiller, e.amount)?;
                current = Some(&e.customer);
            }
        }
        if current.is_some() {
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Folds a non-split solution on the copies back onto the original
/// customers: each fulfiller serves the sum of the copies it took.
pub fn recover_solution(
    expanded: &ExpandedInstance,
    assignments: &[CopyAssignment],
) -> Result<SplitAssignment> {
    let index: HashMap<&str, usize> = expanded
        .copies()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.copy_id.as_str(), i))
        .collect();
    let mut taken: Vec<Option<&str>> = vec![None; expanded.copies().len()];
    for a in assignments {
        let &i = index
            .get(a.copy_id.as_str())
            .ok_or_else(|| Error::InvalidAssignment(format!("unknown copy `{}`", a.copy_id)))?;
        let copy = &expanded.copies()[i];
        if a.amount != copy.demand {
            return Err(Error::InvalidAssignment(format!(
                "copy `{}` has demand {} but was assigned {}",
                a.copy_id, copy.demand, a.amount
            )));
        }
        if taken[i].replace(&a.fulfiller).is_some() {
            return Err(Error::InvalidAssignment(format!(
                "copy `{}` assigned twice",
                a.copy_id
            )));
        }
    }
    let mut totals: BTreeMap<(&str, &str), u64> = BTreeMap::new();
    for (copy, fulfiller) in expanded.copies().iter().zip(&taken) {
        let fulfiller = fulfiller
            .ok_or_else(|| Error::InvalidAssignment(format!("copy `{}` is unassigned", copy.copy_id)))?;
        *totals.entry((&copy.parent_id, fulfiller)).or_default() += copy.demand;
    }
    let mut entries: Vec<SplitEntry> = totals
        .into_iter()
        .map(|((customer, fulfiller), amount)| SplitEntry {
            customer: customer.to_string(),
            fulfiller: fulfiller.to_string(),
            amount,
        })
        .collect();
    entries.sort_by(|a, b| {
        id_order(&a.customer, &b.customer).then_with(|| id_order(&a.fulfiller, &b.fulfiller))
    });

    let k = expanded.fulfiller_count();
    for customer in &expanded.original().customers {
        let used = entries.iter().filter(|e| e.customer == customer.id).count() as u64;
        if used > k {
            return Err(Error::InvalidAssignment(format!(
                "customer `{}` is served by {used} fulfillers but only {k} exist",
                customer.id
            )));
        }
    }
    Ok(SplitAssignment { entries })
}
