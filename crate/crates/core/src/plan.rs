//! Witnesses for the generation relation and the greedy placement that
//! builds them.
//!
//! All indices stored here are 0-based; the text renderings number parts
//! from 1.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A decomposition of `source` into disjoint groups, one per part of
/// `target`, where group `i` sums to `target.parts()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPlan")]
pub struct GenerationPlan {
    source: Partition,
    target: Partition,
    /// `assignment[j]` is the target index receiving source part `j`.
    assignment: Vec<usize>,
}

#[derive(Deserialize)]
struct RawPlan {
    source: Partition,
    target: Partition,
    assignment: Vec<usize>,
}

impl TryFrom<RawPlan> for GenerationPlan {
    type Error = Error;

    fn try_from(raw: RawPlan) -> Result<Self> {
        GenerationPlan::new(raw.source, raw.target, raw.assignment)
    }
}

impl GenerationPlan {
    /// Builds a plan and checks it.
    pub fn new(source: Partition, target: Partition, assignment: Vec<usize>) -> Result<Self> {
        let plan = GenerationPlan {
            source,
            target,
            assignment,
        };
        plan.validate()?;
        Ok(plan)
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn target(&self) -> &Partition {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Source indices per target part, ascending within each group.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.target.size()];
        for (j, &i) in self.assignment.iter().enumerate() {
            groups[i].push(j);
        }
        groups
    }

    /// Recomputes the decomposition from scratch: every source index used
    /// once, every group summing to its target part.
    pub fn validate(&self) -> Result<()> {
        if self.assignment.len() != self.source.size() {
            return Err(Error::InvalidPlan(format!(
                "{} assignments for {} source parts",
                self.assignment.len(),
                self.source.size()
            )));
        }
        let mut sums = vec![0u64; self.target.size()];
        for (j, &i) in self.assignment.iter().enumerate() {
            let slot = sums.get_mut(i).ok_or_else(|| {
                Error::InvalidPlan(format!("source part {} sent to missing target {}", j + 1, i + 1))
            })?;
            *slot += self.source.parts()[j];
        }
        for (i, (&sum, &want)) in sums.iter().zip(self.target.parts()).enumerate() {
            if sum != want {
                return Err(Error::InvalidPlan(format!(
                    "target part {} is {want} but its group sums to {sum}",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

/// `4 = 3+1; 3 = 2+1; 2 = 2`
impl fmt::Display for GenerationPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, group) in self.groups().iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} = ", self.target.parts()[i])?;
            for (g, &j) in group.iter().enumerate() {
                if g > 0 {
                    f.write_str("+")?;
                }
                write!(f, "{}", self.source.parts()[j])?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyStep {
    pub source: usize,
    pub target: usize,
    /// Capacity left on every target after this placement.
    pub remaining: Vec<u64>,
}

/// Step log of a greedy placement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyTrace {
    pub source: Partition,
    pub target: Partition,
    pub steps: Vec<GreedyStep>,
    /// Source index that fit on no target, if the placement got stuck.
    pub stuck_at: Option<usize>,
}

impl GreedyTrace {
    /// Capacities when the trace ended (or the full target if nothing was
    /// placed).
    pub fn remaining(&self) -> Vec<u64> {
        self.steps
            .last()
            .map(|s| s.remaining.clone())
            .unwrap_or_else(|| self.target.parts().to_vec())
    }

    /// The plan, when every part was placed.
    pub fn plan(&self) -> Option<GenerationPlan> {
        if self.stuck_at.is_some() {
            return None;
        }
        let assignment = self.steps.iter().map(|s| s.target).collect();
        Some(GenerationPlan {
            source: self.source.clone(),
            target: self.target.clone(),
            assignment,
        })
    }
}

impl fmt::Display for GreedyTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        for step in &self.steps {
            writeln!(
                f,
                "place part {} ({}) on target {} ({}); remaining {}",
                step.source + 1,
                self.source.parts()[step.source],
                step.target + 1,
                self.target.parts()[step.target],
                join(&step.remaining)
            )?;
        }
        match self.stuck_at {
            Some(j) => write!(
                f,
                "stuck at part {} ({}); remaining {}",
                j + 1,
                self.source.parts()[j],
                join(&self.remaining())
            ),
            None => write!(f, "complete"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Greedy {
    Placed(GenerationPlan),
    Stuck(GreedyTrace),
}

/// Runs the greedy placement and records every step.
///
/// Source parts are taken largest first. Each goes to a target whose
/// remaining capacity still holds it, preferring the largest original target
/// part, then the largest remaining capacity, then the lowest index.
pub fn greedy_trace(mu: &Partition, gamma: &Partition) -> Result<GreedyTrace> {
    if mu.weight() != gamma.weight() {
        return Err(Error::WeightMismatch {
            source_weight: mu.weight(),
            target_weight: gamma.weight(),
        });
    }
    let mut remaining = gamma.parts().to_vec();
    let mut steps = Vec::with_capacity(mu.size());
    let mut stuck_at = None;
    for (j, &part) in mu.parts().iter().enumerate() {
        let choice = (0..remaining.len())
            .filter(|&i| remaining[i] >= part)
            .min_by(|&a, &b| {
                gamma.parts()[b]
                    .cmp(&gamma.parts()[a])
                    .then(remaining[b].cmp(&remaining[a]))
                    .then(a.cmp(&b))
            });
        match choice {
            Some(i) => {
                remaining[i] -= part;
                steps.push(GreedyStep {
                    source: j,
                    target: i,
                    remaining: remaining.clone(),
                });
            }
            None => {
                stuck_at = Some(j);
                break;
            }
        }
    }
    Ok(GreedyTrace {
        source: mu.clone(),
        target: gamma.clone(),
        steps,
        stuck_at,
    })
}

/// [`greedy_trace`] reduced to its result. Getting stuck does not prove that
/// `mu` cannot generate `gamma` unless `mu` generates every partition with at
/// most `gamma.size()` parts.
pub fn greedy_generate(mu: &Partition, gamma: &Partition) -> Result<Greedy> {
    let trace = greedy_trace(mu, gamma)?;
    Ok(match trace.plan() {
        Some(plan) => Greedy::Placed(plan),
        None => Greedy::Stuck(trace),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::make_partition;

    fn p(v: &[u64]) -> Partition {
        make_partition(v).unwrap()
    }

    #[test]
    fn greedy_matches_worked_example() {
        let Greedy::Placed(plan) = greedy_generate(&p(&[3, 2, 2, 1, 1]), &p(&[4, 3, 2])).unwrap() else {
            panic!("greedy got stuck");
        };
        assert_eq!(plan.to_string(), "4 = 3+1; 3 = 2+1; 2 = 2");
        assert_eq!(plan.groups(), vec![vec![0, 3], vec![1, 4], vec![2]]);
        plan.validate().unwrap();
    }

    #[test]
    fn trivial_plan() {
        let Greedy::Placed(plan) = greedy_generate(&p(&[5]), &p(&[5])).unwrap() else {
            panic!();
        };
        assert_eq!(plan.to_string(), "5 = 5");
    }

    #[test]
    fn stuck_at_first_part() {
        let Greedy::Stuck(trace) = greedy_generate(&p(&[3, 1]), &p(&[2, 2])).unwrap() else {
            panic!();
        };
        assert_eq!(trace.stuck_at, Some(0));
        assert!(trace.steps.is_empty());
        assert_eq!(trace.to_string(), "stuck at part 1 (3); remaining 2 2");
        assert!(trace.remaining().iter().all(|&r| r < 3));
    }

    #[test]
    fn stuck_trace_invariant() {
        // 2 -> 3, 2 -> 2 leaves (1, 0, 1); the third 2 has nowhere to go
        let trace = greedy_trace(&p(&[2, 2, 2]), &p(&[3, 2, 1])).unwrap();
        assert_eq!(trace.stuck_at, Some(2));
        assert_eq!(trace.remaining(), vec![1, 0, 1]);
        let mut placed = [0u64; 3];
        for step in &trace.steps {
            placed[step.target] += trace.source.parts()[step.source];
            for (i, &r) in step.remaining.iter().enumerate() {
                assert_eq!(r, trace.target.parts()[i] - placed[i]);
            }
        }
    }

    #[test]
    fn tie_break_prefers_larger_remaining_then_lower_index() {
        // equal original parts: after the first 1 lands on target 0, the
        // second prefers target 1 which still has more room
        let trace = greedy_trace(&p(&[1, 1, 1, 1]), &p(&[2, 2])).unwrap();
        let targets: Vec<usize> = trace.steps.iter().map(|s| s.target).collect();
        assert_eq!(targets, vec![0, 1, 0, 1]);
    }

    #[test]
    fn weight_mismatch_is_distinct() {
        assert_eq!(
            greedy_generate(&p(&[5]), &p(&[9])),
            Err(Error::WeightMismatch {
                source_weight: 5,
                target_weight: 9
            })
        );
    }

    #[test]
    fn plan_validation_rejects_bad_groups() {
        assert!(GenerationPlan::new(p(&[2, 1]), p(&[2, 1]), vec![1, 0]).is_err());
        assert!(GenerationPlan::new(p(&[2, 1]), p(&[3]), vec![0]).is_err());
        assert!(GenerationPlan::new(p(&[2, 1]), p(&[3]), vec![0, 1]).is_err());
        assert!(GenerationPlan::new(p(&[2, 1]), p(&[3]), vec![0, 0]).is_ok());
    }

    #[test]
    fn plan_json_round_trip_validates() {
        let plan = GenerationPlan::new(p(&[2, 2, 1]), p(&[4, 1]), vec![0, 0, 1]).unwrap();
        let text = serde_json::to_string(&plan).unwrap();
        assert_eq!(serde_json::from_str::<GenerationPlan>(&text).unwrap(), plan);
        let broken = text.replace("[0,0,1]", "[0,1,1]");
        assert!(serde_json::from_str::<GenerationPlan>(&broken).is_err());
    }
}
