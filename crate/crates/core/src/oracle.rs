//! Exhaustive decision procedures for the generation relation.
//!
//! Nothing here relies on the greedy construction being correct; these
//! routines exist to check it.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_partitions, enumerate_partitions_exact};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plan::{greedy_generate, GenerationPlan, Greedy};

/// Result of one exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Generated(GenerationPlan),
    NotGenerated,
    /// The node budget ran out before the search finished.
    Inconclusive,
}

/// Depth-first search assigning source parts, largest first, to target parts.
///
/// Branches are cut when a part overflows a target, when a target is left
/// with a positive gap smaller than the smallest source part, and when a
/// target with the same remaining capacity was already tried at the same
/// depth. States already shown to fail are memoized.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactSearch {
    /// Limit on search nodes per call; `None` searches to completion.
    pub max_nodes: Option<u64>,
}

struct SearchState<'a> {
    parts: &'a [u64],
    smallest: u64,
    remaining: Vec<u64>,
    assignment: Vec<usize>,
    failed: HashSet<(usize, Vec<u64>)>,
    nodes: u64,
    max_nodes: Option<u64>,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

impl SearchState<'_> {
    fn search(&mut self, depth: usize) -> Step {
        if depth == self.parts.len() {
            return Step::Found;
        }
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            return Step::OutOfBudget;
        }
        let key = {
            let mut caps = self.remaining.clone();
            caps.sort_unstable();
            (depth, caps)
        };
        if self.failed.contains(&key) {
            return Step::Dead;
        }
        let part = self.parts[depth];
        let mut tried: Vec<u64> = Vec::new();
        for i in 0..self.remaining.len() {
            let cap = self.remaining[i];
            if cap < part || tried.contains(&cap) {
                continue;
            }
            tried.push(cap);
            let left = cap - part;
            if left > 0 && left < self.smallest {
                continue;
            }
            self.remaining[i] = left;
            self.assignment.push(i);
            match self.search(depth + 1) {
                Step::Found => return Step::Found,
                Step::OutOfBudget => return Step::OutOfBudget,
                Step::Dead => {}
            }
            self.assignment.pop();
            self.remaining[i] = cap;
        }
        self.failed.insert(key);
        Step::Dead
    }
}

impl ExactSearch {
    pub fn with_budget(max_nodes: Option<u64>) -> Self {
        ExactSearch { max_nodes }
    }

    /// Decides whether `mu` generates `lambda`, returning the decision and
    /// the number of search nodes expanded.
    pub fn decide(&self, mu: &Partition, lambda: &Partition) -> Result<(Decision, u64)> {
        check_weights(mu, lambda)?;
        let smallest = *mu.parts().last().expect("partitions are non-empty");
        if lambda.parts().iter().any(|&c| c < smallest) {
            return Ok((Decision::NotGenerated, 0));
        }
        let mut state = SearchState {
            parts: mu.parts(),
            smallest,
            remaining: lambda.parts().to_vec(),
            assignment: Vec::with_capacity(mu.size()),
            failed: HashSet::new(),
            nodes: 0,
            max_nodes: self.max_nodes,
        };
        let decision = match state.search(0) {
            Step::Found => {
                let plan = GenerationPlan::new(mu.clone(), lambda.clone(), state.assignment)?;
                Decision::Generated(plan)
            }
            Step::Dead => Decision::NotGenerated,
            Step::OutOfBudget => Decision::Inconclusive,
        };
        Ok((decision, state.nodes))
    }
}

fn check_weights(mu: &Partition, lambda: &Partition) -> Result<()> {
    if mu.weight() != lambda.weight() {
        return Err(Error::WeightMismatch {
            source_weight: mu.weight(),
            target_weight: lambda.weight(),
        });
    }
    Ok(())
}

/// A plan showing `mu` generates `lambda`, or `None` if no such plan exists.
pub fn generates_exact(mu: &Partition, lambda: &Partition) -> Result<Option<GenerationPlan>> {
    match ExactSearch::default().decide(mu, lambda)?.0 {
        Decision::Generated(plan) => Ok(Some(plan)),
        Decision::NotGenerated => Ok(None),
        Decision::Inconclusive => unreachable!("unbounded search cannot run out of budget"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyMode {
    /// Try the greedy placement first and fall back to the exact search when
    /// it gets stuck.
    #[default]
    GreedyFirst,
    ExactOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Statistics {
    pub partitions_checked: u64,
    pub nodes_expanded: u64,
}

/// Whether `subject` generates every partition of `n` into at most `k`
/// parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: Partition,
    pub n: u64,
    pub k: u64,
    pub outcome: Outcome,
    /// First target, in enumeration order, that the subject cannot generate.
    pub counterexample: Option<Partition>,
    /// Target whose search ran out of budget, for inconclusive reports.
    pub undecided: Option<Partition>,
    pub mode: VerifyMode,
    pub statistics: Statistics,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Verifier {
    pub mode: VerifyMode,
    /// Budget for each individual exact search.
    pub max_nodes: Option<u64>,
}

impl Verifier {
    pub fn new(mode: VerifyMode) -> Self {
        Verifier {
            mode,
            max_nodes: None,
        }
    }

    pub fn max_nodes(mut self, max_nodes: Option<u64>) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    /// Checks targets in enumeration order and stops at the first one that
    /// is not shown to be generated.
    pub fn verify(&self, mu: &Partition, n: u64, k: u64) -> Result<VerificationReport> {
        if k == 0 {
            return Err(Error::ZeroArgument { name: "k" });
        }
        if mu.weight() != n {
            return Err(Error::WeightMismatch {
                source_weight: mu.weight(),
                target_weight: n,
            });
        }
        let search = ExactSearch::with_budget(self.max_nodes);
        let mut report = VerificationReport {
            subject: mu.clone(),
            n,
            k,
            outcome: Outcome::Pass,
            counterexample: None,
            undecided: None,
            mode: self.mode,
            statistics: Statistics::default(),
        };
        let max_parts = usize::try_from(k).unwrap_or(usize::MAX);
        for gamma in enumerate_partitions(n, max_parts)? {
            report.statistics.partitions_checked += 1;
            if self.mode == VerifyMode::GreedyFirst {
                if let Greedy::Placed(_) = greedy_generate(mu, &gamma)? {
                    continue;
                }
            }
            let (decision, nodes) = search.decide(mu, &gamma)?;
            report.statistics.nodes_expanded += nodes;
            match decision {
                Decision::Generated(_) => {}
                Decision::NotGenerated => {
                    report.outcome = Outcome::Fail;
                    report.counterexample = Some(gamma);
                    break;
                }
                Decision::Inconclusive => {
                    report.outcome = Outcome::Inconclusive;
                    report.undecided = Some(gamma);
                    break;
                }
            }
        }
        Ok(report)
    }
}

/// [`Verifier::verify`] without a search budget.
pub fn generates_all(mu: &Partition, n: u64, k: u64, mode: VerifyMode) -> Result<VerificationReport> {
    Verifier::new(mode).verify(mu, n, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimumGenerator {
    pub size: usize,
    pub witness: Partition,
}

/// Smallest generator of all `k`-partitions of `n`, found by trying every
/// partition of `n` with 1, 2, ... parts under the exact search.
pub fn brute_force_min_size(n: u64, k: u64) -> Result<MinimumGenerator> {
    brute_force_min_size_with(n, k, None)
}

pub fn brute_force_min_size_with(n: u64, k: u64, max_nodes: Option<u64>) -> Result<MinimumGenerator> {
    if n == 0 {
        return Err(Error::ZeroArgument { name: "n" });
    }
    let verifier = Verifier::new(VerifyMode::ExactOnly).max_nodes(max_nodes);
    for size in 1..=n as usize {
        for candidate in enumerate_partitions_exact(n, size)? {
            let report = verifier.verify(&candidate, n, k)?;
            match report.outcome {
                Outcome::Pass => {
                    return Ok(MinimumGenerator {
                        size,
                        witness: candidate,
                    })
                }
                Outcome::Fail => {}
                Outcome::Inconclusive => {
                    return Err(Error::BudgetExhausted {
                        max_nodes: max_nodes.unwrap_or_default(),
                    })
                }
            }
        }
    }
    unreachable!("the all-ones partition generates everything")
}

/// Every partition of `n` that generates all `k`-partitions of `n`, in
/// enumeration order.
pub fn feasible_generators(n: u64, k: u64) -> Result<impl Iterator<Item = Partition>> {
    if k == 0 {
        return Err(Error::ZeroArgument { name: "k" });
    }
    let verifier = Verifier::new(VerifyMode::ExactOnly);
    Ok(enumerate_partitions(n, n as usize)?.filter(move |candidate| {
        verifier
            .verify(candidate, n, k)
            .map(|r| r.passed())
            .unwrap_or(false)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceViolation {
    /// 1-based prefix length.
    pub m: usize,
    pub lambda_prefix: u64,
    pub mu_prefix: u64,
}

/// Checks `lambda_1 + ... + lambda_m <= mu_1 + ... + mu_m` for every `m` up
/// to the shorter length.
pub fn check_prefix_dominance(mu: &Partition, lambda: &Partition) -> Result<(), DominanceViolation> {
    for (idx, (l, u)) in lambda.prefix_sums().into_iter().zip(mu.prefix_sums()).enumerate() {
        if l > u {
            return Err(DominanceViolation {
                m: idx + 1,
                lambda_prefix: l,
                mu_prefix: u,
            });
        }
    }
    Ok(())
}

/// Verifies that the parts `lambda_m, ..., lambda_l` (1-based `m`) of a
/// feasible generator still generate all `k`-partitions of their sum.
pub fn check_suffix_property(lambda: &Partition, k: u64, m: usize) -> Result<VerificationReport> {
    if m < 2 || m > lambda.size() {
        return Err(Error::SuffixOutOfRange {
            m,
            len: lambda.size(),
        });
    }
    let n = lambda.weight();
    if !generates_all(lambda, n, k, VerifyMode::ExactOnly)?.passed() {
        return Err(Error::NotAFeasibleGenerator { n, k });
    }
    let suffix = lambda.suffix(m - 1).expect("m is in range");
    generates_all(&suffix, suffix.weight(), k, VerifyMode::ExactOnly)
}
