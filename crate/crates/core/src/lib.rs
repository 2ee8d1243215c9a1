//! Minimum-size partitions that generate every partition of `n` into at most
//! `k` parts.
//!
//! A partition `mu` of `n` *generates* a partition `lambda` of `n` when the
//! parts of `mu` can be split into disjoint groups whose sums are exactly
//! the parts of `lambda`. [`minimal_generator`] builds the smallest `mu`
//! that generates every `lambda` with at most `k` parts by repeatedly taking
//! `ceil(residual / k)`. The [`oracle`] module holds exhaustive searches that
//! check this independently, and [`demand`] applies it to split-delivery
//! instances.

pub mod cli;
pub mod demand;
mod enumerate;
mod error;
mod generator;
pub mod oracle;
mod partition;
mod plan;

pub use enumerate::{count_partitions, enumerate_partitions, enumerate_partitions_exact, Partitions};
pub use error::{Error, Result};
pub use generator::{
    generator_size, generator_sizes, minimal_generator, size_upper_bound, size_upper_bounds, SizeTable,
};
pub use partition::{make_partition, Partition};
pub use plan::{greedy_generate, greedy_trace, GenerationPlan, Greedy, GreedyStep, GreedyTrace};
