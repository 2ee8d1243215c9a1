//! Split-demand to non-split instance transformation.
//!
//! Each customer of demand `n` is replaced by one co-located copy per part of
//! `minimal_generator(n, k)`. Any way of serving the customer by at most `k`
//! fulfillers can then be reproduced by assigning whole copies.

mod instance;
mod recover;
mod tsplib;

pub use instance::{
    expand_instance, expansion_bound, id_order, Copy, Customer, Depot, ExpandedInstance, InstanceSpec,
};
pub use recover::{recover_solution, CopyAssignment, SplitAssignment, SplitEntry};
pub use tsplib::parse_tsplib;
