#![no_main]

use libfuzzer_sys::fuzz_target;
use mingen::demand::{expand_instance, expansion_bound, InstanceSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(mut spec) = InstanceSpec::from_json(text) else {
        return;
    };
    // keep expansion small
    spec.k = spec.k.min(64);
    spec.customers.truncate(64);
    for c in &mut spec.customers {
        c.demand = c.demand.min(1 << 20);
    }
    let expanded = expand_instance(&spec).unwrap();
    assert!(expanded.copies().len() as u64 <= expansion_bound(&spec).unwrap());
});
