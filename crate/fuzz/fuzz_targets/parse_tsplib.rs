#![no_main]

use libfuzzer_sys::fuzz_target;
use mingen::demand::parse_tsplib;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(spec) = parse_tsplib(text, 3) {
            assert!(spec.customers.iter().all(|c| c.demand > 0));
        }
    }
});
