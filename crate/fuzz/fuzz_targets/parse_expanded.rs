#![no_main]

use libfuzzer_sys::fuzz_target;
use mingen::demand::ExpandedInstance;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(e) = ExpandedInstance::from_json(text) {
            let again = serde_json::to_string(&e).unwrap();
            assert_eq!(ExpandedInstance::from_json(&again).unwrap(), e);
        }
    }
});
