#![no_main]

use libfuzzer_sys::fuzz_target;
use mingen::demand::{expand_instance, recover_solution, CopyAssignment, InstanceSpec};

const INSTANCE: &str = r#"{"k": 3, "customers": [{"id": "A", "demand": 9}, {"id": "B", "demand": 4}]}"#;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(assignments) = CopyAssignment::list_from_json(text) else {
        return;
    };
    let expanded = expand_instance(&InstanceSpec::from_json(INSTANCE).unwrap()).unwrap();
    if let Ok(split) = recover_solution(&expanded, &assignments) {
        for (id, demand) in [("A", 9), ("B", 4)] {
            let p = split.induced_partition(id).unwrap();
            assert_eq!(p.weight(), demand);
            assert!(p.size() <= 3);
        }
    }
});
