#![no_main]

use libfuzzer_sys::fuzz_target;
use mingen::{GenerationPlan, Partition};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<Partition>() {
        assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }
    if let Ok(p) = serde_json::from_str::<Partition>(text) {
        assert_eq!(p.parts().iter().sum::<u64>(), p.weight());
    }
    if let Ok(plan) = serde_json::from_str::<GenerationPlan>(text) {
        plan.validate().unwrap();
    }
});
