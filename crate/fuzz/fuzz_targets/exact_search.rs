#![no_main]

use libfuzzer_sys::fuzz_target;
use mingen::oracle::{Decision, ExactSearch};
use mingen::{greedy_generate, Greedy, Partition};

// First byte splits the rest into source and target parts; small values keep
// the search cheap.
fuzz_target!(|data: &[u8]| {
    let Some((&split, rest)) = data.split_first() else {
        return;
    };
    let cut = (split as usize).min(rest.len());
    let (a, b) = rest.split_at(cut);
    let parts = |bytes: &[u8]| bytes.iter().take(12).map(|&x| u64::from(x % 16) + 1).collect::<Vec<_>>();
    let (Ok(mu), Ok(mut gamma)) = (Partition::new(parts(a)), Partition::new(parts(b))) else {
        return;
    };
    // top up the lighter side so the weights match
    if gamma.weight() < mu.weight() {
        let mut p = gamma.parts().to_vec();
        p.push(mu.weight() - gamma.weight());
        gamma = Partition::new(p).unwrap();
    } else if gamma.weight() > mu.weight() {
        return;
    }
    let (decision, _) = ExactSearch::with_budget(Some(100_000)).decide(&mu, &gamma).unwrap();
    if let Decision::Generated(plan) = &decision {
        plan.validate().unwrap();
    }
    if let Greedy::Placed(plan) = greedy_generate(&mu, &gamma).unwrap() {
        plan.validate().unwrap();
        assert!(!matches!(decision, Decision::NotGenerated));
    }
});
