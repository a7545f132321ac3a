#![no_main]
use libfuzzer_sys::fuzz_target;

use octaplex::script::Signal;

fuzz_target!(|text: &str| {
    if let Ok(sig) = Signal::from_csv(text) {
        for t in [-1.0, 0.0, 0.5, 1e9] {
            let a = sig.at(t);
            assert!((0.0..=1.0).contains(&a));
        }
    }
});
