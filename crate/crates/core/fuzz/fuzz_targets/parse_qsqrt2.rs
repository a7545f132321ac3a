#![no_main]
use libfuzzer_sys::fuzz_target;

use octaplex::{QSqrt2, QuatEx};

// First line is one number, the next four a quaternion.
fuzz_target!(|text: &str| {
    let mut lines = text.lines();
    if let Some(Ok(x)) = lines.next().map(str::parse::<QSqrt2>) {
        assert_eq!(x.to_exact_string().parse::<QSqrt2>().unwrap(), x);
    }
    let parts: Vec<&str> = lines.take(4).collect();
    if let Ok(q) = QuatEx::from_exact_strings(&parts) {
        assert_eq!(QuatEx::from_exact_strings(&q.to_exact_strings()).unwrap(), q);
    }
});
