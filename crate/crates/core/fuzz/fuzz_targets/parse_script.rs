#![no_main]
use libfuzzer_sys::fuzz_target;

use octaplex::script::{parse, pretty};

fuzz_target!(|src: &str| {
    if let Ok(program) = parse(src) {
        let printed = pretty(&program);
        let again = parse(&printed).expect("printed program parses");
        assert_eq!(program, again);
    }
});
