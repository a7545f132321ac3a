#![no_main]
use libfuzzer_sys::fuzz_target;

use octaplex::export::GeometryExport;

fuzz_target!(|text: &str| {
    if let Ok(g) = GeometryExport::from_json(text) {
        let again = GeometryExport::from_json(&g.to_json()).expect("export re-imports");
        assert_eq!(g, again);
    }
});
