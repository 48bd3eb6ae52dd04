#![no_main]

use libfuzzer_sys::fuzz_target;
use ramsey_simple::format::{parse_graph6, write_graph6};

fuzz_target!(|data: &str| {
    if let Ok(g) = parse_graph6(data) {
        let again = parse_graph6(&write_graph6(&g)).expect("written output must parse");
        assert_eq!(again, g);
    }
});
