#![no_main]

use libfuzzer_sys::fuzz_target;
use ramsey_simple::format::{parse_coloured, write_coloured};

fuzz_target!(|data: &str| {
    if let Ok(g) = parse_coloured(data) {
        let again = parse_coloured(&write_coloured(&g)).expect("written output must parse");
        assert_eq!(again, g);
    }
});
