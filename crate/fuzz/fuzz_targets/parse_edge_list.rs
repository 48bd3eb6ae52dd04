#![no_main]

use libfuzzer_sys::fuzz_target;
use ramsey_simple::format::{parse_edge_list, write_edge_list};

fuzz_target!(|data: &str| {
    if let Ok(g) = parse_edge_list(data) {
        let again = parse_edge_list(&write_edge_list(&g)).expect("written output must parse");
        assert_eq!(again, g);
    }
});
