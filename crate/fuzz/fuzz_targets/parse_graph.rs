#![no_main]

use libfuzzer_sys::fuzz_target;
use ramsey_simple::format::{parse_graph, write_edge_list, write_graph6};

fuzz_target!(|data: &str| {
    if let Ok(g) = parse_graph(data) {
        assert_eq!(parse_graph(&write_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_graph(&write_graph6(&g)).unwrap(), g);
    }
});
