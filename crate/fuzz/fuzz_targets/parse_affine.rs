#![no_main]

use libfuzzer_sys::fuzz_target;
use ramsey_simple::format::{parse_affine, write_affine};

fuzz_target!(|data: &str| {
    if let Ok(g) = parse_affine(data) {
        let again = parse_affine(&write_affine(&g)).expect("written output must parse");
        assert_eq!(again, g);
    }
});
