#![no_main]

use libfuzzer_sys::fuzz_target;
use ramsey_simple::format::{parse_szz, write_szz};

fuzz_target!(|data: &str| {
    if let Ok((h, g)) = parse_szz(data) {
        let (h2, g2) = parse_szz(&write_szz(&h, &g)).unwrap();
        assert_eq!((h2, g2), (h, g));
    }
});
