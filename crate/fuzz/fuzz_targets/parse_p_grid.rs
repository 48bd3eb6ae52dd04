#![no_main]

use libfuzzer_sys::fuzz_target;
use ramsey_simple::bounds::parse_p_grid;

fuzz_target!(|data: &str| {
    if let Ok(grid) = parse_p_grid(data) {
        assert!(grid.iter().all(|&p| p > 0.0 && p < 1.0));
    }
});
