//! Replays the checked-in fuzz seeds through the same round-trip checks as
//! the fuzz targets, so the seeds stay valid without a nightly toolchain.

use std::fs;
use std::path::PathBuf;

use ramsey_simple::bounds::parse_p_grid;
use ramsey_simple::format::*;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .filter(|p| {
            p.file_name()
                .unwrap()
                .to_string_lossy()
                .starts_with("seed-")
        })
        .map(|p| (p.display().to_string(), fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn edge_list_seeds_round_trip() {
    for (name, text) in seeds("parse_edge_list") {
        let g = parse_edge_list(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g, "{name}");
    }
}

#[test]
fn graph6_seeds_round_trip() {
    for (name, text) in seeds("parse_graph6") {
        let g = parse_graph6(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g, "{name}");
    }
}

#[test]
fn graph_seeds_round_trip_both_formats() {
    for (name, text) in seeds("parse_graph") {
        let g = parse_graph(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_graph(&write_edge_list(&g)).unwrap(), g, "{name}");
        assert_eq!(parse_graph(&write_graph6(&g)).unwrap(), g, "{name}");
    }
}

#[test]
fn coloured_seeds_round_trip() {
    for (name, text) in seeds("parse_coloured") {
        let g = parse_coloured(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_coloured(&write_coloured(&g)).unwrap(), g, "{name}");
    }
}

#[test]
fn affine_seeds_round_trip() {
    for (name, text) in seeds("parse_affine") {
        let g = parse_affine(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_affine(&write_affine(&g)).unwrap(), g, "{name}");
    }
}

#[test]
fn szz_seeds_round_trip() {
    for (name, text) in seeds("parse_szz") {
        let (h, g) = parse_szz(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_szz(&write_szz(&h, &g)).unwrap(), (h, g), "{name}");
    }
}

#[test]
fn p_grid_seeds_parse() {
    for (name, text) in seeds("parse_p_grid") {
        let grid = parse_p_grid(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(
            !grid.is_empty() && grid.iter().all(|&p| p > 0.0 && p < 1.0),
            "{name}"
        );
    }
}
