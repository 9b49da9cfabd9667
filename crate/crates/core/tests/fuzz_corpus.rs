//! Replays the fuzz corpus seeds through the same parser entry points.

use std::path::Path;

use invgen::families::Catalog;
use invgen::{GroupHandle, Permutation};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<Vec<u8>> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "{target} has seeds");
    out
}

#[test]
fn parse_cycles_seeds() {
    let mut parsed = 0;
    for s in seeds("parse_cycles") {
        let (d, text) = s.split_first().unwrap();
        let degree = usize::from(d % 64);
        if let Ok(p) = Permutation::parse_cycles(std::str::from_utf8(text).unwrap(), degree) {
            assert_eq!(Permutation::parse_cycles(&p.to_string(), degree).unwrap(), p);
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn parse_group_seeds() {
    let orders: Vec<Option<u64>> = seeds("parse_group")
        .iter()
        .map(|s| {
            let (d, text) = s.split_first().unwrap();
            GroupHandle::parse(std::str::from_utf8(text).unwrap(), usize::from(d % 13))
                .ok()
                .and_then(|g| g.order_u64())
        })
        .collect();
    for want in [24, 60, 336] {
        assert!(orders.contains(&Some(want)), "{want}");
    }
}

#[test]
fn parse_catalog_seeds() {
    let ok = seeds("parse_catalog")
        .iter()
        .filter(|s| Catalog::parse(std::str::from_utf8(s).unwrap()).is_ok())
        .count();
    assert_eq!(ok, 3);
}
