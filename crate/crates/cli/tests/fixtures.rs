//! The shipped `.tbl` files must match the fixture constructors.
//! Regenerate with `QKIT_BLESS=1 cargo test -p qkit --test fixtures`.

use qkit::table;
use qkit_core::fixtures;
use std::path::PathBuf;

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{}.tbl", name.to_lowercase().replace('+', "_plus")))
}

#[test]
fn shipped_tables_match_constructors() {
    let bless = std::env::var_os("QKIT_BLESS").is_some();
    for f in fixtures::curated() {
        let p = path(f.name);
        if bless {
            std::fs::write(&p, table::render(&f.semigroup)).unwrap();
        }
        let text = std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(table::parse(&text).unwrap(), f.semigroup, "{}", f.name);
    }
}
