//! The files under `fixtures/` are generated by code; set `UPDATE_FIXTURES=1`
//! to rewrite them.

mod common;

use std::fs;

#[test]
fn shipped_fixtures_match_generators() {
    let update = std::env::var_os("UPDATE_FIXTURES").is_some();
    for (name, contents) in common::expected_fixture_files() {
        let path = common::fixture_path(name);
        if update {
            fs::create_dir_all(common::fixture_dir()).unwrap();
            fs::write(&path, &contents).unwrap();
        }
        let on_disk = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, contents, "{name} is stale; rerun with UPDATE_FIXTURES=1");
    }
}
