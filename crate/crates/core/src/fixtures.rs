//! Locating and loading the shipped data files.
//!
//! The directory is taken from `EHRLAB_FIXTURES` when set, otherwise the
//! `fixtures/` directory of this crate's source tree.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::gt::{
    nonidp_key_row, nonidp_lambda, nonidp_mu, nonidp_row_sums, CounterexampleInput, GTPattern,
};
use crate::poset::RootedTree;

pub const FIXTURE_ENV: &str = "EHRLAB_FIXTURES";

pub const NONIDP_DOUBLED: &str = "gt_g.txt";
pub const NONIDP_PARTS: [&str; 4] = ["gt_g1.txt", "gt_g2.txt", "gt_g3.txt", "gt_g4.txt"];
pub const TREE_T: &str = "tree_t.txt";
pub const TREE_T_PRIME: &str = "tree_t_prime.txt";

pub fn fixture_dir() -> PathBuf {
    std::env::var_os(FIXTURE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

pub fn read_fixture(dir: &Path, name: &str) -> Result<String> {
    let path = dir.join(name);
    if !path.is_file() {
        return Err(Error::MissingFixture(path));
    }
    Ok(std::fs::read_to_string(path)?)
}

pub fn load_pattern(dir: &Path, name: &str) -> Result<GTPattern> {
    GTPattern::parse(&read_fixture(dir, name)?)
}

pub fn load_tree(dir: &Path, name: &str) -> Result<RootedTree> {
    RootedTree::parse(&read_fixture(dir, name)?)
}

/// The doubled pattern, its four summands and the boundary data of the
/// shipped non-IDP GT instance.
pub fn load_nonidp_instance(dir: &Path) -> Result<CounterexampleInput> {
    Ok(CounterexampleInput {
        lambda: nonidp_lambda(),
        mu: nonidp_mu(),
        sums: nonidp_row_sums(),
        doubled: load_pattern(dir, NONIDP_DOUBLED)?,
        parts: NONIDP_PARTS
            .iter()
            .map(|name| load_pattern(dir, name))
            .collect::<Result<_>>()?,
        key_row: nonidp_key_row(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_fixture_is_named() {
        let err = load_pattern(Path::new("/nonexistent"), NONIDP_DOUBLED).unwrap_err();
        assert!(err.to_string().contains("gt_g.txt"));
    }

    #[test]
    fn shipped_fixtures_parse() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        let input = load_nonidp_instance(&dir).unwrap();
        assert_eq!(input.doubled.row_count(), 19);
        assert_eq!(load_tree(&dir, TREE_T).unwrap().size(), 14);
        assert_eq!(load_tree(&dir, TREE_T_PRIME).unwrap().size(), 14);
    }
}
