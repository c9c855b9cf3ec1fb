//! Independent oracles shared by the integration tests. None of them call
//! the closed forms they are compared against.
#![allow(dead_code)]

pub mod enum_oracle;
pub mod globe_oracle;
pub mod random_terms;
pub mod realization_oracle;
pub mod strict_oracle;

use std::path::PathBuf;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}
