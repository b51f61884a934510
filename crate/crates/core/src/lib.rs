//! Exact verification toolkit for the scalars relating cuspidal character
//! sheaves to almost characters of E6(q) and ²E6(q), q a power of 3, and the
//! values of unipotent characters at regular unipotent elements.

#![allow(clippy::needless_range_loop)]

pub mod borel;
pub mod cli;
pub mod error;
pub mod fourier;
pub mod hecke;
pub mod pipeline;
pub mod rootdata;
pub mod scalars;
pub mod unipchars;
pub mod weyl;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use error::{Error, Result};

/// The two Frobenius flavors: split E6(q) and the twisted ²E6(q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Untwisted,
    Twisted,
}

impl Case {
    pub const BOTH: [Case; 2] = [Case::Untwisted, Case::Twisted];

    pub fn name(self) -> &'static str {
        match self {
            Case::Untwisted => "untwisted",
            Case::Twisted => "twisted",
        }
    }

    /// Short tag used in data files: `e6` or `2e6`.
    pub fn data_tag(self) -> &'static str {
        match self {
            Case::Untwisted => "e6",
            Case::Twisted => "2e6",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "untwisted" | "e6" => Ok(Case::Untwisted),
            "twisted" | "2e6" => Ok(Case::Twisted),
            _ => Err(Error::Parse(format!("unknown case '{s}'"))),
        }
    }
}
