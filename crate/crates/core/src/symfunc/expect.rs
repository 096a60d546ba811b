//! Expected scan results and the `h2[s_{4,2}]` expansion, embedded as data.

use serde::Deserialize;

use super::expansion::SchurExpansion;
use super::partition::Partition;
use crate::{Error, Result};

const RAW: &str = include_str!("../../data/scan_expectations.json");

#[derive(Clone, Debug, Deserialize)]
pub struct ScanExpectation {
    pub max_size: u32,
    pub sym: Vec<Partition>,
    pub ext: Vec<Partition>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SymSquareExpectation {
    pub mu: Partition,
    pub expansion: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Expectations {
    pub version: u32,
    pub multiplicity_scan: Vec<ScanExpectation>,
    pub hook_scan: Vec<ScanExpectation>,
    pub sym_square: SymSquareExpectation,
}

impl Expectations {
    pub fn load() -> Result<Self> {
        let e: Self = serde_json::from_str(RAW)?;
        if e.version != 1 {
            return Err(Error::Parse(format!("unsupported expectation version {}", e.version)));
        }
        Ok(e)
    }

    pub fn sym_square_expansion(&self) -> Result<SchurExpansion> {
        self.sym_square.expansion.parse()
    }
}
