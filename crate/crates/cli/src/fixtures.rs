//! Expected-value fixtures for the verification tables.
//!
//! The decimal strings live in `data/tables.json` (embedded at build time) so
//! giant norms stay reviewable; `QM_FIXTURES` overrides the path at runtime.

use serde::Deserialize;

const EMBEDDED: &str = include_str!("../data/tables.json");

/// Environment variable naming an alternative fixture file.
pub const FIXTURES_ENV: &str = "QM_FIXTURES";

#[derive(Debug, Clone, Deserialize)]
pub struct Fixtures {
    pub table1: Table1,
    pub table2: UnitTable,
    pub table3: NormTable,
    pub table4: UnitTable,
    pub table5: NormTable,
    pub table6: NormTable,
    pub table7: Table7,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table1 {
    pub d: u64,
    pub alpha: String,
    pub rows: Vec<ElementRow>,
    pub giant_norms: Vec<NormRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ElementRow {
    pub p: u64,
    pub m: String,
    pub norm: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct NormRow {
    pub p: u64,
    pub norm: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct UnitTable {
    pub unit_norm: i8,
    pub rows: Vec<UnitRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct UnitRow {
    pub d: u64,
    pub u: String,
    pub alpha: String,
    pub alpha_norm: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct NormTable {
    pub d: u64,
    pub rows: Vec<NormRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table7 {
    pub rows: Vec<RepresentationRow>,
    pub giant_rows: Vec<RepresentationRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RepresentationRow {
    pub p: u64,
    pub norm: String,
    pub x: String,
    pub y: String,
}

/// Loads the fixture set, honoring the `QM_FIXTURES` override.
pub fn load() -> Result<Fixtures, String> {
    let text = match std::env::var(FIXTURES_ENV) {
        Ok(path) => std::fs::read_to_string(&path)
            .map_err(|e| format!("cannot read {FIXTURES_ENV}={path}: {e}"))?,
        Err(_) => EMBEDDED.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| format!("fixture file is not valid: {e}"))
}
