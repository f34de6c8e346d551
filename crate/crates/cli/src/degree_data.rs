//! Degree tables shipped with the binary, with their provenance.

use serde::Deserialize;

const RAW: &str = include_str!("../data/degree_tables.json");

#[derive(Debug, Clone, Deserialize)]
pub struct TableEntry {
    pub label: String,
    pub degrees: Vec<u64>,
    pub codegrees: Vec<u64>,
    pub real: bool,
    pub provenance: String,
}

#[derive(Deserialize)]
struct DataFile {
    format_version: u32,
    tables: Vec<TableEntry>,
}

pub fn tables() -> Vec<TableEntry> {
    let file: DataFile = serde_json::from_str(RAW).expect("embedded degree tables parse");
    assert_eq!(file.format_version, 1);
    file.tables
}

pub fn lookup(label: &str) -> Option<TableEntry> {
    tables().into_iter().find(|t| t.label == label)
}
