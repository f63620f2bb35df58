//! JSON-lines report emission.
//!
//! Records are collected with an explicit sort key and emitted in sorted
//! order with the summary last, so output bytes are identical across runs
//! and worker counts for a fixed configuration and seed.

use serde_json::Value;
use std::io::Write;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug)]
pub struct Report {
    op: String,
    records: Vec<(Vec<i64>, Value)>,
    violations: usize,
}

impl Report {
    pub fn new(op: &str) -> Report {
        Report { op: op.to_string(), records: Vec::new(), violations: 0 }
    }

    pub fn op(&self) -> &str {
        &self.op
    }

    /// Add a record with its canonical sort key.
    pub fn push(&mut self, key: Vec<i64>, mut record: Value) {
        record["format_version"] = FORMAT_VERSION.into();
        record["op"] = self.op.clone().into();
        self.records.push((key, record));
    }

    pub fn add_violations(&mut self, n: usize) {
        self.violations += n;
    }

    pub fn violations(&self) -> usize {
        self.violations
    }

    pub fn merge(&mut self, other: Report) {
        assert_eq!(self.op, other.op);
        self.records.extend(other.records);
        self.violations += other.violations;
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Emit records sorted by key, then the summary record.
    pub fn emit(mut self, mut summary: Value, out: &mut impl Write) -> std::io::Result<usize> {
        self.records.sort_by(|a, b| a.0.cmp(&b.0));
        for (_, rec) in &self.records {
            writeln!(out, "{rec}")?;
        }
        summary["format_version"] = FORMAT_VERSION.into();
        summary["op"] = self.op.clone().into();
        summary["kind"] = "summary".into();
        summary["records"] = (self.records.len() as u64).into();
        summary["violations"] = (self.violations as u64).into();
        writeln!(out, "{summary}")?;
        Ok(self.violations)
    }
}
