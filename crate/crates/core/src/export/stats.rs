//! The corpus summary: file-type shares and field coverage.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::corpus::{CorpusStats, CoverageField, FileKind, Percent, TypeShare};

/// Two aligned blocks: type, count and percent per file type, then coverage
/// per field.
pub fn render_stats(stats: &CorpusStats) -> String {
    let mut out = format!(
        "Reference date: {}\nFiles: {}\nPDF records: {}\n\n",
        stats.reference_date,
        stats.total_files,
        stats.records.len()
    );
    out.push_str(&format!("{:<8}{:>7}{:>10}\n", "Type", "Count", "Percent"));
    for (kind, share) in &stats.by_type {
        out.push_str(&format!(
            "{:<8}{:>7}{:>10}\n",
            kind.as_str(),
            share.count,
            share.percent.to_string()
        ));
    }
    out.push('\n');
    out.push_str(&format!("{:<10}{:>10}\n", "Field", "Coverage"));
    for (field, pct) in &stats.field_coverage {
        out.push_str(&format!("{:<10}{:>10}\n", field.as_str(), pct.to_string()));
    }
    out
}

#[derive(Serialize)]
struct Summary<'a> {
    reference_date: String,
    total_files: usize,
    records: usize,
    by_type: &'a BTreeMap<FileKind, TypeShare>,
    field_coverage: &'a BTreeMap<CoverageField, Percent>,
}

/// The summary as JSON, without the records.
pub fn export_stats_json(stats: &CorpusStats) -> String {
    let summary = Summary {
        reference_date: stats.reference_date.to_string(),
        total_files: stats.total_files,
        records: stats.records.len(),
        by_type: &stats.by_type,
        field_coverage: &stats.field_coverage,
    };
    let mut out = serde_json::to_string_pretty(&summary).expect("summary serializes");
    out.push('\n');
    out
}
