//! JSON export of a whole scan.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::corpus::{CorpusStats, CoverageField, FileKind, Percent, TypeShare};
use crate::record::{HarvestRecord, ReferenceDate};

#[derive(Serialize)]
struct Totals {
    files: usize,
    records: usize,
}

#[derive(Serialize)]
struct Report<'a> {
    reference_date: ReferenceDate,
    totals: Totals,
    by_type: &'a BTreeMap<FileKind, TypeShare>,
    field_coverage: &'a BTreeMap<CoverageField, Percent>,
    records: &'a [HarvestRecord],
    warnings: &'a [String],
}

/// Pretty-printed JSON object; absent fields are `null`.
pub fn export_json(stats: &CorpusStats) -> String {
    let report = Report {
        reference_date: stats.reference_date,
        totals: Totals {
            files: stats.total_files,
            records: stats.records.len(),
        },
        by_type: &stats.by_type,
        field_coverage: &stats.field_coverage,
        records: &stats.records,
        warnings: &stats.warnings,
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    out
}

/// One record as a pretty-printed JSON object.
pub fn export_record_json(record: &HarvestRecord) -> String {
    let mut out = serde_json::to_string_pretty(record).expect("record serializes");
    out.push('\n');
    out
}
