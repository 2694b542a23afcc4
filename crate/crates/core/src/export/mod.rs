//! Renderers for harvest results. Every renderer is total: any record list
//! exports without error.

mod bibtex;
mod csv;
mod json;
mod ris;
mod stats;
mod table;

use std::fmt;
use std::str::FromStr;

pub use bibtex::{citation_key, export_bibtex};
pub use csv::{export_csv, CSV_HEADER};
pub use json::{export_json, export_record_json};
pub use ris::export_ris;
pub use stats::{export_stats_json, render_stats};
pub use table::{render_table, AUTHOR_BUDGET, FILE_NAME_BUDGET, TITLE_BUDGET};

use crate::corpus::CorpusStats;
use crate::metadata::AUTHOR_SEPARATOR;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ExportFormat {
    #[default]
    Table,
    Csv,
    Json,
    Ris,
    BibTex,
}

impl ExportFormat {
    pub const ALL: [ExportFormat; 5] = [
        ExportFormat::Table,
        ExportFormat::Csv,
        ExportFormat::Json,
        ExportFormat::Ris,
        ExportFormat::BibTex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExportFormat::Table => "table",
            ExportFormat::Csv => "csv",
            ExportFormat::Json => "json",
            ExportFormat::Ris => "ris",
            ExportFormat::BibTex => "bibtex",
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown format {s:?}"))
    }
}

/// Renders the stats in `format`. JSON covers the whole stats object; the
/// other formats cover the records only.
pub fn render(format: ExportFormat, stats: &CorpusStats) -> String {
    match format {
        ExportFormat::Table => render_table(&stats.records),
        ExportFormat::Csv => export_csv(&stats.records),
        ExportFormat::Json => export_json(stats),
        ExportFormat::Ris => export_ris(&stats.records),
        ExportFormat::BibTex => export_bibtex(&stats.records),
    }
}

/// Splits a merged author string back into people.
pub(crate) fn split_authors(author: &str) -> impl Iterator<Item = &str> {
    author
        .split(AUTHOR_SEPARATOR)
        .map(str::trim)
        .filter(|a| !a.is_empty())
}
