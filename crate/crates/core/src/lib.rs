//! Harvest bibliographic metadata from PDF articles.
//!
//! The crate parses the PDF object structure itself, reads both metadata
//! carriers (the document-information dictionary and the embedded XMP
//! packet), merges them into one record per article, and aggregates a
//! directory of articles into corpus statistics that can be exported as a
//! table, CSV, JSON, RIS or BibTeX.

mod bytes;
pub mod corpus;
pub mod error;
pub mod export;
pub mod metadata;
pub mod pdf;
pub mod record;

pub use corpus::{
    classify, classify_with, compute_field_coverage, scan, ClassBasis, CorpusStats, CoverageField,
    FileClass, FileKind, Percent, ScanOptions, TypeShare,
};
pub use error::{Error, Result};
pub use export::{
    export_bibtex, export_csv, export_json, export_ris, render, render_table, ExportFormat,
};
pub use metadata::{
    DcElement, DocInfoRecord, DublinCoreRecord, FieldSource, MergedMetadata, PdfDate, XmpPacket,
};
pub use pdf::{load_document, PdfObject, RawDocument};
pub use record::{
    build_record, compute_recency, derive_year, HarvestRecord, ReferenceDate, YearSource,
};
