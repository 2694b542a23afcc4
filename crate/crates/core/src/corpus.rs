//! Directory scanning, file classification and corpus statistics.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::Read;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::pdf::{header_offset, HEADER_WINDOW};
use crate::record::{build_record, HarvestRecord, ReferenceDate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FileKind {
    #[serde(rename = "pdf")]
    Pdf,
    #[serde(rename = "txt")]
    Text,
    #[serde(rename = "other")]
    Other,
}

impl FileKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FileKind::Pdf => "pdf",
            FileKind::Text => "txt",
            FileKind::Other => "other",
        }
    }
}

impl fmt::Display for FileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassBasis {
    MagicBytes,
    Extension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FileClass {
    pub kind: FileKind,
    pub basis: ClassBasis,
}

fn has_extension(path: &Path, ext: &str) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case(ext))
}

/// Classifies with the magic-byte check enabled.
pub fn classify(path: impl AsRef<Path>) -> Result<FileClass> {
    classify_with(path, true)
}

/// With `magic` on, a file is a PDF iff `%PDF-` occurs in its first 1024
/// bytes; otherwise the extension decides.
pub fn classify_with(path: impl AsRef<Path>, magic: bool) -> Result<FileClass> {
    let path = path.as_ref();
    if magic {
        let mut head = Vec::with_capacity(HEADER_WINDOW);
        File::open(path)
            .and_then(|f| f.take(HEADER_WINDOW as u64).read_to_end(&mut head))
            .map_err(|e| Error::io(path, e))?;
        if header_offset(&head).is_some() {
            return Ok(FileClass {
                kind: FileKind::Pdf,
                basis: ClassBasis::MagicBytes,
            });
        }
    }
    let kind = if !magic && has_extension(path, "pdf") {
        FileKind::Pdf
    } else if has_extension(path, "txt") {
        FileKind::Text
    } else {
        FileKind::Other
    };
    Ok(FileClass {
        kind,
        basis: ClassBasis::Extension,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub recursive: bool,
    pub magic: bool,
    /// Worker threads; `None` sizes the pool to the available CPUs.
    pub workers: Option<NonZeroUsize>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            recursive: true,
            magic: true,
            workers: None,
        }
    }
}

/// A percentage held as an integer count of `10^-decimals` units, so that
/// rounding is exact and display is stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Percent {
    scaled: u64,
    decimals: u32,
}

impl Percent {
    /// `100 * part / whole`, rounded half-up to `decimals` places.
    /// Panics if `whole` is zero.
    pub fn of(part: u64, whole: u64, decimals: u32) -> Self {
        assert!(whole > 0, "percentage of an empty whole");
        let scale = 100 * 10u64.pow(decimals);
        let num = u128::from(part) * u128::from(scale);
        let whole = u128::from(whole);
        let scaled = (2 * num + whole) / (2 * whole);
        Percent {
            scaled: scaled as u64,
            decimals,
        }
    }

    pub fn scaled(&self) -> u64 {
        self.scaled
    }

    pub fn decimals(&self) -> u32 {
        self.decimals
    }

    pub fn as_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Percent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.decimals == 0 {
            return write!(f, "{}", self.scaled);
        }
        let unit = 10u64.pow(self.decimals);
        write!(
            f,
            "{}.{:0width$}",
            self.scaled / unit,
            self.scaled % unit,
            width = self.decimals as usize
        )
    }
}

impl Serialize for Percent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.as_f64())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeShare {
    pub count: usize,
    pub percent: Percent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverageField {
    FileName,
    Year,
    Recency,
    Author,
    Title,
    Keywords,
}

impl CoverageField {
    pub const ALL: [CoverageField; 6] = [
        CoverageField::FileName,
        CoverageField::Year,
        CoverageField::Recency,
        CoverageField::Author,
        CoverageField::Title,
        CoverageField::Keywords,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CoverageField::FileName => "filename",
            CoverageField::Year => "year",
            CoverageField::Recency => "recency",
            CoverageField::Author => "author",
            CoverageField::Title => "title",
            CoverageField::Keywords => "keywords",
        }
    }

    fn present(self, record: &HarvestRecord) -> bool {
        match self {
            CoverageField::FileName => !record.file_name.is_empty(),
            // Always derived.
            CoverageField::Year | CoverageField::Recency => true,
            CoverageField::Author => record.author.is_some(),
            CoverageField::Title => record.title.is_some(),
            CoverageField::Keywords => record.keywords.is_some(),
        }
    }
}

impl fmt::Display for CoverageField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Percent of records carrying each field, to one decimal.
pub fn compute_field_coverage(
    records: &[HarvestRecord],
) -> Result<BTreeMap<CoverageField, Percent>> {
    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    let total = records.len() as u64;
    Ok(CoverageField::ALL
        .into_iter()
        .map(|field| {
            let n = records.iter().filter(|r| field.present(r)).count() as u64;
            (field, Percent::of(n, total, 1))
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusStats {
    pub reference_date: ReferenceDate,
    pub total_files: usize,
    pub by_type: BTreeMap<FileKind, TypeShare>,
    pub field_coverage: BTreeMap<CoverageField, Percent>,
    pub records: Vec<HarvestRecord>,
    /// Problems not attached to any record: unreadable entries and files that
    /// vanished mid-scan.
    pub warnings: Vec<String>,
}

impl CorpusStats {
    pub fn empty(reference_date: ReferenceDate) -> Self {
        CorpusStats {
            reference_date,
            total_files: 0,
            by_type: BTreeMap::new(),
            field_coverage: BTreeMap::new(),
            records: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

fn list_files(root: &Path, recursive: bool, warnings: &mut Vec<String>) -> Vec<PathBuf> {
    let walker = WalkDir::new(root)
        .follow_links(false)
        .min_depth(1)
        .max_depth(if recursive { usize::MAX } else { 1 });
    let mut files = Vec::new();
    for entry in walker {
        match entry {
            Ok(e) if e.file_type().is_file() => files.push(e.into_path()),
            Ok(_) => {}
            Err(e) => warnings.push(e.to_string()),
        }
    }
    files.sort();
    files
}

/// Scans `root`, harvesting every PDF.
///
/// Files are ordered by full path; records carry 1-based indices in that
/// order whatever the worker count.
pub fn scan(
    root: impl AsRef<Path>,
    reference: ReferenceDate,
    options: &ScanOptions,
) -> Result<CorpusStats> {
    let root = root.as_ref();
    if !root.is_dir() {
        return Err(Error::NotADirectory(root.to_owned()));
    }
    let mut stats = CorpusStats::empty(reference);
    let files = list_files(root, options.recursive, &mut stats.warnings);
    if files.is_empty() {
        return Ok(stats);
    }

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = options.workers {
        builder = builder.num_threads(n.get());
    }
    let pool = builder
        .build()
        .map_err(|e| Error::io(root, std::io::Error::other(e)))?;

    let classes: Vec<Result<FileClass>> = pool.install(|| {
        files
            .par_iter()
            .map(|p| classify_with(p, options.magic))
            .collect()
    });

    let mut counts: BTreeMap<FileKind, usize> = BTreeMap::new();
    let mut pdfs = Vec::new();
    for (path, class) in files.iter().zip(classes) {
        let kind = match class {
            Ok(c) => c.kind,
            Err(e) => {
                stats.warnings.push(e.to_string());
                FileKind::Other
            }
        };
        *counts.entry(kind).or_default() += 1;
        if kind == FileKind::Pdf {
            pdfs.push(path);
        } else if options.magic && has_extension(path, "pdf") {
            stats.warnings.push(
                Error::NotPdf(path.to_owned()).to_string() + " (no %PDF- header; counted as other)",
            );
        }
    }

    let results: Vec<Result<HarvestRecord>> = pool.install(|| {
        pdfs.par_iter()
            .enumerate()
            .map(|(i, p)| build_record(p, i + 1, reference))
            .collect()
    });
    for result in results {
        match result {
            Ok(r) => stats.records.push(r),
            Err(e) => stats.warnings.push(e.to_string()),
        }
    }

    stats.total_files = files.len();
    let total = files.len() as u64;
    stats.by_type = counts
        .into_iter()
        .map(|(kind, count)| {
            let percent = Percent::of(count as u64, total, 2);
            (kind, TypeShare { count, percent })
        })
        .collect();
    stats.field_coverage = compute_field_coverage(&stats.records).unwrap_or_default();
    Ok(stats)
}
