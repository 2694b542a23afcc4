//! Per-article harvest records: merged metadata plus filesystem fields, the
//! derived year and its recency.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::SystemTime;

use chrono::{DateTime, Datelike, Local, NaiveDate, Utc};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::metadata::{
    extract_docinfo, locate_xmp, merge, parse_xmp, to_dublin_core, FieldSource, MergedMetadata,
    PdfDate, XmpPacket,
};
use crate::pdf::load_document;

/// The date recency is measured against. One value is shared by every record
/// of a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReferenceDate(NaiveDate);

impl ReferenceDate {
    pub fn new(date: NaiveDate) -> Self {
        ReferenceDate(date)
    }

    /// Today in local time.
    pub fn today() -> Self {
        ReferenceDate(Local::now().date_naive())
    }

    /// January 1st of `year`.
    pub fn from_year(year: i32) -> Option<Self> {
        NaiveDate::from_ymd_opt(year, 1, 1).map(ReferenceDate)
    }

    pub fn date(&self) -> NaiveDate {
        self.0
    }

    pub fn year(&self) -> i32 {
        self.0.year()
    }
}

impl Default for ReferenceDate {
    fn default() -> Self {
        Self::today()
    }
}

impl fmt::Display for ReferenceDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.format("%Y-%m-%d"))
    }
}

impl Serialize for ReferenceDate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts `YYYY-MM-DD` or a bare four-digit `YYYY`.
impl FromStr for ReferenceDate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() == 4 && s.bytes().all(|b| b.is_ascii_digit()) {
            return s
                .parse()
                .ok()
                .and_then(Self::from_year)
                .ok_or_else(|| Error::UnparseableDate(s.to_owned()));
        }
        NaiveDate::parse_from_str(s, "%Y-%m-%d")
            .ok()
            .filter(|d| (0..=9999).contains(&d.year()) && s.len() == 10)
            .map(ReferenceDate)
            .ok_or_else(|| Error::UnparseableDate(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum YearSource {
    XmpCreateDate,
    DocInfoCreationDate,
    FilesystemMtime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarvestRecord {
    /// 1-based position in scan order.
    pub doc_index: usize,
    pub file_name: String,
    /// Absolute path of the containing directory.
    pub file_location: String,
    pub file_size: u64,
    pub file_pages: u32,
    pub year: i32,
    pub recency: u32,
    pub author: Option<String>,
    pub title: Option<String>,
    pub keywords: Option<String>,
    pub creation_date: Option<PdfDate>,
    pub year_source: YearSource,
    pub encrypted: bool,
    pub warnings: Vec<String>,
}

/// Year of the XMP creation date, else of the DocInfo creation date, else of
/// the file's modification time.
pub fn derive_year(meta: &MergedMetadata, fs_mtime: DateTime<Utc>) -> (i32, YearSource) {
    match (meta.creation_date, meta.sources.creation_date) {
        (Some(d), FieldSource::Xmp) => (d.year, YearSource::XmpCreateDate),
        (Some(d), _) => (d.year, YearSource::DocInfoCreationDate),
        (None, _) => (fs_mtime.year(), YearSource::FilesystemMtime),
    }
}

/// Whole years between `year` and the reference year. A year after the
/// reference clamps to 0 with a warning.
pub fn compute_recency(year: i32, reference: ReferenceDate, warnings: &mut Vec<String>) -> u32 {
    let diff = i64::from(reference.year()) - i64::from(year);
    if diff < 0 {
        warnings.push(format!(
            "year {year} is after reference year {}; recency clamped to 0",
            reference.year()
        ));
        0
    } else {
        u32::try_from(diff).unwrap_or(u32::MAX)
    }
}

struct Harvested {
    merged: Option<MergedMetadata>,
    pages: u32,
    encrypted: bool,
}

fn harvest_document(path: &Path, warnings: &mut Vec<String>) -> Harvested {
    let doc = match load_document(path) {
        Ok(doc) => doc,
        Err(Error::Encrypted) => {
            warnings.push("document is encrypted; metadata not read".into());
            return Harvested {
                merged: None,
                pages: 0,
                encrypted: true,
            };
        }
        Err(e) => {
            warnings.push(e.to_string());
            return Harvested {
                merged: None,
                pages: 0,
                encrypted: false,
            };
        }
    };
    warnings.extend(doc.warnings().iter().cloned());

    let info = extract_docinfo(&doc, warnings);
    let packet = match locate_xmp(&doc, warnings) {
        Some(raw) => {
            let packet = parse_xmp(&raw.bytes);
            warnings.extend(packet.warnings.iter().cloned());
            packet
        }
        None => XmpPacket::empty(),
    };
    let dc = to_dublin_core(&packet);
    let merged = merge(&dc, &packet, &info, warnings);
    let pages = doc.page_count(warnings);
    Harvested {
        merged: Some(merged),
        pages,
        encrypted: false,
    }
}

/// Harvests one PDF. Parse failures degrade to filesystem-only fields plus
/// warnings; only a file that cannot be stat'ed is an error.
pub fn build_record(
    path: impl AsRef<Path>,
    doc_index: usize,
    reference: ReferenceDate,
) -> Result<HarvestRecord> {
    let path = path.as_ref();
    let meta = fs::metadata(path).map_err(|e| Error::io(path, e))?;
    let mtime: DateTime<Utc> = meta.modified().unwrap_or(SystemTime::UNIX_EPOCH).into();
    let absolute = std::path::absolute(path).map_err(|e| Error::io(path, e))?;

    let mut warnings = Vec::new();
    let harvested = harvest_document(path, &mut warnings);
    let merged = harvested.merged.unwrap_or_else(|| {
        merge(
            &Default::default(),
            &XmpPacket::empty(),
            &Default::default(),
            &mut Vec::new(),
        )
    });
    let (year, year_source) = derive_year(&merged, mtime);
    let recency = compute_recency(year, reference, &mut warnings);

    Ok(HarvestRecord {
        doc_index,
        file_name: absolute
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default(),
        file_location: absolute
            .parent()
            .map(|p| p.to_string_lossy().into_owned())
            .unwrap_or_default(),
        file_size: meta.len(),
        file_pages: harvested.pages,
        year,
        recency,
        author: merged.author,
        title: merged.title,
        keywords: merged.keywords,
        creation_date: merged.creation_date,
        year_source,
        encrypted: harvested.encrypted,
        warnings,
    })
}
