//! Merging the two metadata carriers under XMP-over-DocInfo precedence.

use serde::Serialize;

use super::date::{parse_pdf_date, parse_xmp_date, PdfDate};
use super::docinfo::{normalize_text, DocInfoRecord};
use super::dublin_core::DublinCoreRecord;
use super::xmp::{ns, XmpPacket, XmpValue};

/// Which carrier supplied a merged value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FieldSource {
    Xmp,
    DocInfo,
    Filesystem,
    Absent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MergedField {
    Title,
    Author,
    Subject,
    Keywords,
    CreationDate,
    ModDate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldSources {
    pub title: FieldSource,
    pub author: FieldSource,
    pub subject: FieldSource,
    pub keywords: FieldSource,
    pub creation_date: FieldSource,
    pub mod_date: FieldSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergedMetadata {
    pub title: Option<String>,
    pub author: Option<String>,
    pub subject: Option<String>,
    pub keywords: Option<String>,
    pub creation_date: Option<PdfDate>,
    pub mod_date: Option<PdfDate>,
    pub sources: FieldSources,
}

impl MergedMetadata {
    pub fn source_of(&self, field: MergedField) -> FieldSource {
        match field {
            MergedField::Title => self.sources.title,
            MergedField::Author => self.sources.author,
            MergedField::Subject => self.sources.subject,
            MergedField::Keywords => self.sources.keywords,
            MergedField::CreationDate => self.sources.creation_date,
            MergedField::ModDate => self.sources.mod_date,
        }
    }
}

/// Author separator, matching how harvested author lists are displayed.
pub const AUTHOR_SEPARATOR: &str = ", ";
/// Separator used when dc:subject keywords are flattened.
pub const KEYWORD_SEPARATOR: &str = "; ";

fn pick<T>(xmp: Option<T>, info: Option<T>) -> (Option<T>, FieldSource) {
    match (xmp, info) {
        (Some(v), _) => (Some(v), FieldSource::Xmp),
        (None, Some(v)) => (Some(v), FieldSource::DocInfo),
        (None, None) => (None, FieldSource::Absent),
    }
}

fn joined(value: Option<&XmpValue>, separator: &str) -> Option<String> {
    let items: Vec<String> = value?
        .texts()
        .into_iter()
        .filter_map(normalize_text)
        .collect();
    (!items.is_empty()).then(|| items.join(separator))
}

fn first(value: Option<&XmpValue>) -> Option<String> {
    value?.texts().into_iter().find_map(normalize_text)
}

fn xmp_date(packet: &XmpPacket, name: &str, warnings: &mut Vec<String>) -> Option<PdfDate> {
    let raw = first(packet.get(ns::XMP, name))?;
    match parse_xmp_date(&raw).or_else(|_| parse_pdf_date(&raw)) {
        Ok(d) => Some(d),
        Err(e) => {
            warnings.push(format!("xmp:{name}: {e}"));
            None
        }
    }
}

/// Merges one document's carriers. For every field the XMP value wins when
/// present; DocInfo is the fallback.
pub fn merge(
    dc: &DublinCoreRecord,
    xmp: &XmpPacket,
    info: &DocInfoRecord,
    warnings: &mut Vec<String>,
) -> MergedMetadata {
    let (title, title_src) = pick(first(dc.title.as_ref()), info.title.clone());
    let (author, author_src) = pick(
        joined(dc.creator.as_ref(), AUTHOR_SEPARATOR),
        info.author.clone(),
    );
    let (subject, subject_src) = pick(first(dc.description.as_ref()), info.subject.clone());
    let xmp_keywords = first(xmp.get(ns::PDF, "Keywords"))
        .or_else(|| joined(dc.subject.as_ref(), KEYWORD_SEPARATOR));
    let (keywords, keywords_src) = pick(xmp_keywords, info.keywords.clone());
    let (creation_date, creation_src) =
        pick(xmp_date(xmp, "CreateDate", warnings), info.creation_date);
    let (mod_date, mod_src) = pick(xmp_date(xmp, "ModifyDate", warnings), info.mod_date);

    MergedMetadata {
        title,
        author,
        subject,
        keywords,
        creation_date,
        mod_date,
        sources: FieldSources {
            title: title_src,
            author: author_src,
            subject: subject_src,
            keywords: keywords_src,
            creation_date: creation_src,
            mod_date: mod_src,
        },
    }
}
