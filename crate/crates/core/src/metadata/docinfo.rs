//! The document-information dictionary (trailer /Info).

use serde::Serialize;

use super::date::{parse_pdf_date, PdfDate};
use crate::pdf::{Dictionary, PdfObject, RawDocument};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DocInfoRecord {
    pub title: Option<String>,
    pub author: Option<String>,
    pub subject: Option<String>,
    pub keywords: Option<String>,
    pub creator_tool: Option<String>,
    pub producer: Option<String>,
    pub creation_date: Option<PdfDate>,
    pub mod_date: Option<PdfDate>,
}

impl DocInfoRecord {
    pub fn is_empty(&self) -> bool {
        *self == DocInfoRecord::default()
    }
}

/// Trims ASCII whitespace (and stray NULs); empty text becomes absent.
pub(crate) fn normalize_text(text: &str) -> Option<String> {
    let t = text.trim_matches(|c: char| c.is_ascii_whitespace() || c == '\0');
    (!t.is_empty()).then(|| t.to_owned())
}

/// Reads the trailer /Info dictionary. Malformed values become absent with a
/// warning; a missing dictionary yields an all-absent record.
pub fn extract_docinfo(doc: &RawDocument, warnings: &mut Vec<String>) -> DocInfoRecord {
    let Some(info) = doc.info() else {
        return DocInfoRecord::default();
    };
    let text = |key: &str, warnings: &mut Vec<String>| text_entry(doc, info, key, warnings);
    let date = |key: &str, warnings: &mut Vec<String>| {
        let raw = text_entry(doc, info, key, warnings)?;
        match parse_pdf_date(&raw) {
            Ok(d) => Some(d),
            Err(e) => {
                warnings.push(format!("/Info /{key}: {e}"));
                None
            }
        }
    };
    DocInfoRecord {
        title: text("Title", warnings),
        author: text("Author", warnings),
        subject: text("Subject", warnings),
        keywords: text("Keywords", warnings),
        creator_tool: text("Creator", warnings),
        producer: text("Producer", warnings),
        creation_date: date("CreationDate", warnings),
        mod_date: date("ModDate", warnings),
    }
}

fn text_entry(
    doc: &RawDocument,
    info: &Dictionary,
    key: &str,
    warnings: &mut Vec<String>,
) -> Option<String> {
    let value = info.get(key)?;
    let value = match doc.resolve_with(value, warnings) {
        Ok(v) => v,
        Err(e) => {
            warnings.push(format!("/Info /{key}: {e}"));
            return None;
        }
    };
    match value {
        PdfObject::String(s) => normalize_text(&s.to_text()),
        PdfObject::Name(n) => normalize_text(n),
        PdfObject::Null => None,
        other => {
            warnings.push(format!(
                "/Info /{key} is a {}, expected a string",
                other.kind()
            ));
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc_with_info(info: &str) -> RawDocument {
        let body = format!(
            "%PDF-1.4\n1 0 obj << /Type /Catalog >> endobj\n2 0 obj {info} endobj\ntrailer << /Root 1 0 R /Info 2 0 R >>\n"
        );
        RawDocument::from_bytes("t.pdf", body.into_bytes()).unwrap()
    }

    #[test]
    fn maps_all_keys() {
        let doc = doc_with_info(
            "<< /Title (T) /Author (A) /Subject (S) /Keywords (k1; k2) /Creator (LaTeX) /Producer (pdfTeX) /CreationDate (D:20100102) /ModDate (D:2011) >>",
        );
        let mut w = Vec::new();
        let r = extract_docinfo(&doc, &mut w);
        assert_eq!(r.title.as_deref(), Some("T"));
        assert_eq!(r.author.as_deref(), Some("A"));
        assert_eq!(r.subject.as_deref(), Some("S"));
        assert_eq!(r.keywords.as_deref(), Some("k1; k2"));
        assert_eq!(r.creator_tool.as_deref(), Some("LaTeX"));
        assert_eq!(r.producer.as_deref(), Some("pdfTeX"));
        assert_eq!(r.creation_date, Some(PdfDate::ymd(2010, 1, 2)));
        assert_eq!(r.mod_date, Some(PdfDate::ymd(2011, 1, 1)));
        assert!(w.is_empty());
    }

    #[test]
    fn utf16_author() {
        let doc = doc_with_info("<< /Author <FEFF004D00FC006C006C00650072> >>");
        let r = extract_docinfo(&doc, &mut Vec::new());
        assert_eq!(r.author.as_deref(), Some("Müller"));
    }

    #[test]
    fn empty_and_malformed_values_are_absent() {
        let doc = doc_with_info("<< /Title (   ) /Author 42 /CreationDate (yesterday) >>");
        let mut w = Vec::new();
        let r = extract_docinfo(&doc, &mut w);
        assert!(r.is_empty());
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn no_info_dictionary() {
        let body = b"%PDF-1.4\n1 0 obj << /Type /Catalog >> endobj\ntrailer << /Root 1 0 R >>\n";
        let doc = RawDocument::from_bytes("t.pdf", body.to_vec()).unwrap();
        assert!(extract_docinfo(&doc, &mut Vec::new()).is_empty());
    }
}
