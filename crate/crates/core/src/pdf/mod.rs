//! Read-only PDF object model: tokenizer, cross-reference handling, stream
//! filters and the document entry points needed for metadata harvesting.

mod document;
mod filters;
pub mod inflate;
mod lexer;
mod object;
pub mod text;
mod xref;

pub use document::{header_offset, load_document, RawDocument, HEADER_WINDOW, MAX_RESOLVE_DEPTH};
pub use object::{Dictionary, ObjectId, PdfObject, PdfStream, PdfString, StringFormat};
pub use xref::{XrefEntry, XrefTable};

use crate::error::Result;

/// Decodes a stream through its /Filter chain.
pub fn decode_stream(doc: &RawDocument, stream: &PdfStream) -> Result<Vec<u8>> {
    doc.decode_stream(stream)
}

/// Resolves indirect references. See [`RawDocument::resolve`].
pub fn resolve<'a>(doc: &'a RawDocument, obj: &'a PdfObject) -> Result<&'a PdfObject> {
    doc.resolve(obj)
}

/// Page count with warnings appended to `warnings`.
pub fn page_count(doc: &RawDocument, warnings: &mut Vec<String>) -> u32 {
    doc.page_count(warnings)
}
