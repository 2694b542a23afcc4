//! Metadata carriers: the document-information dictionary and the XMP packet,
//! the Dublin Core view of XMP, and the merged per-document metadata.

mod date;
mod docinfo;
mod dublin_core;
mod merge;
mod xmp;

pub use date::{parse_pdf_date, parse_xmp_date, PdfDate};
pub use docinfo::{extract_docinfo, DocInfoRecord};
pub use dublin_core::{to_dublin_core, DcElement, DublinCoreRecord};
pub use merge::{
    merge, FieldSource, FieldSources, MergedField, MergedMetadata, AUTHOR_SEPARATOR,
    KEYWORD_SEPARATOR,
};
pub use xmp::{
    locate_xmp, ns, parse_xmp, scan_xpacket, RawXmp, XmpOrigin, XmpPacket, XmpProperty, XmpValue,
};
