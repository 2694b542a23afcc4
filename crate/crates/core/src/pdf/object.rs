//! The PDF object model.

use std::collections::BTreeMap;
use std::fmt;

use super::text::decode_text_string;

/// An indirect object identifier: object number and generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectId {
    pub number: u32,
    pub generation: u16,
}

impl ObjectId {
    pub fn new(number: u32, generation: u16) -> Self {
        ObjectId { number, generation }
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} R", self.number, self.generation)
    }
}

/// Whether a string was written as `( ... )` or `< ... >` in the source.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StringFormat {
    Literal,
    Hex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdfString {
    pub bytes: Vec<u8>,
    pub format: StringFormat,
}

impl PdfString {
    pub fn literal(bytes: impl Into<Vec<u8>>) -> Self {
        PdfString {
            bytes: bytes.into(),
            format: StringFormat::Literal,
        }
    }

    pub fn hex(bytes: impl Into<Vec<u8>>) -> Self {
        PdfString {
            bytes: bytes.into(),
            format: StringFormat::Hex,
        }
    }

    /// Decodes the string as a PDF text string (UTF-16BE with BOM, UTF-8 with
    /// BOM, or PDFDocEncoding).
    pub fn to_text(&self) -> String {
        decode_text_string(&self.bytes)
    }
}

pub type Dictionary = BTreeMap<String, PdfObject>;

/// A stream object. `raw` holds the bytes exactly as stored in the file;
/// use [`decode_stream`](super::decode_stream) to apply the filter chain.
#[derive(Debug, Clone, PartialEq)]
pub struct PdfStream {
    pub dict: Dictionary,
    pub raw: Vec<u8>,
}

impl PdfStream {
    pub fn new(mut dict: Dictionary, raw: Vec<u8>) -> Self {
        dict.insert("Length".to_owned(), PdfObject::Integer(raw.len() as i64));
        PdfStream { dict, raw }
    }

    pub fn get(&self, key: &str) -> Option<&PdfObject> {
        self.dict.get(key)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PdfObject {
    Null,
    Boolean(bool),
    Integer(i64),
    Real(f64),
    String(PdfString),
    Name(String),
    Array(Vec<PdfObject>),
    Dictionary(Dictionary),
    Stream(PdfStream),
    Reference(ObjectId),
}

impl PdfObject {
    pub fn is_null(&self) -> bool {
        matches!(self, PdfObject::Null)
    }

    pub fn as_integer(&self) -> Option<i64> {
        match *self {
            PdfObject::Integer(i) => Some(i),
            _ => None,
        }
    }

    /// Integer value, also accepting reals with no fractional part.
    pub fn as_number(&self) -> Option<f64> {
        match *self {
            PdfObject::Integer(i) => Some(i as f64),
            PdfObject::Real(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_name(&self) -> Option<&str> {
        match self {
            PdfObject::Name(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_string(&self) -> Option<&PdfString> {
        match self {
            PdfObject::String(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_array(&self) -> Option<&[PdfObject]> {
        match self {
            PdfObject::Array(a) => Some(a),
            _ => None,
        }
    }

    /// The dictionary of a dictionary or of a stream.
    pub fn as_dict(&self) -> Option<&Dictionary> {
        match self {
            PdfObject::Dictionary(d) => Some(d),
            PdfObject::Stream(s) => Some(&s.dict),
            _ => None,
        }
    }

    pub fn as_stream(&self) -> Option<&PdfStream> {
        match self {
            PdfObject::Stream(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_reference(&self) -> Option<ObjectId> {
        match *self {
            PdfObject::Reference(id) => Some(id),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PdfObject::Null => "null",
            PdfObject::Boolean(_) => "boolean",
            PdfObject::Integer(_) => "integer",
            PdfObject::Real(_) => "real",
            PdfObject::String(_) => "string",
            PdfObject::Name(_) => "name",
            PdfObject::Array(_) => "array",
            PdfObject::Dictionary(_) => "dictionary",
            PdfObject::Stream(_) => "stream",
            PdfObject::Reference(_) => "reference",
        }
    }
}

impl From<PdfString> for PdfObject {
    fn from(s: PdfString) -> Self {
        PdfObject::String(s)
    }
}

impl From<Dictionary> for PdfObject {
    fn from(d: Dictionary) -> Self {
        PdfObject::Dictionary(d)
    }
}

/// Name of the `/Type` entry of a dictionary, if any.
pub(crate) fn dict_type(dict: &Dictionary) -> Option<&str> {
    dict.get("Type").and_then(PdfObject::as_name)
}
