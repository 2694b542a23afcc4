//! Cross-reference tables, cross-reference streams, and scan-based
//! reconstruction for files whose index is broken.

use std::collections::{BTreeMap, HashSet};

use super::filters;
use super::lexer::{is_delimiter, is_whitespace, Lexer};
use super::object::{dict_type, Dictionary, ObjectId, PdfObject};
use crate::bytes::{find, rfind};
use crate::error::{Error, Result};

/// Where an object lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XrefEntry {
    Free,
    /// Stored directly in the file at a byte offset.
    InUse {
        offset: usize,
        generation: u16,
    },
    /// Stored inside an object stream.
    Compressed {
        stream: u32,
        index: u32,
    },
}

impl XrefEntry {
    pub fn is_in_use(&self) -> bool {
        !matches!(self, XrefEntry::Free)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct XrefTable {
    pub entries: BTreeMap<u32, XrefEntry>,
    pub trailer: Dictionary,
}

impl XrefTable {
    pub fn root(&self) -> Option<ObjectId> {
        self.trailer.get("Root").and_then(PdfObject::as_reference)
    }

    /// Adds entries from an older section: existing entries shadow them.
    fn absorb_older(&mut self, entries: BTreeMap<u32, XrefEntry>, trailer: Dictionary) {
        for (num, entry) in entries {
            self.entries.entry(num).or_insert(entry);
        }
        for (key, value) in trailer {
            if key != "Prev" && key != "XRefStm" {
                self.trailer.entry(key).or_insert(value);
            }
        }
    }
}

fn no_length(_: ObjectId) -> Option<i64> {
    None
}

fn no_resolve(_: ObjectId) -> Option<PdfObject> {
    None
}

/// Reads the byte offset after the last `startxref` keyword.
pub(crate) fn find_startxref(data: &[u8]) -> Option<usize> {
    let tail_start = data.len().saturating_sub(4096);
    let pos = tail_start + rfind(&data[tail_start..], b"startxref")?;
    let mut lexer = Lexer::new(data, pos + b"startxref".len());
    usize::try_from(lexer.read_unsigned()?).ok()
}

/// Follows `startxref` and the /Prev chain, newest section first.
pub(crate) fn read_xref_chain(data: &[u8]) -> Result<XrefTable> {
    let start = find_startxref(data)
        .ok_or_else(|| Error::UnrecoverablyCorrupt("no startxref pointer".into()))?;
    let mut table = XrefTable::default();
    let mut visited = HashSet::new();
    let mut next = Some(start);
    let mut first = true;
    while let Some(offset) = next.take() {
        if !visited.insert(offset) {
            break;
        }
        if offset >= data.len() {
            return Err(Error::UnrecoverablyCorrupt(format!(
                "xref offset {offset} is past end of file"
            )));
        }
        let (entries, trailer) = read_xref_section(data, offset)?;
        next = trailer
            .get("Prev")
            .and_then(PdfObject::as_integer)
            .and_then(|p| usize::try_from(p).ok());
        let hybrid = trailer
            .get("XRefStm")
            .and_then(PdfObject::as_integer)
            .and_then(|p| usize::try_from(p).ok());
        if first {
            table.entries = entries;
            table.trailer = trailer;
            table.trailer.remove("Prev");
            table.trailer.remove("XRefStm");
            first = false;
        } else {
            table.absorb_older(entries, trailer);
        }
        // Hybrid-reference files: the stream fills gaps left by the table.
        if let Some(stm) = hybrid.filter(|o| visited.insert(*o) && *o < data.len()) {
            if let Ok((stream_entries, _)) = read_xref_section(data, stm) {
                for (num, entry) in stream_entries {
                    let slot = table.entries.entry(num).or_insert(entry);
                    if *slot == XrefEntry::Free {
                        *slot = entry;
                    }
                }
            }
        }
    }
    Ok(table)
}

fn read_xref_section(data: &[u8], offset: usize) -> Result<(BTreeMap<u32, XrefEntry>, Dictionary)> {
    let mut lexer = Lexer::new(data, offset);
    if lexer.eat_keyword(b"xref") {
        read_classic_table(&mut lexer)
    } else {
        let (_, object) = lexer.indirect_object(&no_length)?;
        let stream = object
            .as_stream()
            .filter(|s| dict_type(&s.dict) == Some("XRef") || s.dict.contains_key("W"))
            .ok_or_else(|| {
                Error::UnrecoverablyCorrupt(format!("no xref section at offset {offset}"))
            })?;
        let decoded = filters::decode(&stream.raw, &stream.dict, &no_resolve)?;
        let entries = parse_xref_stream(&decoded, &stream.dict)?;
        let mut trailer = stream.dict.clone();
        for key in ["Length", "Filter", "DecodeParms", "W", "Index", "Type"] {
            trailer.remove(key);
        }
        Ok((entries, trailer))
    }
}

fn read_classic_table(lexer: &mut Lexer<'_>) -> Result<(BTreeMap<u32, XrefEntry>, Dictionary)> {
    let mut entries = BTreeMap::new();
    loop {
        if lexer.eat_keyword(b"trailer") {
            break;
        }
        let (Some(start), Some(count)) = (lexer.read_unsigned(), lexer.read_unsigned()) else {
            return Err(Error::syntax(lexer.pos, "malformed xref subsection header"));
        };
        let mut start = start;
        for i in 0..count {
            let (Some(offset), Some(generation)) = (lexer.read_unsigned(), lexer.read_unsigned())
            else {
                return Err(Error::syntax(lexer.pos, "malformed xref entry"));
            };
            let in_use = if lexer.eat_keyword(b"n") {
                true
            } else if lexer.eat_keyword(b"f") {
                false
            } else {
                return Err(Error::syntax(lexer.pos, "xref entry type must be n or f"));
            };
            // Writers that start the first subsection at 1 with the free head
            // entry are off by one.
            if i == 0 && start == 1 && !in_use && generation == 65535 {
                start = 0;
            }
            let Ok(number) = u32::try_from(start + i) else {
                continue;
            };
            let entry = if in_use {
                XrefEntry::InUse {
                    offset: offset as usize,
                    generation: generation.min(u64::from(u16::MAX)) as u16,
                }
            } else {
                XrefEntry::Free
            };
            entries.entry(number).or_insert(entry);
        }
    }
    match lexer.object(0)? {
        PdfObject::Dictionary(trailer) => Ok((entries, trailer)),
        other => Err(Error::syntax(
            lexer.pos,
            format!("trailer is a {}", other.kind()),
        )),
    }
}

fn parse_xref_stream(decoded: &[u8], dict: &Dictionary) -> Result<BTreeMap<u32, XrefEntry>> {
    let widths: Vec<usize> = dict
        .get("W")
        .and_then(PdfObject::as_array)
        .map(|w| {
            w.iter()
                .map(|x| x.as_integer().unwrap_or(0).clamp(0, 8) as usize)
                .collect()
        })
        .filter(|w: &Vec<usize>| w.len() == 3)
        .ok_or_else(|| Error::UnrecoverablyCorrupt("xref stream without a valid /W".into()))?;
    let row_len: usize = widths.iter().sum();
    if row_len == 0 {
        return Err(Error::UnrecoverablyCorrupt(
            "xref stream row width 0".into(),
        ));
    }
    let size = dict
        .get("Size")
        .and_then(PdfObject::as_integer)
        .unwrap_or(0);
    let index: Vec<(i64, i64)> = match dict.get("Index").and_then(PdfObject::as_array) {
        Some(items) => items
            .chunks(2)
            .filter_map(|pair| Some((pair[0].as_integer()?, pair.get(1)?.as_integer()?)))
            .collect(),
        None => vec![(0, size)],
    };

    let field = |row: &[u8], which: usize| -> u64 {
        let start: usize = widths[..which].iter().sum();
        row[start..start + widths[which]]
            .iter()
            .fold(0u64, |acc, &b| acc << 8 | u64::from(b))
    };

    let mut entries = BTreeMap::new();
    let mut rows = decoded.chunks_exact(row_len);
    for (first, count) in index {
        for i in 0..count.max(0) {
            let Some(row) = rows.next() else {
                return Ok(entries);
            };
            let Ok(number) = u32::try_from(first + i) else {
                continue;
            };
            let kind = if widths[0] == 0 { 1 } else { field(row, 0) };
            let entry = match kind {
                0 => XrefEntry::Free,
                1 => XrefEntry::InUse {
                    offset: field(row, 1) as usize,
                    generation: field(row, 2).min(u64::from(u16::MAX)) as u16,
                },
                2 => XrefEntry::Compressed {
                    stream: field(row, 1) as u32,
                    index: field(row, 2) as u32,
                },
                // Unknown types are treated as null references.
                _ => XrefEntry::Free,
            };
            entries.entry(number).or_insert(entry);
        }
    }
    Ok(entries)
}

/// An `N G obj` marker found by scanning the raw bytes.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ObjectMarker {
    pub id: ObjectId,
    pub offset: usize,
}

/// Finds every plausible `N G obj` marker in file order.
pub(crate) fn scan_object_markers(data: &[u8]) -> Vec<ObjectMarker> {
    let mut markers = Vec::new();
    let mut search = 0;
    while let Some(rel) = find(&data[search..], b"obj") {
        let kw = search + rel;
        search = kw + 3;
        if data
            .get(kw + 3)
            .is_some_and(|&b| !is_whitespace(b) && !is_delimiter(b))
        {
            continue;
        }
        if let Some(marker) = marker_before(data, kw) {
            markers.push(marker);
        }
    }
    markers
}

/// Walks backwards from an `obj` keyword over `<ws> gen <ws> num`.
fn marker_before(data: &[u8], kw: usize) -> Option<ObjectMarker> {
    let mut i = kw;
    let skip_ws = |i: &mut usize| {
        let end = *i;
        while *i > 0 && is_whitespace(data[*i - 1]) {
            *i -= 1;
        }
        *i < end
    };
    let digits = |i: &mut usize| -> Option<u64> {
        let end = *i;
        while *i > 0 && data[*i - 1].is_ascii_digit() && end - *i < 10 {
            *i -= 1;
        }
        if *i == end {
            return None;
        }
        std::str::from_utf8(&data[*i..end]).ok()?.parse().ok()
    };
    if !skip_ws(&mut i) {
        return None;
    }
    let generation = digits(&mut i)?;
    if !skip_ws(&mut i) {
        return None;
    }
    let number = digits(&mut i)?;
    if i > 0 && !is_whitespace(data[i - 1]) && !is_delimiter(data[i - 1]) {
        return None;
    }
    Some(ObjectMarker {
        id: ObjectId::new(u32::try_from(number).ok()?, u16::try_from(generation).ok()?),
        offset: i,
    })
}

/// Parses every `trailer << ... >>` dictionary in the file, oldest first.
pub(crate) fn scan_trailers(data: &[u8]) -> Vec<Dictionary> {
    let mut out = Vec::new();
    let mut search = 0;
    while let Some(rel) = find(&data[search..], b"trailer") {
        let pos = search + rel + b"trailer".len();
        search = pos;
        let mut lexer = Lexer::new(data, pos);
        if let Ok(PdfObject::Dictionary(d)) = lexer.object(0) {
            out.push(d);
        }
    }
    out
}
