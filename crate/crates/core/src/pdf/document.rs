//! Document loading: header, cross-reference resolution (with reconstruction
//! fallback), object streams, and the document-level entry points.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use super::filters;
use super::lexer::Lexer;
use super::object::{dict_type, Dictionary, ObjectId, PdfObject, PdfStream};
use super::xref::{read_xref_chain, scan_object_markers, scan_trailers, XrefEntry, XrefTable};
use crate::bytes::find;
use crate::error::{Error, Result};

/// Maximum number of reference hops followed by [`RawDocument::resolve`].
pub const MAX_RESOLVE_DEPTH: usize = 32;

/// How far into the file the `%PDF-` header may appear.
pub const HEADER_WINDOW: usize = 1024;

const INFO_KEYS: [&str; 8] = [
    "Title",
    "Author",
    "Subject",
    "Keywords",
    "Creator",
    "Producer",
    "CreationDate",
    "ModDate",
];

static NULL: PdfObject = PdfObject::Null;

/// A parsed, immutable PDF file.
///
/// All indirect objects are parsed during [`load_document`]; streams keep
/// their raw bytes and are decoded on demand with [`RawDocument::decode_stream`].
#[derive(Debug, Clone)]
pub struct RawDocument {
    path: PathBuf,
    file_size: u64,
    version: Option<String>,
    xref: XrefTable,
    objects: BTreeMap<u32, (u16, PdfObject)>,
    data: Vec<u8>,
    reconstructed: bool,
    warnings: Vec<String>,
}

/// Reads and parses the PDF at `path`.
pub fn load_document(path: impl AsRef<Path>) -> Result<RawDocument> {
    let path = path.as_ref();
    let meta = match fs::metadata(path) {
        Ok(meta) => meta,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::NotAFile(path.to_owned()))
        }
        Err(e) => return Err(Error::io(path, e)),
    };
    if !meta.is_file() {
        return Err(Error::NotAFile(path.to_owned()));
    }
    let data = fs::read(path).map_err(|e| Error::io(path, e))?;
    RawDocument::from_bytes(path, data)
}

/// Position of `%PDF-` within the header window.
pub fn header_offset(data: &[u8]) -> Option<usize> {
    find(&data[..data.len().min(HEADER_WINDOW)], b"%PDF-")
}

impl RawDocument {
    /// Parses an in-memory PDF. `path` is only used for reporting.
    pub fn from_bytes(path: impl Into<PathBuf>, data: Vec<u8>) -> Result<Self> {
        let path = path.into();
        let mut warnings = Vec::new();
        let header = header_offset(&data);
        let version = header.map(|h| {
            data[h + 5..]
                .iter()
                .take_while(|b| b.is_ascii_digit() || **b == b'.')
                .map(|&b| b as char)
                .collect::<String>()
        });
        if data.is_empty() {
            return Err(Error::NotPdf(path));
        }
        if header.is_none() {
            warnings.push("missing %PDF- header".to_owned());
        }

        let mut reconstructed = false;
        let mut xref = match read_xref_chain(&data) {
            Ok(table) => match check_table(&data, &table) {
                Ok(()) => table,
                Err(problem) => {
                    warnings.push(format!("{problem}; reconstructing cross-reference"));
                    reconstructed = true;
                    let mut rebuilt = reconstruct(&data);
                    // The damaged table's trailer still wins where it has keys.
                    for (k, v) in table.trailer {
                        rebuilt.trailer.insert(k, v);
                    }
                    rebuilt
                }
            },
            Err(e) => {
                warnings.push(format!(
                    "cross-reference unreadable ({e}); reconstructing from object markers"
                ));
                reconstructed = true;
                reconstruct(&data)
            }
        };

        if xref.trailer.contains_key("Encrypt") {
            return Err(Error::Encrypted);
        }

        let objects = load_objects(&data, &xref, &mut warnings);
        if objects.is_empty() {
            return Err(if header.is_none() {
                Error::NotPdf(path)
            } else {
                Error::UnrecoverablyCorrupt("no objects found".into())
            });
        }

        let positions = positions(&xref);
        if xref.root().is_none() {
            match last_matching(&objects, &positions, |d| dict_type(d) == Some("Catalog")) {
                Some(id) => {
                    xref.trailer.insert("Root".into(), PdfObject::Reference(id));
                }
                None => warnings.push("no document catalog found".into()),
            }
        }
        if !xref.trailer.contains_key("Info") {
            if let Some(id) = last_matching(&objects, &positions, looks_like_info) {
                if reconstructed {
                    xref.trailer.insert("Info".into(), PdfObject::Reference(id));
                }
            }
        }
        let needed = objects.keys().next_back().map_or(0, |n| i64::from(*n) + 1);
        match xref.trailer.get("Size").and_then(PdfObject::as_integer) {
            Some(size) if size >= needed => {}
            Some(size) => {
                warnings.push(format!("trailer /Size {size} below highest object number"));
                xref.trailer
                    .insert("Size".into(), PdfObject::Integer(needed));
            }
            None => {
                xref.trailer
                    .insert("Size".into(), PdfObject::Integer(needed));
            }
        }

        Ok(RawDocument {
            path,
            file_size: data.len() as u64,
            version,
            xref,
            objects,
            data,
            reconstructed,
            warnings,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn file_size(&self) -> u64 {
        self.file_size
    }

    /// Version from the `%PDF-x.y` header, when there is one.
    pub fn version(&self) -> Option<&str> {
        self.version.as_deref()
    }

    pub fn xref(&self) -> &XrefTable {
        &self.xref
    }

    pub fn trailer(&self) -> &Dictionary {
        &self.xref.trailer
    }

    /// True when the cross-reference data had to be rebuilt by scanning.
    pub fn was_reconstructed(&self) -> bool {
        self.reconstructed
    }

    /// Problems noticed while loading.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The raw file bytes.
    pub fn bytes(&self) -> &[u8] {
        &self.data
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = (ObjectId, &PdfObject)> {
        self.objects
            .iter()
            .map(|(&n, (g, o))| (ObjectId::new(n, *g), o))
    }

    /// Looks up an indirect object by number. Generation mismatches are
    /// tolerated.
    pub fn get(&self, id: ObjectId) -> Option<&PdfObject> {
        self.objects.get(&id.number).map(|(_, o)| o)
    }

    /// Follows references until a direct object is reached. A reference to a
    /// free or absent object yields `Null`.
    pub fn resolve<'a>(&'a self, obj: &'a PdfObject) -> Result<&'a PdfObject> {
        self.resolve_with(obj, &mut Vec::new())
    }

    /// Like [`resolve`](Self::resolve), recording missing-object warnings.
    pub fn resolve_with<'a>(
        &'a self,
        obj: &'a PdfObject,
        warnings: &mut Vec<String>,
    ) -> Result<&'a PdfObject> {
        let mut current = obj;
        let mut first = None;
        for _ in 0..=MAX_RESOLVE_DEPTH {
            match current {
                PdfObject::Reference(id) => {
                    first.get_or_insert(*id);
                    match self.get(*id) {
                        Some(next) => current = next,
                        None => {
                            warnings.push(format!("{id} points to a free or missing object"));
                            return Ok(&NULL);
                        }
                    }
                }
                direct => return Ok(direct),
            }
        }
        let id = first.unwrap_or(ObjectId::new(0, 0));
        Err(Error::ReferenceCycle(id.number, id.generation))
    }

    /// Resolves `key` in `dict`, treating failures as absent.
    pub fn get_in<'a>(&'a self, dict: &'a Dictionary, key: &str) -> Option<&'a PdfObject> {
        dict.get(key)
            .and_then(|v| self.resolve(v).ok())
            .filter(|v| !v.is_null())
    }

    /// Applies the stream's filter chain.
    pub fn decode_stream(&self, stream: &PdfStream) -> Result<Vec<u8>> {
        filters::decode(&stream.raw, &stream.dict, &|id| self.get(id).cloned())
    }

    /// The document catalog (trailer /Root).
    pub fn catalog(&self) -> Option<&Dictionary> {
        self.get_in(&self.xref.trailer, "Root")
            .and_then(PdfObject::as_dict)
    }

    /// The document information dictionary (trailer /Info).
    pub fn info(&self) -> Option<&Dictionary> {
        self.get_in(&self.xref.trailer, "Info")
            .and_then(PdfObject::as_dict)
    }

    /// Number of pages: the root /Count when usable, else a walk of /Kids.
    /// Never fails; problems become warnings and a count of 0.
    pub fn page_count(&self, warnings: &mut Vec<String>) -> u32 {
        let Some(pages) = self
            .catalog()
            .and_then(|c| self.get_in(c, "Pages"))
            .and_then(PdfObject::as_dict)
        else {
            warnings.push("document has no page tree".into());
            return 0;
        };
        if let Some(count) = self.get_in(pages, "Count").and_then(PdfObject::as_integer) {
            if count >= 0 {
                return u32::try_from(count).unwrap_or(u32::MAX);
            }
        }
        let counted = self.count_leaf_pages(pages);
        if counted == 0 {
            warnings.push("page tree has no /Count and no leaf pages".into());
        }
        counted
    }

    fn count_leaf_pages(&self, root: &Dictionary) -> u32 {
        let mut visited = HashSet::new();
        let mut stack: Vec<&Dictionary> = vec![root];
        let mut count = 0u32;
        while let Some(node) = stack.pop() {
            match self.get_in(node, "Kids").and_then(PdfObject::as_array) {
                Some(kids) => {
                    for kid in kids.iter().rev() {
                        if let PdfObject::Reference(id) = kid {
                            if !visited.insert(id.number) {
                                continue;
                            }
                        }
                        if let Some(d) = self.resolve(kid).ok().and_then(PdfObject::as_dict) {
                            stack.push(d);
                        }
                    }
                }
                None if dict_type(node) == Some("Page") => count = count.saturating_add(1),
                None => {}
            }
        }
        count
    }
}

/// Checks that the table is usable: a Root exists and every in-use entry
/// points at the matching `N G obj` header inside the file.
fn check_table(data: &[u8], table: &XrefTable) -> std::result::Result<(), String> {
    if table.root().is_none() {
        return Err("trailer has no /Root".into());
    }
    for (&num, entry) in &table.entries {
        if let XrefEntry::InUse { offset, .. } = *entry {
            if offset >= data.len() {
                return Err(format!("object {num} offset {offset} is past end of file"));
            }
            match Lexer::new(data, offset).object_header() {
                Some(id) if id.number == num => {}
                _ => return Err(format!("object {num} is not at offset {offset}")),
            }
        }
    }
    Ok(())
}

/// Builds a cross-reference table by scanning for object markers.
fn reconstruct(data: &[u8]) -> XrefTable {
    let markers = scan_object_markers(data);
    let mut last_offset: BTreeMap<u32, usize> = BTreeMap::new();
    for m in &markers {
        last_offset.insert(m.id.number, m.offset);
    }
    let length = |id: ObjectId| integer_at(data, *last_offset.get(&id.number)?);

    let mut table = XrefTable::default();
    // Object number -> file position of its latest definition.
    let mut defined_at: BTreeMap<u32, usize> = BTreeMap::new();
    let mut object_streams = Vec::new();
    let mut xref_stream_dicts = Vec::new();
    let mut cursor = 0;
    for m in &markers {
        if m.offset < cursor {
            // Inside the body of an object parsed earlier.
            continue;
        }
        let mut lexer = Lexer::new(data, m.offset);
        let Ok((id, object)) = lexer.indirect_object(&length) else {
            continue;
        };
        cursor = lexer.pos;
        table.entries.insert(
            id.number,
            XrefEntry::InUse {
                offset: m.offset,
                generation: id.generation,
            },
        );
        defined_at.insert(id.number, m.offset);
        if let PdfObject::Stream(stream) = object {
            match dict_type(&stream.dict) {
                Some("ObjStm") => object_streams.push((id.number, m.offset, stream)),
                Some("XRef") => xref_stream_dicts.push(stream.dict),
                _ => {}
            }
        }
    }

    for (stream_number, position, stream) in object_streams {
        let Ok(decoded) = filters::decode(&stream.raw, &stream.dict, &|_| None) else {
            continue;
        };
        let Some(header) = object_stream_header(&decoded, &stream.dict) else {
            continue;
        };
        for (index, (number, _)) in header.iter().enumerate() {
            let newer = defined_at.get(number).is_none_or(|&at| at < position);
            if newer {
                defined_at.insert(*number, position);
                table.entries.insert(
                    *number,
                    XrefEntry::Compressed {
                        stream: stream_number,
                        index: index as u32,
                    },
                );
            }
        }
    }

    let mut trailer = Dictionary::new();
    for dict in xref_stream_dicts.into_iter().chain(scan_trailers(data)) {
        for key in ["Root", "Info", "Encrypt", "ID"] {
            if let Some(v) = dict.get(key) {
                trailer.insert(key.to_owned(), v.clone());
            }
        }
    }
    table.trailer = trailer;
    table
}

fn integer_at(data: &[u8], offset: usize) -> Option<i64> {
    let mut lexer = Lexer::new(data, offset);
    lexer.object_header()?;
    lexer.object(0).ok()?.as_integer()
}

/// Reads the `number offset` pairs at the start of a decoded object stream.
fn object_stream_header(decoded: &[u8], dict: &Dictionary) -> Option<Vec<(u32, usize)>> {
    let n = dict.get("N")?.as_integer()?;
    let first = usize::try_from(dict.get("First")?.as_integer()?).ok()?;
    let mut lexer = Lexer::new(decoded, 0);
    let mut pairs = Vec::new();
    for _ in 0..n.max(0) {
        let number = u32::try_from(lexer.read_unsigned()?).ok()?;
        let offset = usize::try_from(lexer.read_unsigned()?).ok()?;
        pairs.push((number, first.checked_add(offset)?));
    }
    Some(pairs)
}

/// Parses every in-use object named by the table.
fn load_objects(
    data: &[u8],
    table: &XrefTable,
    warnings: &mut Vec<String>,
) -> BTreeMap<u32, (u16, PdfObject)> {
    let direct_offset = |number: u32| match table.entries.get(&number) {
        Some(XrefEntry::InUse { offset, .. }) => Some(*offset),
        _ => None,
    };
    let length = |id: ObjectId| integer_at(data, direct_offset(id.number)?);

    let mut objects = BTreeMap::new();
    for (&number, entry) in &table.entries {
        let XrefEntry::InUse { offset, .. } = *entry else {
            continue;
        };
        if offset >= data.len() {
            warnings.push(format!("object {number}: offset {offset} past end of file"));
            continue;
        }
        match Lexer::new(data, offset).indirect_object(&length) {
            Ok((id, object)) => {
                objects.insert(number, (id.generation, object));
            }
            Err(e) => warnings.push(format!("object {number}: {e}")),
        }
    }

    // Group compressed entries by their containing stream.
    let mut by_stream: BTreeMap<u32, Vec<(u32, u32)>> = BTreeMap::new();
    for (&number, entry) in &table.entries {
        if let XrefEntry::Compressed { stream, index } = *entry {
            by_stream.entry(stream).or_default().push((number, index));
        }
    }
    for (stream_number, members) in by_stream {
        let Some((_, PdfObject::Stream(stream))) = objects.get(&stream_number) else {
            warnings.push(format!("object stream {stream_number} is missing"));
            continue;
        };
        let decoded = match filters::decode(&stream.raw, &stream.dict, &|id| {
            objects.get(&id.number).map(|(_, o)| o.clone())
        }) {
            Ok(d) => d,
            Err(e) => {
                warnings.push(format!("object stream {stream_number}: {e}"));
                continue;
            }
        };
        let Some(header) = object_stream_header(&decoded, &stream.dict) else {
            warnings.push(format!("object stream {stream_number}: malformed header"));
            continue;
        };
        let mut extracted = Vec::new();
        for (number, index) in members {
            let found = header
                .get(index as usize)
                .filter(|(n, _)| *n == number)
                .or_else(|| header.iter().find(|(n, _)| *n == number));
            let Some(&(_, offset)) = found else {
                warnings.push(format!(
                    "object {number} not in object stream {stream_number}"
                ));
                continue;
            };
            match Lexer::new(&decoded, offset).object(0) {
                Ok(object) => extracted.push((number, object)),
                Err(e) => warnings.push(format!("object {number}: {e}")),
            }
        }
        for (number, object) in extracted {
            objects.insert(number, (0, object));
        }
    }
    objects
}

/// File position of each object, used to prefer the latest definition.
fn positions(table: &XrefTable) -> BTreeMap<u32, usize> {
    table
        .entries
        .iter()
        .filter_map(|(&n, e)| match *e {
            XrefEntry::InUse { offset, .. } => Some((n, offset)),
            _ => None,
        })
        .chain(table.entries.iter().filter_map(|(&n, e)| match *e {
            XrefEntry::Compressed { stream, index } => {
                let base = match table.entries.get(&stream) {
                    Some(XrefEntry::InUse { offset, .. }) => *offset,
                    _ => 0,
                };
                Some((n, base + index as usize))
            }
            _ => None,
        }))
        .collect()
}

fn last_matching(
    objects: &BTreeMap<u32, (u16, PdfObject)>,
    positions: &BTreeMap<u32, usize>,
    predicate: impl Fn(&Dictionary) -> bool,
) -> Option<ObjectId> {
    objects
        .iter()
        .filter_map(|(&n, (g, o))| match o {
            PdfObject::Dictionary(d) if predicate(d) => Some((n, *g)),
            _ => None,
        })
        .max_by_key(|(n, _)| (positions.get(n).copied().unwrap_or(0), *n))
        .map(|(n, g)| ObjectId::new(n, g))
}

/// An untyped dictionary carrying at least one document-information string.
fn looks_like_info(dict: &Dictionary) -> bool {
    let structural = ["Type", "Subtype", "Parent", "Kids", "Pages", "Filter"];
    !structural.iter().any(|k| dict.contains_key(*k))
        && INFO_KEYS
            .iter()
            .any(|k| matches!(dict.get(*k), Some(PdfObject::String(_))))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Builds a classic-xref PDF from object bodies, computing offsets.
    pub(crate) fn build_pdf(bodies: &[&str], trailer: &str) -> Vec<u8> {
        let mut out = b"%PDF-1.4\n".to_vec();
        let mut offsets = Vec::new();
        for (i, body) in bodies.iter().enumerate() {
            offsets.push(out.len());
            out.extend_from_slice(format!("{} 0 obj\n{}\nendobj\n", i + 1, body).as_bytes());
        }
        let xref_at = out.len();
        out.extend_from_slice(
            format!("xref\n0 {}\n0000000000 65535 f \n", bodies.len() + 1).as_bytes(),
        );
        for off in offsets {
            out.extend_from_slice(format!("{off:010} 00000 n \n").as_bytes());
        }
        out.extend_from_slice(
            format!(
                "trailer\n<< /Size {} {trailer} >>\nstartxref\n{xref_at}\n%%EOF\n",
                bodies.len() + 1
            )
            .as_bytes(),
        );
        out
    }

    fn minimal() -> Vec<u8> {
        build_pdf(
            &[
                "<< /Type /Catalog /Pages 2 0 R >>",
                "<< /Type /Pages /Kids [3 0 R] /Count 1 >>",
                "<< /Type /Page /Parent 2 0 R >>",
                "<< /Title (T) /Author (A) >>",
            ],
            "/Root 1 0 R /Info 4 0 R",
        )
    }

    #[test]
    fn loads_minimal_document() {
        let doc = RawDocument::from_bytes("m.pdf", minimal()).unwrap();
        assert_eq!(doc.version(), Some("1.4"));
        assert_eq!(doc.object_count(), 4);
        assert!(!doc.was_reconstructed());
        assert_eq!(doc.page_count(&mut Vec::new()), 1);
        let root = PdfObject::Reference(ObjectId::new(1, 0));
        let cat = doc.resolve(&root).unwrap();
        assert_eq!(dict_type(cat.as_dict().unwrap()), Some("Catalog"));
    }

    #[test]
    fn resolve_is_identity_on_direct_objects() {
        let doc = RawDocument::from_bytes("m.pdf", minimal()).unwrap();
        let n = PdfObject::Integer(42);
        assert_eq!(doc.resolve(&n).unwrap(), &PdfObject::Integer(42));
    }

    #[test]
    fn resolve_missing_yields_null_with_warning() {
        let doc = RawDocument::from_bytes("m.pdf", minimal()).unwrap();
        let mut w = Vec::new();
        let r = PdfObject::Reference(ObjectId::new(99, 0));
        assert!(doc.resolve_with(&r, &mut w).unwrap().is_null());
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn reference_cycle_detected() {
        let pdf = build_pdf(&["<< /Type /Catalog >>", "3 0 R", "2 0 R"], "/Root 1 0 R");
        let doc = RawDocument::from_bytes("c.pdf", pdf).unwrap();
        let r = PdfObject::Reference(ObjectId::new(2, 0));
        assert!(matches!(doc.resolve(&r), Err(Error::ReferenceCycle(2, 0))));
    }

    #[test]
    fn kids_walk_when_count_missing() {
        let pdf = build_pdf(
            &[
                "<< /Type /Catalog /Pages 2 0 R >>",
                "<< /Type /Pages /Kids [3 0 R 4 0 R] >>",
                "<< /Type /Page /Parent 2 0 R >>",
                "<< /Type /Pages /Parent 2 0 R /Kids [5 0 R 6 0 R 2 0 R] >>",
                "<< /Type /Page /Parent 4 0 R >>",
                "<< /Type /Page /Parent 4 0 R >>",
            ],
            "/Root 1 0 R",
        );
        let doc = RawDocument::from_bytes("k.pdf", pdf).unwrap();
        assert_eq!(doc.page_count(&mut Vec::new()), 3);
    }

    #[test]
    fn no_pages_is_zero_with_warning() {
        let pdf = build_pdf(&["<< /Type /Catalog >>"], "/Root 1 0 R");
        let doc = RawDocument::from_bytes("n.pdf", pdf).unwrap();
        let mut w = Vec::new();
        assert_eq!(doc.page_count(&mut w), 0);
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn encrypted_is_signalled() {
        let pdf = build_pdf(
            &["<< /Type /Catalog >>", "<< /Filter /Standard /V 1 >>"],
            "/Root 1 0 R /Encrypt 2 0 R",
        );
        assert!(matches!(
            RawDocument::from_bytes("e.pdf", pdf),
            Err(Error::Encrypted)
        ));
    }

    #[test]
    fn empty_and_non_pdf_inputs() {
        assert!(matches!(
            RawDocument::from_bytes("z.pdf", Vec::new()),
            Err(Error::NotPdf(_))
        ));
        assert!(matches!(
            RawDocument::from_bytes("t.txt", b"just some text\n".to_vec()),
            Err(Error::NotPdf(_))
        ));
        assert!(matches!(
            RawDocument::from_bytes("h.pdf", b"%PDF-1.4\n%%EOF\n".to_vec()),
            Err(Error::UnrecoverablyCorrupt(_))
        ));
    }

    #[test]
    fn startxref_past_eof_reconstructs() {
        let mut pdf = minimal();
        let at = crate::bytes::rfind(&pdf, b"startxref").unwrap();
        pdf.truncate(at);
        pdf.extend_from_slice(b"startxref\n999999\n%%EOF\n");
        let doc = RawDocument::from_bytes("r.pdf", pdf).unwrap();
        assert!(doc.was_reconstructed());
        let info = doc.info().unwrap();
        assert_eq!(info.get("Title").unwrap().as_string().unwrap().bytes, b"T");
    }

    #[test]
    fn missing_trailer_recovers_info_heuristically() {
        let mut pdf = minimal();
        let at = find(&pdf, b"xref").unwrap();
        pdf.truncate(at);
        let doc = RawDocument::from_bytes("x.pdf", pdf).unwrap();
        assert!(doc.was_reconstructed());
        assert_eq!(doc.page_count(&mut Vec::new()), 1);
        let info = doc.info().unwrap();
        assert_eq!(info.get("Author").unwrap().as_string().unwrap().bytes, b"A");
    }

    #[test]
    fn incremental_update_shadows_older_objects() {
        let mut pdf = minimal();
        let first_xref = find(&pdf, b"\nxref\n").unwrap() + 1;
        let new_obj_at = pdf.len();
        pdf.extend_from_slice(b"4 0 obj\n<< /Title (Updated) >>\nendobj\n");
        let xref_at = pdf.len();
        pdf.extend_from_slice(
            format!(
                "xref\n4 1\n{new_obj_at:010} 00000 n \ntrailer\n<< /Size 5 /Root 1 0 R /Info 4 0 R /Prev {first_xref} >>\nstartxref\n{xref_at}\n%%EOF\n"
            )
            .as_bytes(),
        );
        let doc = RawDocument::from_bytes("u.pdf", pdf).unwrap();
        assert!(!doc.was_reconstructed());
        let info = doc.info().unwrap();
        assert_eq!(
            info.get("Title").unwrap().as_string().unwrap().bytes,
            b"Updated"
        );
        assert_eq!(doc.page_count(&mut Vec::new()), 1);
    }

    #[test]
    fn missing_file_is_not_a_file() {
        assert!(matches!(
            load_document("/nonexistent/definitely/missing.pdf"),
            Err(Error::NotAFile(_))
        ));
        assert!(matches!(load_document("/"), Err(Error::NotAFile(_))));
    }
}
