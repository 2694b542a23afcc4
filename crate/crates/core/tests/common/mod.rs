//! Fixture PDFs written by lopdf, an independent PDF writer.
#![allow(dead_code)]

use std::fs;
use std::path::Path;

use lopdf::xref::XrefType;
use lopdf::{dictionary, Document, Object, Stream, StringFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// Classic xref table, uncompressed objects.
    Classic,
    /// Xref stream, uncompressed objects.
    XrefStream,
    /// Xref stream plus object streams.
    Modern,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xmp {
    pub title: Option<String>,
    pub creators: Vec<String>,
    /// ISO-8601 text as written into xmp:CreateDate.
    pub create_date: Option<String>,
    pub keywords: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub title: Option<String>,
    pub author: Option<String>,
    /// (year, month, day, hour, minute, second), written with a `Z` offset.
    pub creation: Option<(i32, u8, u8, u8, u8, u8)>,
    pub xmp: Option<Xmp>,
    pub pages: usize,
    pub layout: Layout,
    /// Write Info strings as UTF-16BE hex strings.
    pub utf16: bool,
    /// Flate-compress the metadata stream.
    pub compress_xmp: bool,
    /// Flag the trailer with an /Encrypt dictionary.
    pub encrypted: bool,
}

impl Default for Fixture {
    fn default() -> Self {
        Fixture {
            title: None,
            author: None,
            creation: None,
            xmp: None,
            pages: 1,
            layout: Layout::Classic,
            utf16: false,
            compress_xmp: false,
            encrypted: false,
        }
    }
}

impl Fixture {
    pub fn docinfo(title: Option<&str>, author: Option<&str>, year: Option<i32>) -> Self {
        Fixture {
            title: title.map(Into::into),
            author: author.map(Into::into),
            creation: year.map(|y| (y, 6, 1, 12, 0, 0)),
            ..Default::default()
        }
    }
}

fn text(s: &str, utf16: bool) -> Object {
    if utf16 {
        let mut bytes = vec![0xFE, 0xFF];
        for unit in s.encode_utf16() {
            bytes.extend_from_slice(&unit.to_be_bytes());
        }
        Object::String(bytes, StringFormat::Hexadecimal)
    } else {
        Object::String(s.as_bytes().to_vec(), StringFormat::Literal)
    }
}

pub fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

pub fn xmp_packet(x: &Xmp) -> String {
    let mut body = String::new();
    if let Some(t) = &x.title {
        body.push_str(&format!(
            "<dc:title><rdf:Alt><rdf:li xml:lang=\"x-default\">{}</rdf:li></rdf:Alt></dc:title>\n",
            xml_escape(t)
        ));
    }
    if !x.creators.is_empty() {
        body.push_str("<dc:creator><rdf:Seq>");
        for c in &x.creators {
            body.push_str(&format!("<rdf:li>{}</rdf:li>", xml_escape(c)));
        }
        body.push_str("</rdf:Seq></dc:creator>\n");
    }
    if let Some(d) = &x.create_date {
        body.push_str(&format!("<xmp:CreateDate>{d}</xmp:CreateDate>\n"));
    }
    if let Some(k) = &x.keywords {
        body.push_str(&format!("<pdf:Keywords>{}</pdf:Keywords>\n", xml_escape(k)));
    }
    format!(
        "<?xpacket begin=\"\u{feff}\" id=\"W5M0MpCehiHzreSzNTczkc9d\"?>\n\
<x:xmpmeta xmlns:x=\"adobe:ns:meta/\">\n\
<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">\n\
<rdf:Description rdf:about=\"\" xmlns:dc=\"http://purl.org/dc/elements/1.1/\" \
xmlns:xmp=\"http://ns.adobe.com/xap/1.0/\" xmlns:pdf=\"http://ns.adobe.com/pdf/1.3/\">\n\
{body}</rdf:Description>\n</rdf:RDF>\n</x:xmpmeta>\n<?xpacket end=\"w\"?>"
    )
}

/// Serializes the fixture with lopdf.
pub fn write_pdf(f: &Fixture) -> Vec<u8> {
    let mut doc = Document::with_version(if f.layout == Layout::Classic {
        "1.4"
    } else {
        "1.5"
    });
    if f.layout == Layout::Classic {
        doc.reference_table.cross_reference_type = XrefType::CrossReferenceTable;
    }
    let pages_id = doc.new_object_id();
    let mut kids = Vec::new();
    for _ in 0..f.pages {
        let content = doc.add_object(Stream::new(dictionary! {}, b"BT ET".to_vec()));
        let page = doc.add_object(dictionary! {
            "Type" => "Page",
            "Parent" => pages_id,
            "MediaBox" => vec![0.into(), 0.into(), 612.into(), 792.into()],
            "Contents" => content,
        });
        kids.push(Object::Reference(page));
    }
    doc.objects.insert(
        pages_id,
        Object::Dictionary(dictionary! {
            "Type" => "Pages",
            "Kids" => kids,
            "Count" => f.pages as i64,
        }),
    );
    let mut catalog = dictionary! {
        "Type" => "Catalog",
        "Pages" => pages_id,
    };
    if let Some(x) = &f.xmp {
        let mut stream = Stream::new(
            dictionary! { "Type" => "Metadata", "Subtype" => "XML" },
            xmp_packet(x).into_bytes(),
        );
        if f.compress_xmp {
            stream.compress().unwrap();
        } else {
            stream.allows_compression = false;
        }
        catalog.set("Metadata", doc.add_object(stream));
    }
    let catalog_id = doc.add_object(catalog);
    doc.trailer.set("Root", catalog_id);

    let mut info = lopdf::Dictionary::new();
    if let Some(t) = &f.title {
        info.set("Title", text(t, f.utf16));
    }
    if let Some(a) = &f.author {
        info.set("Author", text(a, f.utf16));
    }
    if let Some((y, mo, d, h, mi, s)) = f.creation {
        info.set(
            "CreationDate",
            Object::string_literal(format!("D:{y:04}{mo:02}{d:02}{h:02}{mi:02}{s:02}Z")),
        );
    }
    info.set("Producer", Object::string_literal("fixture writer"));
    let info_id = doc.add_object(info);
    doc.trailer.set("Info", info_id);

    if f.encrypted {
        let enc = doc.add_object(dictionary! {
            "Filter" => "Standard",
            "V" => 1,
            "R" => 2,
            "Length" => 40,
            "P" => -4,
            "O" => Object::String(vec![0; 32], StringFormat::Hexadecimal),
            "U" => Object::String(vec![0; 32], StringFormat::Hexadecimal),
        });
        doc.trailer.set("Encrypt", enc);
    }

    let mut out = Vec::new();
    match f.layout {
        Layout::Classic | Layout::XrefStream => doc.save_to(&mut out).unwrap(),
        Layout::Modern => doc.save_modern(&mut out).unwrap(),
    }
    out
}

pub fn write_file(dir: &Path, name: &str, f: &Fixture) -> std::path::PathBuf {
    let path = dir.join(name);
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).unwrap();
    }
    fs::write(&path, write_pdf(f)).unwrap();
    path
}

/// A varied, deterministic family of fixtures covering both carriers, all
/// three layouts, UTF-16 strings, compressed metadata and awkward characters.
pub fn oracle_family() -> Vec<Fixture> {
    let titles = [
        "Notes on record linkage",
        "Parentheses (nested (twice)) and a \\ backslash",
        "Über Metadaten: Größe & Qualität",
        "A study of <XML> & \"quotes\"",
        "Ünïcödé: ελληνικά, 日本語",
        "Short",
        "Trailing punctuation!",
    ];
    let authors = [
        "Hana Kowalski",
        "Tomas Lindqvist R.",
        "Wei Chen",
        "Ana María López",
        "O'Brien",
        "李 雷",
    ];
    let mut out = Vec::new();
    for i in 0..32usize {
        let year = 1995 + (i as i32 * 7) % 18;
        let title = titles[i % titles.len()].to_string();
        let author = authors[i % authors.len()].to_string();
        let layout = [Layout::Classic, Layout::XrefStream, Layout::Modern][i % 3];
        let with_xmp = i % 2 == 1;
        let utf16 = i % 4 == 0 || !title.is_ascii() || !author.is_ascii();
        let xmp = with_xmp.then(|| Xmp {
            title: Some(format!("{title} (xmp)")),
            creators: vec![author.clone(), authors[(i + 1) % authors.len()].to_string()],
            create_date: Some(format!("{:04}-03-{:02}T10:20:30Z", year + 1, 1 + i % 28)),
            keywords: (i % 5 == 1).then(|| "metadata; xmp".to_string()),
        });
        out.push(Fixture {
            title: Some(title),
            author: Some(author),
            creation: Some((
                year,
                1 + (i % 12) as u8,
                1 + (i % 28) as u8,
                8,
                30,
                (i % 60) as u8,
            )),
            xmp,
            pages: 1 + i % 4,
            layout,
            utf16,
            compress_xmp: i % 4 == 3,
            encrypted: false,
        });
    }
    out
}

/// The merged values a correct harvester must report for a fixture:
/// XMP wins over DocInfo field by field.
pub struct Expected {
    pub title: Option<String>,
    pub author: Option<String>,
    pub year: Option<i32>,
}

pub fn expected(f: &Fixture) -> Expected {
    let x = f.xmp.as_ref();
    Expected {
        title: x.and_then(|x| x.title.clone()).or_else(|| f.title.clone()),
        author: x
            .filter(|x| !x.creators.is_empty())
            .map(|x| x.creators.join(", "))
            .or_else(|| f.author.clone()),
        year: x
            .and_then(|x| x.create_date.as_ref())
            .map(|d| d[..4].parse().unwrap())
            .or(f.creation.map(|c| c.0)),
    }
}

/// Destroys the cross-reference information of a classic-layout file in one
/// of several ways, leaving object bodies intact.
pub fn destroy_xref(pdf: &[u8], mode: usize) -> Vec<u8> {
    let find = |needle: &[u8]| {
        pdf.windows(needle.len())
            .rposition(|w| w == needle)
            .unwrap()
    };
    let xref = find(b"\nxref") + 1;
    let startxref = find(b"startxref");
    let mut out = pdf.to_vec();
    match mode % 5 {
        // Cut everything from the table on.
        0 => out.truncate(xref),
        // Blank the table and trailer.
        1 => out[xref..startxref].iter_mut().for_each(|b| *b = b' '),
        // Point startxref into the middle of an object.
        2 => {
            out.truncate(startxref);
            out.extend_from_slice(format!("startxref\n{}\n%%EOF\n", xref / 2).as_bytes());
        }
        // Shift every offset in the table.
        3 => {
            let table = String::from_utf8_lossy(&pdf[xref..startxref]).into_owned();
            let shifted: String = table
                .lines()
                .map(|l| {
                    let parts: Vec<_> = l.split(' ').collect();
                    if parts.len() >= 3 && parts[0].len() == 10 && parts[2] == "n" {
                        let off: usize = parts[0].parse().unwrap();
                        format!("{:010} {} n ", off + 7, parts[1])
                    } else {
                        l.to_string()
                    }
                })
                .collect::<Vec<_>>()
                .join("\n");
            out.truncate(xref);
            out.extend_from_slice(shifted.as_bytes());
            out.extend_from_slice(&pdf[startxref..]);
        }
        // Garbage where the table was, no trailer, no startxref.
        _ => {
            out.truncate(xref);
            out.extend_from_slice(b"xref\n0 9\nthis is not a table\n%%EOF\n");
        }
    }
    out
}
