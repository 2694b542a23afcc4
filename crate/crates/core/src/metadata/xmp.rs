//! Locating and parsing the embedded XMP packet.

use std::collections::HashMap;

use serde::Serialize;

use crate::bytes::{find_all, find_from};
use crate::pdf::{PdfObject, RawDocument};

/// Namespace URIs the harvester interprets.
pub mod ns {
    pub const DC: &str = "http://purl.org/dc/elements/1.1/";
    pub const XMP: &str = "http://ns.adobe.com/xap/1.0/";
    pub const PDF: &str = "http://ns.adobe.com/pdf/1.3/";
    pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const XML: &str = "http://www.w3.org/XML/1998/namespace";
}

/// An XMP property value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum XmpValue {
    Simple(String),
    Seq(Vec<String>),
    Bag(Vec<String>),
    /// (language tag, text) pairs; `x-default` first when present.
    Alt(Vec<(String, String)>),
}

impl XmpValue {
    /// All text items in order.
    pub fn texts(&self) -> Vec<&str> {
        match self {
            XmpValue::Simple(s) => vec![s.as_str()],
            XmpValue::Seq(items) | XmpValue::Bag(items) => {
                items.iter().map(String::as_str).collect()
            }
            XmpValue::Alt(items) => items.iter().map(|(_, t)| t.as_str()).collect(),
        }
    }

    pub fn first_text(&self) -> Option<&str> {
        self.texts().into_iter().next()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XmpProperty {
    pub namespace: String,
    pub name: String,
    pub value: XmpValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XmpPacket {
    #[serde(skip)]
    pub raw_xml: Vec<u8>,
    pub well_formed: bool,
    pub properties: Vec<XmpProperty>,
    pub warnings: Vec<String>,
}

impl XmpPacket {
    /// A packet with no properties, as if none was embedded.
    pub fn empty() -> Self {
        XmpPacket {
            raw_xml: Vec::new(),
            well_formed: true,
            properties: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn get(&self, namespace: &str, name: &str) -> Option<&XmpValue> {
        self.properties
            .iter()
            .find(|p| p.namespace == namespace && p.name == name)
            .map(|p| &p.value)
    }
}

/// Where a packet was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum XmpOrigin {
    /// The catalog's /Metadata stream.
    MetadataStream,
    /// A `<?xpacket` sentinel scan of the raw file.
    SentinelScan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawXmp {
    pub bytes: Vec<u8>,
    pub origin: XmpOrigin,
}

/// Finds the document's XMP packet: the catalog /Metadata stream first, then
/// a scan of the raw bytes for xpacket sentinels.
pub fn locate_xmp(doc: &RawDocument, warnings: &mut Vec<String>) -> Option<RawXmp> {
    if let Some(metadata) = doc.catalog().and_then(|c| doc.get_in(c, "Metadata")) {
        match metadata {
            PdfObject::Stream(stream) => match doc.decode_stream(stream) {
                Ok(bytes) if !bytes.iter().all(u8::is_ascii_whitespace) => {
                    return Some(RawXmp {
                        bytes,
                        origin: XmpOrigin::MetadataStream,
                    })
                }
                Ok(_) => warnings.push("/Metadata stream is empty".into()),
                Err(e) => warnings.push(format!("/Metadata stream: {e}")),
            },
            other => warnings.push(format!("/Metadata is a {}, not a stream", other.kind())),
        }
    }
    scan_xpacket(doc.bytes()).map(|bytes| RawXmp {
        bytes,
        origin: XmpOrigin::SentinelScan,
    })
}

/// Returns the bytes from `<?xpacket begin` through the closing
/// `<?xpacket end ...?>`. With several packets, the last one carrying Dublin
/// Core or Adobe PDF properties wins, else the last one.
pub fn scan_xpacket(data: &[u8]) -> Option<Vec<u8>> {
    let mut packets = Vec::new();
    for start in find_all(data, b"<?xpacket begin") {
        let Some(end_tag) = find_from(data, b"<?xpacket end", start) else {
            continue;
        };
        let Some(close) = find_from(data, b"?>", end_tag) else {
            continue;
        };
        packets.push(&data[start..close + 2]);
    }
    let document_level = |p: &&&[u8]| {
        find_from(p, ns::DC.as_bytes(), 0).is_some()
            || find_from(p, ns::PDF.as_bytes(), 0).is_some()
    };
    packets
        .iter()
        .rev()
        .find(document_level)
        .or_else(|| packets.last())
        .map(|p| p.to_vec())
}

fn decode_xml_text(raw: &[u8]) -> Option<String> {
    if let Some(rest) = raw.strip_prefix(&[0xFE, 0xFF]) {
        let units: Vec<u16> = rest
            .chunks_exact(2)
            .map(|c| u16::from_be_bytes([c[0], c[1]]))
            .collect();
        return String::from_utf16(&units).ok();
    }
    if let Some(rest) = raw.strip_prefix(&[0xFF, 0xFE]) {
        let units: Vec<u16> = rest
            .chunks_exact(2)
            .map(|c| u16::from_le_bytes([c[0], c[1]]))
            .collect();
        return String::from_utf16(&units).ok();
    }
    let raw = raw.strip_prefix(&[0xEF, 0xBB, 0xBF]).unwrap_or(raw);
    // Packets are often padded with NULs in damaged files.
    let end = raw.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
    std::str::from_utf8(&raw[..end]).ok().map(str::to_owned)
}

/// Parses an XMP packet. Malformed XML yields `well_formed == false` and no
/// properties.
pub fn parse_xmp(raw: &[u8]) -> XmpPacket {
    let malformed = |why: String| XmpPacket {
        raw_xml: raw.to_vec(),
        well_formed: false,
        properties: Vec::new(),
        warnings: vec![format!("malformed XMP: {why}")],
    };
    let Some(text) = decode_xml_text(raw) else {
        return malformed("not valid UTF-8 or UTF-16".into());
    };
    let options = roxmltree::ParsingOptions {
        allow_dtd: true,
        ..Default::default()
    };
    let xml = match roxmltree::Document::parse_with_options(&text, options) {
        Ok(xml) => xml,
        Err(e) => return malformed(e.to_string()),
    };

    let mut properties: Vec<XmpProperty> = Vec::new();
    let mut seen: HashMap<(String, String), usize> = HashMap::new();
    let mut warnings = Vec::new();
    let mut push = |prop: XmpProperty, warnings: &mut Vec<String>| {
        let key = (prop.namespace.clone(), prop.name.clone());
        if let Some(&old) = seen.get(&key) {
            warnings.push(format!(
                "property {}{} set more than once; keeping the last value",
                prop.namespace, prop.name
            ));
            properties[old] = prop;
        } else {
            seen.insert(key, properties.len());
            properties.push(prop);
        }
    };

    for desc in xml
        .descendants()
        .filter(|n| n.is_element() && n.tag_name().namespace() == Some(ns::RDF))
        .filter(|n| n.tag_name().name() == "Description")
    {
        for attr in desc.attributes() {
            let Some(namespace) = attr.namespace() else {
                continue;
            };
            if namespace == ns::RDF || namespace == ns::XML {
                continue;
            }
            push(
                XmpProperty {
                    namespace: namespace.to_owned(),
                    name: attr.name().to_owned(),
                    value: XmpValue::Simple(attr.value().to_owned()),
                },
                &mut warnings,
            );
        }
        for child in desc.children().filter(|n| n.is_element()) {
            let tag = child.tag_name();
            push(
                XmpProperty {
                    namespace: tag.namespace().unwrap_or_default().to_owned(),
                    name: tag.name().to_owned(),
                    value: property_value(child),
                },
                &mut warnings,
            );
        }
    }

    XmpPacket {
        raw_xml: raw.to_vec(),
        well_formed: true,
        properties,
        warnings,
    }
}

fn is_rdf(node: &roxmltree::Node<'_, '_>, name: &str) -> bool {
    node.is_element()
        && node.tag_name().namespace() == Some(ns::RDF)
        && node.tag_name().name() == name
}

/// Text of a node: its own text, or the joined text of nested elements.
fn node_text(node: roxmltree::Node<'_, '_>) -> String {
    if node.children().any(|c| c.is_element()) {
        node.descendants()
            .filter(|d| d.is_text())
            .filter_map(|d| d.text())
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect::<Vec<_>>()
            .join(" ")
    } else {
        node.text().unwrap_or_default().to_owned()
    }
}

fn property_value(element: roxmltree::Node<'_, '_>) -> XmpValue {
    let container = element
        .children()
        .find(|c| is_rdf(c, "Seq") || is_rdf(c, "Bag") || is_rdf(c, "Alt"));
    if let Some(container) = container {
        let items = container.children().filter(|c| is_rdf(c, "li"));
        return match container.tag_name().name() {
            "Seq" => XmpValue::Seq(items.map(node_text).collect()),
            "Bag" => XmpValue::Bag(items.map(node_text).collect()),
            _ => {
                let mut entries: Vec<(String, String)> = items
                    .map(|li| {
                        let lang = li.attribute((ns::XML, "lang")).unwrap_or_default();
                        (lang.to_owned(), node_text(li))
                    })
                    .collect();
                if let Some(pos) = entries.iter().position(|(l, _)| l == "x-default") {
                    let default = entries.remove(pos);
                    entries.insert(0, default);
                }
                XmpValue::Alt(entries)
            }
        };
    }
    if let Some(resource) = element.attribute((ns::RDF, "resource")) {
        return XmpValue::Simple(resource.to_owned());
    }
    XmpValue::Simple(node_text(element))
}
