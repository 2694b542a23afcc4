//! Text-string decoding for PDF strings.

/// PDFDocEncoding code points 0x18..=0x1F.
const LOW_TABLE: [char; 8] = [
    '\u{02D8}', '\u{02C7}', '\u{02C6}', '\u{02D9}', '\u{02DD}', '\u{02DB}', '\u{02DA}', '\u{02DC}',
];

/// PDFDocEncoding code points 0x80..=0xA0.
const HIGH_TABLE: [char; 33] = [
    '\u{2022}', '\u{2020}', '\u{2021}', '\u{2026}', '\u{2014}', '\u{2013}', '\u{0192}', '\u{2044}',
    '\u{2039}', '\u{203A}', '\u{2212}', '\u{2030}', '\u{201E}', '\u{201C}', '\u{201D}', '\u{2018}',
    '\u{2019}', '\u{201A}', '\u{2122}', '\u{FB01}', '\u{FB02}', '\u{0141}', '\u{0152}', '\u{0160}',
    '\u{0178}', '\u{017D}', '\u{0131}', '\u{0142}', '\u{0153}', '\u{0161}', '\u{017E}', '\u{FFFD}',
    '\u{20AC}',
];

pub fn pdf_doc_char(b: u8) -> char {
    match b {
        0x18..=0x1F => LOW_TABLE[(b - 0x18) as usize],
        0x7F => '\u{FFFD}',
        0x80..=0xA0 => HIGH_TABLE[(b - 0x80) as usize],
        _ => b as char,
    }
}

/// Decodes a PDF text string.
///
/// A leading FE FF selects UTF-16BE, EF BB BF selects UTF-8, anything else is
/// PDFDocEncoding. Language escape sequences (ESC ... ESC) inside UTF-16 text
/// are dropped.
pub fn decode_text_string(bytes: &[u8]) -> String {
    if let Some(rest) = bytes.strip_prefix(&[0xFE, 0xFF]) {
        let units: Vec<u16> = rest
            .chunks(2)
            .map(|c| u16::from_be_bytes([c[0], *c.get(1).unwrap_or(&0)]))
            .collect();
        let units = strip_language_escapes(&units);
        return char::decode_utf16(units)
            .map(|r| r.unwrap_or('\u{FFFD}'))
            .collect();
    }
    if let Some(rest) = bytes.strip_prefix(&[0xEF, 0xBB, 0xBF]) {
        return String::from_utf8_lossy(rest).into_owned();
    }
    bytes.iter().map(|&b| pdf_doc_char(b)).collect()
}

fn strip_language_escapes(units: &[u16]) -> Vec<u16> {
    let mut out = Vec::with_capacity(units.len());
    let mut in_escape = false;
    for &u in units {
        if u == 0x001B {
            in_escape = !in_escape;
        } else if !in_escape {
            out.push(u);
        }
    }
    out
}
