//! Byte-level tokenizer and object parser.

use super::object::{Dictionary, ObjectId, PdfObject, PdfStream, PdfString};
use crate::bytes::find;
use crate::error::{Error, Result};

const MAX_NESTING: usize = 256;

pub(crate) fn is_whitespace(b: u8) -> bool {
    matches!(b, b'\0' | b'\t' | b'\n' | b'\x0C' | b'\r' | b' ')
}

pub(crate) fn is_delimiter(b: u8) -> bool {
    matches!(
        b,
        b'(' | b')' | b'<' | b'>' | b'[' | b']' | b'{' | b'}' | b'/' | b'%'
    )
}

fn is_regular(b: u8) -> bool {
    !is_whitespace(b) && !is_delimiter(b)
}

fn hex_value(b: u8) -> Option<u8> {
    match b {
        b'0'..=b'9' => Some(b - b'0'),
        b'a'..=b'f' => Some(b - b'a' + 10),
        b'A'..=b'F' => Some(b - b'A' + 10),
        _ => None,
    }
}

/// Looks up the value of an indirect `/Length` while a stream is parsed.
pub(crate) type LengthLookup<'l> = &'l dyn Fn(ObjectId) -> Option<i64>;

pub(crate) struct Lexer<'a> {
    data: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Lexer<'a> {
    pub(crate) fn new(data: &'a [u8], pos: usize) -> Self {
        Lexer { data, pos }
    }

    fn peek(&self) -> Option<u8> {
        self.data.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::syntax(self.pos, message)
    }

    /// Skips whitespace and comments.
    pub(crate) fn skip_ws(&mut self) {
        while let Some(b) = self.peek() {
            if is_whitespace(b) {
                self.pos += 1;
            } else if b == b'%' {
                while let Some(c) = self.peek() {
                    if c == b'\r' || c == b'\n' {
                        break;
                    }
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    /// Reads a run of regular characters without consuming anything else.
    fn regular_token(&mut self) -> &'a [u8] {
        let start = self.pos;
        while self.peek().is_some_and(is_regular) {
            self.pos += 1;
        }
        &self.data[start..self.pos]
    }

    /// Consumes `keyword` if it is the next token.
    pub(crate) fn eat_keyword(&mut self, keyword: &[u8]) -> bool {
        let save = self.pos;
        self.skip_ws();
        if self.regular_token() == keyword {
            true
        } else {
            self.pos = save;
            false
        }
    }

    pub(crate) fn read_unsigned(&mut self) -> Option<u64> {
        let save = self.pos;
        self.skip_ws();
        let tok = self.regular_token();
        if tok.is_empty() || !tok.iter().all(u8::is_ascii_digit) || tok.len() > 18 {
            self.pos = save;
            return None;
        }
        Some(
            tok.iter()
                .fold(0u64, |acc, d| acc * 10 + u64::from(d - b'0')),
        )
    }

    /// Parses an `N G obj` header.
    pub(crate) fn object_header(&mut self) -> Option<ObjectId> {
        let save = self.pos;
        let parsed = (|| {
            let number = u32::try_from(self.read_unsigned()?).ok()?;
            let generation = u16::try_from(self.read_unsigned()?).ok()?;
            self.eat_keyword(b"obj")
                .then_some(ObjectId::new(number, generation))
        })();
        if parsed.is_none() {
            self.pos = save;
        }
        parsed
    }

    /// Parses a complete indirect object (`N G obj ... endobj`) starting at the
    /// current position.
    pub(crate) fn indirect_object(
        &mut self,
        length: LengthLookup<'_>,
    ) -> Result<(ObjectId, PdfObject)> {
        let id = self
            .object_header()
            .ok_or_else(|| self.err("expected object header"))?;
        let object = self.object(0)?;
        let object = match object {
            PdfObject::Dictionary(dict) if self.eat_keyword(b"stream") => {
                PdfObject::Stream(self.stream_body(dict, length)?)
            }
            other => other,
        };
        // A missing endobj is common in damaged files and harmless here.
        self.eat_keyword(b"endobj");
        Ok((id, object))
    }

    fn stream_body(&mut self, dict: Dictionary, length: LengthLookup<'_>) -> Result<PdfStream> {
        // "stream" must be followed by CRLF or LF; tolerate a lone CR.
        match self.peek() {
            Some(b'\r') => {
                self.pos += 1;
                if self.peek() == Some(b'\n') {
                    self.pos += 1;
                }
            }
            Some(b'\n') => self.pos += 1,
            _ => {}
        }
        let start = self.pos;
        let declared = match dict.get("Length") {
            Some(PdfObject::Integer(n)) => Some(*n),
            Some(PdfObject::Reference(id)) => length(*id),
            _ => None,
        };
        if let Some(n) = declared.and_then(|n| usize::try_from(n).ok()) {
            if let Some(end) = start.checked_add(n).filter(|&e| e <= self.data.len()) {
                let mut probe = Lexer::new(self.data, end);
                if probe.eat_keyword(b"endstream") {
                    self.pos = probe.pos;
                    return Ok(PdfStream::new(dict, self.data[start..end].to_vec()));
                }
            }
        }
        // Length missing or wrong: search for the terminating keyword.
        let rel = find(&self.data[start..], b"endstream")
            .ok_or_else(|| self.err("unterminated stream"))?;
        let mut end = start + rel;
        if end > start && self.data[end - 1] == b'\n' {
            end -= 1;
        }
        if end > start && self.data[end - 1] == b'\r' {
            end -= 1;
        }
        self.pos = start + rel + b"endstream".len();
        Ok(PdfStream::new(dict, self.data[start..end].to_vec()))
    }

    /// Parses one direct object (which may be a reference `N G R`).
    pub(crate) fn object(&mut self, depth: usize) -> Result<PdfObject> {
        if depth > MAX_NESTING {
            return Err(self.err("nesting too deep"));
        }
        self.skip_ws();
        let b = self
            .peek()
            .ok_or_else(|| self.err("unexpected end of data"))?;
        match b {
            b'/' => {
                self.pos += 1;
                Ok(PdfObject::Name(self.name_body()))
            }
            b'(' => {
                self.pos += 1;
                Ok(PdfObject::String(PdfString::literal(self.literal_body())))
            }
            b'<' if self.data.get(self.pos + 1) == Some(&b'<') => {
                self.pos += 2;
                Ok(PdfObject::Dictionary(self.dictionary_body(depth)?))
            }
            b'<' => {
                self.pos += 1;
                Ok(PdfObject::String(PdfString::hex(self.hex_body())))
            }
            b'[' => {
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(b']') => {
                            self.pos += 1;
                            break;
                        }
                        None => return Err(self.err("unterminated array")),
                        _ => items.push(self.object(depth + 1)?),
                    }
                }
                Ok(PdfObject::Array(items))
            }
            b'+' | b'-' | b'.' | b'0'..=b'9' => self.number_or_reference(),
            _ => {
                let start = self.pos;
                let tok = self.regular_token();
                match tok {
                    b"true" => Ok(PdfObject::Boolean(true)),
                    b"false" => Ok(PdfObject::Boolean(false)),
                    b"null" => Ok(PdfObject::Null),
                    _ => {
                        self.pos = start;
                        Err(self.err(format!(
                            "unexpected token {:?}",
                            String::from_utf8_lossy(&tok[..tok.len().min(16)])
                        )))
                    }
                }
            }
        }
    }

    fn dictionary_body(&mut self, depth: usize) -> Result<Dictionary> {
        let mut dict = Dictionary::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'>') if self.data.get(self.pos + 1) == Some(&b'>') => {
                    self.pos += 2;
                    return Ok(dict);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let key = self.name_body();
                    self.skip_ws();
                    // `/Key >>` with the value missing: treat as null.
                    if self.data[self.pos..].starts_with(b">>") {
                        continue;
                    }
                    let value = self.object(depth + 1)?;
                    if !value.is_null() {
                        dict.insert(key, value);
                    }
                }
                None => return Err(self.err("unterminated dictionary")),
                _ => return Err(self.err("expected name as dictionary key")),
            }
        }
    }

    fn name_body(&mut self) -> String {
        let raw = self.regular_token();
        let mut out = Vec::with_capacity(raw.len());
        let mut i = 0;
        while i < raw.len() {
            if raw[i] == b'#' && i + 2 < raw.len() {
                if let (Some(h), Some(l)) = (hex_value(raw[i + 1]), hex_value(raw[i + 2])) {
                    let decoded = h << 4 | l;
                    // Escapes that would yield syntax characters stay escaped.
                    if is_regular(decoded) {
                        out.push(decoded);
                    } else {
                        out.extend_from_slice(&raw[i..i + 3]);
                    }
                    i += 3;
                    continue;
                }
            }
            out.push(raw[i]);
            i += 1;
        }
        String::from_utf8(out)
            .unwrap_or_else(|e| e.into_bytes().iter().map(|&b| b as char).collect())
    }

    fn literal_body(&mut self) -> Vec<u8> {
        let mut out = Vec::new();
        let mut depth = 1usize;
        while let Some(b) = self.peek() {
            self.pos += 1;
            match b {
                b'(' => {
                    depth += 1;
                    out.push(b);
                }
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        return out;
                    }
                    out.push(b);
                }
                b'\r' => {
                    // Bare EOLs in strings read as a single LF.
                    if self.peek() == Some(b'\n') {
                        self.pos += 1;
                    }
                    out.push(b'\n');
                }
                b'\\' => {
                    let Some(e) = self.peek() else { break };
                    self.pos += 1;
                    match e {
                        b'n' => out.push(b'\n'),
                        b'r' => out.push(b'\r'),
                        b't' => out.push(b'\t'),
                        b'b' => out.push(0x08),
                        b'f' => out.push(0x0C),
                        b'0'..=b'7' => {
                            let mut value = u32::from(e - b'0');
                            for _ in 0..2 {
                                match self.peek() {
                                    Some(d @ b'0'..=b'7') => {
                                        value = value * 8 + u32::from(d - b'0');
                                        self.pos += 1;
                                    }
                                    _ => break,
                                }
                            }
                            out.push(value as u8);
                        }
                        b'\r' => {
                            if self.peek() == Some(b'\n') {
                                self.pos += 1;
                            }
                        }
                        b'\n' => {}
                        other => out.push(other),
                    }
                }
                _ => out.push(b),
            }
        }
        out
    }

    fn hex_body(&mut self) -> Vec<u8> {
        let mut out = Vec::new();
        let mut pending: Option<u8> = None;
        while let Some(b) = self.peek() {
            self.pos += 1;
            if b == b'>' {
                break;
            }
            if let Some(v) = hex_value(b) {
                match pending.take() {
                    Some(h) => out.push(h << 4 | v),
                    None => pending = Some(v),
                }
            }
        }
        if let Some(h) = pending {
            out.push(h << 4);
        }
        out
    }

    fn number_or_reference(&mut self) -> Result<PdfObject> {
        let tok = self.regular_token();
        let text = std::str::from_utf8(tok).unwrap_or("");
        let is_int = !text.is_empty()
            && text
                .trim_start_matches(['+', '-'])
                .bytes()
                .all(|b| b.is_ascii_digit())
            && text.len() > usize::from(text.starts_with(['+', '-']));
        if is_int {
            let value = text.parse::<i64>().unwrap_or(if text.starts_with('-') {
                i64::MIN
            } else {
                i64::MAX
            });
            if !text.starts_with(['+', '-']) {
                let save = self.pos;
                if let Some(generation) = self.read_unsigned() {
                    if self.eat_keyword(b"R") {
                        if let (Ok(n), Ok(g)) = (u32::try_from(value), u16::try_from(generation)) {
                            return Ok(PdfObject::Reference(ObjectId::new(n, g)));
                        }
                    }
                }
                self.pos = save;
            }
            return Ok(PdfObject::Integer(value));
        }
        // Reals; tolerate oddities like "--5" or "5.3.1" by parsing a prefix.
        let negative = text.starts_with('-');
        let body = text.trim_start_matches(['+', '-']);
        let mut end = 0;
        let mut seen_dot = false;
        for (i, c) in body.char_indices() {
            match c {
                '0'..='9' => end = i + 1,
                '.' if !seen_dot => {
                    seen_dot = true;
                    end = i + 1;
                }
                _ => break,
            }
        }
        match &body[..end] {
            "" | "." => Ok(PdfObject::Integer(0)),
            digits => {
                let value = digits.parse::<f64>().unwrap_or(0.0);
                Ok(PdfObject::Real(if negative { -value } else { value }))
            }
        }
    }
}
