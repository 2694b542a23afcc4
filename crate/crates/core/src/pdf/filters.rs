//! Stream filter chain: FlateDecode (with PNG/TIFF predictors),
//! ASCIIHexDecode and ASCII85Decode.

use super::inflate::inflate_zlib;
use super::object::{Dictionary, ObjectId, PdfObject};
use crate::error::{Error, Result};

/// Resolves references encountered in /Filter and /DecodeParms.
pub(crate) type Resolver<'r> = &'r dyn Fn(ObjectId) -> Option<PdfObject>;

fn deref(obj: &PdfObject, resolve: Resolver<'_>) -> PdfObject {
    match obj {
        PdfObject::Reference(id) => resolve(*id).unwrap_or(PdfObject::Null),
        other => other.clone(),
    }
}

/// Pairs every filter name with its (optional) parameter dictionary.
fn filter_chain(dict: &Dictionary, resolve: Resolver<'_>) -> Result<Vec<(String, Dictionary)>> {
    let filters = dict
        .get("Filter")
        .or_else(|| dict.get("F"))
        .map(|f| deref(f, resolve))
        .unwrap_or(PdfObject::Null);
    let params = dict
        .get("DecodeParms")
        .or_else(|| dict.get("DP"))
        .map(|p| deref(p, resolve))
        .unwrap_or(PdfObject::Null);

    let names: Vec<String> = match filters {
        PdfObject::Null => Vec::new(),
        PdfObject::Name(n) => vec![n],
        PdfObject::Array(items) => items
            .iter()
            .map(|i| match deref(i, resolve) {
                PdfObject::Name(n) => Ok(n),
                other => Err(Error::CorruptStream(format!(
                    "filter entry is a {}",
                    other.kind()
                ))),
            })
            .collect::<Result<_>>()?,
        other => {
            return Err(Error::CorruptStream(format!(
                "/Filter is a {}",
                other.kind()
            )))
        }
    };
    let params: Vec<Dictionary> = match params {
        PdfObject::Dictionary(d) => vec![d],
        PdfObject::Array(items) => items
            .iter()
            .map(|i| match deref(i, resolve) {
                PdfObject::Dictionary(d) => d,
                _ => Dictionary::new(),
            })
            .collect(),
        _ => Vec::new(),
    };
    Ok(names
        .into_iter()
        .enumerate()
        .map(|(i, n)| (n, params.get(i).cloned().unwrap_or_default()))
        .collect())
}

/// Applies the filter chain named in `dict` to `raw`, left to right.
pub(crate) fn decode(raw: &[u8], dict: &Dictionary, resolve: Resolver<'_>) -> Result<Vec<u8>> {
    let mut data = raw.to_vec();
    for (name, params) in filter_chain(dict, resolve)? {
        data = match name.as_str() {
            "FlateDecode" | "Fl" => {
                let inflated = match inflate_zlib(&data) {
                    Ok(out) => out,
                    // Truncated streams still yield their readable prefix.
                    Err(e) if !e.partial.is_empty() => e.partial,
                    Err(e) => return Err(Error::CorruptStream(format!("FlateDecode: {e}"))),
                };
                apply_predictor(inflated, &params, resolve)?
            }
            "ASCIIHexDecode" | "AHx" => ascii_hex_decode(&data)?,
            "ASCII85Decode" | "A85" => ascii85_decode(&data)?,
            other => return Err(Error::UnsupportedFilter(other.to_owned())),
        };
    }
    Ok(data)
}

fn param_int(params: &Dictionary, key: &str, default: i64, resolve: Resolver<'_>) -> i64 {
    params
        .get(key)
        .map(|v| deref(v, resolve))
        .and_then(|v| v.as_integer())
        .unwrap_or(default)
}

fn apply_predictor(data: Vec<u8>, params: &Dictionary, resolve: Resolver<'_>) -> Result<Vec<u8>> {
    let predictor = param_int(params, "Predictor", 1, resolve);
    if predictor <= 1 {
        return Ok(data);
    }
    let colors = param_int(params, "Colors", 1, resolve).clamp(1, 32) as usize;
    let bpc = param_int(params, "BitsPerComponent", 8, resolve).clamp(1, 16) as usize;
    let columns = param_int(params, "Columns", 1, resolve).clamp(1, 1 << 24) as usize;
    let bytes_per_pixel = (colors * bpc).div_ceil(8);
    let row_len = (colors * bpc * columns).div_ceil(8);
    match predictor {
        2 => Ok(tiff_predictor(data, row_len, bytes_per_pixel, bpc)),
        10..=15 => png_predictor(&data, row_len, bytes_per_pixel),
        other => Err(Error::CorruptStream(format!("unknown predictor {other}"))),
    }
}

fn tiff_predictor(mut data: Vec<u8>, row_len: usize, bpp: usize, bpc: usize) -> Vec<u8> {
    // Only byte-aligned samples are handled; anything else passes through.
    if bpc != 8 {
        return data;
    }
    for row in data.chunks_mut(row_len) {
        for i in bpp..row.len() {
            row[i] = row[i].wrapping_add(row[i - bpp]);
        }
    }
    data
}

fn paeth(a: u8, b: u8, c: u8) -> u8 {
    let p = i16::from(a) + i16::from(b) - i16::from(c);
    let pa = (p - i16::from(a)).abs();
    let pb = (p - i16::from(b)).abs();
    let pc = (p - i16::from(c)).abs();
    if pa <= pb && pa <= pc {
        a
    } else if pb <= pc {
        b
    } else {
        c
    }
}

/// Reverses PNG row filters. Each encoded row is one filter-type byte
/// followed by `row_len` bytes.
fn png_predictor(data: &[u8], row_len: usize, bpp: usize) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(data.len());
    let mut prev = vec![0u8; row_len];
    for encoded in data.chunks(row_len + 1) {
        let (&kind, body) = encoded
            .split_first()
            .ok_or_else(|| Error::CorruptStream("empty predictor row".into()))?;
        let mut row = body.to_vec();
        row.resize(row_len, 0);
        for i in 0..row_len {
            let left = if i >= bpp { row[i - bpp] } else { 0 };
            let up = prev[i];
            let up_left = if i >= bpp { prev[i - bpp] } else { 0 };
            row[i] = match kind {
                0 => row[i],
                1 => row[i].wrapping_add(left),
                2 => row[i].wrapping_add(up),
                3 => row[i].wrapping_add(((u16::from(left) + u16::from(up)) / 2) as u8),
                4 => row[i].wrapping_add(paeth(left, up, up_left)),
                other => return Err(Error::CorruptStream(format!("bad PNG filter type {other}"))),
            };
        }
        out.extend_from_slice(&row[..body.len().min(row_len)]);
        prev = row;
    }
    Ok(out)
}

pub(crate) fn ascii_hex_decode(data: &[u8]) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(data.len() / 2);
    let mut pending: Option<u8> = None;
    for &b in data {
        let v = match b {
            b'0'..=b'9' => b - b'0',
            b'a'..=b'f' => b - b'a' + 10,
            b'A'..=b'F' => b - b'A' + 10,
            b'>' => break,
            b if super::lexer::is_whitespace(b) => continue,
            other => {
                return Err(Error::CorruptStream(format!(
                    "invalid byte 0x{other:02X} in ASCIIHexDecode"
                )))
            }
        };
        match pending.take() {
            Some(h) => out.push(h << 4 | v),
            None => pending = Some(v),
        }
    }
    if let Some(h) = pending {
        out.push(h << 4);
    }
    Ok(out)
}

pub(crate) fn ascii85_decode(data: &[u8]) -> Result<Vec<u8>> {
    let body = data.strip_prefix(b"<~").unwrap_or(data);
    let mut out = Vec::with_capacity(body.len() * 4 / 5);
    let mut group = [0u8; 5];
    let mut n = 0;
    for &b in body {
        match b {
            b'~' => break,
            b'z' if n == 0 => out.extend_from_slice(&[0; 4]),
            b'!'..=b'u' => {
                group[n] = b - b'!';
                n += 1;
                if n == 5 {
                    let value = group.iter().fold(0u64, |acc, &d| acc * 85 + u64::from(d));
                    let value = u32::try_from(value)
                        .map_err(|_| Error::CorruptStream("ASCII85 group overflow".into()))?;
                    out.extend_from_slice(&value.to_be_bytes());
                    n = 0;
                }
            }
            b if super::lexer::is_whitespace(b) => {}
            other => {
                return Err(Error::CorruptStream(format!(
                    "invalid byte 0x{other:02X} in ASCII85Decode"
                )))
            }
        }
    }
    if n == 1 {
        return Err(Error::CorruptStream("dangling ASCII85 digit".into()));
    }
    if n > 1 {
        for slot in group.iter_mut().skip(n) {
            *slot = 84;
        }
        let value = group.iter().fold(0u64, |acc, &d| acc * 85 + u64::from(d));
        let bytes = (value as u32).to_be_bytes();
        out.extend_from_slice(&bytes[..n - 1]);
    }
    Ok(out)
}
