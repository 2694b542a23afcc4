//! DEFLATE (RFC 1951) decoder with zlib (RFC 1950) framing.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflateError {
    pub message: &'static str,
    /// Bytes produced before the error was hit.
    pub partial: Vec<u8>,
}

impl fmt::Display for InflateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.message)
    }
}

const LENGTH_BASE: [u16; 29] = [
    3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 15, 17, 19, 23, 27, 31, 35, 43, 51, 59, 67, 83, 99, 115, 131,
    163, 195, 227, 258,
];
const LENGTH_EXTRA: [u8; 29] = [
    0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 0,
];
const DIST_BASE: [u16; 30] = [
    1, 2, 3, 4, 5, 7, 9, 13, 17, 25, 33, 49, 65, 97, 129, 193, 257, 385, 513, 769, 1025, 1537,
    2049, 3073, 4097, 6145, 8193, 12289, 16385, 24577,
];
const DIST_EXTRA: [u8; 30] = [
    0, 0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12, 13,
    13,
];
const CODE_LENGTH_ORDER: [usize; 19] = [
    16, 17, 18, 0, 8, 7, 9, 6, 10, 5, 11, 4, 12, 3, 13, 2, 14, 1, 15,
];

struct BitReader<'a> {
    data: &'a [u8],
    pos: usize,
    bit_buf: u32,
    bit_count: u32,
}

impl<'a> BitReader<'a> {
    fn new(data: &'a [u8]) -> Self {
        BitReader {
            data,
            pos: 0,
            bit_buf: 0,
            bit_count: 0,
        }
    }

    fn need(&mut self, n: u32) -> Result<(), &'static str> {
        while self.bit_count < n {
            let byte = *self.data.get(self.pos).ok_or("unexpected end of data")?;
            self.pos += 1;
            self.bit_buf |= u32::from(byte) << self.bit_count;
            self.bit_count += 8;
        }
        Ok(())
    }

    fn bits(&mut self, n: u32) -> Result<u32, &'static str> {
        if n == 0 {
            return Ok(0);
        }
        self.need(n)?;
        let v = self.bit_buf & ((1u32 << n) - 1);
        self.bit_buf >>= n;
        self.bit_count -= n;
        Ok(v)
    }

    fn align_to_byte(&mut self) {
        let drop = self.bit_count % 8;
        self.bit_buf >>= drop;
        self.bit_count -= drop;
    }
}

/// Canonical Huffman decoding table (counts per length + symbols sorted by code).
struct Huffman {
    counts: [u16; 16],
    symbols: Vec<u16>,
}

impl Huffman {
    fn new(lengths: &[u8]) -> Result<Self, &'static str> {
        let mut counts = [0u16; 16];
        for &l in lengths {
            counts[l as usize] += 1;
        }
        counts[0] = 0;
        let mut left: i32 = 1;
        for &c in &counts[1..] {
            left <<= 1;
            left -= i32::from(c);
            if left < 0 {
                return Err("over-subscribed huffman code");
            }
        }
        let mut offsets = [0u16; 16];
        for len in 1..15 {
            offsets[len + 1] = offsets[len] + counts[len];
        }
        let mut symbols = vec![0u16; lengths.len()];
        for (sym, &l) in lengths.iter().enumerate() {
            if l != 0 {
                symbols[offsets[l as usize] as usize] = sym as u16;
                offsets[l as usize] += 1;
            }
        }
        Ok(Huffman { counts, symbols })
    }

    fn decode(&self, br: &mut BitReader<'_>) -> Result<u16, &'static str> {
        let mut code: i32 = 0;
        let mut first: i32 = 0;
        let mut index: i32 = 0;
        for len in 1..16 {
            code |= br.bits(1)? as i32;
            let count = i32::from(self.counts[len]);
            if code - count < first {
                return Ok(self.symbols[(index + (code - first)) as usize]);
            }
            index += count;
            first += count;
            first <<= 1;
            code <<= 1;
        }
        Err("invalid huffman code")
    }
}

fn fixed_tables() -> (Huffman, Huffman) {
    let mut lit = [0u8; 288];
    lit[..144].fill(8);
    lit[144..256].fill(9);
    lit[256..280].fill(7);
    lit[280..].fill(8);
    let dist = [5u8; 30];
    (
        Huffman::new(&lit).expect("fixed literal table"),
        Huffman::new(&dist).expect("fixed distance table"),
    )
}

fn dynamic_tables(br: &mut BitReader<'_>) -> Result<(Huffman, Huffman), &'static str> {
    let hlit = br.bits(5)? as usize + 257;
    let hdist = br.bits(5)? as usize + 1;
    let hclen = br.bits(4)? as usize + 4;
    if hlit > 286 || hdist > 30 {
        return Err("bad code counts");
    }
    let mut cl_lengths = [0u8; 19];
    for &idx in CODE_LENGTH_ORDER.iter().take(hclen) {
        cl_lengths[idx] = br.bits(3)? as u8;
    }
    let cl = Huffman::new(&cl_lengths)?;
    let mut lengths = vec![0u8; hlit + hdist];
    let mut i = 0;
    while i < hlit + hdist {
        let sym = cl.decode(br)?;
        let (value, repeat) = match sym {
            0..=15 => (sym as u8, 1),
            16 => {
                let prev = *lengths[..i]
                    .last()
                    .ok_or("repeat with no previous length")?;
                (prev, 3 + br.bits(2)? as usize)
            }
            17 => (0, 3 + br.bits(3)? as usize),
            18 => (0, 11 + br.bits(7)? as usize),
            _ => return Err("bad code length symbol"),
        };
        if i + repeat > lengths.len() {
            return Err("too many code lengths");
        }
        lengths[i..i + repeat].fill(value);
        i += repeat;
    }
    if lengths[256] == 0 {
        return Err("missing end-of-block code");
    }
    Ok((
        Huffman::new(&lengths[..hlit])?,
        Huffman::new(&lengths[hlit..])?,
    ))
}

fn inflate_blocks(br: &mut BitReader<'_>, out: &mut Vec<u8>) -> Result<(), &'static str> {
    loop {
        let last = br.bits(1)? == 1;
        match br.bits(2)? {
            0 => {
                br.align_to_byte();
                let len = br.bits(16)?;
                let nlen = br.bits(16)?;
                if len != !nlen & 0xFFFF {
                    return Err("stored block length mismatch");
                }
                // The bit buffer is empty after two aligned 16-bit reads.
                let start = br.pos;
                let end = start + len as usize;
                let chunk = br.data.get(start..end).ok_or("unexpected end of data")?;
                out.extend_from_slice(chunk);
                br.pos = end;
            }
            1 => {
                let (lit, dist) = fixed_tables();
                codes(br, out, &lit, &dist)?;
            }
            2 => {
                let (lit, dist) = dynamic_tables(br)?;
                codes(br, out, &lit, &dist)?;
            }
            _ => return Err("invalid block type"),
        }
        if last {
            return Ok(());
        }
    }
}

fn codes(
    br: &mut BitReader<'_>,
    out: &mut Vec<u8>,
    lit: &Huffman,
    dist: &Huffman,
) -> Result<(), &'static str> {
    loop {
        let sym = lit.decode(br)?;
        match sym {
            0..=255 => out.push(sym as u8),
            256 => return Ok(()),
            257..=285 => {
                let idx = (sym - 257) as usize;
                let len =
                    LENGTH_BASE[idx] as usize + br.bits(u32::from(LENGTH_EXTRA[idx]))? as usize;
                let dsym = dist.decode(br)? as usize;
                if dsym >= 30 {
                    return Err("invalid distance symbol");
                }
                let d = DIST_BASE[dsym] as usize + br.bits(u32::from(DIST_EXTRA[dsym]))? as usize;
                if d > out.len() {
                    return Err("distance too far back");
                }
                let from = out.len() - d;
                for k in 0..len {
                    let b = out[from + k];
                    out.push(b);
                }
            }
            _ => return Err("invalid literal/length symbol"),
        }
    }
}

/// Decodes a raw DEFLATE stream.
pub fn inflate_raw(data: &[u8]) -> Result<Vec<u8>, InflateError> {
    let mut out = Vec::with_capacity(data.len().saturating_mul(3));
    let mut br = BitReader::new(data);
    match inflate_blocks(&mut br, &mut out) {
        Ok(()) => Ok(out),
        Err(message) => Err(InflateError {
            message,
            partial: out,
        }),
    }
}

/// Decodes a zlib stream. A missing or invalid zlib header falls back to raw
/// DEFLATE; a bad trailing checksum is ignored.
pub fn inflate_zlib(data: &[u8]) -> Result<Vec<u8>, InflateError> {
    let has_header = data.len() >= 2
        && data[0] & 0x0F == 8
        && data[0] >> 4 <= 7
        && (u16::from(data[0]) << 8 | u16::from(data[1])) % 31 == 0
        && data[1] & 0x20 == 0;
    if !has_header {
        return inflate_raw(data);
    }
    inflate_raw(&data[2..])
}
