//! Calendar timestamps from PDF date strings (`D:YYYYMMDDHHmmSSOHH'mm'`) and
//! XMP ISO-8601 dates, both with trailing components optional.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A calendar timestamp with an optional UTC offset.
///
/// Missing month and day default to 1, missing time components to 0. An
/// absent offset means local time of unspecified zone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PdfDate {
    pub year: i32,
    pub month: u8,
    pub day: u8,
    pub hour: u8,
    pub minute: u8,
    pub second: u8,
    /// Offset from UTC in minutes.
    pub offset_minutes: Option<i32>,
}

impl PdfDate {
    pub fn ymd(year: i32, month: u8, day: u8) -> Self {
        PdfDate {
            year,
            month,
            day,
            hour: 0,
            minute: 0,
            second: 0,
            offset_minutes: None,
        }
    }

    pub fn with_time(mut self, hour: u8, minute: u8, second: u8) -> Self {
        self.hour = hour;
        self.minute = minute;
        self.second = second;
        self
    }

    pub fn with_offset(mut self, minutes: i32) -> Self {
        self.offset_minutes = Some(minutes);
        self
    }

    /// Renders in PDF date syntax, e.g. `D:20101231235959+07'00'`.
    pub fn to_pdf_string(&self) -> String {
        let mut s = format!(
            "D:{:04}{:02}{:02}{:02}{:02}{:02}",
            self.year, self.month, self.day, self.hour, self.minute, self.second
        );
        match self.offset_minutes {
            None => {}
            Some(0) => s.push('Z'),
            Some(m) => {
                let sign = if m < 0 { '-' } else { '+' };
                let m = m.abs();
                s.push_str(&format!("{sign}{:02}'{:02}'", m / 60, m % 60));
            }
        }
        s
    }

    fn validate(self, original: &str) -> Result<Self> {
        let ok = (1..=12).contains(&self.month)
            && (1..=31).contains(&self.day)
            && self.hour <= 23
            && self.minute <= 59
            && self.second <= 60
            && self.offset_minutes.is_none_or(|m| m.abs() < 24 * 60);
        if ok {
            Ok(self)
        } else {
            Err(Error::UnparseableDate(original.to_owned()))
        }
    }
}

impl fmt::Display for PdfDate {
    /// ISO-8601, e.g. `2010-12-31T23:59:59+07:00`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:04}-{:02}-{:02}T{:02}:{:02}:{:02}",
            self.year, self.month, self.day, self.hour, self.minute, self.second
        )?;
        if let Some(m) = self.offset_minutes {
            let sign = if m < 0 { '-' } else { '+' };
            let m = m.abs();
            write!(f, "{sign}{:02}:{:02}", m / 60, m % 60)?;
        }
        Ok(())
    }
}

impl Serialize for PdfDate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn digits(&mut self, n: usize) -> Option<u32> {
        let chunk = self.bytes.get(self.pos..self.pos + n)?;
        if !chunk.iter().all(u8::is_ascii_digit) {
            return None;
        }
        self.pos += n;
        Some(
            chunk
                .iter()
                .fold(0, |acc, d| acc * 10 + u32::from(d - b'0')),
        )
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
}

/// Month/day of `00` from sloppy writers read as the default.
fn or_one(v: u32) -> u8 {
    v.max(1) as u8
}

/// Parses a PDF date string. Everything after the year is optional and the
/// `D:` prefix may be omitted.
pub fn parse_pdf_date(s: &str) -> Result<PdfDate> {
    let trimmed = s.trim_matches(|c: char| c.is_whitespace() || c == '\0');
    let body = trimmed.strip_prefix("D:").unwrap_or(trimmed);
    let mut c = Cursor {
        bytes: body.as_bytes(),
        pos: 0,
    };
    let year = c
        .digits(4)
        .ok_or_else(|| Error::UnparseableDate(s.to_owned()))?;
    let mut date = PdfDate::ymd(year as i32, 1, 1);
    'fields: {
        let Some(month) = c.digits(2) else {
            break 'fields;
        };
        date.month = or_one(month);
        let Some(day) = c.digits(2) else {
            break 'fields;
        };
        date.day = or_one(day);
        let Some(hour) = c.digits(2) else {
            break 'fields;
        };
        date.hour = hour as u8;
        let Some(minute) = c.digits(2) else {
            break 'fields;
        };
        date.minute = minute as u8;
        let Some(second) = c.digits(2) else {
            break 'fields;
        };
        date.second = second as u8;
    }
    match c.peek() {
        Some(b'Z') => date.offset_minutes = Some(0),
        Some(sign @ (b'+' | b'-')) => {
            c.pos += 1;
            if let Some(hours) = c.digits(2) {
                c.eat(b'\'');
                let minutes = c.digits(2).unwrap_or(0);
                let total = (hours * 60 + minutes) as i32;
                date.offset_minutes = Some(if sign == b'-' { -total } else { total });
            }
        }
        _ => {}
    }
    date.validate(s)
}

/// Parses an XMP (ISO-8601) date: `YYYY[-MM[-DD[THH:MM[:SS[.s+]][TZD]]]]`.
pub fn parse_xmp_date(s: &str) -> Result<PdfDate> {
    let trimmed = s.trim();
    let mut c = Cursor {
        bytes: trimmed.as_bytes(),
        pos: 0,
    };
    let year = c
        .digits(4)
        .ok_or_else(|| Error::UnparseableDate(s.to_owned()))?;
    let mut date = PdfDate::ymd(year as i32, 1, 1);
    'fields: {
        if !c.eat(b'-') {
            break 'fields;
        }
        let Some(month) = c.digits(2) else {
            break 'fields;
        };
        date.month = or_one(month);
        if !c.eat(b'-') {
            break 'fields;
        }
        let Some(day) = c.digits(2) else {
            break 'fields;
        };
        date.day = or_one(day);
        if !(c.eat(b'T') || c.eat(b't') || c.eat(b' ')) {
            break 'fields;
        }
        let Some(hour) = c.digits(2) else {
            break 'fields;
        };
        date.hour = hour as u8;
        if !c.eat(b':') {
            break 'fields;
        }
        let Some(minute) = c.digits(2) else {
            break 'fields;
        };
        date.minute = minute as u8;
        if c.eat(b':') {
            let Some(second) = c.digits(2) else {
                break 'fields;
            };
            date.second = second as u8;
            if c.eat(b'.') || c.eat(b',') {
                while c.peek().is_some_and(|b| b.is_ascii_digit()) {
                    c.pos += 1;
                }
            }
        }
        match c.peek() {
            Some(b'Z' | b'z') => date.offset_minutes = Some(0),
            Some(sign @ (b'+' | b'-')) => {
                c.pos += 1;
                if let Some(hours) = c.digits(2) {
                    c.eat(b':');
                    let minutes = c.digits(2).unwrap_or(0);
                    let total = (hours * 60 + minutes) as i32;
                    date.offset_minutes = Some(if sign == b'-' { -total } else { total });
                }
            }
            _ => {}
        }
    }
    date.validate(s)
}
