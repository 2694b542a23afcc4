//! RFC 4180 CSV export.

use crate::record::HarvestRecord;

pub const CSV_HEADER: [&str; 13] = [
    "doc_index",
    "file_name",
    "file_location",
    "file_size",
    "file_pages",
    "year",
    "recency",
    "author",
    "title",
    "keywords",
    "creation_date",
    "year_source",
    "encrypted",
];

fn push_field(out: &mut String, value: &str) {
    if value.contains([',', '"', '\r', '\n']) {
        out.push('"');
        out.push_str(&value.replace('"', "\"\""));
        out.push('"');
    } else {
        out.push_str(value);
    }
}

fn push_row<S: AsRef<str>>(out: &mut String, row: &[S]) {
    for (i, v) in row.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        push_field(out, v.as_ref());
    }
    out.push_str("\r\n");
}

/// One header row plus one row per record. Absent values are empty fields.
pub fn export_csv(records: &[HarvestRecord]) -> String {
    let mut out = String::new();
    push_row(&mut out, &CSV_HEADER);
    for r in records {
        let row = [
            r.doc_index.to_string(),
            r.file_name.clone(),
            r.file_location.clone(),
            r.file_size.to_string(),
            r.file_pages.to_string(),
            r.year.to_string(),
            r.recency.to_string(),
            r.author.clone().unwrap_or_default(),
            r.title.clone().unwrap_or_default(),
            r.keywords.clone().unwrap_or_default(),
            r.creation_date.map(|d| d.to_string()).unwrap_or_default(),
            format!("{:?}", r.year_source),
            r.encrypted.to_string(),
        ];
        push_row(&mut out, &row);
    }
    out
}
