//! BibTeX export.

use std::collections::HashSet;
use std::path::Path;

use super::split_authors;
use crate::record::HarvestRecord;

/// Citation key stem: the file name without extension, with every character
/// outside `[A-Za-z0-9_-]` replaced by `_`.
pub fn citation_key(file_name: &str) -> String {
    let stem = Path::new(file_name)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let key: String = stem
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect();
    if key.is_empty() {
        "record".into()
    } else {
        key
    }
}

// BibTeX counts braces even when backslash-escaped, so braces and
// backslashes become balanced text commands.
fn escape(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '{' => out.push_str("\\textbraceleft{}"),
            '}' => out.push_str("\\textbraceright{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            '\r' | '\n' => out.push(' '),
            c => out.push(c),
        }
    }
    out
}

/// One `@article` entry per record. Keys are unique within the export:
/// repeats get `-2`, `-3`, ... suffixes.
pub fn export_bibtex(records: &[HarvestRecord]) -> String {
    let mut used = HashSet::new();
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        let stem = citation_key(&r.file_name);
        let mut key = stem.clone();
        let mut n = 1;
        while !used.insert(key.clone()) {
            n += 1;
            key = format!("{stem}-{n}");
        }
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("@article{{{key},\n"));
        if let Some(author) = &r.author {
            let people: Vec<_> = split_authors(author).map(escape).collect();
            if !people.is_empty() {
                out.push_str(&format!("  author = {{{}}},\n", people.join(" and ")));
            }
        }
        if let Some(title) = &r.title {
            out.push_str(&format!("  title = {{{}}},\n", escape(title)));
        }
        out.push_str(&format!("  year = {{{}}}\n}}\n", r.year));
    }
    out
}
