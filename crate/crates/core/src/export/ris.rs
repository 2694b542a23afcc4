//! RIS export.

use super::split_authors;
use crate::record::HarvestRecord;

fn tag(out: &mut String, name: &str, value: &str) {
    out.push_str(name);
    out.push_str("  - ");
    out.push_str(value);
    out.push('\n');
}

/// One `TY  - JOUR` block per record with AU, TI and PY tags, blocks
/// separated by a blank line.
pub fn export_ris(records: &[HarvestRecord]) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        tag(&mut out, "TY", "JOUR");
        for author in r.author.as_deref().into_iter().flat_map(split_authors) {
            tag(&mut out, "AU", &single_line(author));
        }
        if let Some(title) = &r.title {
            tag(&mut out, "TI", &single_line(title));
        }
        tag(&mut out, "PY", &r.year.to_string());
        tag(&mut out, "ER", "");
    }
    out
}

// Tag values cannot span lines.
fn single_line(value: &str) -> String {
    value
        .split(['\r', '\n'])
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::export::test_support::record;

    #[test]
    fn two_authors() {
        let out = export_ris(&[record(1, "a.pdf", 2010, Some("A. One, B. Two"), Some("T"))]);
        assert_eq!(
            out,
            "TY  - JOUR\nAU  - A. One\nAU  - B. Two\nTI  - T\nPY  - 2010\nER  - \n"
        );
    }

    #[test]
    fn absent_title_and_author() {
        let out = export_ris(&[
            record(1, "a.pdf", 2010, None, None),
            record(2, "b.pdf", 2011, None, None),
        ]);
        assert!(!out.contains("TI  -") && !out.contains("AU  -"));
        assert_eq!(out.matches("ER  - \n").count(), 2);
        assert!(out.contains("ER  - \n\nTY  - JOUR"));
    }
}
