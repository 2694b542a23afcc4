//! The plain-text harvest table.

use crate::record::HarvestRecord;

pub const FILE_NAME_BUDGET: usize = 30;
pub const AUTHOR_BUDGET: usize = 25;
pub const TITLE_BUDGET: usize = 45;

const HEADERS: [&str; 6] = ["Docs", "File Name", "Year", "Recency", "Author", "Title"];
const BUDGETS: [Option<usize>; 6] = [
    None,
    Some(FILE_NAME_BUDGET),
    None,
    None,
    Some(AUTHOR_BUDGET),
    Some(TITLE_BUDGET),
];
const GAP: &str = "  ";
const ABSENT: &str = "null";

fn truncate(value: &str, budget: Option<usize>) -> String {
    match budget {
        Some(b) if value.chars().count() > b => {
            let mut s: String = value.chars().take(b.saturating_sub(3)).collect();
            s.push_str("...");
            s
        }
        _ => value.to_owned(),
    }
}

fn one_line(value: &str) -> String {
    value
        .split(|c: char| c.is_control())
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cells(r: &HarvestRecord) -> [String; 6] {
    let opt = |v: &Option<String>| v.as_deref().map_or_else(|| ABSENT.to_owned(), one_line);
    [
        r.doc_index.to_string(),
        one_line(&r.file_name),
        r.year.to_string(),
        r.recency.to_string(),
        opt(&r.author),
        opt(&r.title),
    ]
}

/// Renders records as a fixed-column table: Docs, File Name, Year, Recency,
/// Author, Title. Absent authors and titles print as `null`; over-long values
/// are cut to the column budget and end in `...`.
pub fn render_table(records: &[HarvestRecord]) -> String {
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| {
            let mut c = cells(r);
            for (cell, budget) in c.iter_mut().zip(BUDGETS) {
                *cell = truncate(cell, budget);
            }
            c
        })
        .collect();

    let mut widths = HEADERS.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }

    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let mut l = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i > 0 {
                l.push_str(GAP);
            }
            l.push_str(cell);
            l.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(&HEADERS);
    for row in &rows {
        line(&row.each_ref().map(String::as_str));
    }
    out
}
