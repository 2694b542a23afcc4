//! Synthetic inputs for the benchmarks in `benches/`.

use std::fs;
use std::io;
use std::path::Path;

/// A classic-xref PDF with `pages` empty pages, a DocInfo dictionary and an
/// XMP metadata stream.
pub fn sample_pdf(title: &str, author: &str, year: i32, pages: usize) -> Vec<u8> {
    let xmp = format!(
        "<?xpacket begin=\"\" id=\"W5M0MpCehiHzreSzNTczkc9d\"?>\n\
<x:xmpmeta xmlns:x=\"adobe:ns:meta/\"><rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">\
<rdf:Description rdf:about=\"\" xmlns:dc=\"http://purl.org/dc/elements/1.1/\" xmlns:xmp=\"http://ns.adobe.com/xap/1.0/\">\
<dc:title><rdf:Alt><rdf:li xml:lang=\"x-default\">{title}</rdf:li></rdf:Alt></dc:title>\
<dc:creator><rdf:Seq><rdf:li>{author}</rdf:li></rdf:Seq></dc:creator>\
<xmp:CreateDate>{year:04}-05-01T10:00:00Z</xmp:CreateDate>\
</rdf:Description></rdf:RDF></x:xmpmeta>\n<?xpacket end=\"w\"?>"
    );
    let first_page = 5;
    let kids: Vec<String> = (0..pages)
        .map(|i| format!("{} 0 R", first_page + i))
        .collect();
    let mut objects = vec![
        "<< /Type /Catalog /Pages 2 0 R /Metadata 3 0 R >>".to_string(),
        format!(
            "<< /Type /Pages /Kids [{}] /Count {pages} >>",
            kids.join(" ")
        ),
        format!(
            "<< /Type /Metadata /Subtype /XML /Length {} >>\nstream\n{xmp}\nendstream",
            xmp.len() + 1
        ),
        format!("<< /Title ({title}) /Author ({author}) /CreationDate (D:{year:04}0101120000Z) >>"),
    ];
    for _ in 0..pages {
        objects.push("<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >>".to_string());
    }

    let mut out = b"%PDF-1.4\n".to_vec();
    let mut offsets = Vec::new();
    for (i, body) in objects.iter().enumerate() {
        offsets.push(out.len());
        out.extend_from_slice(format!("{} 0 obj\n{body}\nendobj\n", i + 1).as_bytes());
    }
    let xref = out.len();
    out.extend_from_slice(
        format!("xref\n0 {}\n0000000000 65535 f \n", objects.len() + 1).as_bytes(),
    );
    for off in offsets {
        out.extend_from_slice(format!("{off:010} 00000 n \n").as_bytes());
    }
    out.extend_from_slice(
        format!(
            "trailer\n<< /Size {} /Root 1 0 R /Info 4 0 R >>\nstartxref\n{xref}\n%%EOF\n",
            objects.len() + 1
        )
        .as_bytes(),
    );
    out
}

/// Fills `dir` with `count` PDFs spread over a few subdirectories, plus one
/// text file per ten PDFs.
pub fn write_corpus(dir: &Path, count: usize) -> io::Result<()> {
    for i in 0..count {
        let sub = dir.join(format!("d{}", i % 4));
        fs::create_dir_all(&sub)?;
        let pdf = sample_pdf(
            &format!("Title {i}"),
            &format!("Author {i}"),
            1990 + (i % 30) as i32,
            1 + i % 3,
        );
        fs::write(sub.join(format!("f{i:05}.pdf")), pdf)?;
        if i % 10 == 0 {
            fs::write(sub.join(format!("n{i:05}.txt")), "notes")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use harvester_core::pdf::RawDocument;

    #[test]
    fn sample_pdf_parses_without_reconstruction() {
        let doc = RawDocument::from_bytes("s.pdf", sample_pdf("T", "A", 2001, 3)).unwrap();
        assert!(!doc.was_reconstructed(), "{:?}", doc.warnings());
        assert_eq!(doc.page_count(&mut Vec::new()), 3);
    }

    #[test]
    fn corpus_has_expected_files() {
        let dir = tempfile::tempdir().unwrap();
        write_corpus(dir.path(), 20).unwrap();
        let stats = harvester_core::scan(
            dir.path(),
            harvester_core::ReferenceDate::from_year(2020).unwrap(),
            &Default::default(),
        )
        .unwrap();
        assert_eq!(stats.records.len(), 20);
        assert_eq!(stats.total_files, 22);
        assert_eq!(stats.records[0].title.as_deref(), Some("Title 0"));
    }
}
