mod common;

use common::{destroy_xref, expected, oracle_family, write_file, write_pdf, Fixture, Layout, Xmp};
use harvester_core::metadata::{extract_docinfo, locate_xmp, parse_xmp, XmpOrigin};
use harvester_core::pdf::RawDocument;
use harvester_core::{build_record, Error, ReferenceDate, YearSource};

fn reference() -> ReferenceDate {
    ReferenceDate::from_year(2012).unwrap()
}

#[test]
fn docinfo_fields_recovered_verbatim() {
    for (i, f) in oracle_family().iter().enumerate() {
        let doc = RawDocument::from_bytes(format!("f{i}.pdf"), write_pdf(f)).unwrap();
        let mut w = Vec::new();
        let info = extract_docinfo(&doc, &mut w);
        assert_eq!(info.title, f.title, "fixture {i}");
        assert_eq!(info.author, f.author, "fixture {i}");
        let (y, mo, d, h, mi, s) = f.creation.unwrap();
        let got = info.creation_date.unwrap();
        assert_eq!(
            (
                got.year,
                got.month,
                got.day,
                got.hour,
                got.minute,
                got.second,
                got.offset_minutes
            ),
            (y, mo, d, h, mi, s, Some(0)),
            "fixture {i}"
        );
        assert_eq!(info.producer.as_deref(), Some("fixture writer"));
    }
}

#[test]
fn xmp_packets_located_and_parsed() {
    for (i, f) in oracle_family().iter().enumerate() {
        let doc = RawDocument::from_bytes(format!("f{i}.pdf"), write_pdf(f)).unwrap();
        let mut w = Vec::new();
        let raw = locate_xmp(&doc, &mut w);
        let Some(x) = &f.xmp else {
            assert!(raw.is_none(), "fixture {i}");
            continue;
        };
        let raw = raw.unwrap();
        assert_eq!(raw.origin, XmpOrigin::MetadataStream, "fixture {i}");
        let packet = parse_xmp(&raw.bytes);
        assert!(packet.well_formed, "fixture {i}: {:?}", packet.warnings);
        let dc = harvester_core::metadata::to_dublin_core(&packet);
        assert_eq!(dc.title.unwrap().first_text(), x.title.as_deref());
        let creators = dc.creator.unwrap();
        assert_eq!(
            creators.texts(),
            x.creators.iter().map(String::as_str).collect::<Vec<_>>()
        );
    }
}

#[test]
fn harvested_records_match_planted_fields() {
    let dir = tempfile::tempdir().unwrap();
    for (i, f) in oracle_family().iter().enumerate() {
        let path = write_file(dir.path(), &format!("oracle{i:02}.pdf"), f);
        let r = build_record(&path, i + 1, reference()).unwrap();
        let e = expected(f);
        assert_eq!(r.title, e.title, "fixture {i}");
        assert_eq!(r.author, e.author, "fixture {i}");
        assert_eq!(Some(r.year), e.year, "fixture {i}");
        assert_eq!(r.file_pages as usize, f.pages, "fixture {i}");
        let source = if f.xmp.is_some() {
            YearSource::XmpCreateDate
        } else {
            YearSource::DocInfoCreationDate
        };
        assert_eq!(r.year_source, source, "fixture {i}");
    }
}

#[test]
fn page_and_object_counts_agree_with_lopdf_reader() {
    for (i, f) in oracle_family().iter().enumerate() {
        let bytes = write_pdf(f);
        let theirs = lopdf::Document::load_mem(&bytes).unwrap();
        let ours = RawDocument::from_bytes("x.pdf", bytes).unwrap();
        assert_eq!(
            ours.page_count(&mut Vec::new()) as usize,
            theirs.get_pages().len(),
            "fixture {i}"
        );
        // Container streams are bookkeeping; readers differ on keeping them.
        let ours_ids: Vec<(u32, u16)> = ours
            .objects()
            .filter(|(_, o)| {
                !matches!(
                    o.as_stream()
                        .and_then(|s| s.get("Type"))
                        .and_then(|t| t.as_name()),
                    Some("ObjStm" | "XRef")
                )
            })
            .map(|(id, _)| (id.number, id.generation))
            .collect();
        let theirs_ids: Vec<(u32, u16)> = theirs
            .objects
            .iter()
            .filter(|(_, o)| {
                !matches!(
                    o.as_stream()
                        .ok()
                        .and_then(|s| s.dict.get(b"Type").ok())
                        .and_then(|t| t.as_name().ok()),
                    Some(b"ObjStm" | b"XRef")
                )
            })
            .map(|(id, _)| *id)
            .collect();
        assert_eq!(ours_ids, theirs_ids, "fixture {i}");
    }
}

#[test]
fn modern_layout_uses_object_streams() {
    let f = Fixture {
        title: Some("T".into()),
        layout: Layout::Modern,
        ..Default::default()
    };
    let bytes = write_pdf(&f);
    assert!(bytes.windows(6).any(|w| w == b"ObjStm"));
    let doc = RawDocument::from_bytes("m.pdf", bytes).unwrap();
    assert!(!doc.was_reconstructed(), "{:?}", doc.warnings());
    let info = extract_docinfo(&doc, &mut Vec::new());
    assert_eq!(info.title.as_deref(), Some("T"));
}

#[test]
fn destroyed_xref_twins_match_intact() {
    let dir = tempfile::tempdir().unwrap();
    let family: Vec<_> = oracle_family()
        .into_iter()
        .filter(|f| f.layout == Layout::Classic)
        .collect();
    for (i, f) in family.iter().enumerate() {
        let intact = write_pdf(f);
        let broken = destroy_xref(&intact, i);
        assert_ne!(intact, broken);
        let a = dir.path().join(format!("intact{i}.pdf"));
        let b = dir.path().join(format!("broken{i}.pdf"));
        std::fs::write(&a, &intact).unwrap();
        std::fs::write(&b, &broken).unwrap();
        let ra = build_record(&a, 1, reference()).unwrap();
        let rb = build_record(&b, 1, reference()).unwrap();
        assert_eq!(
            (&ra.title, &ra.author, ra.year, ra.file_pages),
            (&rb.title, &rb.author, rb.year, rb.file_pages),
            "mode {} fixture {i}: {:?}",
            i % 5,
            rb.warnings
        );
        let doc = RawDocument::from_bytes("b.pdf", broken).unwrap();
        assert!(doc.was_reconstructed());
    }
}

#[test]
fn destroyed_xref_stream_recovers_from_object_streams() {
    let f = Fixture {
        title: Some("Compressed world".into()),
        author: Some("A. Author".into()),
        creation: Some((2003, 1, 2, 3, 4, 5)),
        layout: Layout::Modern,
        ..Default::default()
    };
    let mut bytes = write_pdf(&f);
    // Blank the xref stream object wholesale, header through endobj.
    let start = bytes.windows(9).rposition(|w| w == b"startxref").unwrap();
    let off: usize = String::from_utf8_lossy(&bytes[start + 9..])
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    let end = bytes[off..]
        .windows(6)
        .position(|w| w == b"endobj")
        .unwrap()
        + off
        + 6;
    bytes[off..end].iter_mut().for_each(|b| *b = b' ');
    let doc = RawDocument::from_bytes("s.pdf", bytes).unwrap();
    assert!(doc.was_reconstructed());
    let info = extract_docinfo(&doc, &mut Vec::new());
    assert_eq!(info.title.as_deref(), Some("Compressed world"));
    assert_eq!(info.author.as_deref(), Some("A. Author"));
    assert_eq!(doc.page_count(&mut Vec::new()), 1);
}

#[test]
fn encrypted_degrades_to_filesystem_fields() {
    let dir = tempfile::tempdir().unwrap();
    let f = Fixture {
        encrypted: true,
        ..Fixture::docinfo(Some("Secret"), Some("Spy"), Some(2001))
    };
    let bytes = write_pdf(&f);
    assert!(matches!(
        RawDocument::from_bytes("e.pdf", bytes.clone()),
        Err(Error::Encrypted)
    ));
    let path = dir.path().join("e.pdf");
    std::fs::write(&path, bytes).unwrap();
    let r = build_record(&path, 1, reference()).unwrap();
    assert!(r.encrypted);
    assert_eq!((r.title, r.author), (None, None));
    assert_eq!(r.year_source, YearSource::FilesystemMtime);
    assert_eq!(r.file_pages, 0);
}

#[test]
fn xmp_wins_field_by_field() {
    let dir = tempfile::tempdir().unwrap();
    let f = Fixture {
        xmp: Some(Xmp {
            title: None,
            creators: vec!["X Creator".into()],
            create_date: None,
            keywords: None,
        }),
        ..Fixture::docinfo(Some("Info Title"), Some("Info Author"), Some(1998))
    };
    let path = write_file(dir.path(), "m.pdf", &f);
    let r = build_record(&path, 1, reference()).unwrap();
    assert_eq!(r.title.as_deref(), Some("Info Title"));
    assert_eq!(r.author.as_deref(), Some("X Creator"));
    assert_eq!((r.year, r.recency), (1998, 14));
    assert_eq!(r.year_source, YearSource::DocInfoCreationDate);
}
