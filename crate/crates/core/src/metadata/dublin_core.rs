//! The fifteen Dublin Core elements as harvested from XMP.

use serde::Serialize;

use super::xmp::{ns, XmpPacket, XmpValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DcElement {
    Title,
    Creator,
    Subject,
    Description,
    Publisher,
    Contributor,
    Date,
    Type,
    Format,
    Identifier,
    Source,
    Language,
    Relation,
    Coverage,
    Rights,
}

impl DcElement {
    pub const ALL: [DcElement; 15] = [
        DcElement::Title,
        DcElement::Creator,
        DcElement::Subject,
        DcElement::Description,
        DcElement::Publisher,
        DcElement::Contributor,
        DcElement::Date,
        DcElement::Type,
        DcElement::Format,
        DcElement::Identifier,
        DcElement::Source,
        DcElement::Language,
        DcElement::Relation,
        DcElement::Coverage,
        DcElement::Rights,
    ];

    /// Local name in the `dc:` namespace.
    pub fn local_name(self) -> &'static str {
        match self {
            DcElement::Title => "title",
            DcElement::Creator => "creator",
            DcElement::Subject => "subject",
            DcElement::Description => "description",
            DcElement::Publisher => "publisher",
            DcElement::Contributor => "contributor",
            DcElement::Date => "date",
            DcElement::Type => "type",
            DcElement::Format => "format",
            DcElement::Identifier => "identifier",
            DcElement::Source => "source",
            DcElement::Language => "language",
            DcElement::Relation => "relation",
            DcElement::Coverage => "coverage",
            DcElement::Rights => "rights",
        }
    }

    pub fn from_local_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.local_name() == name)
    }
}

/// One slot per Dublin Core element; each holds the value as it appeared in
/// the packet (Alt for title/description/rights, Seq for creator, Bag for
/// subject, and so on).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DublinCoreRecord {
    pub title: Option<XmpValue>,
    pub creator: Option<XmpValue>,
    pub subject: Option<XmpValue>,
    pub description: Option<XmpValue>,
    pub publisher: Option<XmpValue>,
    pub contributor: Option<XmpValue>,
    pub date: Option<XmpValue>,
    #[serde(rename = "type")]
    pub dc_type: Option<XmpValue>,
    pub format: Option<XmpValue>,
    pub identifier: Option<XmpValue>,
    pub source: Option<XmpValue>,
    pub language: Option<XmpValue>,
    pub relation: Option<XmpValue>,
    pub coverage: Option<XmpValue>,
    pub rights: Option<XmpValue>,
}

impl DublinCoreRecord {
    pub fn get(&self, element: DcElement) -> Option<&XmpValue> {
        match element {
            DcElement::Title => self.title.as_ref(),
            DcElement::Creator => self.creator.as_ref(),
            DcElement::Subject => self.subject.as_ref(),
            DcElement::Description => self.description.as_ref(),
            DcElement::Publisher => self.publisher.as_ref(),
            DcElement::Contributor => self.contributor.as_ref(),
            DcElement::Date => self.date.as_ref(),
            DcElement::Type => self.dc_type.as_ref(),
            DcElement::Format => self.format.as_ref(),
            DcElement::Identifier => self.identifier.as_ref(),
            DcElement::Source => self.source.as_ref(),
            DcElement::Language => self.language.as_ref(),
            DcElement::Relation => self.relation.as_ref(),
            DcElement::Coverage => self.coverage.as_ref(),
            DcElement::Rights => self.rights.as_ref(),
        }
    }

    fn slot_mut(&mut self, element: DcElement) -> &mut Option<XmpValue> {
        match element {
            DcElement::Title => &mut self.title,
            DcElement::Creator => &mut self.creator,
            DcElement::Subject => &mut self.subject,
            DcElement::Description => &mut self.description,
            DcElement::Publisher => &mut self.publisher,
            DcElement::Contributor => &mut self.contributor,
            DcElement::Date => &mut self.date,
            DcElement::Type => &mut self.dc_type,
            DcElement::Format => &mut self.format,
            DcElement::Identifier => &mut self.identifier,
            DcElement::Source => &mut self.source,
            DcElement::Language => &mut self.language,
            DcElement::Relation => &mut self.relation,
            DcElement::Coverage => &mut self.coverage,
            DcElement::Rights => &mut self.rights,
        }
    }

    /// Number of elements with a value.
    pub fn present_count(&self) -> usize {
        DcElement::ALL
            .iter()
            .filter(|e| self.get(**e).is_some())
            .count()
    }
}

/// Copies every `dc:*` property of the packet into its slot. Other
/// namespaces are ignored.
pub fn to_dublin_core(packet: &XmpPacket) -> DublinCoreRecord {
    let mut record = DublinCoreRecord::default();
    for prop in packet.properties.iter().filter(|p| p.namespace == ns::DC) {
        if let Some(element) = DcElement::from_local_name(&prop.name) {
            *record.slot_mut(element) = Some(prop.value.clone());
        }
    }
    record
}
