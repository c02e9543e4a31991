use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{Covering, Theorem};
use crate::graph::{disjoint_union, Graph, Orientation};
use crate::torus::make_torus;
use crate::verify::CoveringReport;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainDescriptor {
    /// Number of sunlet copies.
    pub s: usize,
    /// Cycle length of each sunlet.
    pub p: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodomainDescriptor {
    pub p: usize,
    pub q: usize,
}

/// On-disk form of a [`Covering`], schema version 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CoveringDocument {
    pub schema_version: u64,
    pub theorem: Theorem,
    pub n: usize,
    pub domain: DomainDescriptor,
    pub codomain: CodomainDescriptor,
    /// Grid coordinates `(x, y)` of the image of each domain vertex.
    pub vertex_map: Vec<(usize, usize)>,
    /// Domain arcs in domain edge-id order.
    pub domain_arcs: Vec<(usize, usize)>,
    /// Codomain arcs in codomain edge-id order, as vertex ids `x·q + y`.
    pub codomain_arcs: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<CoveringReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("unknown schemaVersion {0}, expected {SCHEMA_VERSION}")]
    UnknownSchemaVersion(u64),
    #[error("missing or non-integer schemaVersion")]
    MissingSchemaVersion,
    #[error("invalid {field}: {reason}")]
    Parameter { field: &'static str, reason: String },
    #[error("{field} has {found} entries, expected {expected}")]
    Size {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{field}[{index}] is out of range")]
    OutOfRange { field: &'static str, index: usize },
    #[error("{field} is not an orientation: {reason}")]
    InvalidArcs { field: &'static str, reason: String },
}

impl CoveringDocument {
    pub fn from_covering(c: &Covering, report: Option<CoveringReport>) -> Self {
        let grid = c.codomain();
        CoveringDocument {
            schema_version: SCHEMA_VERSION,
            theorem: c.theorem(),
            n: c.n(),
            domain: DomainDescriptor {
                s: c.domain().copies(),
                p: c.domain().p(),
            },
            codomain: CodomainDescriptor {
                p: grid.p(),
                q: grid.q(),
            },
            vertex_map: c.vertex_map().iter().map(|&v| grid.coords(v)).collect(),
            domain_arcs: c.domain_orientation().arcs().to_vec(),
            codomain_arcs: c.codomain_orientation().arcs().to_vec(),
            report,
        }
    }

    /// Rebuilds the covering, validating every size and range.
    pub fn to_covering(&self) -> Result<Covering, JsonError> {
        let domain =
            disjoint_union(self.domain.s, self.domain.p).map_err(|e| JsonError::Parameter {
                field: "domain",
                reason: e.to_string(),
            })?;
        let codomain =
            make_torus(self.codomain.p, self.codomain.q).map_err(|e| JsonError::Parameter {
                field: "codomain",
                reason: e.to_string(),
            })?;
        let order = domain.graph().order();
        if self.vertex_map.len() != order {
            return Err(JsonError::Size {
                field: "vertexMap",
                expected: order,
                found: self.vertex_map.len(),
            });
        }
        let (p, q) = (codomain.p(), codomain.q());
        let mut vertex_map = Vec::with_capacity(order);
        for (index, &(x, y)) in self.vertex_map.iter().enumerate() {
            if x >= p || y >= q {
                return Err(JsonError::OutOfRange {
                    field: "vertexMap",
                    index,
                });
            }
            vertex_map.push(x * q + y);
        }
        let domain_orientation = orientation("domainArcs", domain.graph(), &self.domain_arcs)?;
        let codomain_orientation =
            orientation("codomainArcs", codomain.graph(), &self.codomain_arcs)?;
        Covering::from_parts(
            self.theorem,
            self.n,
            domain,
            codomain,
            vertex_map,
            domain_orientation,
            codomain_orientation,
        )
        .map_err(|e| JsonError::Parameter {
            field: "document",
            reason: e.to_string(),
        })
    }
}

fn orientation(
    field: &'static str,
    graph: &Arc<Graph>,
    arcs: &[(usize, usize)],
) -> Result<Orientation, JsonError> {
    if arcs.len() != graph.size() {
        return Err(JsonError::Size {
            field,
            expected: graph.size(),
            found: arcs.len(),
        });
    }
    if let Some(index) = arcs
        .iter()
        .position(|&(t, h)| t >= graph.order() || h >= graph.order())
    {
        return Err(JsonError::OutOfRange { field, index });
    }
    Orientation::from_arcs(Arc::clone(graph), arcs.iter().copied()).map_err(|e| {
        JsonError::InvalidArcs {
            field,
            reason: e.to_string(),
        }
    })
}

/// Canonical JSON: sorted keys, integers only, arrays in id order, trailing
/// newline.
pub fn to_json(c: &Covering, report: Option<&CoveringReport>) -> String {
    let doc = CoveringDocument::from_covering(c, report.cloned());
    // going through Value sorts every object's keys
    let value = serde_json::to_value(&doc).expect("document is plain data");
    let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
    text.push('\n');
    text
}

/// A bare report in the same canonical form.
pub fn report_to_json(report: &CoveringReport) -> String {
    let value = serde_json::to_value(report).expect("report is plain data");
    let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
    text.push('\n');
    text
}

/// Parses a document and rebuilds its covering. The embedded report, if any,
/// is returned alongside.
pub fn from_json(text: &str) -> Result<(Covering, Option<CoveringReport>), JsonError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| JsonError::Malformed(e.to_string()))?;
    match value
        .get("schemaVersion")
        .and_then(serde_json::Value::as_u64)
    {
        Some(SCHEMA_VERSION) => {}
        Some(other) => return Err(JsonError::UnknownSchemaVersion(other)),
        None => return Err(JsonError::MissingSchemaVersion),
    }
    let doc: CoveringDocument =
        serde_json::from_value(value).map_err(|e| JsonError::Malformed(e.to_string()))?;
    let covering = doc.to_covering()?;
    Ok((covering, doc.report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{t1_build, t3_build};
    use crate::verify::report_covering;

    #[test]
    fn document_fields() {
        let c = t3_build(2).unwrap();
        let doc = CoveringDocument::from_covering(&c, None);
        assert_eq!(doc.domain, DomainDescriptor { s: 4, p: 4 });
        assert_eq!(doc.codomain, CodomainDescriptor { p: 4, q: 4 });
        assert_eq!(doc.schema_version, 1);
        assert_eq!(doc.vertex_map[0], (1, 1));
    }

    #[test]
    fn keys_are_sorted() {
        let text = to_json(&t1_build(3).unwrap(), None);
        let keys: Vec<&str> = text
            .lines()
            .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(keys.contains(&"schemaVersion"));
        assert!(!text.contains('.'));
    }

    #[test]
    fn round_trip_t1() {
        let c = t1_build(3).unwrap();
        let (back, report) = from_json(&to_json(&c, None)).unwrap();
        assert_eq!(back, c);
        assert_eq!(report, None);
    }

    #[test]
    fn round_trip_idempotent_with_report() {
        let c = t3_build(2).unwrap();
        let r = report_covering(&c);
        let once = to_json(&c, Some(&r));
        let (back, back_report) = from_json(&once).unwrap();
        assert_eq!(back_report.as_ref(), Some(&r));
        assert_eq!(to_json(&back, back_report.as_ref()), once);
    }

    fn t3_value() -> serde_json::Value {
        serde_json::from_str(&to_json(&t3_build(2).unwrap(), None)).unwrap()
    }

    #[test]
    fn out_of_range_entry_names_index() {
        let mut v = t3_value();
        v["vertexMap"][7] = serde_json::json!([4, 0]);
        let err = from_json(&v.to_string()).unwrap_err();
        assert_eq!(
            err,
            JsonError::OutOfRange {
                field: "vertexMap",
                index: 7
            }
        );
        assert_eq!(err.to_string(), "vertexMap[7] is out of range");
    }

    #[test]
    fn truncated_text_is_malformed() {
        let text = to_json(&t3_build(2).unwrap(), None);
        let err = from_json(&text[..text.len() / 2]).unwrap_err();
        assert!(matches!(err, JsonError::Malformed(_)));
    }

    #[test]
    fn version_and_size_errors() {
        let mut v = t3_value();
        v["schemaVersion"] = serde_json::json!(2);
        assert_eq!(
            from_json(&v.to_string()).unwrap_err(),
            JsonError::UnknownSchemaVersion(2)
        );

        let mut v = t3_value();
        v.as_object_mut().unwrap().remove("schemaVersion");
        assert_eq!(
            from_json(&v.to_string()).unwrap_err(),
            JsonError::MissingSchemaVersion
        );

        let mut v = t3_value();
        v["vertexMap"].as_array_mut().unwrap().pop();
        assert_eq!(
            from_json(&v.to_string()).unwrap_err(),
            JsonError::Size {
                field: "vertexMap",
                expected: 32,
                found: 31
            }
        );

        let mut v = t3_value();
        v["domain"]["p"] = serde_json::json!(2);
        assert!(matches!(
            from_json(&v.to_string()).unwrap_err(),
            JsonError::Parameter {
                field: "domain",
                ..
            }
        ));
    }

    #[test]
    fn arc_errors() {
        let mut v = t3_value();
        v["codomainArcs"][0] = serde_json::json!([0, 5]);
        assert!(matches!(
            from_json(&v.to_string()).unwrap_err(),
            JsonError::InvalidArcs {
                field: "codomainArcs",
                ..
            }
        ));
        let mut v = t3_value();
        v["domainArcs"][3] = serde_json::json!([0, 99]);
        assert_eq!(
            from_json(&v.to_string()).unwrap_err(),
            JsonError::OutOfRange {
                field: "domainArcs",
                index: 3
            }
        );
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let mut v = t3_value();
        v["extra"] = serde_json::json!(1);
        assert!(matches!(
            from_json(&v.to_string()).unwrap_err(),
            JsonError::Malformed(_)
        ));
    }
}
