//! File formats: the JSON instance and certificate documents, the
//! name-to-id mapping they imply, and DOT export. Certificate
//! verification here leans only on the alternation checker, so it stays
//! independent of the synthesis path.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cgs::{CgsError, CgsInstance, Summand};
use crate::graph::{is_alternating_cycle, EdgeColor, VertexId};
use crate::synthesis::PancyclicCertificate;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SummandDoc {
    pub vertices: Vec<String>,
    pub cycle: Vec<String>,
    pub edges: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct InstanceDocument {
    pub summands: Vec<SummandDoc>,
    pub exterior: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateEntry {
    pub vertex: String,
    pub length: usize,
    pub cycle: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateDocument {
    pub fingerprint: String,
    pub entries: Vec<CertificateEntry>,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("vertex name {0:?} appears twice")]
    DuplicateName(String),
    #[error("unknown vertex name {0:?}")]
    UnknownName(String),
    #[error("unknown color {0:?} (expected \"red\" or \"blue\")")]
    BadColor(String),
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(String, String),
    #[error("invalid instance: {0}")]
    Instance(#[from] CgsError),
    #[error("certificate fingerprint does not match the instance")]
    FingerprintMismatch,
    #[error("certificate entry ({vertex}, {length}) {reason}")]
    BadEntry { vertex: String, length: usize, reason: String },
    #[error("certificate misses entry ({0}, {1})")]
    MissingEntry(String, usize),
}

/// A validated instance together with the vertex names of its source
/// document. Names map to dense ids in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedInstance {
    pub inst: CgsInstance,
    names: Vec<String>,
    index: BTreeMap<String, VertexId>,
}

fn parse_color(s: &str) -> Result<EdgeColor, DocError> {
    match s {
        "red" => Ok(EdgeColor::Red),
        "blue" => Ok(EdgeColor::Blue),
        other => Err(DocError::BadColor(other.to_string())),
    }
}

fn color_name(c: EdgeColor) -> String {
    c.to_string()
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl NamedInstance {
    pub fn new(inst: CgsInstance, names: Vec<String>) -> NamedInstance {
        assert_eq!(names.len(), inst.vertex_count());
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i as u32)))
            .collect();
        NamedInstance { inst, names, index }
    }

    /// Generated instances get summand-wise prefixes x, y, z, u, v, w
    /// (then s7_, s8_, ...) with the position on the cycle as suffix.
    pub fn with_default_names(inst: CgsInstance) -> NamedInstance {
        const PREFIXES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
        let mut names = vec![String::new(); inst.vertex_count()];
        for (i, s) in inst.summands().iter().enumerate() {
            let prefix = PREFIXES
                .get(i)
                .map(|p| p.to_string())
                .unwrap_or_else(|| format!("s{}_", i + 1));
            for (j, &v) in s.ham_cycle.iter().enumerate() {
                names[v.index()] = format!("{prefix}{j}");
            }
        }
        NamedInstance::new(inst, names)
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn resolve(&self, name: &str) -> Result<VertexId, DocError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| DocError::UnknownName(name.to_string()))
    }

    pub fn from_document(doc: &InstanceDocument) -> Result<NamedInstance, DocError> {
        let mut names = Vec::new();
        let mut index = BTreeMap::new();
        for sd in &doc.summands {
            for name in &sd.vertices {
                if index.insert(name.clone(), VertexId(names.len() as u32)).is_some() {
                    return Err(DocError::DuplicateName(name.clone()));
                }
                names.push(name.clone());
            }
        }
        let resolve = |name: &String| -> Result<VertexId, DocError> {
            index.get(name).copied().ok_or_else(|| DocError::UnknownName(name.clone()))
        };
        let mut summands = Vec::new();
        for sd in &doc.summands {
            let vertices = sd.vertices.iter().map(resolve).collect::<Result<Vec<_>, _>>()?;
            let ham_cycle = sd.cycle.iter().map(resolve).collect::<Result<Vec<_>, _>>()?;
            let mut edges = BTreeMap::new();
            for (a, b, c) in &sd.edges {
                let key = ordered(resolve(a)?, resolve(b)?);
                if edges.insert(key, parse_color(c)?).is_some() {
                    return Err(DocError::DuplicateEdge(a.clone(), b.clone()));
                }
            }
            summands.push(Summand { vertices, edges, ham_cycle });
        }
        let mut exterior = BTreeMap::new();
        for (a, b, c) in &doc.exterior {
            let key = ordered(resolve(a)?, resolve(b)?);
            if exterior.insert(key, parse_color(c)?).is_some() {
                return Err(DocError::DuplicateEdge(a.clone(), b.clone()));
            }
        }
        let inst = CgsInstance::new(summands, exterior)?;
        Ok(NamedInstance { inst, names, index })
    }

    pub fn to_document(&self) -> InstanceDocument {
        let name = |v: VertexId| self.names[v.index()].clone();
        let summands = self
            .inst
            .summands()
            .iter()
            .map(|s| SummandDoc {
                vertices: s.vertices.iter().map(|&v| name(v)).collect(),
                cycle: s.ham_cycle.iter().map(|&v| name(v)).collect(),
                edges: s
                    .edges
                    .iter()
                    .map(|(&(u, v), &c)| (name(u), name(v), color_name(c)))
                    .collect(),
            })
            .collect();
        let exterior =
            self.inst.exterior().map(|(u, v, c)| (name(u), name(v), color_name(c))).collect();
        InstanceDocument { summands, exterior }
    }
}

pub fn parse_instance(text: &str) -> Result<NamedInstance, DocError> {
    let doc: InstanceDocument =
        serde_json::from_str(text).map_err(|e| DocError::Json(e.to_string()))?;
    NamedInstance::from_document(&doc)
}

pub fn render_instance(named: &NamedInstance) -> String {
    let mut out = serde_json::to_string_pretty(&named.to_document()).expect("serializable");
    out.push('\n');
    out
}

pub fn parse_certificate(text: &str) -> Result<CertificateDocument, DocError> {
    serde_json::from_str(text).map_err(|e| DocError::Json(e.to_string()))
}

pub fn certificate_to_document(
    named: &NamedInstance,
    cert: &PancyclicCertificate,
) -> CertificateDocument {
    let entries = cert
        .entries
        .iter()
        .map(|(&(v, length), cycle)| CertificateEntry {
            vertex: named.name(v).to_string(),
            length,
            cycle: cycle.vertices().iter().map(|&u| named.name(u).to_string()).collect(),
        })
        .collect();
    CertificateDocument { fingerprint: cert.fingerprint.clone(), entries }
}

pub fn render_certificate(doc: &CertificateDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("serializable");
    out.push('\n');
    out
}

/// Re-checks a certificate against its instance using only the
/// alternation checker: fingerprint, completeness of the (vertex,
/// length) domain, and every entry's length, membership, and
/// alternation. Returns the number of verified entries.
pub fn verify_certificate(
    named: &NamedInstance,
    doc: &CertificateDocument,
) -> Result<usize, DocError> {
    if doc.fingerprint != named.inst.fingerprint() {
        return Err(DocError::FingerprintMismatch);
    }
    let flat = named.inst.flatten();
    let mut seen = BTreeMap::new();
    for entry in &doc.entries {
        let bad = |reason: &str| DocError::BadEntry {
            vertex: entry.vertex.clone(),
            length: entry.length,
            reason: reason.to_string(),
        };
        let v = named.resolve(&entry.vertex)?;
        let cycle = entry
            .cycle
            .iter()
            .map(|n| named.resolve(n))
            .collect::<Result<Vec<_>, _>>()?;
        if cycle.len() != entry.length {
            return Err(bad("has a cycle of the wrong length"));
        }
        if !cycle.contains(&v) {
            return Err(bad("does not pass through its vertex"));
        }
        if !is_alternating_cycle(flat, &cycle) {
            return Err(bad("is not an alternating cycle of the instance"));
        }
        if seen.insert((v, entry.length), ()).is_some() {
            return Err(bad("is duplicated"));
        }
    }
    for v in (0..named.inst.vertex_count() as u32).map(VertexId) {
        for length in (4..=named.inst.vertex_count()).step_by(2) {
            if !seen.contains_key(&(v, length)) {
                return Err(DocError::MissingEntry(named.name(v).to_string(), length));
            }
        }
    }
    Ok(doc.entries.len())
}

/// Undirected DOT rendering: edge colors as drawn colors, exterior
/// edges dashed, an optional highlight cycle bold.
pub fn render_dot(named: &NamedInstance, highlight: Option<&[VertexId]>) -> String {
    let mut bold = BTreeMap::new();
    if let Some(cycle) = highlight {
        for i in 0..cycle.len() {
            bold.insert(ordered(cycle[i], cycle[(i + 1) % cycle.len()]), ());
        }
    }
    let mut out = String::from("graph apc {\n  node [shape=circle];\n");
    for (u, v, c) in named.inst.flatten().edges() {
        let mut styles = Vec::new();
        if named.inst.is_exterior(u, v) {
            styles.push("dashed");
        }
        if bold.contains_key(&ordered(u, v)) {
            styles.push("bold");
        }
        let style = if styles.is_empty() {
            String::new()
        } else {
            format!(", style=\"{}\"", styles.join(","))
        };
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [color={}{}];\n",
            named.name(u),
            named.name(v),
            c,
            style
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cgs::fixtures::fix8;
    use crate::cgs::{generate_no_good_pair, generate_random};
    use crate::synthesis::certify_vertex_pancyclic;

    #[test]
    fn round_trip_generated_instances() {
        for seed in 0..5 {
            let inst = generate_random(&[4, 6], seed).unwrap();
            let named = NamedInstance::with_default_names(inst);
            let text = render_instance(&named);
            let back = parse_instance(&text).unwrap();
            assert_eq!(back, named);
            assert_eq!(render_instance(&back), text);
        }
    }

    #[test]
    fn default_names_follow_cycle_order() {
        let named = NamedInstance::with_default_names(fix8());
        assert_eq!(named.name(VertexId(0)), "x0");
        assert_eq!(named.name(VertexId(7)), "y3");
        assert_eq!(named.resolve("y2").unwrap(), VertexId(6));
        assert!(named.resolve("q0").is_err());
    }

    #[test]
    fn bad_documents_are_rejected() {
        assert!(matches!(parse_instance("{"), Err(DocError::Json(_))));
        let named = NamedInstance::with_default_names(fix8());
        let mut doc = named.to_document();
        doc.summands[0].edges[0].2 = "green".into();
        assert!(matches!(
            NamedInstance::from_document(&doc),
            Err(DocError::BadColor(_))
        ));
        let mut doc = named.to_document();
        doc.exterior.pop();
        assert!(matches!(
            NamedInstance::from_document(&doc),
            Err(DocError::Instance(CgsError::MissingExteriorEdge(_, _)))
        ));
    }

    #[test]
    fn certificate_round_trip_and_verification() {
        let inst = generate_no_good_pair(&[4, 4], 2).unwrap();
        let named = NamedInstance::with_default_names(inst);
        let cert = certify_vertex_pancyclic(&named.inst).unwrap();
        let doc = certificate_to_document(&named, &cert);
        let parsed = parse_certificate(&render_certificate(&doc)).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(verify_certificate(&named, &doc).unwrap(), 24);

        let mut tampered = doc.clone();
        tampered.entries[0].cycle[1] = tampered.entries[0].cycle[3].clone();
        assert!(matches!(
            verify_certificate(&named, &tampered),
            Err(DocError::BadEntry { .. })
        ));
        let mut truncated = doc.clone();
        truncated.entries.pop();
        assert!(matches!(
            verify_certificate(&named, &truncated),
            Err(DocError::MissingEntry(_, _))
        ));
        let mut wrong = doc;
        wrong.fingerprint = "0".repeat(64);
        assert!(matches!(
            verify_certificate(&named, &wrong),
            Err(DocError::FingerprintMismatch)
        ));
    }

    #[test]
    fn dot_rendering_counts() {
        let named = NamedInstance::with_default_names(fix8());
        let dot = render_dot(&named, None);
        assert_eq!(dot.matches(" -- ").count(), 24);
        assert_eq!(dot.matches("dashed").count(), 16);
        assert_eq!(dot.matches("bold").count(), 0);
        let cycle = [VertexId(0), VertexId(4), VertexId(2), VertexId(3)];
        let dot = render_dot(&named, Some(&cycle));
        assert_eq!(dot.matches("bold").count(), 4);
    }
}
