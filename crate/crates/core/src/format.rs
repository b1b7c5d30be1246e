//! Text encodings of complexes.
//!
//! JSON: `{"n": 5, "facets": [[1,2],[2,5],[4,5],[2,3,4]]}` with `[[]]` for
//! `{∅}`. Line format: `5: 1 2 | 2 5 | 4 5 | 2 3 4`, with `∅` for the empty
//! facet.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Serialized form of a complex: ground-set size and 1-based facet lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexDocument {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        ComplexDocument {
            n: c.n(),
            facets: c.facet_lists(),
        }
    }

    /// Validates and normalizes; returns the complex and the number of input
    /// faces dropped as duplicates or non-maximal.
    pub fn to_complex(&self) -> Result<(SimplicialComplex, usize)> {
        let sets = self
            .facets
            .iter()
            .map(|f| VertexSet::from_vertices(self.n, f.iter().copied()))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| match e {
                Error::VertexOutOfRange { vertex, n } => Error::Parse(format!(
                    "field `facets`: vertex {vertex} out of range for n = {n}"
                )),
                other => other,
            })?;
        SimplicialComplex::from_faces_reporting(self.n, sets).map_err(|e| match e {
            Error::VoidComplex => Error::Parse("field `facets`: void complex not supported".into()),
            Error::GroundSetSize(n) => Error::Parse(format!("field `n`: {n} is outside 1..=64")),
            other => other,
        })
    }
}

fn write_list(out: &mut String, facet: &[usize]) {
    out.push('[');
    for (i, v) in facet.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&v.to_string());
    }
    out.push(']');
}

/// Canonical single-line JSON.
pub fn to_json(c: &SimplicialComplex) -> String {
    let mut out = format!("{{\"n\": {}, \"facets\": [", c.n());
    for (i, f) in c.facets().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_list(&mut out, &f.to_vec());
    }
    out.push_str("]}");
    out
}

pub fn from_json(text: &str) -> Result<(SimplicialComplex, usize)> {
    let doc: ComplexDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("json: {e}")))?;
    doc.to_complex()
}

pub fn to_line(c: &SimplicialComplex) -> String {
    let body = c
        .facets()
        .iter()
        .map(|f| {
            if f.is_empty() {
                "∅".to_string()
            } else {
                f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            }
        })
        .collect::<Vec<_>>()
        .join(" | ");
    format!("{}: {}", c.n(), body)
}

pub fn from_line(text: &str) -> Result<(SimplicialComplex, usize)> {
    let (head, body) = text
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::Parse("line format: missing `n:` prefix".into()))?;
    let n: usize = head
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("field `n`: `{}` is not an integer", head.trim())))?;
    let mut facets = Vec::new();
    for part in body.split('|') {
        let part = part.trim();
        if part.is_empty() || part == "∅" {
            facets.push(Vec::new());
            continue;
        }
        let facet = part
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("field `facets`: `{t}` is not a vertex")))
            })
            .collect::<Result<Vec<_>>>()?;
        facets.push(facet);
    }
    ComplexDocument { n, facets }.to_complex()
}

/// Accepts either encoding, picked by the first non-blank character.
pub fn parse_complex(text: &str) -> Result<(SimplicialComplex, usize)> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_line(text)
    }
}
