//! Complex documents: JSON and a line-oriented plain-text form.
//!
//! JSON: `{"vertices": [...], "facets": [[...], ...]}` or the same with
//! `"nonfaces"`; exactly one of the two list keys must be present.
//!
//! Text: a first line `vertices: a b c ...`, then one face per line with
//! whitespace-separated labels. A line reading `nonfaces` (or `facets`)
//! switches the form for the whole document and must precede the faces.
//! `{}` denotes the empty face; blank lines and `#` comments are ignored.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, Label, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Facets,
    Nonfaces,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    vertices: Vec<Label>,
    facets: Option<Vec<Vec<Label>>>,
    nonfaces: Option<Vec<Vec<Label>>>,
}

#[derive(Serialize)]
struct FacetDocument<'a> {
    vertices: &'a [Label],
    facets: Vec<Vec<Label>>,
}

fn build(vertices: Vec<Label>, form: Form, faces: Vec<Vec<Label>>) -> Result<Complex> {
    let universe = VertexSet::new(vertices)?;
    let faces = faces
        .into_iter()
        .map(|f| universe.face(f))
        .collect::<Result<Vec<Face>>>()?;
    match form {
        Form::Facets => Complex::from_facets(universe, faces),
        Form::Nonfaces => {
            let mut sorted = faces;
            sorted.sort_unstable();
            sorted.dedup();
            Complex::from_minimal_nonfaces(universe, sorted)
        }
    }
}

pub fn parse_json(input: &str) -> Result<Complex> {
    let doc: JsonDocument = serde_json::from_str(input)?;
    match (doc.facets, doc.nonfaces) {
        (Some(f), None) => build(doc.vertices, Form::Facets, f),
        (None, Some(m)) => build(doc.vertices, Form::Nonfaces, m),
        _ => Err(Error::AmbiguousForm),
    }
}

pub fn parse_text(input: &str) -> Result<Complex> {
    let mut lines = input
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty document".into()))?;
    let vertices = header
        .strip_prefix("vertices:")
        .ok_or_else(|| Error::Parse("first line must start with `vertices:`".into()))?
        .split_whitespace()
        .map(Label::parse)
        .collect();
    let mut form = None;
    let mut faces = Vec::new();
    for line in lines {
        match line {
            "nonfaces" | "facets" if faces.is_empty() && form.is_none() => {
                form = Some(if line == "nonfaces" {
                    Form::Nonfaces
                } else {
                    Form::Facets
                });
            }
            "nonfaces" | "facets" => return Err(Error::AmbiguousForm),
            "{}" => faces.push(Vec::new()),
            _ => faces.push(line.split_whitespace().map(Label::parse).collect()),
        }
    }
    build(vertices, form.unwrap_or(Form::Facets), faces)
}

/// JSON if the document starts with `{`, plain text otherwise.
pub fn parse_complex(input: &str) -> Result<Complex> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn to_json(c: &Complex) -> String {
    let u = c.universe();
    let doc = FacetDocument {
        vertices: u.labels(),
        facets: c.facets().iter().map(|&f| u.labels_of(f)).collect(),
    };
    serde_json::to_string(&doc).expect("labels serialize")
}

pub fn to_text(c: &Complex) -> String {
    let u = c.universe();
    let mut out = String::from("vertices:");
    for l in u.labels() {
        out.push(' ');
        out.push_str(&l.to_string());
    }
    out.push('\n');
    for &f in c.facets() {
        if f.is_empty() {
            out.push_str("{}");
        } else {
            let labels: Vec<String> = u.labels_of(f).iter().map(ToString::to_string).collect();
            out.push_str(&labels.join(" "));
        }
        out.push('\n');
    }
    out
}

/// Parses a face list such as `1,2,3; 1,2,6; 4,5,6` (spaces also separate labels).
pub fn parse_face_list(c: &Complex, spec: &str) -> Result<Vec<Face>> {
    spec.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|part| {
            let labels = part
                .split(|ch: char| ch == ',' || ch.is_whitespace())
                .filter(|t| !t.is_empty() && *t != "{}");
            c.universe().face(labels.map(Label::parse))
        })
        .collect()
}

pub fn format_face_list(c: &Complex, faces: &[Face]) -> String {
    faces.iter().map(|&f| c.display_face(f)).collect::<Vec<_>>().join(" ")
}
