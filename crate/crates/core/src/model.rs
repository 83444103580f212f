//! Model files and built-in fixtures.
//!
//! A model file is UTF-8 JSON:
//!
//! ```json
//! {
//!   "schema": "geomlab-model/1",
//!   "name": "heisenberg3",
//!   "dimension": 3,
//!   "basis": ["e1", "e2", "e3"],
//!   "brackets": [{ "x": "e1", "y": "e2", "result": [{ "basis": "e3", "coeff": "1" }] }],
//!   "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
//! }
//! ```
//!
//! Every number is a string `p` or `p/q`; JSON numbers are rejected. Each
//! unordered pair appears at most once in `brackets`. The optional `frame`
//! is a change of basis whose column `j` holds the coordinates of frame
//! vector `j`; it must be pseudo-orthonormal. The optional `volume` is a
//! positive rational used by energy reports.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::geometry::{GeometryError, MetricLieAlgebra};
use crate::lie::{LieAlgebraModel, LieError};
use crate::linalg::{matrix_inverse, RatMatrix};
use crate::rational::{format_rational, parse_rational, Rational};

pub const MODEL_SCHEMA: &str = "geomlab-model/1";

pub const BUILTIN_NAMES: [&str; 5] = ["oscillator", "oscillator-frame", "heisenberg3", "abelian4-minkowski", "su2xR"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub schema: String,
    pub name: String,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    pub metric: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub volume: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub x: String,
    pub y: String,
    pub result: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub basis: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("invalid model JSON: {0}")]
    Json(String),
    #[error("unsupported schema {0:?}, expected \"{MODEL_SCHEMA}\"")]
    UnsupportedSchema(String),
    #[error("dimension is {declared} but {found} basis labels are listed")]
    DimensionMismatch { declared: usize, found: usize },
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("bracket [{0}, {1}] is listed more than once (either order)")]
    DuplicateBracket(String, String),
    #[error("bracket [{0}, {0}] cannot be prescribed")]
    SelfBracket(String),
    #[error("bracket [{x}, {y}] lists basis {basis:?} more than once")]
    DuplicateTerm { x: String, y: String, basis: String },
    #[error("malformed rational {value:?} in {location}")]
    MalformedRational { location: String, value: String },
    #[error("{what} must be {dim}x{dim}")]
    Shape { what: &'static str, dim: usize },
    #[error("metric is not symmetric: g({0}, {1}) != g({1}, {0})")]
    AsymmetricMetric(String, String),
    #[error("metric is degenerate")]
    SingularMetric,
    #[error("Jacobi identity fails on ({0}, {1}, {2})")]
    JacobiFailure(String, String, String),
    #[error("frame matrix is singular")]
    SingularFrame,
    #[error("frame is not pseudo-orthonormal: g(f{0}, f{1}) = {2}")]
    FrameNotOrthonormal(usize, usize, String),
    #[error("volume must be positive, got {0}")]
    NonPositiveVolume(String),
    #[error("unknown built-in model {0:?} (available: {list})", list = BUILTIN_NAMES.join(", "))]
    UnknownModel(String),
}

/// A validated model with its optional frame and domain volume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub name: String,
    pub geometry: MetricLieAlgebra,
    pub frame: Option<RatMatrix>,
    pub volume: Option<Rational>,
}

fn rational_at(text: &str, location: impl FnOnce() -> String) -> Result<Rational, ModelError> {
    parse_rational(text).map_err(|_| ModelError::MalformedRational { location: location(), value: text.to_string() })
}

fn square_matrix(rows: &[Vec<String>], dim: usize, what: &'static str) -> Result<RatMatrix, ModelError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(ModelError::Shape { what, dim });
    }
    let mut m = RatMatrix::zeros(dim, dim);
    for (i, row) in rows.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            m[(i, j)] = rational_at(cell, || format!("{what}[{i}][{j}]"))?;
        }
    }
    Ok(m)
}

/// Validates a document and builds the model.
pub fn load_model(doc: &ModelDocument) -> Result<Model, ModelError> {
    if doc.schema != MODEL_SCHEMA {
        return Err(ModelError::UnsupportedSchema(doc.schema.clone()));
    }
    let n = doc.dimension;
    if doc.basis.len() != n {
        return Err(ModelError::DimensionMismatch { declared: n, found: doc.basis.len() });
    }
    let mut seen = HashSet::new();
    for label in &doc.basis {
        if !seen.insert(label.as_str()) {
            return Err(ModelError::DuplicateLabel(label.clone()));
        }
    }
    let index = |label: &str| {
        doc.basis.iter().position(|l| l == label).ok_or_else(|| ModelError::UnknownLabel(label.to_string()))
    };

    let mut entries = Vec::with_capacity(doc.brackets.len());
    for entry in &doc.brackets {
        let (i, j) = (index(&entry.x)?, index(&entry.y)?);
        let mut value = vec![Rational::zero(); n];
        let mut terms_seen = HashSet::new();
        for term in &entry.result {
            let k = index(&term.basis)?;
            if !terms_seen.insert(k) {
                return Err(ModelError::DuplicateTerm {
                    x: entry.x.clone(),
                    y: entry.y.clone(),
                    basis: term.basis.clone(),
                });
            }
            value[k] = rational_at(&term.coeff, || {
                format!("bracket [{}, {}] coefficient of {}", entry.x, entry.y, term.basis)
            })?;
        }
        entries.push((i, j, value));
    }
    let label = |i: usize| doc.basis[i].clone();
    let algebra = LieAlgebraModel::new(doc.basis.clone(), entries).map_err(|e| match e {
        LieError::DuplicateBracket(i, j) => ModelError::DuplicateBracket(label(i), label(j)),
        LieError::SelfBracket(i) => ModelError::SelfBracket(label(i)),
        other => ModelError::Json(other.to_string()),
    })?;

    let metric = square_matrix(&doc.metric, n, "metric")?;
    let geometry = MetricLieAlgebra::new(algebra, metric).map_err(|e| match e {
        GeometryError::AsymmetricMetric(i, j) => ModelError::AsymmetricMetric(label(i), label(j)),
        GeometryError::SingularMetric => ModelError::SingularMetric,
        GeometryError::JacobiFailure(i, j, k) => ModelError::JacobiFailure(label(i), label(j), label(k)),
        GeometryError::MetricShape { .. } => ModelError::Shape { what: "metric", dim: n },
        other => ModelError::Json(other.to_string()),
    })?;

    let frame = doc.frame.as_ref().map(|f| square_matrix(f, n, "frame")).transpose()?;
    if let Some(b) = &frame {
        check_frame(&geometry, b)?;
    }
    let volume = match &doc.volume {
        Some(text) => {
            let v = rational_at(text, || "volume".to_string())?;
            if !v.is_positive() {
                return Err(ModelError::NonPositiveVolume(text.clone()));
            }
            Some(v)
        }
        None => None,
    };
    Ok(Model { name: doc.name.clone(), geometry, frame, volume })
}

fn check_frame(m: &MetricLieAlgebra, b: &RatMatrix) -> Result<(), ModelError> {
    matrix_inverse(b).map_err(|_| ModelError::SingularFrame)?;
    let gram = &(&b.transpose() * m.metric()) * b;
    for i in 0..gram.rows() {
        for j in 0..gram.cols() {
            let v = &gram[(i, j)];
            let ok = if i == j { v.abs().is_one() } else { v.is_zero() };
            if !ok {
                return Err(ModelError::FrameNotOrthonormal(i + 1, j + 1, format_rational(v)));
            }
        }
    }
    Ok(())
}

pub fn parse_model_json(text: &str) -> Result<Model, ModelError> {
    let doc: ModelDocument = serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))?;
    load_model(&doc)
}

impl Model {
    /// Canonical document: brackets by increasing basis pair, terms in basis order.
    pub fn to_document(&self) -> ModelDocument {
        let labels = self.geometry.labels();
        let matrix_strings =
            |m: &RatMatrix| m.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect();
        let brackets = self
            .geometry
            .algebra()
            .stored_brackets()
            .map(|(i, j, v)| BracketEntry {
                x: labels[i].clone(),
                y: labels[j].clone(),
                result: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| Term { basis: labels[k].clone(), coeff: format_rational(c) })
                    .collect(),
            })
            .collect();
        ModelDocument {
            schema: MODEL_SCHEMA.to_string(),
            name: self.name.clone(),
            dimension: self.geometry.dim(),
            basis: labels.to_vec(),
            brackets,
            metric: matrix_strings(self.geometry.metric()),
            frame: self.frame.as_ref().map(matrix_strings),
            volume: self.volume.as_ref().map(format_rational),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("documents serialize")
    }

    /// The model re-expressed in its shipped frame, labelled `e1..en`.
    pub fn in_frame(&self) -> Option<Result<Model, GeometryError>> {
        let b = self.frame.as_ref()?;
        let labels = (1..=self.geometry.dim()).map(|i| format!("e{i}")).collect();
        Some(self.geometry.change_of_basis(b, labels).map(|geometry| Model {
            name: format!("{}-frame", self.name),
            geometry,
            frame: None,
            volume: self.volume.clone(),
        }))
    }
}

/// Built-in fixtures (see [`BUILTIN_NAMES`]).
pub fn builtin(name: &str) -> Result<Model, ModelError> {
    let text = match name {
        "oscillator" => include_str!("../models/oscillator.json"),
        "oscillator-frame" => include_str!("../models/oscillator-frame.json"),
        "heisenberg3" => include_str!("../models/heisenberg3.json"),
        "abelian4-minkowski" => include_str!("../models/abelian4-minkowski.json"),
        "su2xR" => include_str!("../models/su2xR.json"),
        other => return Err(ModelError::UnknownModel(other.to_string())),
    };
    parse_model_json(text)
}
