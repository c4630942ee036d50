//! JSON forms of matrices and decompositions over runtime fields.
//!
//! Elements are written in their text form, so a document can be read back
//! given only its `field` spec string.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::spectral::{verify_factorization, Decomposition};
use crate::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub field: String,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub field: String,
    pub n: usize,
    pub y: String,
    pub x: String,
    pub z: String,
    pub left: Vec<Vec<String>>,
    pub middle: Vec<Vec<String>>,
    pub right: Vec<Vec<String>>,
    pub verified: bool,
}

fn text_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.rows()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

impl MatrixDoc {
    pub fn from_matrix(m: &Matrix) -> Self {
        Self {
            field: m.field().to_string(),
            n: m.n(),
            entries: text_rows(m),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let field: Field = self.field.parse()?;
        if self.entries.len() != self.n {
            return Err(Error::Parse(format!(
                "expected {} rows, found {}",
                self.n,
                self.entries.len()
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| field.parse_element(t))
                    .collect::<Result<Vec<FieldElement>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, rows)
    }
}

impl DecompositionDoc {
    pub fn from_decomposition(d: &Decomposition<FieldElement>) -> Self {
        Self {
            field: d.z.parent().to_string(),
            n: d.n,
            y: d.source_y.to_string(),
            x: d.source_x.to_string(),
            z: d.z.to_string(),
            left: text_rows(&d.left),
            middle: text_rows(&d.middle),
            right: text_rows(&d.right),
            verified: verify_factorization(d),
        }
    }
}

pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string(&MatrixDoc::from_matrix(m)).expect("string-only document")
}

pub fn matrix_from_json(text: &str) -> Result<Matrix> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_matrix()
}

pub fn decomposition_to_json(d: &Decomposition<FieldElement>) -> String {
    serde_json::to_string(&DecompositionDoc::from_decomposition(d)).expect("string-only document")
}

/// Split a parameter list at commas outside brackets, so extension-field
/// elements such as `[1,2],[0,1]` stay intact.
pub fn split_params(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur.trim().to_string());
    out
}
