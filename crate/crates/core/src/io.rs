//! JSON algebra files. Scalars are exact strings such as `"3/4"` or
//! `"2 mod 5"`; the poset is given by covering pairs `[lower, upper]` of
//! cell indices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraSpec, Element, StructureConstants};
use crate::builders::BuiltAlgebra;
use crate::cellular::{CellDatum, CellularError, Poset};
use crate::scalar::{Field, Scalar};
use crate::trace::{TraceError, TraceForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },
    #[error("validation error: {0}")]
    Validation(String),
}

impl IoError {
    pub fn is_parse(&self) -> bool {
        !matches!(self, IoError::Validation(_))
    }
}

impl From<AlgebraError> for IoError {
    fn from(e: AlgebraError) -> Self {
        IoError::Validation(e.to_string())
    }
}

impl From<CellularError> for IoError {
    fn from(e: CellularError) -> Self {
        IoError::Validation(e.to_string())
    }
}

impl From<TraceError> for IoError {
    fn from(e: TraceError) -> Self {
        IoError::Validation(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldTag {
    Q,
    Fp(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellEntry {
    pub label: String,
    pub m_set: Vec<String>,
    pub index: Vec<Vec<usize>>,
}

/// On-disk layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldTag,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub structure_constants: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<Vec<String>>,
    pub involution: Vec<usize>,
    pub cells: Vec<CellEntry>,
    pub poset: Vec<(usize, usize)>,
    pub trace: Vec<String>,
}

/// A file with scalars and field resolved but no algebraic invariants
/// checked yet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedFile {
    pub labels: Vec<String>,
    pub sc: StructureConstants,
    pub identity: Option<Element>,
    pub involution: Vec<usize>,
    pub poset: Poset,
    pub m_sets: Vec<Vec<String>>,
    pub index: Vec<Vec<Vec<usize>>>,
    pub trace: Vec<Scalar>,
}

fn scalar(field: Field, text: &str, at: impl FnOnce() -> String) -> Result<Scalar, IoError> {
    Scalar::parse(field, text).map_err(|e| IoError::Parse {
        field: at(),
        message: e.to_string(),
    })
}

/// Syntax, field tag and scalar parsing.
pub fn decode(text: &str) -> Result<ParsedFile, IoError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| IoError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let field = match file.field {
        FieldTag::Q => Field::Rational,
        FieldTag::Fp(p) => Field::prime(p).map_err(|e| IoError::Validation(e.to_string()))?,
    };
    let dim = file.dim;
    if file.basis_labels.len() != dim {
        return Err(IoError::Validation(format!(
            "{} basis labels for dimension {dim}",
            file.basis_labels.len()
        )));
    }
    let mut sc = StructureConstants::new(field, dim);
    for (n, (i, j, k, s)) in file.structure_constants.iter().enumerate() {
        let v = scalar(field, s, || format!("structure_constants[{n}]"))?;
        sc.add_to(*i, *j, *k, v)?;
    }
    let identity = match &file.identity {
        None => None,
        Some(coeffs) => {
            if coeffs.len() != dim {
                return Err(IoError::Validation(format!(
                    "identity has {} coefficients for dimension {dim}",
                    coeffs.len()
                )));
            }
            let v = coeffs
                .iter()
                .enumerate()
                .map(|(n, s)| scalar(field, s, || format!("identity[{n}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Some(Element::from_coeffs(v))
        }
    };
    let trace = file
        .trace
        .iter()
        .enumerate()
        .map(|(n, s)| scalar(field, s, || format!("trace[{n}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let poset = Poset::from_covers(
        file.cells.iter().map(|c| c.label.clone()).collect(),
        &file.poset,
    )?;
    let (m_sets, index) = file.cells.into_iter().map(|c| (c.m_set, c.index)).unzip();
    Ok(ParsedFile {
        labels: file.basis_labels,
        sc,
        identity,
        involution: file.involution,
        poset,
        m_sets,
        index,
        trace,
    })
}

impl ParsedFile {
    pub fn build_algebra(&self) -> Result<AlgebraSpec, AlgebraError> {
        AlgebraSpec::new(
            self.labels.clone(),
            self.sc.clone(),
            self.identity.clone(),
            self.involution.clone(),
        )
    }

    pub fn algebra(&self) -> Result<AlgebraSpec, IoError> {
        Ok(self.build_algebra()?)
    }

    pub fn cell_datum(&self) -> Result<CellDatum, IoError> {
        Ok(CellDatum::new(
            self.poset.clone(),
            self.m_sets.clone(),
            self.index.clone(),
            self.sc.dim(),
        )?)
    }

    /// Runs every constructor invariant. Cellularity itself is left to
    /// the verification suites.
    pub fn validate(&self) -> Result<BuiltAlgebra, IoError> {
        let algebra = self.algebra()?;
        let cells = self.cell_datum()?;
        let trace = TraceForm::new(&algebra, self.trace.clone())?;
        Ok(BuiltAlgebra {
            algebra,
            cells,
            trace,
        })
    }
}

pub fn parse_algebra_file(text: &str) -> Result<BuiltAlgebra, IoError> {
    decode(text)?.validate()
}

/// Parses a bare trace vector, as used for an alternate trace file: either
/// a JSON array of scalar strings or a full algebra file.
pub fn parse_trace_file(text: &str, alg: &AlgebraSpec) -> Result<TraceForm, IoError> {
    let raw: Vec<String> = match serde_json::from_str::<Vec<String>>(text) {
        Ok(v) => v,
        Err(_) => decode(text)?
            .trace
            .iter()
            .map(|s| s.to_string())
            .collect(),
    };
    let values = raw
        .iter()
        .enumerate()
        .map(|(n, s)| scalar(alg.field(), s, || format!("trace[{n}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TraceForm::new(alg, values)?)
}

pub fn to_algebra_file(built: &BuiltAlgebra) -> AlgebraFile {
    let alg = &built.algebra;
    let cd = &built.cells;
    AlgebraFile {
        field: match alg.field() {
            Field::Rational => FieldTag::Q,
            Field::Prime(p) => FieldTag::Fp(p),
        },
        dim: alg.dim(),
        basis_labels: alg.labels().to_vec(),
        structure_constants: alg
            .structure_constants()
            .entries()
            .map(|(i, j, k, s)| (i, j, k, s.to_string()))
            .collect(),
        identity: Some(alg.identity().coeffs().iter().map(|s| s.to_string()).collect()),
        involution: alg.involution().to_vec(),
        cells: cd
            .cells()
            .map(|l| CellEntry {
                label: cd.lambda_label(l).to_string(),
                m_set: cd.m_set(l).to_vec(),
                index: cd.index_table(l).to_vec(),
            })
            .collect(),
        poset: cd.poset().covers(),
        trace: built.trace.values().iter().map(|s| s.to_string()).collect(),
    }
}

pub fn write_algebra_file(built: &BuiltAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&to_algebra_file(built)).expect("plain data serializes");
    s.push('\n');
    s
}
