//! Constructors for concrete symmetric cellular algebras.

mod blocks;
mod poly;
mod quiver;
mod temperley_lieb;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraSpec};
use crate::cellular::{CellDatum, CellularAlgebra, CellularError};
use crate::center::SymmetricCellularAlgebra;
use crate::scalar::{Field, Scalar};
use crate::trace::{TraceError, TraceForm};

pub use blocks::build_matrix_blocks;
pub use poly::build_truncated_poly;
pub use quiver::{build_quiver_zigzag, quiver_unit_trace, QuiverBasis};
pub use temperley_lieb::{build_temperley_lieb, catalan, Diagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("trace Gram matrix is singular for these parameters")]
    DegenerateTrace,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cellular(#[from] CellularError),
    #[error(transparent)]
    Trace(TraceError),
}

impl From<TraceError> for BuildError {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::DegenerateTrace => BuildError::DegenerateTrace,
            other => BuildError::Trace(other),
        }
    }
}

/// An algebra with its cell datum and symmetrizing trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltAlgebra {
    pub algebra: AlgebraSpec,
    pub cells: CellDatum,
    pub trace: TraceForm,
}

impl BuiltAlgebra {
    /// Verifies the cell datum and computes the dual basis.
    pub fn symmetric(&self) -> Result<SymmetricCellularAlgebra, BuildError> {
        let ca = CellularAlgebra::new(self.algebra.clone(), self.cells.clone())?;
        Ok(SymmetricCellularAlgebra::new(ca, self.trace.clone())?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    QuiverZigzag,
    TruncatedPoly,
    MatrixBlocks,
    TemperleyLieb,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::QuiverZigzag,
        Family::TruncatedPoly,
        Family::MatrixBlocks,
        Family::TemperleyLieb,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::QuiverZigzag => "quiver-zigzag",
            Family::TruncatedPoly => "truncated-poly",
            Family::MatrixBlocks => "matrix-blocks",
            Family::TemperleyLieb => "temperley-lieb",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = BuildError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| BuildError::InvalidParams(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuilderParams {
    pub family: Family,
    pub n: usize,
    pub field: Field,
    /// Loop value, Temperley–Lieb only.
    pub delta: Option<Scalar>,
    /// Block sizes, matrix blocks only.
    pub blocks: Vec<usize>,
}

impl BuilderParams {
    pub fn new(family: Family, n: usize, field: Field) -> Self {
        BuilderParams {
            family,
            n,
            field,
            delta: None,
            blocks: Vec::new(),
        }
    }
}

pub fn build(params: &BuilderParams) -> Result<BuiltAlgebra, BuildError> {
    match params.family {
        Family::QuiverZigzag => build_quiver_zigzag(params.n, params.field),
        Family::TruncatedPoly => build_truncated_poly(params.n, params.field),
        Family::MatrixBlocks => build_matrix_blocks(&params.blocks, params.field),
        Family::TemperleyLieb => {
            let delta = params
                .delta
                .clone()
                .ok_or_else(|| BuildError::InvalidParams("temperley-lieb needs --delta".into()))?;
            build_temperley_lieb(params.n, &delta)
        }
    }
}

fn labels<I: IntoIterator<Item = S>, S: Into<String>>(it: I) -> Vec<String> {
    it.into_iter().map(Into::into).collect()
}
