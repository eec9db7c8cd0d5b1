//! Exact computations on symmetric cellular algebras: dual bases, the
//! center and its Higman ideal, Schur elements and central idempotents.

pub mod algebra;
pub mod builders;
pub mod cellular;
pub mod center;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod trace;

pub use algebra::{AlgebraSpec, Element, StructureConstants};
pub use cellular::{CellDatum, CellularAlgebra, Poset};
pub use center::SymmetricCellularAlgebra;
pub use linalg::{Matrix, Subspace};
pub use report::{Entry, Report, Status};
pub use scalar::{Field, Scalar};
pub use trace::{DualBasis, TraceForm};
