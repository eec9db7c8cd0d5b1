//! The zigzag quiver on vertices `1..n` with arrows `α_i: i → i+1`,
//! `α′_i: i+1 → i`, modulo paths of length ≥ 3, `α′_i α_i − α_{i+1} α′_{i+1}`
//! and `α_i α_{i+1}`, `α′_{i+1} α′_i`. Paths compose left to right.

use crate::algebra::{AlgebraSpec, StructureConstants};
use crate::cellular::{CellDatum, CellularAlgebra, CellularError, Poset};
use crate::scalar::{Field, Scalar};
use crate::trace::TraceForm;

use super::{labels, BuildError, BuiltAlgebra};

/// Basis paths of the quotient; vertices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuiverBasis {
    Vertex(usize),
    /// `α_i: i → i+1`
    Arrow(usize),
    /// `α′_i: i+1 → i`
    CoArrow(usize),
    /// The length-2 cycle at a vertex.
    Loop(usize),
}

impl QuiverBasis {
    fn start(self) -> usize {
        match self {
            QuiverBasis::Vertex(k) | QuiverBasis::Arrow(k) | QuiverBasis::Loop(k) => k,
            QuiverBasis::CoArrow(i) => i + 1,
        }
    }

    fn end(self) -> usize {
        match self {
            QuiverBasis::Vertex(k) | QuiverBasis::CoArrow(k) | QuiverBasis::Loop(k) => k,
            QuiverBasis::Arrow(i) => i + 1,
        }
    }

    fn product(self, other: QuiverBasis) -> Option<QuiverBasis> {
        use QuiverBasis::*;
        if self.end() != other.start() {
            return None;
        }
        match (self, other) {
            (Vertex(_), p) | (p, Vertex(_)) => Some(p),
            (Arrow(i), CoArrow(j)) if i == j => Some(Loop(i)),
            (CoArrow(i), Arrow(j)) if i == j => Some(Loop(i + 1)),
            _ => None,
        }
    }

    /// Label in arrow notation; interior loops use the `α_iα′_i` form.
    pub fn label(self, n: usize) -> String {
        match self {
            QuiverBasis::Vertex(k) => format!("e{k}"),
            QuiverBasis::Arrow(i) => format!("a{i}"),
            QuiverBasis::CoArrow(i) => format!("a{i}'"),
            QuiverBasis::Loop(k) if k == n => format!("a{}'a{}", n - 1, n - 1),
            QuiverBasis::Loop(k) => format!("a{k}a{k}'"),
        }
    }
}

/// Basis in cell order: `e_1`; then for each `i` the block
/// `α_iα′_i, α_i, α′_i, e_{i+1}`; then `α′_{n−1}α_{n−1}`.
fn basis(n: usize) -> Vec<QuiverBasis> {
    let mut b = vec![QuiverBasis::Vertex(1)];
    for i in 1..n {
        b.extend([
            QuiverBasis::Loop(i),
            QuiverBasis::Arrow(i),
            QuiverBasis::CoArrow(i),
            QuiverBasis::Vertex(i + 1),
        ]);
    }
    b.push(QuiverBasis::Loop(n));
    b
}

/// The zigzag algebra with its cellular basis and the trace taking value 1
/// on each loop and 0 on vertices and arrows. The order on cells is the
/// first of (listed order ascending, its reverse) that verifies.
pub fn build_quiver_zigzag(n: usize, field: Field) -> Result<BuiltAlgebra, BuildError> {
    if n < 2 {
        return Err(BuildError::InvalidParams("quiver-zigzag needs n ≥ 2".into()));
    }
    let b = basis(n);
    let dim = b.len();
    let pos = |p: QuiverBasis| b.iter().position(|&q| q == p).expect("closed basis");

    let mut sc = StructureConstants::new(field, dim);
    for (i, &p) in b.iter().enumerate() {
        for (j, &q) in b.iter().enumerate() {
            if let Some(r) = p.product(q) {
                sc.set(i, j, pos(r), Scalar::one(field))?;
            }
        }
    }
    let involution = b
        .iter()
        .map(|&p| match p {
            QuiverBasis::Arrow(i) => pos(QuiverBasis::CoArrow(i)),
            QuiverBasis::CoArrow(i) => pos(QuiverBasis::Arrow(i)),
            other => pos(other),
        })
        .collect();
    let algebra = AlgebraSpec::new(b.iter().map(|p| p.label(n)).collect(), sc, None, involution)?;

    // Cells 0..=n: {e_1}, n−1 blocks of size 2, {α′_{n−1}α_{n−1}}.
    let mut m_sets = vec![labels(["1"])];
    let mut index = vec![vec![vec![0]]];
    for i in 1..n {
        let base = 1 + 4 * (i - 1);
        m_sets.push(labels(["1", "2"]));
        index.push(vec![vec![base, base + 1], vec![base + 2, base + 3]]);
    }
    m_sets.push(labels(["1"]));
    index.push(vec![vec![dim - 1]]);
    let listed = Poset::chain((0..=n).map(|l| l.to_string()).collect());

    let mut result = Err(CellularError::NotCellular("no order verified".into()));
    for poset in [listed.clone(), listed.reversed()] {
        let cd = CellDatum::new(poset, m_sets.clone(), index.clone(), dim)?;
        result = CellularAlgebra::new(algebra.clone(), cd.clone()).map(|_| cd);
        if result.is_ok() {
            break;
        }
    }
    let cells = result?;

    let values = b
        .iter()
        .map(|p| Scalar::from_i64(field, matches!(p, QuiverBasis::Loop(_)) as i64))
        .collect();
    let trace = TraceForm::new(&algebra, values)?;
    Ok(BuiltAlgebra {
        algebra,
        cells,
        trace,
    })
}

/// The trace with value 1 on every vertex and every loop, 0 on arrows.
pub fn quiver_unit_trace(built: &BuiltAlgebra) -> Result<TraceForm, BuildError> {
    let alg = &built.algebra;
    let f = alg.field();
    let values = alg
        .labels()
        .iter()
        .map(|l| {
            let is_arrow = l.starts_with('a') && l.matches('a').count() == 1;
            Scalar::from_i64(f, (!is_arrow) as i64)
        })
        .collect();
    Ok(TraceForm::new(alg, values)?)
}
