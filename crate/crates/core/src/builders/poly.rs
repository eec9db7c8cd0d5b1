//! `K[x]/(x^n)` with cells `{x^k}`; higher powers sit lower.

use crate::algebra::{AlgebraSpec, StructureConstants};
use crate::cellular::{CellDatum, Poset};
use crate::scalar::{Field, Scalar};
use crate::trace::TraceForm;

use super::{labels, BuildError, BuiltAlgebra};

/// Trace picks out the coefficient of `x^{n−1}`.
pub fn build_truncated_poly(n: usize, field: Field) -> Result<BuiltAlgebra, BuildError> {
    if n == 0 {
        return Err(BuildError::InvalidParams("truncated-poly needs n ≥ 1".into()));
    }
    let mut sc = StructureConstants::new(field, n);
    for i in 0..n {
        for j in 0..n - i {
            sc.set(i, j, i + j, Scalar::one(field))?;
        }
    }
    let names = (0..n).map(|k| match k {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    });
    let algebra = AlgebraSpec::new(names.collect(), sc, None, (0..n).collect())?;

    let poset = Poset::chain((1..=n).map(|l| l.to_string()).collect()).reversed();
    let m_sets = (0..n).map(|_| labels(["1"])).collect();
    let index = (0..n).map(|k| vec![vec![k]]).collect();
    let cells = CellDatum::new(poset, m_sets, index, n)?;

    let values = (0..n)
        .map(|k| Scalar::from_i64(field, (k + 1 == n) as i64))
        .collect();
    let trace = TraceForm::new(&algebra, values)?;
    Ok(BuiltAlgebra {
        algebra,
        cells,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::CellularAlgebra;

    #[test]
    fn cellular_and_local() {
        for n in 1..=6 {
            let built = build_truncated_poly(n, Field::Rational).unwrap();
            let ca = CellularAlgebra::new(built.algebra, built.cells).unwrap();
            // only the top cell carries a nonzero form
            assert_eq!(ca.lambda0(), vec![0]);
        }
    }

    #[test]
    fn ascending_order_is_rejected() {
        let built = build_truncated_poly(3, Field::Rational).unwrap();
        let flipped = built.cells.with_poset(built.cells.poset().reversed()).unwrap();
        assert!(CellularAlgebra::new(built.algebra, flipped).is_err());
    }
}
