//! Direct sums of full matrix algebras.

use crate::algebra::{AlgebraSpec, StructureConstants};
use crate::cellular::{CellDatum, Poset};
use crate::scalar::{Field, Scalar};
use crate::trace::TraceForm;

use super::{BuildError, BuiltAlgebra};

/// `⊕ M_{n_b}` with matrix units as cellular basis, one incomparable cell
/// per block, transpose as involution and the sum of matrix traces.
pub fn build_matrix_blocks(sizes: &[usize], field: Field) -> Result<BuiltAlgebra, BuildError> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(BuildError::InvalidParams(
            "matrix-blocks needs a nonempty list of positive sizes".into(),
        ));
    }
    let dim: usize = sizes.iter().map(|m| m * m).sum();
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut off = 0;
    for &m in sizes {
        offsets.push(off);
        off += m * m;
    }

    let mut sc = StructureConstants::new(field, dim);
    let mut names = Vec::with_capacity(dim);
    let mut involution = Vec::with_capacity(dim);
    let mut values = Vec::with_capacity(dim);
    let mut index = Vec::with_capacity(sizes.len());
    for (b, (&m, &o)) in sizes.iter().zip(&offsets).enumerate() {
        let unit = |s: usize, t: usize| o + s * m + t;
        for s in 0..m {
            for t in 0..m {
                names.push(if sizes.len() == 1 {
                    format!("E{}{}", s + 1, t + 1)
                } else {
                    format!("E{}_{}{}", b + 1, s + 1, t + 1)
                });
                involution.push(unit(t, s));
                values.push(Scalar::from_i64(field, (s == t) as i64));
                for u in 0..m {
                    sc.set(unit(s, t), unit(t, u), unit(s, u), Scalar::one(field))?;
                }
            }
        }
        index.push((0..m).map(|s| (0..m).map(|t| unit(s, t)).collect()).collect());
    }
    let algebra = AlgebraSpec::new(names, sc, None, involution)?;

    let poset = Poset::antichain((1..=sizes.len()).map(|b| b.to_string()).collect());
    let m_sets = sizes
        .iter()
        .map(|&m| (1..=m).map(|s| s.to_string()).collect())
        .collect();
    let cells = CellDatum::new(poset, m_sets, index, dim)?;
    let trace = TraceForm::new(&algebra, values)?;
    Ok(BuiltAlgebra {
        algebra,
        cells,
        trace,
    })
}
