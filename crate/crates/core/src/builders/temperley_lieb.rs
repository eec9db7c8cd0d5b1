//! Temperley–Lieb diagram algebras `TL_n(δ)`.
//!
//! A diagram on `2n` points is stored as a partner vector. Top point `k`
//! is `k`, bottom point `k` is `2n − 1 − k`, so the points run once around
//! the boundary and planarity is ordinary non-crossing.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::algebra::{AlgebraSpec, StructureConstants};
use crate::cellular::{CellDatum, Poset};
use crate::scalar::Scalar;
use crate::trace::TraceForm;

use super::{BuildError, BuiltAlgebra};

/// Half-diagram: `Some(j)` for an arc to column `j`, `None` for a defect.
pub type Half = Vec<Option<usize>>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    partner: Vec<usize>,
}

impl Diagram {
    pub fn identity(n: usize) -> Self {
        Diagram {
            partner: (0..2 * n).map(|p| 2 * n - 1 - p).collect(),
        }
    }

    /// All planar diagrams in a fixed order.
    pub fn all(n: usize) -> Vec<Diagram> {
        fn rec(points: &[usize], out: &mut Vec<Vec<(usize, usize)>>) {
            if points.is_empty() {
                out.push(Vec::new());
                return;
            }
            for j in (1..points.len()).step_by(2) {
                let mut inner = Vec::new();
                rec(&points[1..j], &mut inner);
                let mut outer = Vec::new();
                rec(&points[j + 1..], &mut outer);
                for a in &inner {
                    for b in &outer {
                        let mut m = vec![(points[0], points[j])];
                        m.extend_from_slice(a);
                        m.extend_from_slice(b);
                        out.push(m);
                    }
                }
            }
        }
        let points: Vec<usize> = (0..2 * n).collect();
        let mut matchings = Vec::new();
        rec(&points, &mut matchings);
        matchings
            .into_iter()
            .map(|m| {
                let mut partner = vec![0; 2 * n];
                for (a, b) in m {
                    partner[a] = b;
                    partner[b] = a;
                }
                Diagram { partner }
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    pub fn through_strands(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&k| self.partner[k] >= n).count()
    }

    /// Top-bottom reflection.
    pub fn flip(&self) -> Diagram {
        let last = self.partner.len() - 1;
        let mut partner = vec![0; self.partner.len()];
        for (p, &q) in self.partner.iter().enumerate() {
            partner[last - p] = last - q;
        }
        Diagram { partner }
    }

    /// `self` stacked on top of `other`; returns the diagram and the number
    /// of closed loops formed in the middle.
    pub fn compose(&self, other: &Diagram) -> (Diagram, usize) {
        let n = self.n();
        assert_eq!(n, other.n(), "diagram sizes differ");
        let last = 2 * n - 1;
        let mut seen = vec![false; n];
        let mut partner = vec![0; 2 * n];

        // Walk from an outer point until leaving at another outer point.
        // `upper` says which diagram we are inside.
        let walk = |mut upper: bool, mut p: usize, seen: &mut Vec<bool>| -> usize {
            loop {
                let q = if upper { self.partner[p] } else { other.partner[p] };
                match (upper, q < n) {
                    (true, true) | (false, false) => return q,
                    (true, false) => {
                        seen[last - q] = true;
                        upper = false;
                        p = last - q;
                    }
                    (false, true) => {
                        seen[q] = true;
                        upper = true;
                        p = last - q;
                    }
                }
            }
        };
        for k in 0..n {
            partner[k] = walk(true, k, &mut seen);
            partner[last - k] = walk(false, last - k, &mut seen);
        }

        let mut loops = 0;
        for c in 0..n {
            if seen[c] {
                continue;
            }
            loops += 1;
            let mut col = c;
            loop {
                seen[col] = true;
                let down = last - self.partner[last - col];
                seen[down] = true;
                col = other.partner[down];
                if col == c {
                    break;
                }
            }
        }
        (Diagram { partner }, loops)
    }

    /// Loops after joining top point `k` to bottom point `k`.
    pub fn closure_loops(&self) -> usize {
        let last = self.partner.len() - 1;
        let mut seen = vec![false; self.partner.len()];
        let mut loops = 0;
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.partner[p];
                seen[q] = true;
                p = last - q;
                if p == start {
                    break;
                }
            }
        }
        loops
    }

    pub fn top_half(&self) -> Half {
        let n = self.n();
        (0..n)
            .map(|k| Some(self.partner[k]).filter(|&p| p < n))
            .collect()
    }

    pub fn bottom_half(&self) -> Half {
        self.flip().top_half()
    }

    /// Glues two halves with equal defect counts, defects joined in order.
    pub fn from_halves(top: &Half, bottom: &Half) -> Option<Diagram> {
        let n = top.len();
        if bottom.len() != n {
            return None;
        }
        let last = 2 * n - 1;
        let mut partner = vec![0; 2 * n];
        for k in 0..n {
            if let Some(j) = top[k] {
                partner[k] = j;
            }
            if let Some(j) = bottom[k] {
                partner[last - k] = last - j;
            }
        }
        let td: Vec<usize> = (0..n).filter(|&k| top[k].is_none()).collect();
        let bd: Vec<usize> = (0..n).filter(|&k| bottom[k].is_none()).collect();
        if td.len() != bd.len() {
            return None;
        }
        for (&a, &b) in td.iter().zip(&bd) {
            partner[a] = last - b;
            partner[last - b] = a;
        }
        Some(Diagram { partner })
    }
}

/// `(1,2)(3,6)|4,5`: arcs by 1-based column, then defects.
pub fn half_label(h: &Half) -> String {
    let mut s = String::new();
    for (k, p) in h.iter().enumerate() {
        if let Some(j) = *p {
            if k < j {
                s.push_str(&format!("({},{})", k + 1, j + 1));
            }
        }
    }
    s.push('|');
    let defects: Vec<String> = (0..h.len())
        .filter(|&k| h[k].is_none())
        .map(|k| (k + 1).to_string())
        .collect();
    s.push_str(&defects.join(","));
    s
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", half_label(&self.top_half()), half_label(&self.bottom_half()))
    }
}

pub fn catalan(n: usize) -> usize {
    (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Cellular basis is the diagram basis, `C_{S,T}` having top half `S` and
/// bottom half `T`. Trace is the normalized Markov trace.
pub fn build_temperley_lieb(n: usize, delta: &Scalar) -> Result<BuiltAlgebra, BuildError> {
    if n == 0 {
        return Err(BuildError::InvalidParams("temperley-lieb needs n ≥ 1".into()));
    }
    if delta.is_zero() {
        return Err(BuildError::InvalidParams("temperley-lieb needs δ ≠ 0".into()));
    }
    let field = delta.field();
    let diagrams = Diagram::all(n);

    let mut halves: Vec<BTreeSet<Half>> = vec![BTreeSet::new(); n + 1];
    for d in &diagrams {
        halves[d.through_strands()].insert(d.top_half());
    }
    let through: Vec<usize> = (0..=n).rev().step_by(2).collect();

    let mut basis = Vec::with_capacity(diagrams.len());
    let mut index = Vec::with_capacity(through.len());
    let mut m_sets = Vec::with_capacity(through.len());
    for &t in &through {
        let m: Vec<&Half> = halves[t].iter().collect();
        let mut table = Vec::with_capacity(m.len());
        for s in &m {
            let mut row = Vec::with_capacity(m.len());
            for u in &m {
                row.push(basis.len());
                basis.push(Diagram::from_halves(s, u).expect("equal defects"));
            }
            table.push(row);
        }
        index.push(table);
        m_sets.push(m.into_iter().map(half_label).collect());
    }
    let dim = basis.len();
    let position: HashMap<&Diagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();

    let mut delta_pow = vec![Scalar::one(field)];
    for k in 1..=n {
        delta_pow.push(&delta_pow[k - 1] * delta);
    }
    let mut sc = StructureConstants::new(field, dim);
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let (c, loops) = a.compose(b);
            sc.set(i, j, position[&c], delta_pow[loops].clone())?;
        }
    }
    let involution = basis.iter().map(|d| position[&d.flip()]).collect();
    let algebra = AlgebraSpec::new(
        basis.iter().map(|d| d.to_string()).collect(),
        sc,
        None,
        involution,
    )?;

    let poset = Poset::chain(through.iter().map(|t| format!("t={t}")).collect()).reversed();
    let cells = CellDatum::new(poset, m_sets, index, dim)?;

    let values = basis
        .iter()
        .map(|d| {
            delta
                .pow(d.closure_loops() as i64 - n as i64)
                .expect("δ is invertible")
        })
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
    use crate::algebra::{check_anti_automorphism, check_associativity};
    use crate::cellular::CellularAlgebra;
    use crate::scalar::Field;
    use crate::trace::trace_gram;

    #[test]
    fn catalan_counts() {
        assert_eq!(
            (0..8).map(catalan).collect::<Vec<_>>(),
            vec![1, 1, 2, 5, 14, 42, 132, 429]
        );
        for n in 1..=6 {
            assert_eq!(Diagram::all(n).len(), catalan(n));
        }
    }

    #[test]
    fn generator_relations() {
        // e_1 joins top 0-1 and bottom 0-1, identity elsewhere
        let n = 3;
        let e = |i: usize| {
            let mut top = vec![None; n];
            top[i] = Some(i + 1);
            top[i + 1] = Some(i);
            Diagram::from_halves(&top, &top).unwrap()
        };
        let (sq, loops) = e(0).compose(&e(0));
        assert_eq!((sq, loops), (e(0), 1));
        let (ab, l1) = e(0).compose(&e(1));
        let (aba, l2) = ab.compose(&e(0));
        assert_eq!((aba, l1 + l2), (e(0), 0));
        let (x, _) = Diagram::identity(n).compose(&e(1));
        assert_eq!(x, e(1));
    }

    #[test]
    fn halves_round_trip() {
        for d in Diagram::all(4) {
            assert_eq!(Diagram::from_halves(&d.top_half(), &d.bottom_half()), Some(d.clone()));
            assert_eq!(d.flip().flip(), d);
        }
    }

    #[test]
    fn tl2_at_two() {
        let built = build_temperley_lieb(2, &Scalar::from_i64(Field::Rational, 2)).unwrap();
        let alg = &built.algebra;
        assert_eq!(alg.dim(), 2);
        let half = Scalar::ratio(Field::Rational, 1, 2);
        let values = built.trace.values();
        assert!(values.contains(&Scalar::one(Field::Rational)));
        assert!(values.contains(&half));
        let g = trace_gram(alg, values);
        // det = τ(1)τ(e²) − τ(e)² = 1·1 − 1/4
        let e = values.iter().position(|v| *v == half).unwrap();
        let one = 1 - e;
        let det = &(&g[(one, one)] * &g[(e, e)]) - &(&g[(one, e)] * &g[(e, one)]);
        assert_eq!(det, Scalar::ratio(Field::Rational, 3, 4));
    }

    #[test]
    fn tl2_at_one_is_degenerate() {
        let r = build_temperley_lieb(2, &Scalar::one(Field::Rational));
        assert_eq!(r.unwrap_err(), BuildError::DegenerateTrace);
    }

    #[test]
    fn tl_is_cellular() {
        for n in 1..=4 {
            let built = build_temperley_lieb(n, &Scalar::from_i64(Field::Rational, 3)).unwrap();
            assert_eq!(built.algebra.dim(), catalan(n));
            assert!(check_associativity(built.algebra.structure_constants()).passed());
            assert!(check_anti_automorphism(&built.algebra).passed());
            CellularAlgebra::new(built.algebra, built.cells).unwrap();
        }
    }

    #[test]
    fn tl3_shape() {
        let built = build_temperley_lieb(3, &Scalar::from_i64(Field::Rational, 3)).unwrap();
        assert_eq!(built.algebra.dim(), 5);
        assert_eq!(built.cells.num_cells(), 2);
        assert_eq!((built.cells.m(0), built.cells.m(1)), (1, 2));
        assert!(built.cells.poset().lt(1, 0));
    }
}
