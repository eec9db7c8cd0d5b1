//! Symmetrizing traces, their Gram matrices and dual bases.

use thiserror::Error;

use crate::algebra::{AlgebraSpec, Element};
use crate::cellular::CellularAlgebra;
use crate::linalg::{dot, LinalgError, Matrix};
use crate::report::{Entry, Report};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("trace has {found} values, algebra dimension is {dim}")]
    Length { found: usize, dim: usize },
    #[error("trace is not symmetric: τ(a_{i}a_{j}) ≠ τ(a_{j}a_{i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("trace Gram matrix is singular")]
    DegenerateTrace,
    #[error("trace value has the wrong field")]
    FieldMismatch,
}

/// A symmetrizing trace, stored as its values `τ(a_i)` on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceForm {
    field: Field,
    values: Vec<Scalar>,
}

impl TraceForm {
    /// Checks symmetry and non-degeneracy.
    pub fn new(alg: &AlgebraSpec, values: Vec<Scalar>) -> Result<Self, TraceError> {
        if values.len() != alg.dim() {
            return Err(TraceError::Length {
                found: values.len(),
                dim: alg.dim(),
            });
        }
        if values.iter().any(|v| v.field() != alg.field()) {
            return Err(TraceError::FieldMismatch);
        }
        let gram = trace_gram(alg, &values);
        for i in 0..alg.dim() {
            for j in i + 1..alg.dim() {
                if gram[(i, j)] != gram[(j, i)] {
                    return Err(TraceError::NotSymmetric { i, j });
                }
            }
        }
        if gram.rank() < alg.dim() {
            return Err(TraceError::DegenerateTrace);
        }
        Ok(TraceForm {
            field: alg.field(),
            values,
        })
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn apply(&self, x: &Element) -> Scalar {
        dot(&self.values, x.coeffs(), self.field)
    }
}

/// `G_{ij} = τ(a_i a_j)`.
pub fn trace_gram(alg: &AlgebraSpec, values: &[Scalar]) -> Matrix {
    let n = alg.dim();
    let mut g = Matrix::zeros(alg.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = alg
                .structure_constants()
                .product(i, j)
                .iter()
                .fold(Scalar::zero(alg.field()), |acc, (k, r)| &acc + &(r * &values[*k]));
        }
    }
    g
}

/// The basis `D_j` with `τ(D_j a_i) = δ_{ij}`; row `j` of `coeffs`
/// expands `D_j` in the algebra basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualBasis {
    coeffs: Matrix,
}

impl DualBasis {
    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn element(&self, j: usize) -> Element {
        Element::from_coeffs(self.coeffs.row(j).to_vec())
    }

    pub fn elements(&self) -> Vec<Element> {
        (0..self.coeffs.rows()).map(|j| self.element(j)).collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.rows() == 0
    }
}

/// Solves `c·Gᵀ = I` for the dual basis and checks `τ(D_j a_i) = δ_{ij}`.
pub fn compute_dual_basis(alg: &AlgebraSpec, tau: &TraceForm) -> Result<DualBasis, TraceError> {
    let g = trace_gram(alg, tau.values());
    // τ(D_j a_i) = (c·G)_{ji}, so c = G⁻¹.
    let coeffs = g.invert().map_err(|e| match e {
        LinalgError::Singular => TraceError::DegenerateTrace,
        other => panic!("unexpected linear algebra error: {other}"),
    })?;
    let dual = DualBasis { coeffs };
    let pairing = dual_pairing(alg, tau, &dual);
    assert_eq!(
        pairing,
        Matrix::identity(alg.field(), alg.dim()),
        "dual basis fails τ(D_j a_i) = δ_ij"
    );
    Ok(dual)
}

/// The matrix `P[(j, i)] = τ(D_j a_i)`.
pub fn dual_pairing(alg: &AlgebraSpec, tau: &TraceForm, dual: &DualBasis) -> Matrix {
    let n = alg.dim();
    let mut p = Matrix::zeros(alg.field(), n, n);
    for (j, d) in dual.elements().iter().enumerate() {
        for i in 0..n {
            p[(j, i)] = tau.apply(&alg.mul(d, &alg.basis_element(i)));
        }
    }
    p
}

/// `a_i D_j = Σ_k r_{kij} D_k` and `D_i a_j = Σ_k r_{jki} D_k`.
pub fn verify_dual_action(alg: &AlgebraSpec, dual: &DualBasis) -> Report {
    let n = alg.dim();
    let sc = alg.structure_constants();
    let ds = dual.elements();
    let combo = |coef: &dyn Fn(usize) -> Scalar| {
        (0..n).fold(alg.zero(), |acc, k| &acc + &ds[k].scale(&coef(k)))
    };
    let mut left = Entry::pass("dual.left_action");
    let mut right = Entry::pass("dual.right_action");
    for i in 0..n {
        for j in 0..n {
            let ai = alg.basis_element(i);
            if alg.mul(&ai, &ds[j]) != combo(&|k| sc.get(k, i, j)) {
                left.fail(format!("(i,j)=({i},{j})"));
            }
            let aj = alg.basis_element(j);
            if alg.mul(&ds[i], &aj) != combo(&|k| sc.get(j, k, i)) {
                right.fail(format!("(i,j)=({i},{j})"));
            }
        }
    }
    let mut r = Report::new();
    r.push(left);
    r.push(right);
    r
}

/// All eight identities relating the cellular basis and its dual basis,
/// checked over every applicable index tuple.
pub fn verify_cell_duality(ca: &CellularAlgebra, dual: &DualBasis) -> Report {
    let alg = ca.algebra();
    let cd = ca.cells();
    let poset = cd.poset();
    let n = alg.dim();
    let ds = dual.elements();
    let c = |k: usize| alg.basis_element(k);
    let expand = |coef: &dyn Fn(usize) -> Scalar| {
        (0..n).fold(alg.zero(), |acc, x| &acc + &ds[x].scale(&coef(x)))
    };

    let mut parts: Vec<Entry> = [
        "d_times_c",
        "c_times_d",
        "cd_independent_of_column",
        "dc_independent_of_row",
        "cd_other_column_vanishes",
        "dc_other_row_vanishes",
        "cd_vanishes_off_order",
        "dc_vanishes_off_order",
    ]
    .iter()
    .map(|p| Entry::pass(format!("cell_dual.{p}")))
    .collect();

    // Expansions and vanishing off the order, over all basis pairs.
    for st in 0..n {
        for uv in 0..n {
            let dc = alg.mul(&ds[uv], &c(st));
            let cdual = alg.mul(&c(st), &ds[uv]);
            if dc != expand(&|x| ca.r(st, x, uv)) {
                parts[0].fail(format!("D[{}]·{}", cd.name(uv), cd.name(st)));
            }
            if cdual != expand(&|x| ca.r(x, st, uv)) {
                parts[1].fail(format!("{}·D[{}]", cd.name(st), cd.name(uv)));
            }
            let (lambda, mu) = (cd.locate(st).lambda, cd.locate(uv).lambda);
            if !poset.leq(mu, lambda) {
                if !cdual.is_zero() {
                    parts[6].fail(format!("{}·D[{}] ≠ 0", cd.name(st), cd.name(uv)));
                }
                if !dc.is_zero() {
                    parts[7].fail(format!("D[{}]·{} ≠ 0", cd.name(uv), cd.name(st)));
                }
            }
        }
    }

    // Row and column identities within one cell.
    for lambda in cd.cells() {
        let m = cd.m(lambda);
        let idx = |s: usize, t: usize| cd.basis_index(lambda, s, t);
        for s in 0..m {
            for t in 0..m {
                let cd_st = alg.mul(&c(idx(s, t)), &ds[idx(s, t)]);
                let dc_st = alg.mul(&ds[idx(s, t)], &c(idx(s, t)));
                for p in 0..m {
                    if alg.mul(&c(idx(s, p)), &ds[idx(s, p)]) != cd_st {
                        parts[2].fail(format!("C D at {} vs {}", cd.name(idx(s, t)), cd.name(idx(s, p))));
                    }
                    if alg.mul(&ds[idx(p, t)], &c(idx(p, t))) != dc_st {
                        parts[3].fail(format!("D C at {} vs {}", cd.name(idx(s, t)), cd.name(idx(p, t))));
                    }
                    for q in 0..m {
                        if t != q && !alg.mul(&c(idx(s, t)), &ds[idx(p, q)]).is_zero() {
                            parts[4].fail(format!("{}·D[{}] ≠ 0", cd.name(idx(s, t)), cd.name(idx(p, q))));
                        }
                        if p != s && !alg.mul(&ds[idx(p, q)], &c(idx(s, t))).is_zero() {
                            parts[5].fail(format!("D[{}]·{} ≠ 0", cd.name(idx(p, q)), cd.name(idx(s, t))));
                        }
                    }
                }
            }
        }
    }

    let mut report = Report::new();
    for p in parts {
        report.push(p);
    }
    report
}

/// Compares the dual basis of `tau_prime` with the transition formula
/// `D′_i = Σ_j τ(a_j D′_i) D_j`, where `D` is the dual basis of `tau`.
///
/// The variant with `τ(a_j D′_j)` as coefficient is evaluated as well and
/// recorded under the `index_j_variant_holds` value.
pub fn dual_basis_change(
    alg: &AlgebraSpec,
    tau: &TraceForm,
    tau_prime: &TraceForm,
) -> Result<Report, TraceError> {
    let d = compute_dual_basis(alg, tau)?;
    let d_prime = compute_dual_basis(alg, tau_prime)?;
    let n = alg.dim();
    let ds = d.elements();
    let mut entry = Entry::pass("dual.basis_change");
    let mut variant_holds = true;
    for i in 0..n {
        let dpi = d_prime.element(i);
        let via_formula = (0..n).fold(alg.zero(), |acc, j| {
            let coef = tau.apply(&alg.mul(&alg.basis_element(j), &dpi));
            &acc + &ds[j].scale(&coef)
        });
        if via_formula != dpi {
            entry.fail(format!("D′_{i} ≠ Σ_j τ(a_j D′_{i}) D_j"));
        }
        let variant = (0..n).fold(alg.zero(), |acc, j| {
            let coef = tau.apply(&alg.mul(&alg.basis_element(j), &d_prime.element(j)));
            &acc + &ds[j].scale(&coef)
        });
        variant_holds &= variant == dpi;
    }
    let mut r = Report::new();
    r.push(
        entry
            .with_value("identical_traces", tau == tau_prime)
            .with_value("index_j_variant_holds", variant_holds),
    );
    Ok(r)
}
