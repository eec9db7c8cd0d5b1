//! Finite-dimensional associative unital algebras given by structure
//! constants on an explicit basis.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use thiserror::Error;

use crate::linalg::{LinalgError, Matrix};
use crate::report::Entry;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure constant index ({i}, {j}, {k}) out of range for dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },
    #[error("{0} basis labels for dimension {1}")]
    LabelCount(usize, usize),
    #[error("structure constant has field {found}, algebra has {expected}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("algebra has no identity element")]
    NoIdentity,
    #[error("given identity is not a two-sided identity: {0}")]
    BadIdentity(String),
    #[error("involution is not an involutive permutation of 0..{0}")]
    BadInvolution(usize),
    #[error("not associative: {0}")]
    NotAssociative(String),
    #[error("involution is not an anti-automorphism: {0}")]
    NotAntiAutomorphism(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Sparse table `a_i·a_j = Σ_k r_{ijk} a_k`; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    field: Field,
    dim: usize,
    // products[i * dim + j] = sorted (k, r_ijk) with r_ijk ≠ 0
    products: Vec<Vec<(usize, Scalar)>>,
}

impl StructureConstants {
    pub fn new(field: Field, dim: usize) -> Self {
        StructureConstants {
            field,
            dim,
            products: vec![Vec::new(); dim * dim],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `r_{ijk}`; a zero value removes the entry.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) -> Result<(), AlgebraError> {
        let dim = self.dim;
        if i >= dim || j >= dim || k >= dim {
            return Err(AlgebraError::IndexOutOfRange { i, j, k, dim });
        }
        if value.field() != self.field {
            return Err(AlgebraError::FieldMismatch {
                expected: self.field,
                found: value.field(),
            });
        }
        let slot = &mut self.products[i * dim + j];
        match slot.binary_search_by_key(&k, |(kk, _)| *kk) {
            Ok(pos) if value.is_zero() => {
                slot.remove(pos);
            }
            Ok(pos) => slot[pos].1 = value,
            Err(_) if value.is_zero() => {}
            Err(pos) => slot.insert(pos, (k, value)),
        }
        Ok(())
    }

    /// Adds `value` to `r_{ijk}`.
    pub fn add_to(&mut self, i: usize, j: usize, k: usize, value: Scalar) -> Result<(), AlgebraError> {
        let current = self.get(i, j, k);
        self.set(i, j, k, &current + &value)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        let slot = &self.products[i * self.dim + j];
        match slot.binary_search_by_key(&k, |(kk, _)| *kk) {
            Ok(pos) => slot[pos].1.clone(),
            Err(_) => Scalar::zero(self.field),
        }
    }

    /// Nonzero `(k, r_{ijk})`, sorted by `k`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    /// All nonzero `(i, j, k, r_{ijk})` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.products.iter().enumerate().flat_map(move |(ij, row)| {
            let (i, j) = (ij / self.dim, ij % self.dim);
            row.iter().map(move |(k, v)| (i, j, *k, v))
        })
    }

    fn mul_coeffs(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xi * yj;
                for (k, r) in self.product(i, j) {
                    out[*k] = &out[*k] + &(&c * r);
                }
            }
        }
        out
    }
}

/// An algebra element as a coefficient vector over the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coeffs: Vec<Scalar>,
}

impl Element {
    pub fn zero(field: Field, dim: usize) -> Self {
        Element {
            coeffs: vec![Scalar::zero(field); dim],
        }
    }

    pub fn basis(field: Field, dim: usize, i: usize) -> Self {
        let mut e = Element::zero(field, dim);
        e.coeffs[i] = Scalar::one(field);
        e
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Element { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add<&Element> for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

/// A verified finite-dimensional associative unital algebra with an
/// involutive anti-automorphism permuting the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    labels: Vec<String>,
    sc: StructureConstants,
    identity: Element,
    involution: Vec<usize>,
}

impl AlgebraSpec {
    /// Validates the table and builds the algebra. The identity is solved
    /// for when not supplied.
    pub fn new(
        labels: Vec<String>,
        sc: StructureConstants,
        identity: Option<Element>,
        involution: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        let dim = sc.dim();
        if labels.len() != dim {
            return Err(AlgebraError::LabelCount(labels.len(), dim));
        }
        if involution.len() != dim
            || involution.iter().any(|&t| t >= dim)
            || (0..dim).any(|i| involution[involution[i]] != i)
        {
            return Err(AlgebraError::BadInvolution(dim));
        }
        let identity = match identity {
            Some(e) => {
                check_identity(&sc, &e).map_err(AlgebraError::BadIdentity)?;
                e
            }
            None => find_identity(&sc)?,
        };
        let assoc = check_associativity(&sc);
        if !assoc.passed() {
            return Err(AlgebraError::NotAssociative(assoc.witnesses.join("; ")));
        }
        let alg = AlgebraSpec {
            labels,
            sc,
            identity,
            involution,
        };
        let anti = check_anti_automorphism(&alg);
        if !anti.passed() {
            return Err(AlgebraError::NotAntiAutomorphism(anti.witnesses.join("; ")));
        }
        Ok(alg)
    }

    pub fn field(&self) -> Field {
        self.sc.field()
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn identity(&self) -> &Element {
        &self.identity
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field(), self.dim())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.field(), self.dim(), i)
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<Element, AlgebraError> {
        if coeffs.len() != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                found: coeffs.len(),
            }
            .into());
        }
        Ok(Element::from_coeffs(coeffs))
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        for e in [x, y] {
            if e.dim() != self.dim() {
                return Err(LinalgError::DimensionMismatch {
                    expected: self.dim(),
                    found: e.dim(),
                }
                .into());
            }
        }
        Ok(self.mul(x, y))
    }

    /// Product without the dimension check; panics on foreign elements.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        Element::from_coeffs(self.sc.mul_coeffs(&x.coeffs, &y.coeffs))
    }

    /// `a_i · a_j` as an element.
    pub fn mul_basis(&self, i: usize, j: usize) -> Element {
        let mut out = self.zero();
        for (k, r) in self.sc.product(i, j) {
            out.coeffs[*k] = r.clone();
        }
        out
    }

    /// Column `j` holds the coefficients of `a·a_j`.
    pub fn left_mult_matrix(&self, a: &Element) -> Matrix {
        self.mult_matrix(|j| self.mul(a, &self.basis_element(j)))
    }

    /// Column `j` holds the coefficients of `a_j·a`.
    pub fn right_mult_matrix(&self, a: &Element) -> Matrix {
        self.mult_matrix(|j| self.mul(&self.basis_element(j), a))
    }

    fn mult_matrix(&self, col: impl Fn(usize) -> Element) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for j in 0..n {
            for (i, c) in col(j).coeffs.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }

    pub fn involution_apply(&self, x: &Element) -> Element {
        let mut out = self.zero();
        for (i, c) in x.support() {
            out.coeffs[self.involution[i]] = c.clone();
        }
        out
    }

    /// Renders an element with basis labels, e.g. `2*a1 - 1/2*e2`.
    pub fn format(&self, x: &Element) -> String {
        let terms: Vec<String> = x
            .support()
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({c})*{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn check_identity(sc: &StructureConstants, e: &Element) -> Result<(), String> {
    if e.dim() != sc.dim() {
        return Err(format!("identity has length {}", e.dim()));
    }
    for i in 0..sc.dim() {
        let ai = Element::basis(sc.field(), sc.dim(), i);
        if sc.mul_coeffs(&e.coeffs, &ai.coeffs) != ai.coeffs {
            return Err(format!("e·a_{i} ≠ a_{i}"));
        }
        if sc.mul_coeffs(&ai.coeffs, &e.coeffs) != ai.coeffs {
            return Err(format!("a_{i}·e ≠ a_{i}"));
        }
    }
    Ok(())
}

/// Solves `e·a_i = a_i = a_i·e` for all `i`.
pub fn find_identity(sc: &StructureConstants) -> Result<Element, AlgebraError> {
    let (n, f) = (sc.dim(), sc.field());
    // Unknown e = Σ_m e_m a_m. Equation rows indexed by (side, i, k).
    let mut lhs = Matrix::zeros(f, 2 * n * n, n);
    let mut rhs = Matrix::zeros(f, 2 * n * n, 1);
    for i in 0..n {
        for m in 0..n {
            for (k, r) in sc.product(m, i) {
                lhs[(i * n + k, m)] = r.clone();
            }
            for (k, r) in sc.product(i, m) {
                lhs[(n * n + i * n + k, m)] = r.clone();
            }
        }
        rhs[(i * n + i, 0)] = Scalar::one(f);
        rhs[(n * n + i * n + i, 0)] = Scalar::one(f);
    }
    let x = lhs.solve(&rhs).map_err(|e| match e {
        LinalgError::Inconsistent => AlgebraError::NoIdentity,
        other => other.into(),
    })?;
    Ok(Element::from_coeffs(x.column(0)))
}

/// Checks `(a_i a_j) a_k = a_i (a_j a_k)` on all basis triples, stopping at
/// the first violation.
pub fn check_associativity(sc: &StructureConstants) -> Entry {
    let n = sc.dim();
    let f = sc.field();
    let mut entry = Entry::pass("algebra.associativity").with_value("dim", n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // (a_i a_j) a_k
                let mut left: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (m, r) in sc.product(i, j) {
                    for (l, s) in sc.product(*m, k) {
                        let slot = left.entry(*l).or_insert_with(|| Scalar::zero(f));
                        *slot = &*slot + &(r * s);
                    }
                }
                // a_i (a_j a_k)
                let mut right: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (m, r) in sc.product(j, k) {
                    for (l, s) in sc.product(i, *m) {
                        let slot = right.entry(*l).or_insert_with(|| Scalar::zero(f));
                        *slot = &*slot + &(r * s);
                    }
                }
                left.retain(|_, v| !v.is_zero());
                right.retain(|_, v| !v.is_zero());
                if left != right {
                    let l = (0..n)
                        .find(|l| left.get(l) != right.get(l))
                        .expect("maps differ");
                    entry.fail(format!(
                        "(i,j,k,l)=({i},{j},{k},{l}): ((a_i a_j) a_k)_l = {}, (a_i (a_j a_k))_l = {}",
                        left.get(&l).cloned().unwrap_or_else(|| Scalar::zero(f)),
                        right.get(&l).cloned().unwrap_or_else(|| Scalar::zero(f)),
                    ));
                    return entry;
                }
            }
        }
    }
    entry
}

/// Checks `i(a_j a_k) = i(a_k) i(a_j)` for all basis pairs and `i∘i = id`.
pub fn check_anti_automorphism(alg: &AlgebraSpec) -> Entry {
    let n = alg.dim();
    let inv = alg.involution();
    let mut witnesses = Vec::new();
    for j in 0..n {
        if inv[inv[j]] != j {
            witnesses.push(format!("i(i(a_{j})) ≠ a_{j}"));
        }
        for k in 0..n {
            let lhs = alg.involution_apply(&alg.mul_basis(j, k));
            let rhs = alg.mul_basis(inv[k], inv[j]);
            if lhs != rhs {
                witnesses.push(format!(
                    "(j,k)=({j},{k}): i(a_j a_k) = {}, i(a_k) i(a_j) = {}",
                    alg.format(&lhs),
                    alg.format(&rhs)
                ));
            }
        }
    }
    Entry::from_witnesses("algebra.anti_automorphism", witnesses)
}
