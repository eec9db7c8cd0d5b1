//! Cell data `(Λ, M, C, i)`, their verification, cell modules and the
//! bilinear forms `Φ_λ`.
//!
//! A basis index `k` of the algebra corresponds to a triple `(λ, S, T)`
//! with `S, T ∈ M(λ)`; we write `C^λ_{S,T}` for that basis element.

use thiserror::Error;

use crate::algebra::{AlgebraSpec, Element};
use crate::linalg::Matrix;
use crate::report::{Entry, Report};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellularError {
    #[error("poset relation refers to cell {0} but there are only {1} cells")]
    UnknownCell(usize, usize),
    #[error("poset order has a cycle through cells {0} and {1}")]
    NotAntisymmetric(usize, usize),
    #[error("cell {0} has an empty index set")]
    EmptyCell(usize),
    #[error("cell {lambda} index table is not {m}x{m}")]
    BadIndexTable { lambda: usize, m: usize },
    #[error("cell sizes give Σ|M(λ)|² = {found}, algebra dimension is {dim}")]
    CountMismatch { found: usize, dim: usize },
    #[error("basis index {0} is out of range or used twice")]
    NotBijective(usize),
    #[error("{0} poset labels for {1} cells")]
    LabelCount(usize, usize),
    #[error("cell datum fails verification:\n{0}")]
    NotCellular(String),
}

/// A finite poset stored as its reflexive-transitive relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the order generated by `covers`, each pair `(lower, upper)`.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, CellularError> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(lo, hi) in covers {
            for c in [lo, hi] {
                if c >= n {
                    return Err(CellularError::UnknownCell(c, n));
                }
            }
            leq[lo][hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(CellularError::NotAntisymmetric(i, j));
                }
            }
        }
        Ok(Poset { labels, leq })
    }

    /// Linear order with `labels[0]` lowest.
    pub fn chain(labels: Vec<String>) -> Self {
        let covers: Vec<_> = (1..labels.len()).map(|i| (i - 1, i)).collect();
        Poset::from_covers(labels, &covers).expect("chains are posets")
    }

    pub fn antichain(labels: Vec<String>) -> Self {
        Poset::from_covers(labels, &[]).expect("antichains are posets")
    }

    pub fn reversed(&self) -> Self {
        let n = self.len();
        Poset {
            labels: self.labels.clone(),
            leq: (0..n).map(|i| (0..n).map(|j| self.leq[j][i]).collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Hasse diagram `(lower, upper)` pairs in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for lo in 0..n {
            for hi in 0..n {
                if self.lt(lo, hi) && !(0..n).any(|m| self.lt(lo, m) && self.lt(m, hi)) {
                    out.push((lo, hi));
                }
            }
        }
        out
    }
}

/// Position of a basis element inside the cellular basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellIndex {
    pub lambda: usize,
    pub s: usize,
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDatum {
    poset: Poset,
    m_sets: Vec<Vec<String>>,
    index: Vec<Vec<Vec<usize>>>,
    locate: Vec<CellIndex>,
}

impl CellDatum {
    /// `index[λ][S][T]` is the basis index of `C^λ_{S,T}`.
    pub fn new(
        poset: Poset,
        m_sets: Vec<Vec<String>>,
        index: Vec<Vec<Vec<usize>>>,
        dim: usize,
    ) -> Result<Self, CellularError> {
        if m_sets.len() != poset.len() || index.len() != poset.len() {
            return Err(CellularError::LabelCount(poset.len(), m_sets.len()));
        }
        let mut total = 0;
        for (lambda, (m, table)) in m_sets.iter().zip(&index).enumerate() {
            if m.is_empty() {
                return Err(CellularError::EmptyCell(lambda));
            }
            if table.len() != m.len() || table.iter().any(|row| row.len() != m.len()) {
                return Err(CellularError::BadIndexTable { lambda, m: m.len() });
            }
            total += m.len() * m.len();
        }
        if total != dim {
            return Err(CellularError::CountMismatch { found: total, dim });
        }
        let mut locate: Vec<Option<CellIndex>> = vec![None; dim];
        for (lambda, table) in index.iter().enumerate() {
            for (s, row) in table.iter().enumerate() {
                for (t, &k) in row.iter().enumerate() {
                    match locate.get_mut(k) {
                        Some(slot @ None) => *slot = Some(CellIndex { lambda, s, t }),
                        _ => return Err(CellularError::NotBijective(k)),
                    }
                }
            }
        }
        Ok(CellDatum {
            poset,
            m_sets,
            index,
            locate: locate.into_iter().map(|c| c.expect("counted")).collect(),
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Same cells and basis indexing under a different order on `Λ`.
    pub fn with_poset(&self, poset: Poset) -> Result<Self, CellularError> {
        CellDatum::new(poset, self.m_sets.clone(), self.index.clone(), self.locate.len())
    }

    pub fn num_cells(&self) -> usize {
        self.m_sets.len()
    }

    pub fn cells(&self) -> std::ops::Range<usize> {
        0..self.num_cells()
    }

    pub fn lambda_label(&self, lambda: usize) -> &str {
        &self.poset.labels()[lambda]
    }

    pub fn m_set(&self, lambda: usize) -> &[String] {
        &self.m_sets[lambda]
    }

    /// `|M(λ)|`.
    pub fn m(&self, lambda: usize) -> usize {
        self.m_sets[lambda].len()
    }

    pub fn index_table(&self, lambda: usize) -> &[Vec<usize>] {
        &self.index[lambda]
    }

    pub fn basis_index(&self, lambda: usize, s: usize, t: usize) -> usize {
        self.index[lambda][s][t]
    }

    pub fn locate(&self, k: usize) -> CellIndex {
        self.locate[k]
    }

    pub fn dim(&self) -> usize {
        self.locate.len()
    }

    /// Readable name `C^λ_{S,T}` for a basis index.
    pub fn name(&self, k: usize) -> String {
        let c = self.locate[k];
        format!(
            "C[{}]({},{})",
            self.lambda_label(c.lambda),
            self.m_sets[c.lambda][c.s],
            self.m_sets[c.lambda][c.t]
        )
    }
}

/// Checks the involution condition (C2) and the multiplication axioms
/// (C3), (C3′) for every basis element acting on every `C^λ_{S,T}`.
pub fn verify_cell_datum(alg: &AlgebraSpec, cd: &CellDatum) -> Report {
    let mut report = Report::new();
    if cd.dim() != alg.dim() {
        report.push(Entry::from_bool(
            "cell.dimension",
            false,
            format!("cell datum indexes {} elements, algebra has {}", cd.dim(), alg.dim()),
        ));
        return report;
    }

    let inv = alg.involution();
    let mut invol = Entry::pass("cell.c2_involution");
    for k in 0..cd.dim() {
        let c = cd.locate(k);
        if inv[k] != cd.basis_index(c.lambda, c.t, c.s) {
            invol.fail(format!("i({}) is not {}", cd.name(k), cd.name(cd.basis_index(c.lambda, c.t, c.s))));
        }
    }
    report.push(invol);

    let mut lower = Entry::pass("cell.c3_lower_terms");
    let mut column = Entry::pass("cell.c3_column");
    let mut indep = Entry::pass("cell.c3_independent_of_t");
    let mut prime = Entry::pass("cell.c3_prime");
    let poset = cd.poset();

    for a in 0..alg.dim() {
        for lambda in cd.cells() {
            let m = cd.m(lambda);
            for s in 0..m {
                let mut reference: Option<Vec<Scalar>> = None;
                for t in 0..m {
                    let k = cd.basis_index(lambda, s, t);
                    let mut coeffs = vec![Scalar::zero(alg.field()); m];
                    for (idx, r) in alg.structure_constants().product(a, k) {
                        let c = cd.locate(*idx);
                        if c.lambda == lambda {
                            if c.t == t {
                                coeffs[c.s] = r.clone();
                            } else {
                                column.fail(format!(
                                    "{}·{} has {} in cell {} outside column",
                                    alg.labels()[a],
                                    cd.name(k),
                                    cd.name(*idx),
                                    cd.lambda_label(lambda)
                                ));
                            }
                        } else if !poset.lt(c.lambda, lambda) {
                            lower.fail(format!(
                                "{}·{} has term {} but {} is not below {}",
                                alg.labels()[a],
                                cd.name(k),
                                cd.name(*idx),
                                cd.lambda_label(c.lambda),
                                cd.lambda_label(lambda)
                            ));
                        }
                    }
                    match &reference {
                        None => reference = Some(coeffs.clone()),
                        Some(r0) if *r0 != coeffs => indep.fail(format!(
                            "r_a(·,{}) for a = {} differs between T = {} and T = {}",
                            cd.m_set(lambda)[s],
                            alg.labels()[a],
                            cd.m_set(lambda)[0],
                            cd.m_set(lambda)[t]
                        )),
                        _ => {}
                    }

                    // (C3′): C_{T,S}·i(a) ≡ Σ r_a(S′,S) C_{T,S′}
                    let k_ts = cd.basis_index(lambda, t, s);
                    let mut right = vec![Scalar::zero(alg.field()); m];
                    let mut ok = true;
                    for (idx, r) in alg.structure_constants().product(k_ts, inv[a]) {
                        let c = cd.locate(*idx);
                        if c.lambda == lambda && c.s == t {
                            right[c.t] = r.clone();
                        } else if !poset.lt(c.lambda, lambda) {
                            ok = false;
                        }
                    }
                    if !ok || right != coeffs {
                        prime.fail(format!(
                            "{}·i({}) does not mirror {}·{}",
                            cd.name(k_ts),
                            alg.labels()[a],
                            alg.labels()[a],
                            cd.name(k)
                        ));
                    }
                }
            }
        }
    }
    report.push(lower);
    report.push(column);
    report.push(indep);
    report.push(prime);
    report
}

/// The cell module `W(λ)` with its action and Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellModule {
    pub lambda: usize,
    /// `action[i][(S′, S)] = r_{a_i}(S′, S)`.
    pub action: Vec<Matrix>,
    /// `gram[(S, T)] = Φ_λ(C_S, C_T)`.
    pub gram: Matrix,
}

impl CellModule {
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// `dim rad(λ)`.
    pub fn rad_dim(&self) -> usize {
        self.gram.kernel().dim()
    }

    pub fn form_is_nonzero(&self) -> bool {
        !self.gram.is_zero()
    }

    /// Matrix of an arbitrary element acting on `W(λ)`.
    pub fn action_of(&self, x: &Element) -> Matrix {
        let f = self.gram.field();
        let mut out = Matrix::zeros(f, self.dim(), self.dim());
        for (i, c) in x.support() {
            out = out.add(&self.action[i].scale(c)).expect("same shape");
        }
        out
    }

    /// `χ_{W(λ)}(x) = Σ_S r_x(S, S)`.
    pub fn character(&self, x: &Element) -> Scalar {
        let f = self.gram.field();
        let mut acc = Scalar::zero(f);
        for (i, c) in x.support() {
            acc = &acc + &(c * &trace(&self.action[i]));
        }
        acc
    }
}

fn trace(m: &Matrix) -> Scalar {
    (0..m.rows()).fold(Scalar::zero(m.field()), |acc, i| &acc + &m[(i, i)])
}

/// An algebra together with a cell datum that has passed verification.
#[derive(Debug, Clone)]
pub struct CellularAlgebra {
    algebra: AlgebraSpec,
    cells: CellDatum,
    modules: Vec<CellModule>,
}

impl CellularAlgebra {
    pub fn new(algebra: AlgebraSpec, cells: CellDatum) -> Result<Self, CellularError> {
        let report = verify_cell_datum(&algebra, &cells);
        if !report.all_pass() {
            return Err(CellularError::NotCellular(report.to_string()));
        }
        let modules = cells.cells().map(|l| build_cell_module(&algebra, &cells, l)).collect();
        Ok(CellularAlgebra {
            algebra,
            cells,
            modules,
        })
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        &self.algebra
    }

    pub fn cells(&self) -> &CellDatum {
        &self.cells
    }

    pub fn cell_module(&self, lambda: usize) -> &CellModule {
        &self.modules[lambda]
    }

    pub fn cell_modules(&self) -> &[CellModule] {
        &self.modules
    }

    /// `Λ₀ = {λ : Φ_λ ≠ 0}` in load order.
    pub fn lambda0(&self) -> Vec<usize> {
        self.modules
            .iter()
            .filter(|m| m.form_is_nonzero())
            .map(|m| m.lambda)
            .collect()
    }

    /// `r_{(S,T,λ),(U,V,μ),(X,Y,ε)}` through basis indices.
    pub fn r(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.algebra.structure_constants().get(i, j, k)
    }

    /// Checks that every cell module is a representation and every `Φ_λ`
    /// is symmetric.
    pub fn check_cell_modules(&self) -> Report {
        let alg = &self.algebra;
        let mut rep = Entry::pass("cell.module_representation");
        let mut sym = Entry::pass("cell.gram_symmetric");
        for module in &self.modules {
            let label = self.cells.lambda_label(module.lambda);
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    let lhs = module.action[i].mul(&module.action[j]).expect("square");
                    let rhs = module.action_of(&alg.mul_basis(i, j));
                    if lhs != rhs {
                        rep.fail(format!("W({label}): ρ(a_{i})ρ(a_{j}) ≠ ρ(a_{i}a_{j})"));
                    }
                }
            }
            if module.gram != module.gram.transpose() {
                sym.fail(format!("Φ_{label} is not symmetric"));
            }
        }
        let mut r = Report::new();
        r.push(rep);
        r.push(sym);
        r
    }
}

fn build_cell_module(alg: &AlgebraSpec, cd: &CellDatum, lambda: usize) -> CellModule {
    let f = alg.field();
    let m = cd.m(lambda);
    let action = (0..alg.dim())
        .map(|a| {
            let mut mat = Matrix::zeros(f, m, m);
            for s in 0..m {
                let k = cd.basis_index(lambda, s, 0);
                for (idx, r) in alg.structure_constants().product(a, k) {
                    let c = cd.locate(*idx);
                    if c.lambda == lambda {
                        mat[(c.s, s)] = r.clone();
                    }
                }
            }
            mat
        })
        .collect();
    let mut gram = Matrix::zeros(f, m, m);
    for s in 0..m {
        for t in 0..m {
            let ss = cd.basis_index(lambda, s, s);
            let tt = cd.basis_index(lambda, t, t);
            gram[(s, t)] = alg
                .structure_constants()
                .get(ss, tt, cd.basis_index(lambda, s, t));
        }
    }
    CellModule {
        lambda,
        action,
        gram,
    }
}
