#![allow(dead_code)]

use symcell::algebra::Element;
use symcell::builders::{
    build_matrix_blocks, build_quiver_zigzag, build_temperley_lieb, build_truncated_poly, quiver_unit_trace,
    BuiltAlgebra,
};
use symcell::center::SymmetricCellularAlgebra;
use symcell::{AlgebraSpec, Field, Scalar, TraceForm};

pub const Q: Field = Field::Rational;

pub fn fp(p: u64) -> Field {
    Field::prime(p).unwrap()
}

pub fn int(f: Field, v: i64) -> Scalar {
    Scalar::from_i64(f, v)
}

pub struct Sample {
    pub name: String,
    pub built: BuiltAlgebra,
    /// Extra traces to test independence against.
    pub alt: Vec<TraceForm>,
}

impl Sample {
    fn new(name: String, built: BuiltAlgebra) -> Self {
        Sample {
            name,
            built,
            alt: Vec::new(),
        }
    }

    pub fn sca(&self) -> SymmetricCellularAlgebra {
        self.built.symmetric().unwrap()
    }
}

/// Quiver n ≤ 4, truncated polynomials n ≤ 6, blocks [2,3], TL n ≤ 3.
pub fn corpus() -> Vec<Sample> {
    let mut out = Vec::new();
    for n in 2..=4 {
        let built = build_quiver_zigzag(n, Q).unwrap();
        let unit = quiver_unit_trace(&built).unwrap();
        let mut s = Sample::new(format!("quiver-zigzag n={n}"), built);
        s.alt.push(unit);
        out.push(s);
    }
    for n in 1..=6 {
        out.push(Sample::new(format!("truncated-poly n={n}"), build_truncated_poly(n, Q).unwrap()));
    }
    out.push(Sample::new("matrix-blocks [2,3]".into(), build_matrix_blocks(&[2, 3], Q).unwrap()));
    for (n, d) in [(1, 3), (2, 2), (2, 3), (3, 3), (3, 2)] {
        let built = build_temperley_lieb(n, &int(Q, d)).unwrap();
        out.push(Sample::new(format!("temperley-lieb n={n} δ={d}"), built));
    }
    out
}

/// Element from `(label, coefficient)` pairs.
pub fn elem(alg: &AlgebraSpec, terms: &[(&str, i64)]) -> Element {
    let mut x = alg.zero();
    for &(label, c) in terms {
        let i = alg
            .labels()
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("no basis element {label}"));
        x = &x + &alg.basis_element(i).scale(&int(alg.field(), c));
    }
    x
}

/// The loop at vertex `k` of the zigzag quiver on `n` vertices.
pub fn quiver_loop(n: usize, k: usize) -> String {
    if k == n {
        format!("a{}'a{}", n - 1, n - 1)
    } else {
        format!("a{k}a{k}'")
    }
}
