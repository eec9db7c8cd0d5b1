mod common;

use common::{elem, int, quiver_loop, Q};
use symcell::algebra::{check_anti_automorphism, check_associativity};
use symcell::builders::{
    build_matrix_blocks, build_quiver_zigzag, build_truncated_poly, quiver_unit_trace, BuiltAlgebra,
};
use symcell::cellular::{verify_cell_datum, CellularAlgebra};
use symcell::center::{
    check_trace_values, compute_center, primitive_idempotents, schur_elements, span, CenterError,
};
use symcell::trace::{compute_dual_basis, dual_basis_change};
use symcell::{Scalar, Subspace, TraceForm};

fn label_index(b: &BuiltAlgebra, label: &str) -> usize {
    b.algebra.labels().iter().position(|l| l == label).unwrap()
}

#[test]
fn truncated_products() {
    let b = build_truncated_poly(5, Q).unwrap();
    let alg = &b.algebra;
    let x2 = elem(alg, &[("x^2", 1)]);
    let x3 = elem(alg, &[("x^3", 1)]);
    assert!(alg.multiply(&x2, &x3).unwrap().is_zero());
    let a = elem(alg, &[("x", 2), ("x^4", -1)]);
    assert_eq!(alg.multiply(alg.identity(), &a).unwrap(), a);
}

#[test]
fn builders_pass_structure_checks() {
    let samples = common::corpus();
    assert!(samples.len() >= 12);
    for s in samples {
        let alg = &s.built.algebra;
        assert!(check_associativity(alg.structure_constants()).passed(), "{}", s.name);
        assert!(check_anti_automorphism(alg).passed(), "{}", s.name);
        assert!(verify_cell_datum(alg, &s.built.cells).all_pass(), "{}", s.name);
        assert_eq!(alg.involution_apply(alg.identity()), *alg.identity(), "{}", s.name);
    }
}

#[test]
fn quiver_reversed_order_fails_lower_terms() {
    let b = build_quiver_zigzag(4, Q).unwrap();
    // the e_1 cell sits on top
    assert!(b.cells.poset().lt(b.cells.num_cells() - 1, 0));
    let flipped = b.cells.with_poset(b.cells.poset().reversed()).unwrap();
    let r = verify_cell_datum(&b.algebra, &flipped);
    let lower = r.get("cell.c3_lower_terms").unwrap();
    assert!(!lower.passed());
    assert!(!lower.witnesses.is_empty());
    assert!(CellularAlgebra::new(b.algebra, flipped).is_err());
}

#[test]
fn simple_counts() {
    let blocks = build_matrix_blocks(&[2, 3], Q).unwrap();
    let ca = CellularAlgebra::new(blocks.algebra, blocks.cells).unwrap();
    assert_eq!(ca.lambda0().len(), 2);
    assert!(ca.cell_modules().iter().all(|m| m.rad_dim() == 0));

    let p = build_truncated_poly(5, Q).unwrap();
    assert_eq!(CellularAlgebra::new(p.algebra, p.cells).unwrap().lambda0().len(), 1);

    let q = build_quiver_zigzag(4, Q).unwrap();
    assert_eq!(CellularAlgebra::new(q.algebra, q.cells).unwrap().lambda0().len(), 4);
}

#[test]
fn dual_bases() {
    let p = build_truncated_poly(5, Q).unwrap();
    let d = compute_dual_basis(&p.algebra, &p.trace).unwrap();
    for i in 0..5 {
        assert_eq!(d.element(i), p.algebra.basis_element(4 - i));
    }
    assert_eq!(d.element(2), elem(&p.algebra, &[("x^2", 1)]));

    let m = build_matrix_blocks(&[3], Q).unwrap();
    let d = compute_dual_basis(&m.algebra, &m.trace).unwrap();
    for s in 1..=3 {
        for t in 1..=3 {
            let i = label_index(&m, &format!("E{s}{t}"));
            assert_eq!(d.element(i), elem(&m.algebra, &[(&format!("E{t}{s}"), 1)]));
        }
    }
}

#[test]
fn quiver_unit_trace_dual() {
    // with τ(e_k) = 1 the dual of a loop at a vertex picks up that vertex
    let b = build_quiver_zigzag(3, Q).unwrap();
    let t = quiver_unit_trace(&b).unwrap();
    let d = compute_dual_basis(&b.algebra, &t).unwrap();
    let i = label_index(&b, "a1a1'");
    assert_eq!(d.element(i), elem(&b.algebra, &[("e1", 1), ("a1a1'", -1)]));
}

#[test]
fn dual_basis_transition() {
    let q3 = build_quiver_zigzag(3, Q).unwrap();
    let mut vals = q3.trace.values().to_vec();
    vals[label_index(&q3, "e1")] = int(Q, 2);
    let t2 = TraceForm::new(&q3.algebra, vals).unwrap();
    assert!(dual_basis_change(&q3.algebra, &q3.trace, &t2).unwrap().all_pass());

    let same = dual_basis_change(&q3.algebra, &q3.trace, &q3.trace).unwrap();
    assert!(same.all_pass());
    assert_eq!(same.get("dual.basis_change").unwrap().values["identical_traces"], "true");

    let p3 = build_truncated_poly(3, Q).unwrap();
    let t2 = TraceForm::new(&p3.algebra, vec![int(Q, 0), int(Q, 1), int(Q, 1)]).unwrap();
    assert!(dual_basis_change(&p3.algebra, &p3.trace, &t2).unwrap().all_pass());
}

#[test]
fn centers() {
    let p = build_truncated_poly(5, Q).unwrap();
    assert_eq!(compute_center(&p.algebra), Subspace::full(Q, 5));

    let m = build_matrix_blocks(&[2, 3], Q).unwrap();
    assert_eq!(compute_center(&m.algebra).dim(), 2);

    let q = build_quiver_zigzag(4, Q).unwrap();
    let z = compute_center(&q.algebra);
    assert!(z.contains(q.algebra.identity().coeffs()).unwrap());
}

#[test]
fn x_lambda_values() {
    let sca = build_truncated_poly(5, Q).unwrap().symmetric().unwrap();
    let top = elem(sca.algebra(), &[("x^4", 1)]);
    for x in sca.x_all().unwrap() {
        assert_eq!(x, top);
    }
    let cs = sca.central_structure().unwrap();
    assert_eq!((cs.l.dim(), cs.z.dim() - cs.l.dim()), (1, 4));

    let m = build_matrix_blocks(&[2], Q).unwrap().symmetric().unwrap();
    assert_eq!(m.x_lambda(0).unwrap(), *m.algebra().identity());

    let blocks = build_matrix_blocks(&[2, 3], Q).unwrap().symmetric().unwrap();
    let cs = blocks.central_structure().unwrap();
    assert_eq!(cs.h, cs.z);
    let i2 = elem(blocks.algebra(), &[("E1_11", 1), ("E1_22", 1)]);
    let i3 = elem(blocks.algebra(), &[("E2_11", 1), ("E2_22", 1), ("E2_33", 1)]);
    assert_eq!(cs.x, vec![i2.clone(), i3.clone()]);
    assert!(blocks.algebra().mul(&i2, &i3).is_zero());
}

#[test]
fn quiver_higman_generators() {
    let n = 4;
    let sca = build_quiver_zigzag(n, Q).unwrap().symmetric().unwrap();
    let alg = sca.algebra();
    let rows: Vec<_> = (1..=n)
        .map(|k| {
            let mut terms = vec![(quiver_loop(n, k), 2)];
            if k > 1 {
                terms.push((quiver_loop(n, k - 1), 1));
            }
            if k < n {
                terms.push((quiver_loop(n, k + 1), 1));
            }
            let terms: Vec<(&str, i64)> = terms.iter().map(|(l, c)| (l.as_str(), *c)).collect();
            elem(alg, &terms)
        })
        .collect();
    assert_eq!(sca.compute_higman().unwrap(), span(Q, alg.dim(), &rows));

    let q3 = build_quiver_zigzag(3, Q).unwrap().symmetric().unwrap();
    let xs = q3.x_all().unwrap();
    for a in &xs {
        for b in &xs {
            assert!(q3.algebra().mul(a, b).is_zero());
        }
    }
}

#[test]
fn schur_values() {
    for k in 1..=3 {
        let m = build_matrix_blocks(&[k], Q).unwrap().symmetric().unwrap();
        assert_eq!(schur_elements(&m).unwrap().cells[0].schur, int(Q, 1));
    }
    let p = build_truncated_poly(5, Q).unwrap().symmetric().unwrap();
    let data = schur_elements(&p).unwrap();
    assert!(data.cells.iter().all(|c| c.schur.is_zero()));
    assert!(matches!(primitive_idempotents(&p), Err(CenterError::NotSemisimple { .. })));

    let b = build_matrix_blocks(&[2, 3], Q).unwrap();
    assert_eq!((b.algebra.dim(), b.cells.num_cells()), (13, 2));
    let sca = b.symmetric().unwrap();
    assert_eq!(primitive_idempotents(&sca).unwrap(), sca.x_all().unwrap());
}

#[test]
fn one_dimensional_cases() {
    let one = build_matrix_blocks(&[1], Q).unwrap().symmetric().unwrap();
    assert_eq!(primitive_idempotents(&one).unwrap(), vec![one.algebra().identity().clone()]);

    let p1 = build_truncated_poly(1, Q).unwrap().symmetric().unwrap();
    let cs = p1.central_structure().unwrap();
    assert_eq!(cs.l, Subspace::full(Q, 1));
    assert_eq!(cs.z, cs.l);

    assert_eq!(build_quiver_zigzag(2, Q).unwrap().algebra.dim(), 6);
}

#[test]
fn trace_values_for_a_single_x() {
    let sca = build_matrix_blocks(&[2, 3], Q).unwrap().symmetric().unwrap();
    let r = check_trace_values(&sca, &[int(Q, 0), int(Q, 1)]).unwrap();
    let e = r.get("trace_values.integrality").unwrap();
    assert_eq!(e.values["value[2]"], "3");
    assert_eq!(e.values["value[1]"], "0");
    let bad = check_trace_values(&sca, &[Scalar::one(Q)]).unwrap();
    assert!(!bad.all_pass());
}
