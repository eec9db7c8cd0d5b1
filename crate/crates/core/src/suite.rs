//! Report assembly shared by the command-line tool and the tests.

use crate::algebra::{check_anti_automorphism, check_associativity, AlgebraError};
use crate::builders::BuiltAlgebra;
use crate::cellular::{verify_cell_datum, CellularAlgebra};
use crate::center::{
    perturbed_trace, primitive_idempotents, schur_elements, verify_l_ideal, verify_l_prime_ideal,
    verify_x_orthogonality, CenterError, SchurRoute, SymmetricCellularAlgebra,
};
use crate::io::{IoError, ParsedFile};
use crate::report::{Entry, Report};
use crate::trace::{dual_basis_change, verify_cell_duality, verify_dual_action, TraceError, TraceForm};

/// Associativity, anti-automorphism, cellularity and trace checks on a
/// decoded file. Failures of these become report entries; any other
/// broken invariant is a validation error.
pub fn check_suite(parsed: &ParsedFile) -> Result<Report, IoError> {
    let mut r = Report::new();
    let assoc = check_associativity(&parsed.sc);
    let assoc_ok = assoc.passed();
    r.push(assoc);
    let skipped = |name: &str| Entry::not_applicable(name, "algebra invalid");
    if !assoc_ok {
        for name in ["algebra.anti_automorphism", "cell.datum", "trace.symmetric", "trace.nondegenerate"] {
            r.push(skipped(name));
        }
        return Ok(r);
    }
    let alg = match parsed.build_algebra() {
        Ok(a) => a,
        Err(AlgebraError::NotAntiAutomorphism(witnesses)) => {
            let mut e = Entry::pass("algebra.anti_automorphism");
            for w in witnesses.split("; ") {
                e.fail(w);
            }
            r.push(e);
            for name in ["cell.datum", "trace.symmetric", "trace.nondegenerate"] {
                r.push(skipped(name));
            }
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    r.push(check_anti_automorphism(&alg));

    let cd = parsed.cell_datum()?;
    let cell_report = verify_cell_datum(&alg, &cd);
    let cellular_ok = cell_report.all_pass();
    r.extend(cell_report);
    if cellular_ok {
        if let Ok(ca) = CellularAlgebra::new(alg.clone(), cd) {
            r.extend(ca.check_cell_modules());
        }
    }

    let (sym, nondeg) = match TraceForm::new(&alg, parsed.trace.clone()) {
        Ok(_) => (Entry::pass("trace.symmetric"), Entry::pass("trace.nondegenerate")),
        Err(TraceError::NotSymmetric { i, j }) => (
            Entry::from_bool("trace.symmetric", false, format!("τ(a_{i}a_{j}) ≠ τ(a_{j}a_{i})")),
            Entry::not_applicable("trace.nondegenerate", "trace is not symmetric"),
        ),
        Err(TraceError::DegenerateTrace) => (
            Entry::pass("trace.symmetric"),
            Entry::from_bool("trace.nondegenerate", false, "trace Gram matrix is singular"),
        ),
        Err(e) => return Err(e.into()),
    };
    r.push(sym);
    r.push(nondeg);
    Ok(r)
}

/// The symmetric cellular algebra, or the cellularity failure.
pub fn symmetric(built: &BuiltAlgebra) -> Result<SymmetricCellularAlgebra, String> {
    built.symmetric().map_err(|e| e.to_string())
}

/// The second trace used for independence checks: `alt` when given,
/// otherwise a deterministic perturbation of the first. Falls back to the
/// first trace when no perturbation is available.
pub fn alternate(sca: &SymmetricCellularAlgebra, alt: Option<TraceForm>) -> Result<SymmetricCellularAlgebra, TraceError> {
    let t = alt
        .or_else(|| perturbed_trace(sca))
        .unwrap_or_else(|| sca.trace().clone());
    sca.with_trace(t)
}

/// Every identity about dual bases and the spans `L`, `L′`.
pub fn verify_suite(sca: &SymmetricCellularAlgebra, alt: &SymmetricCellularAlgebra) -> Report {
    let mut r = Report::new();
    let alg = sca.algebra();
    r.extend(verify_dual_action(alg, sca.dual()));
    r.extend(verify_cell_duality(sca.cellular(), sca.dual()));
    match dual_basis_change(alg, sca.trace(), alt.trace()) {
        Ok(rep) => r.extend(rep),
        Err(e) => r.push(Entry::from_bool("dual.basis_change", false, e.to_string())),
    }
    r.extend(verify_l_ideal(sca, alt));
    r.extend(verify_l_prime_ideal(sca, alt));
    r.extend(verify_x_orthogonality(sca));
    r
}

/// Dimensions of `Z`, `H`, `L`, `L′`.
pub fn center_entry(sca: &SymmetricCellularAlgebra) -> Entry {
    match sca.central_structure() {
        Ok(cs) => Entry::pass("center.dimensions")
            .with_value("dim_z", cs.z.dim())
            .with_value("dim_h", cs.h.dim())
            .with_value("dim_l", cs.l.dim())
            .with_value("dim_l_prime", cs.l_prime.dim())
            .with_value("h_strictly_below_l", cs.h.dim() < cs.l.dim()),
        Err(e) => Entry::from_bool("center.dimensions", false, e.to_string()),
    }
}

/// Schur elements per cell and, in the semisimple case, the idempotent
/// checks. A non-semisimple algebra gives a not-applicable entry.
pub fn idempotent_report(sca: &SymmetricCellularAlgebra) -> Report {
    let mut r = Report::new();
    let cells = sca.cellular().cells();
    match schur_elements(sca) {
        Ok(data) => {
            let mut e = Entry::pass("schur.elements").with_value("all_nonzero", data.all_nonzero());
            for c in &data.cells {
                let label = cells.lambda_label(c.lambda);
                e = e.with_value(format!("c[{label}]"), &c.schur);
                if c.route != SchurRoute::CharacterSum {
                    e = e.with_value(format!("route[{label}]"), format!("{:?}", c.route));
                }
            }
            r.push(e);
        }
        Err(err) => r.push(Entry::from_bool("schur.elements", false, err.to_string())),
    }
    let idem = match primitive_idempotents(sca) {
        Ok(es) => Entry::pass("idempotents.complete_orthogonal_primitive").with_value("count", es.len()),
        Err(e @ CenterError::NotSemisimple { .. }) => {
            Entry::not_applicable("idempotents.complete_orthogonal_primitive", e.to_string())
        }
        Err(e) => Entry::from_bool("idempotents.complete_orthogonal_primitive", false, e.to_string()),
    };
    r.push(idem);
    r
}

/// Structural checks, then (if they pass) every suite.
pub fn full_report(parsed: &ParsedFile, alt: Option<TraceForm>) -> Result<Report, IoError> {
    let mut r = check_suite(parsed)?;
    if !r.all_pass() {
        return Ok(r);
    }
    let built = parsed.validate()?;
    let sca = match symmetric(&built) {
        Ok(s) => s,
        Err(e) => {
            r.push(Entry::from_bool("cell.datum", false, e));
            return Ok(r);
        }
    };
    match alternate(&sca, alt) {
        Ok(alt) => r.extend(verify_suite(&sca, &alt)),
        Err(e) => r.push(Entry::from_bool("dual.alternate_trace", false, e.to_string())),
    }
    r.push(center_entry(&sca));
    r.extend(idempotent_report(&sca));
    Ok(r)
}
