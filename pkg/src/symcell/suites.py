"""Bundled verification suites used by the command line and the acceptance tests."""

from __future__ import annotations

from .algebra import Algebra, check_associativity
from .cellular import CellDatum, cell_modules, check_cell_module, lambda0, rad_dim, verify_cell_datum
from .center import (
    central_structure,
    check_semisimple,
    primitive_idempotents,
    schur_elements,
    verify_cell_ideal,
    verify_cell_ideal_prime,
    verify_orthogonality,
)
from .errors import DegenerateTrace, SymcellError
from .report import FAIL, NOT_APPLICABLE, PASS, Report
from .trace import (
    TraceForm,
    check_trace,
    compute_dual_basis,
    perturbed_trace,
    verify_cellular_duals,
    verify_dual_basis_change,
    verify_dual_multiplication,
)

__all__ = ["structural_report", "verification_report", "semisimple_report", "full_report"]


def structural_report(alg: Algebra, cd: CellDatum, tau: TraceForm) -> Report:
    """Associativity, involution, cellular axioms and trace checks."""
    report = Report()
    report.extend(check_associativity(alg))
    cells = verify_cell_datum(alg, cd)
    report.extend(cells)
    report.extend(check_trace(alg, tau))
    if cells.ok:
        for module in cell_modules(alg, cd).values():
            report.extend(check_cell_module(alg, module))
    return report


def verification_report(alg: Algebra, cd: CellDatum, tau: TraceForm, tau2: TraceForm | None = None) -> Report:
    """Dual-basis identities, the cell ideal suites and orthogonality."""
    report = Report()
    try:
        dual = compute_dual_basis(alg, tau)
    except DegenerateTrace as exc:
        report.add("dual.defining", FAIL, error=str(exc))
        return report
    if tau2 is None:
        tau2 = perturbed_trace(alg, tau)
    report.extend(verify_dual_multiplication(alg, tau, dual))
    report.extend(verify_cellular_duals(alg, cd, tau, dual))
    report.extend(verify_dual_basis_change(alg, tau, tau2))
    report.extend(verify_cell_ideal(alg, cd, tau, tau2))
    report.extend(verify_cell_ideal_prime(alg, cd, tau, tau2))
    report.extend(verify_orthogonality(alg, cd, dual))
    return report


def semisimple_report(alg: Algebra, cd: CellDatum, tau: TraceForm) -> Report:
    report = Report()
    dual = compute_dual_basis(alg, tau)
    modules = cell_modules(alg, cd)
    schur = schur_elements(alg, cd, tau, dual, modules)
    report.add("schur.values", PASS, **{str(lam): s.schur for lam, s in schur.items()})
    semisimple = check_semisimple(alg, cd, tau, dual, modules)
    report.add("semisimple.criteria_agree", PASS, semisimple=semisimple)
    if semisimple:
        try:
            primitive_idempotents(alg, cd, tau, dual)
            report.add("semisimple.idempotents", PASS, count=len(cd.cells))
        except SymcellError as exc:
            report.add("semisimple.idempotents", FAIL, error=str(exc))
    else:
        report.add("semisimple.idempotents", NOT_APPLICABLE, reason="NotSemisimple")
    return report


def full_report(alg: Algebra, cd: CellDatum, tau: TraceForm, tau2: TraceForm | None = None) -> Report:
    report = structural_report(alg, cd, tau)
    if not report.ok:
        return report
    dual = compute_dual_basis(alg, tau)
    modules = cell_modules(alg, cd)
    cs = central_structure(alg, cd, dual)
    report.add(
        "summary.dimensions", PASS,
        algebra=alg.dim, center=cs.center.dim, higman=cs.higman.dim,
        cell_ideal=cs.cell_ideal.dim, cell_ideal_prime=cs.cell_ideal_prime.dim,
    )
    report.add(
        "summary.cells", PASS,
        nondegenerate=[str(l) for l in lambda0(alg, cd, modules)],
        radical_dims={str(l): rad_dim(m) for l, m in modules.items()},
    )
    report.extend(cs.invariant_report())
    report.extend(verification_report(alg, cd, tau, tau2))
    try:
        report.extend(semisimple_report(alg, cd, tau))
    except SymcellError as exc:
        report.add("semisimple.criteria_agree", FAIL, error=str(exc))
    return report
