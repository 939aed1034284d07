"""The center, the Higman ideal and the cell ideals of a symmetric cellular algebra.

For a cell ``lam`` and a column ``T`` the *cell central element* is

    x(lam) = sum_S C(lam,S,T) D(lam,S,T)

and it does not depend on ``T``.  Its row-wise counterpart is

    x'(lam) = sum_T D(lam,S,T) C(lam,S,T)

for any fixed ``S``.  The spans of these elements are ideals of the center
sandwiched between the Higman ideal and the center.  In the split
semisimple case ``x(lam) / c(lam)`` are the primitive central idempotents,
with ``c(lam)`` the Schur element of the cell module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .algebra import Algebra, Element, left_mult_matrix, right_mult_matrix
from .cellular import CellDatum, CellModule, cell_modules, lambda0
from .errors import (
    HigmanFormsDisagree,
    NotSemisimple,
    SchurCrossCheckFailed,
    SemisimpleCriteriaDisagree,
    VerificationFailed,
)
from .linalg import Matrix, Subspace, kernel, rank, span, subspace_equal, subspace_leq
from .report import FAIL, NOT_APPLICABLE, PASS, Report
from .trace import DualBasis, TraceForm, compute_dual_basis, perturbed_trace

__all__ = [
    "CentralStructure",
    "SchurData",
    "compute_center",
    "cell_central_element",
    "cell_central_element_prime",
    "cell_central_elements",
    "cell_central_elements_prime",
    "compute_cell_ideal",
    "compute_cell_ideal_prime",
    "compute_higman",
    "central_structure",
    "verify_cell_ideal",
    "verify_cell_ideal_prime",
    "verify_orthogonality",
    "schur_elements",
    "primitive_idempotents",
    "integrality_check",
    "check_semisimple",
]


def compute_center(alg: Algebra) -> Subspace:
    """Kernel of ``v -> (a_i v - v a_i)`` stacked over all basis elements."""
    rows = []
    for i in range(alg.dim):
        b = alg.basis(i)
        rows.extend((left_mult_matrix(b) - right_mult_matrix(b)).rows)
    return kernel(Matrix(alg.field, tuple(rows), alg.dim))


def _x(alg, cd, dual, lam, t) -> Element:
    acc = alg.zero()
    for s in cd.m_sets[lam]:
        k = cd.index[lam, s, t]
        acc = acc + alg.basis(k) * dual[k]
    return acc


def _x_prime(alg, cd, dual, lam, s) -> Element:
    acc = alg.zero()
    for t in cd.m_sets[lam]:
        k = cd.index[lam, s, t]
        acc = acc + dual[k] * alg.basis(k)
    return acc


def cell_central_element(alg: Algebra, cd: CellDatum, dual: DualBasis, lam, t=None) -> Element:
    """``sum_S C(lam,S,T) D(lam,S,T)``, asserted equal for every column ``T``.

    With ``t`` given only that column is used.
    """
    if t is not None:
        return _x(alg, cd, dual, lam, t)
    columns = [_x(alg, cd, dual, lam, t) for t in cd.m_sets[lam]]
    for t, x in zip(cd.m_sets[lam], columns):
        if x != columns[0]:
            raise VerificationFailed(f"cell element of {lam} depends on the column (T = {t})")
    return columns[0]


def cell_central_element_prime(alg: Algebra, cd: CellDatum, dual: DualBasis, lam, s=None) -> Element:
    """``sum_T D(lam,S,T) C(lam,S,T)``, asserted equal for every row ``S``."""
    if s is not None:
        return _x_prime(alg, cd, dual, lam, s)
    rows = [_x_prime(alg, cd, dual, lam, s) for s in cd.m_sets[lam]]
    for s, x in zip(cd.m_sets[lam], rows):
        if x != rows[0]:
            raise VerificationFailed(f"row-wise cell element of {lam} depends on the row (S = {s})")
    return rows[0]


def cell_central_elements(alg, cd, dual) -> dict:
    return {lam: cell_central_element(alg, cd, dual, lam) for lam in cd.cells}


def cell_central_elements_prime(alg, cd, dual) -> dict:
    return {lam: cell_central_element_prime(alg, cd, dual, lam) for lam in cd.cells}


def compute_cell_ideal(alg: Algebra, cd: CellDatum, dual: DualBasis) -> Subspace:
    xs = cell_central_elements(alg, cd, dual)
    return span(alg.field, [x.coeffs for x in xs.values()], alg.dim)


def compute_cell_ideal_prime(alg: Algebra, cd: CellDatum, dual: DualBasis) -> Subspace:
    xs = cell_central_elements_prime(alg, cd, dual)
    return span(alg.field, [x.coeffs for x in xs.values()], alg.dim)


def higman_generators(alg: Algebra, dual: DualBasis) -> tuple[list[Element], list[Element]]:
    """Images of the basis under ``a -> sum_i D_i a a_i`` and ``a -> sum_i a_i a D_i``."""
    basis = [alg.basis(i) for i in range(alg.dim)]
    D = dual.elements()
    first, second = [], []
    for a in basis:
        acc1, acc2 = alg.zero(), alg.zero()
        for i in range(alg.dim):
            acc1 = acc1 + D[i] * a * basis[i]
            acc2 = acc2 + basis[i] * a * D[i]
        first.append(acc1)
        second.append(acc2)
    return first, second


def compute_higman(alg: Algebra, dual: DualBasis) -> Subspace:
    """The Higman ideal, computed from both sandwich forms.

    Raises :class:`HigmanFormsDisagree` if the two spans differ.
    """
    first, second = higman_generators(alg, dual)
    h1 = span(alg.field, [x.coeffs for x in first], alg.dim)
    h2 = span(alg.field, [x.coeffs for x in second], alg.dim)
    if not subspace_equal(h1, h2):
        raise HigmanFormsDisagree(f"sandwich spans differ: dims {h1.dim} and {h2.dim}")
    return h1


@dataclass
class CentralStructure:
    center: Subspace
    higman: Subspace
    cell_ideal: Subspace
    cell_ideal_prime: Subspace
    x: dict
    x_prime: dict

    def invariant_report(self) -> Report:
        report = Report()
        report.add("structure.higman_in_cell_ideal", PASS if self.higman <= self.cell_ideal else FAIL)
        report.add("structure.cell_ideal_in_center", PASS if self.cell_ideal <= self.center else FAIL)
        report.add("structure.higman_in_cell_ideal_prime", PASS if self.higman <= self.cell_ideal_prime else FAIL)
        report.add("structure.cell_ideal_prime_in_center", PASS if self.cell_ideal_prime <= self.center else FAIL)
        central = report.add("structure.cell_elements_central")
        for lam, x in self.x.items():
            central.expect(x.coeffs in self.center, str(lam))
        return report


def central_structure(alg: Algebra, cd: CellDatum, dual: DualBasis) -> CentralStructure:
    x = cell_central_elements(alg, cd, dual)
    xp = cell_central_elements_prime(alg, cd, dual)
    return CentralStructure(
        center=compute_center(alg),
        higman=compute_higman(alg, dual),
        cell_ideal=span(alg.field, [v.coeffs for v in x.values()], alg.dim),
        cell_ideal_prime=span(alg.field, [v.coeffs for v in xp.values()], alg.dim),
        x=x,
        x_prime=xp,
    )


def _verify_ideal(alg, cd, tau, tau2, prime: bool, modules=None) -> Report:
    name = "cell_ideal_prime" if prime else "cell_ideal"
    elements = cell_central_elements_prime if prime else cell_central_elements
    dual = compute_dual_basis(alg, tau)
    dual2 = compute_dual_basis(alg, tau2)
    xs = elements(alg, cd, dual)
    ideal = span(alg.field, [x.coeffs for x in xs.values()], alg.dim)
    center = compute_center(alg)
    higman = compute_higman(alg, dual)
    report = Report()
    report.add(f"{name}.contains_higman", PASS if subspace_leq(higman, ideal) else FAIL,
               higman_dim=higman.dim, ideal_dim=ideal.dim)
    report.add(f"{name}.inside_center", PASS if subspace_leq(ideal, center) else FAIL,
               center_dim=center.dim)
    closure = report.add(f"{name}.ideal_of_center")
    for z in center.basis:
        zel = alg.element(z)
        for lam, x in xs.items():
            closure.expect((zel * x).coeffs in ideal, {"cell": str(lam)})

    xs2 = elements(alg, cd, dual2)
    ideal2 = span(alg.field, [x.coeffs for x in xs2.values()], alg.dim)
    higman2 = compute_higman(alg, dual2)
    report.add(f"{name}.trace_independent", PASS if subspace_equal(ideal, ideal2) else FAIL,
               traces_equal=tau == tau2)
    report.add(f"{name}.higman_trace_independent", PASS if subspace_equal(higman, higman2) else FAIL)

    modules = modules if modules is not None else cell_modules(alg, cd)
    nondeg = lambda0(alg, cd, modules)
    report.add(f"{name}.dim_bound", PASS if ideal.dim >= len(nondeg) else FAIL,
               dim=ideal.dim, simple_count=len(nondeg))
    r = rank(Matrix(alg.field, tuple(xs[lam].coeffs for lam in nondeg), alg.dim)) if nondeg else 0
    report.add(f"{name}.nondegenerate_independent", PASS if r == len(nondeg) else FAIL, rank=r)
    if prime:
        other = compute_cell_ideal(alg, cd, dual)
        report.add(f"{name}.equals_cell_ideal", NOT_APPLICABLE, equal=subspace_equal(ideal, other))
    return report


def verify_cell_ideal(alg: Algebra, cd: CellDatum, tau: TraceForm, tau2: TraceForm | None = None) -> Report:
    """Containment, ideal property, trace independence and dimension bound for the cell ideal.

    ``tau2`` defaults to :func:`~symcell.trace.perturbed_trace`.
    """
    tau2 = tau2 if tau2 is not None else perturbed_trace(alg, tau)
    return _verify_ideal(alg, cd, tau, tau2, prime=False)


def verify_cell_ideal_prime(alg: Algebra, cd: CellDatum, tau: TraceForm, tau2: TraceForm | None = None) -> Report:
    """Same suite for the span of the row-wise elements; also records whether both ideals coincide."""
    tau2 = tau2 if tau2 is not None else perturbed_trace(alg, tau)
    return _verify_ideal(alg, cd, tau, tau2, prime=True)


def verify_orthogonality(alg: Algebra, cd: CellDatum, dual: DualBasis) -> Report:
    """Distinct cell central elements multiply to zero."""
    xs = cell_central_elements(alg, cd, dual)
    report = Report()
    check = report.add("cell_elements.orthogonal")
    for lam, x in xs.items():
        for mu, y in xs.items():
            if lam != mu:
                check.expect((x * y).is_zero(), (str(lam), str(mu)))
    return report


@dataclass
class SchurData:
    cell: object
    schur: object  # None when no route determines it
    character: tuple
    n: int
    via_character: object
    via_square: object


def schur_elements(alg: Algebra, cd: CellDatum, tau: TraceForm, dual: DualBasis | None = None,
                   modules: Mapping | None = None) -> dict:
    """Schur element of every cell module, by two routes.

    The character route divides ``sum_i chi(a_i) chi(D_i)`` by the module
    dimension; the square route reads ``c`` off ``x(lam)^2 = c x(lam)``.
    When both apply they must agree, otherwise
    :class:`SchurCrossCheckFailed` is raised.
    """
    dual = dual if dual is not None else compute_dual_basis(alg, tau)
    modules = modules if modules is not None else cell_modules(alg, cd)
    field = alg.field
    out = {}
    for lam in cd.cells:
        chi = modules[lam].character()
        n = cd.size(lam)
        total = field.zero
        for j in range(alg.dim):
            if chi[j]:
                chi_dual = sum((c * chi[k] for k, c in enumerate(dual.coeffs.rows[j]) if c), field.zero)
                total = total + chi[j] * chi_dual
        via_character = total / field(n) if field(n) else None
        if via_character is None and total:
            raise SchurCrossCheckFailed(f"cell {lam}: character sum {total} is nonzero but dim is 0 in the field")

        x = cell_central_element(alg, cd, dual, lam)
        via_square = None
        if x:
            sq = x * x
            pivot = x.support()[0]
            c = sq.coeffs[pivot] / x.coeffs[pivot]
            if sq != x * c:
                raise SchurCrossCheckFailed(f"cell {lam}: x^2 is not a multiple of x")
            via_square = c
        if via_character is not None and via_square is not None and via_character != via_square:
            raise SchurCrossCheckFailed(
                f"cell {lam}: character route gives {via_character}, square route gives {via_square}")
        schur = via_character if via_character is not None else via_square
        out[lam] = SchurData(lam, schur, chi, n, via_character, via_square)
    return out


def primitive_idempotents(alg: Algebra, cd: CellDatum, tau: TraceForm, dual: DualBasis | None = None) -> dict:
    """``x(lam) / c(lam)`` for every cell, verified as a complete orthogonal set.

    Also checks each against ``c^-1 sum_i chi(a_i) D_i``.  Raises
    :class:`NotSemisimple` when a Schur element vanishes.
    """
    dual = dual if dual is not None else compute_dual_basis(alg, tau)
    schur = schur_elements(alg, cd, tau, dual)
    zero_cells = [lam for lam, s in schur.items() if not s.schur]
    if zero_cells:
        raise NotSemisimple(f"Schur element vanishes for cells {', '.join(map(str, zero_cells))}")
    field = alg.field
    idem = {}
    for lam in cd.cells:
        c_inv = field.one / schur[lam].schur
        e = cell_central_element(alg, cd, dual, lam) * c_inv
        chi = schur[lam].character
        alt = alg.zero()
        for i in range(alg.dim):
            if chi[i]:
                alt = alt + dual[i] * chi[i]
        if alt * c_inv != e:
            raise VerificationFailed(f"character formula disagrees with x/c for cell {lam}")
        idem[lam] = e
    total = alg.zero()
    for lam, e in idem.items():
        if e * e != e:
            raise VerificationFailed(f"idempotent for {lam} is not idempotent")
        for mu, f in idem.items():
            if lam != mu and not (e * f).is_zero():
                raise VerificationFailed(f"idempotents for {lam} and {mu} are not orthogonal")
        total = total + e
    if total != alg.identity:
        raise VerificationFailed("idempotents do not sum to the identity")
    return idem


def integrality_check(alg: Algebra, cd: CellDatum, tau: TraceForm, coeffs: Mapping,
                      dual: DualBasis | None = None) -> Report:
    """For ``a = sum a(lam) x(lam)``, compare ``tau(a x(lam))`` with ``a(lam) c(lam) n(lam)``.

    Records ``tau(x(lam)) = |M(lam)|`` and, over Q, whether each
    ``a(lam) c(lam) n(lam)`` is an integer.  Over GF(p) integrality is
    reported as not applicable.
    """
    dual = dual if dual is not None else compute_dual_basis(alg, tau)
    field = alg.field
    schur = schur_elements(alg, cd, tau, dual)
    xs = cell_central_elements(alg, cd, dual)
    a = alg.zero()
    for lam, c in coeffs.items():
        a = a + xs[lam] * field(c)
    report = Report()
    trace_x = report.add("integrality.trace_of_cell_element")
    value = report.add("integrality.trace_identity")
    integral = report.add("integrality.integral",
                          PASS if field.characteristic == 0 else NOT_APPLICABLE)
    values = {}
    for lam in cd.cells:
        n = cd.size(lam)
        tx = tau(xs[lam])
        trace_x.expect(tx == field(n), {"cell": str(lam), "trace": tx})
        a_lam = field(coeffs.get(lam, 0))
        expected = a_lam * schur[lam].schur * field(n) if schur[lam].schur is not None else None
        got = tau(a * xs[lam])
        value.expect(expected is not None and got == expected, {"cell": str(lam), "got": got, "expected": expected})
        values[str(lam)] = got
        if field.characteristic == 0 and expected is not None and not field.is_integral(expected):
            integral.fail({"cell": str(lam), "value": expected})
    value.values["values"] = values
    return report


def check_semisimple(alg: Algebra, cd: CellDatum, tau: TraceForm, dual: DualBasis | None = None,
                     modules: Mapping | None = None) -> bool:
    """Nonsingular cell forms versus nonvanishing Schur elements; both must agree."""
    modules = modules if modules is not None else cell_modules(alg, cd)
    forms_ok = all(rank(m.gram) == m.dim for m in modules.values())
    schur = schur_elements(alg, cd, tau, dual, modules)
    schur_ok = all(s.schur for s in schur.values())
    if forms_ok != schur_ok:
        raise SemisimpleCriteriaDisagree(
            f"cell forms say {'semisimple' if forms_ok else 'not semisimple'}, Schur elements disagree")
    return forms_ok
