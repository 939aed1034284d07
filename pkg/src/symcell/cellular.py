"""Cell data, their verification, cell modules and cell forms.

A :class:`CellDatum` attaches to an algebra basis the labelling
``(cell, S, T) -> basis index`` together with a partial order on the cells.
:func:`verify_cell_datum` machine-checks the cellular axioms on the full
multiplication table; everything downstream assumes it passed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from .algebra import Algebra, check_anti_automorphism
from .errors import NotCellular, ValidationError
from .linalg import Matrix, kernel
from .report import Report

__all__ = [
    "Poset",
    "CellDatum",
    "CellModule",
    "verify_cell_datum",
    "cell_module",
    "cell_modules",
    "check_cell_module",
    "rad_dim",
    "lambda0",
]

Label = Hashable


class Poset:
    """A finite poset stored as its full relation matrix."""

    def __init__(self, elements: Sequence[Label], leq: Sequence[Sequence[bool]]):
        self.elements = tuple(elements)
        self._pos = {e: i for i, e in enumerate(self.elements)}
        if len(self._pos) != len(self.elements):
            raise ValidationError("poset has repeated elements")
        n = len(self.elements)
        self.leq_matrix = tuple(tuple(bool(x) for x in row) for row in leq)
        if len(self.leq_matrix) != n or any(len(r) != n for r in self.leq_matrix):
            raise ValidationError("relation matrix has the wrong shape")
        bad = self.axiom_violations()
        if bad:
            raise ValidationError("relation is not a partial order", witness=bad[0])

    @classmethod
    def from_covers(cls, elements: Sequence[Label], covers: Iterable[tuple[Label, Label]]) -> Poset:
        """Build from pairs ``(lower, upper)``, taking the reflexive-transitive closure."""
        elements = tuple(elements)
        pos = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        rel = [[i == j for j in range(n)] for i in range(n)]
        for lo, hi in covers:
            if lo not in pos or hi not in pos:
                raise ValidationError("covering relation names an unknown cell", witness=(lo, hi))
            rel[pos[lo]][pos[hi]] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        return cls(elements, rel)

    @classmethod
    def chain(cls, increasing: Sequence[Label], elements: Sequence[Label] | None = None) -> Poset:
        """Linear order with ``increasing[0] < increasing[1] < ...``."""
        chain = list(increasing)
        return cls.from_covers(elements if elements is not None else chain, zip(chain, chain[1:]))

    @classmethod
    def antichain(cls, elements: Sequence[Label]) -> Poset:
        return cls.from_covers(elements, [])

    def reversed(self) -> Poset:
        n = len(self.elements)
        return Poset(self.elements, [[self.leq_matrix[j][i] for j in range(n)] for i in range(n)])

    def axiom_violations(self) -> list:
        rel, els, n = self.leq_matrix, self.elements, len(self.elements)
        bad = []
        for i in range(n):
            if not rel[i][i]:
                bad.append(("reflexive", els[i]))
            for j in range(n):
                if i != j and rel[i][j] and rel[j][i]:
                    bad.append(("antisymmetric", els[i], els[j]))
                if rel[i][j]:
                    for k in range(n):
                        if rel[j][k] and not rel[i][k]:
                            bad.append(("transitive", els[i], els[j], els[k]))
        return bad

    def leq(self, a: Label, b: Label) -> bool:
        return self.leq_matrix[self._pos[a]][self._pos[b]]

    def lt(self, a: Label, b: Label) -> bool:
        return a != b and self.leq(a, b)

    def covers(self) -> list[tuple[Label, Label]]:
        """Covering pairs ``(lower, upper)`` in load order."""
        out = []
        for a in self.elements:
            for b in self.elements:
                if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in self.elements):
                    out.append((a, b))
        return out

    def __eq__(self, other):
        return isinstance(other, Poset) and (self.elements, self.leq_matrix) == (other.elements, other.leq_matrix)

    def __repr__(self):
        return f"Poset({list(self.elements)}, covers={self.covers()})"


class CellDatum:
    """Cells, their index sets ``M(cell)`` and the basis labelling.

    ``index`` maps ``(cell, S, T)`` to a basis index.  Cells are kept in the
    poset's load order, which is also the order of every cell-indexed result.
    """

    def __init__(self, poset: Poset, m_sets: Mapping[Label, Sequence[Label]], index: Mapping[tuple, int]):
        self.poset = poset
        self.cells = poset.elements
        self.m_sets = {lam: tuple(m_sets[lam]) for lam in self.cells}
        if set(m_sets) != set(self.cells):
            raise ValidationError("index sets do not match the poset elements", witness=sorted(map(str, set(m_sets) ^ set(self.cells))))
        for lam, ms in self.m_sets.items():
            if not ms:
                raise ValidationError("cell with empty index set", witness=lam)
            if len(set(ms)) != len(ms):
                raise ValidationError("repeated label in an index set", witness=lam)
        self.index = dict(index)
        self.dim = sum(len(ms) ** 2 for ms in self.m_sets.values())
        expected = {(lam, s, t) for lam, ms in self.m_sets.items() for s in ms for t in ms}
        if set(self.index) != expected:
            raise ValidationError("index table does not cover exactly the triples (cell, S, T)")
        if sorted(self.index.values()) != list(range(self.dim)):
            raise ValidationError("index is not a bijection onto the basis", witness=self.dim)
        self.label_of = [None] * self.dim
        for key, k in self.index.items():
            self.label_of[k] = key
        self._verified: dict[int, Report] = {}

    def size(self, lam: Label) -> int:
        return len(self.m_sets[lam])

    def cell_indices(self, lam: Label) -> list[int]:
        ms = self.m_sets[lam]
        return [self.index[lam, s, t] for s in ms for t in ms]

    def with_poset(self, poset: Poset) -> CellDatum:
        return CellDatum(poset, self.m_sets, self.index)

    def __repr__(self):
        sizes = ", ".join(f"{lam}:{len(ms)}" for lam, ms in self.m_sets.items())
        return f"<CellDatum dim={self.dim} cells=[{sizes}]>"


@dataclass
class CellModule:
    cell: Label
    labels: tuple
    action: tuple[Matrix, ...]  # one matrix per basis element of the algebra
    gram: Matrix

    @property
    def dim(self) -> int:
        return len(self.labels)

    def character(self) -> tuple:
        """Trace of the action of each basis element."""
        zero = self.gram.field.zero
        return tuple(sum((m[s, s] for s in range(self.dim)), zero) for m in self.action)


def verify_cell_datum(alg: Algebra, cd: CellDatum) -> Report:
    """Check the cellular axioms of ``cd`` against the multiplication table.

    For every basis element ``a`` and every basis element ``C(lam, S, T)``:

    * ``a C(lam,S,T)`` lives in row-space ``C(lam, *, T)`` plus strictly lower
      cells, with coefficients not depending on ``T``;
    * ``C(lam,T,S) i(a)`` lives in ``C(lam, T, *)`` plus lower cells, with the
      same coefficients.

    Also checks that the involution swaps ``S`` and ``T`` and is an
    anti-automorphism.
    """
    report = Report()
    index = report.add("cellular.indexing", dim=cd.dim)
    index.expect(cd.dim == alg.dim, ("dimension", cd.dim, alg.dim))
    if cd.dim != alg.dim:
        for name in ("involution_swap", "left_lower_terms", "left_row_independence",
                     "right_lower_terms", "right_column_independence"):
            report.add("cellular." + name, "fail")
        return report

    poset = report.add("cellular.poset")
    for w in cd.poset.axiom_violations():
        poset.fail(w)

    swap = report.add("cellular.involution_swap")
    for (lam, s, t), k in cd.index.items():
        swap.expect(alg.involution[k] == cd.index[lam, t, s], (alg.labels[k], str(lam), str(s), str(t)))
    report.extend(check_anti_automorphism(alg), prefix="cellular.")

    lower = report.add("cellular.left_lower_terms")
    rows = report.add("cellular.left_row_independence")
    rlower = report.add("cellular.right_lower_terms")
    rcols = report.add("cellular.right_column_independence")
    lt = cd.poset.lt
    for i in range(alg.dim):
        ai = alg.involution[i]
        for lam in cd.cells:
            ms = cd.m_sets[lam]
            reference: dict[tuple, object] | None = None
            for t in ms:
                coeffs = {}
                for s in ms:
                    for k, c in alg.product_terms(i, cd.index[lam, s, t]):
                        mu, x, y = cd.label_of[k]
                        if mu == lam and y == t:
                            coeffs[x, s] = c
                        elif not lt(mu, lam):
                            lower.fail({"a": alg.labels[i], "basis": alg.labels[cd.index[lam, s, t]],
                                        "term": alg.labels[k]})
                if reference is None:
                    reference = coeffs
                elif coeffs != reference:
                    rows.fail({"a": alg.labels[i], "cell": str(lam), "T": str(t)})
            # twisted condition: C(lam,T,S) i(a_i) = sum r_a(S',S) C(lam,T,S') mod lower
            for t in ms:
                coeffs = {}
                for s in ms:
                    for k, c in alg.product_terms(cd.index[lam, t, s], ai):
                        mu, x, y = cd.label_of[k]
                        if mu == lam and x == t:
                            coeffs[y, s] = c
                        elif not lt(mu, lam):
                            rlower.fail({"a": alg.labels[ai], "basis": alg.labels[cd.index[lam, t, s]],
                                         "term": alg.labels[k]})
                if reference is not None and coeffs != reference:
                    rcols.fail({"a": alg.labels[i], "cell": str(lam), "T": str(t)})
    cd._verified[id(alg)] = report
    return report


def _require_verified(alg: Algebra, cd: CellDatum) -> None:
    report = cd._verified.get(id(alg))
    if report is None:
        report = verify_cell_datum(alg, cd)
    if not report.ok:
        raise NotCellular("cell datum failed verification: " + ", ".join(c.name for c in report.failures()))


def cell_module(alg: Algebra, cd: CellDatum, lam: Label) -> CellModule:
    """Action matrices and cell form of the cell module for ``lam``."""
    _require_verified(alg, cd)
    field = alg.field
    ms = cd.m_sets[lam]
    n = len(ms)
    t0 = ms[0]
    pos = {s: p for p, s in enumerate(ms)}
    action = []
    for i in range(alg.dim):
        m = [[field.zero] * n for _ in range(n)]
        for s in ms:
            for k, c in alg.product_terms(i, cd.index[lam, s, t0]):
                mu, x, y = cd.label_of[k]
                if mu == lam and y == t0:
                    m[pos[x]][pos[s]] = c
        action.append(Matrix(field, tuple(map(tuple, m)), n))
    gram = [[field.zero] * n for _ in range(n)]
    for s in ms:
        for t in ms:
            gram[pos[s]][pos[t]] = alg.r(cd.index[lam, s, s], cd.index[lam, t, t], cd.index[lam, s, t])
    return CellModule(lam, ms, tuple(action), Matrix(field, tuple(map(tuple, gram)), n))


def cell_modules(alg: Algebra, cd: CellDatum) -> dict:
    return {lam: cell_module(alg, cd, lam) for lam in cd.cells}


def check_cell_module(alg: Algebra, module: CellModule) -> Report:
    """Representation property and symmetry of the cell form."""
    report = Report()
    rep = report.add(f"cell_module[{module.cell}].representation")
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = module.action[i] @ module.action[j]
            rhs = Matrix.zeros(alg.field, module.dim, module.dim)
            for k, c in alg.product_terms(i, j):
                rhs = rhs + module.action[k].scale(c)
            rep.expect(lhs == rhs, (alg.labels[i], alg.labels[j]))
    sym = report.add(f"cell_module[{module.cell}].form_symmetric")
    sym.expect(module.gram == module.gram.T)
    return report


def rad_dim(module: CellModule) -> int:
    """Dimension of the radical of the cell form."""
    return kernel(module.gram).dim


def lambda0(alg: Algebra, cd: CellDatum, modules: Mapping | None = None) -> list:
    """Cells whose cell form is not identically zero, in load order."""
    modules = modules if modules is not None else cell_modules(alg, cd)
    return [lam for lam in cd.cells if not modules[lam].gram.is_zero()]
