"""Finite-dimensional associative algebras given by structure constants.

An :class:`Algebra` holds a sparse table ``a_i a_j = sum_k r[i, j, k] a_k``
on an explicit basis, an identity element and an involutive permutation of
the basis that is meant to extend to an anti-automorphism.  Elements are
immutable coefficient vectors supporting ``+``, ``-``, scalar multiplication
and the algebra product ``*``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, Inconsistent, NoIdentity, ValidationError
from .field import Field
from .linalg import Matrix, solve
from .report import Report

__all__ = [
    "Algebra",
    "Element",
    "multiply",
    "check_associativity",
    "check_anti_automorphism",
    "find_identity",
    "left_mult_matrix",
    "right_mult_matrix",
    "involution_apply",
]


class Element:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs: Sequence):
        if len(coeffs) != algebra.dim:
            raise DimensionMismatch(f"{len(coeffs)} coefficients for an algebra of dimension {algebra.dim}")
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    def _same(self, other: Element) -> None:
        if other.algebra is not self.algebra and other.algebra.dim != self.algebra.dim:
            raise DimensionMismatch("elements of different algebras")

    def __add__(self, other: Element) -> Element:
        self._same(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Element) -> Element:
        self._same(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Element:
        return Element(self.algebra, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        c = self.algebra.field(other)
        return Element(self.algebra, tuple(c * a for a in self.coeffs))

    def __rmul__(self, other):
        c = self.algebra.field(other)
        return Element(self.algebra, tuple(c * a for a in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra.dim == other.algebra.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [i for i, a in enumerate(self.coeffs) if a]

    def __repr__(self):
        return f"Element({self.algebra.format(self)})"


class Algebra:
    """An associative unital algebra presented by structure constants.

    ``structure_constants`` maps ``(i, j, k)`` to the coefficient of ``a_k``
    in ``a_i a_j``; absent triples are zero.  When ``identity`` is omitted it
    is solved for.  With ``validate=True`` associativity, the identity and
    the anti-automorphism property are checked and a :class:`ValidationError`
    carrying the first witness is raised on failure.
    """

    def __init__(
        self,
        field: Field,
        dim: int,
        structure_constants: Mapping[tuple[int, int, int], object],
        labels: Sequence[str] | None = None,
        identity: Sequence | None = None,
        involution: Sequence[int] | None = None,
        validate: bool = True,
    ):
        self.field = field
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise DimensionMismatch(f"{len(self.labels)} labels for dimension {dim}")
        table: list[list[dict]] = [[{} for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), c in structure_constants.items():
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ValidationError("structure constant index out of range", witness=(i, j, k))
            c = field(c)
            if c:
                cell = table[i][j]
                cell[k] = cell.get(k, field.zero) + c
                if not cell[k]:
                    del cell[k]
        self._table = tuple(tuple(tuple(sorted(cell.items())) for cell in row) for row in table)
        self.involution = tuple(involution) if involution is not None else tuple(range(dim))
        if sorted(self.involution) != list(range(dim)):
            raise ValidationError("involution is not a permutation of the basis", witness=self.involution)
        if identity is None:
            self.identity = find_identity(self)
        else:
            self.identity = Element(self, tuple(field(c) for c in identity))
        self._associativity: Report | None = None
        if validate:
            self.validate()

    # -- construction helpers ---------------------------------------------

    def validate(self) -> None:
        rep = check_associativity(self)
        if not rep.ok:
            raise ValidationError("structure constants are not associative", witness=rep["associativity"].witnesses[0])
        one = self.identity
        for i in range(self.dim):
            b = self.basis(i)
            if one * b != b or b * one != b:
                raise ValidationError("identity does not act as identity", witness=self.labels[i])
        rep = check_anti_automorphism(self)
        if not rep.ok:
            bad = rep.failures()[0]
            raise ValidationError(f"involution fails: {bad.name}", witness=bad.witnesses[0] if bad.witnesses else None)

    def structure_constants(self) -> dict[tuple[int, int, int], object]:
        return {(i, j, k): c for i, row in enumerate(self._table) for j, cell in enumerate(row) for k, c in cell}

    def product_terms(self, i: int, j: int) -> tuple[tuple[int, object], ...]:
        """Sparse expansion ``((k, r_ijk), ...)`` of ``a_i a_j``."""
        return self._table[i][j]

    def r(self, i: int, j: int, k: int):
        for kk, c in self._table[i][j]:
            if kk == k:
                return c
        return self.field.zero

    @property
    def nnz(self) -> int:
        return sum(len(cell) for row in self._table for cell in row)

    # -- elements ----------------------------------------------------------

    def basis(self, i: int) -> Element:
        zero, one = self.field.zero, self.field.one
        return Element(self, tuple(one if k == i else zero for k in range(self.dim)))

    def element(self, coeffs: Sequence) -> Element:
        return Element(self, tuple(self.field(c) for c in coeffs))

    def zero(self) -> Element:
        return Element(self, (self.field.zero,) * self.dim)

    def from_terms(self, terms: Mapping[int, object] | Iterable[tuple[int, object]]) -> Element:
        items = terms.items() if isinstance(terms, Mapping) else terms
        coeffs = [self.field.zero] * self.dim
        for k, c in items:
            coeffs[k] = coeffs[k] + self.field(c)
        return Element(self, tuple(coeffs))

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __getitem__(self, label: str) -> Element:
        return self.basis(self.index(label))

    def format(self, x: Element) -> str:
        if x.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(x.coeffs):
            if c:
                if c == self.field.one:
                    parts.append(self.labels[k])
                else:
                    parts.append(f"({self.field.format(c)})*{self.labels[k]}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<Algebra dim={self.dim} over {self.field.tag}>"


def multiply(x: Element, y: Element) -> Element:
    x._same(y)
    alg = x.algebra
    table = alg._table
    acc = [alg.field.zero] * alg.dim
    ynz = [(j, b) for j, b in enumerate(y.coeffs) if b]
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        row = table[i]
        for j, b in ynz:
            ab = a * b
            for k, c in row[j]:
                acc[k] = acc[k] + ab * c
    return Element(alg, tuple(acc))


def check_associativity(alg: Algebra) -> Report:
    """Compare ``(a_i a_j) a_k`` with ``a_i (a_j a_k)`` on all basis triples.

    Stops at the first violation; the witness is ``(i, j, k, l)`` with ``l``
    the first coordinate where the two sides differ.  The result is cached on
    the algebra.
    """
    if alg._associativity is not None:
        return alg._associativity
    report = Report()
    check = report.add("associativity")
    basis = [alg.basis(i) for i in range(alg.dim)]
    prods = [[basis[i] * basis[j] for j in range(alg.dim)] for i in range(alg.dim)]
    done = False
    for i in range(alg.dim):
        for j in range(alg.dim):
            ij = prods[i][j]
            for k in range(alg.dim):
                lhs = ij * basis[k]
                rhs = basis[i] * prods[j][k]
                if lhs != rhs:
                    l = next(m for m in range(alg.dim) if lhs.coeffs[m] != rhs.coeffs[m])
                    check.fail((i, j, k, l))
                    check.values.update(lhs=lhs.coeffs[l], rhs=rhs.coeffs[l])
                    done = True
                    break
            if done:
                break
        if done:
            break
    alg._associativity = report
    return report


def find_identity(alg: Algebra) -> Element:
    """Solve ``e a_i = a_i = a_i e`` for all basis elements."""
    n, field = alg.dim, alg.field
    zero, one = field.zero, field.one
    rows, rhs = [], []
    # unknown e = sum_m e_m a_m; coefficient of a_k in e a_i is sum_m e_m r[m, i, k]
    for i in range(n):
        left = [[zero] * n for _ in range(n)]
        right = [[zero] * n for _ in range(n)]
        for m in range(n):
            for k, c in alg.product_terms(m, i):
                left[k][m] = left[k][m] + c
            for k, c in alg.product_terms(i, m):
                right[k][m] = right[k][m] + c
        for k in range(n):
            target = one if k == i else zero
            rows.append(left[k])
            rhs.append([target])
            rows.append(right[k])
            rhs.append([target])
    try:
        x = solve(Matrix(field, tuple(map(tuple, rows)), n), Matrix(field, tuple(map(tuple, rhs)), 1))
    except Inconsistent:
        raise NoIdentity("the structure constants admit no two-sided identity") from None
    return Element(alg, x.col(0))


def left_mult_matrix(a: Element) -> Matrix:
    """Matrix of ``v -> a v``; column ``j`` holds the coefficients of ``a a_j``."""
    alg = a.algebra
    cols = [(a * alg.basis(j)).coeffs for j in range(alg.dim)]
    return Matrix(alg.field, tuple(zip(*cols)), alg.dim)


def right_mult_matrix(a: Element) -> Matrix:
    """Matrix of ``v -> v a``; column ``j`` holds the coefficients of ``a_j a``."""
    alg = a.algebra
    cols = [(alg.basis(j) * a).coeffs for j in range(alg.dim)]
    return Matrix(alg.field, tuple(zip(*cols)), alg.dim)


def involution_apply(x: Element) -> Element:
    alg = x.algebra
    coeffs = [alg.field.zero] * alg.dim
    for k, c in enumerate(x.coeffs):
        coeffs[alg.involution[k]] = c
    return Element(alg, tuple(coeffs))


def check_anti_automorphism(alg: Algebra) -> Report:
    """Check that the basis permutation is an involutive anti-automorphism."""
    report = Report()
    inv = alg.involution
    square = report.add("involution.square")
    for k in range(alg.dim):
        square.expect(inv[inv[k]] == k, alg.labels[k])
    anti = report.add("involution.anti_multiplicative")
    for i in range(alg.dim):
        ai = alg.basis(i)
        for j in range(alg.dim):
            aj = alg.basis(j)
            lhs = involution_apply(ai * aj)
            rhs = involution_apply(aj) * involution_apply(ai)
            anti.expect(lhs == rhs, (alg.labels[i], alg.labels[j]))
    unit = report.add("involution.identity")
    unit.expect(involution_apply(alg.identity) == alg.identity)
    return report
