"""Constructors for concrete symmetric cellular algebras.

Each builder returns ``(algebra, cell_datum, trace)`` ready for the
verification suites:

* :func:`build_quiver_zigzag` -- the path algebra of the doubled linear
  quiver on ``n`` vertices modulo the zigzag relations;
* :func:`build_truncated_poly` -- ``K[x]/(x^n)``;
* :func:`build_matrix_blocks` -- a direct sum of full matrix algebras;
* :func:`build_temperley_lieb` -- ``TL_n(delta)`` with its Markov trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import temperley_lieb as tl
from .algebra import Algebra
from .cellular import CellDatum, Poset, verify_cell_datum
from .errors import DegenerateTrace, NotCellular
from .field import QQ, Field
from .linalg import rank
from .trace import TraceForm, trace_gram

__all__ = [
    "BuilderParams",
    "build",
    "build_quiver_zigzag",
    "build_truncated_poly",
    "build_matrix_blocks",
    "build_temperley_lieb",
    "quiver_vertex_trace",
    "FAMILIES",
]

FAMILIES = ("quiver-zigzag", "truncated-poly", "matrix-blocks", "temperley-lieb")


# -- doubled linear quiver ---------------------------------------------------
#
# Arrows ("a", i): i -> i+1 and ("b", i): i+1 -> i for i = 1..n-1.  Paths are
# read left to right, so ("a", i) ("b", i) is the loop at vertex i.  Modulo the
# relations every nonzero path of length two is a loop, and there is one loop
# per vertex: L_k = a_k b_k for k < n and L_n = b_{n-1} a_{n-1}, with
# b_i a_i = a_{i+1} b_{i+1}.


def _quiver_basis(n: int):
    """Basis in cell order: e1 | L_i, a_i, b_i, e_{i+1} (i = 1..n-1) | L_n."""
    basis = [("e", 1)]
    for i in range(1, n):
        basis += [("L", i), ("a", i), ("b", i), ("e", i + 1)]
    basis.append(("L", n))
    return basis


def _quiver_ends(x, n):
    kind, i = x
    if kind in ("e", "L"):
        return i, i
    if kind == "a":
        return i, i + 1
    return i + 1, i


def _quiver_product(x, y, n):
    """Product of two basis paths, as a basis path or ``None`` for zero."""
    sx, tx = _quiver_ends(x, n)
    sy, ty = _quiver_ends(y, n)
    if tx != sy:
        return None
    if x[0] == "e":
        return y
    if y[0] == "e":
        return x
    if x[0] == "L" or y[0] == "L":
        return None  # length >= 3
    # both arrows
    (kx, i), (ky, j) = x, y
    if kx == "a" and ky == "b" and i == j:
        return ("L", i)
    if kx == "b" and ky == "a" and i == j:
        return ("L", i + 1)
    # a_i a_{i+1} and b_{i+1} b_i
    return None


def _quiver_label(x, n):
    kind, i = x
    if kind == "e":
        return f"e{i}"
    if kind == "a":
        return f"a{i}"
    if kind == "b":
        return f"a{i}'"
    return f"a{i}a{i}'" if i < n else f"a{n - 1}'a{n - 1}"


def quiver_vertex_trace(alg: Algebra, n: int) -> TraceForm:
    """The trace with value 1 on every vertex idempotent and every loop."""
    basis = _quiver_basis(n)
    return TraceForm.of(alg, [0 if kind in ("a", "b") else 1 for kind, _ in basis])


def build_quiver_zigzag(n: int, field: Field = QQ):
    """Zigzag algebra on the doubled linear quiver with ``n`` vertices.

    Dimension ``4n - 2``.  The cells are ``c0 = {e1}``, ``c1 .. c(n-1)`` with
    index set ``{i, i+1}`` and ``C(i,i) = L_i``, ``C(i,i+1) = a_i``,
    ``C(i+1,i) = a_i'``, ``C(i+1,i+1) = e_{i+1}``, and ``cn = {L_n}``.

    The trace is 1 on loops and 0 elsewhere, which makes the dual basis swap
    ``e_k <-> L_k`` and ``a_i <-> a_i'``.  The variant that is also 1 on the
    vertex idempotents is :func:`quiver_vertex_trace`.

    The cell order is found by trying the chain ``c0 < c1 < ... < cn`` and
    then its reverse; the first one passing :func:`verify_cell_datum` is kept.
    """
    if n < 2:
        raise ValueError("the zigzag quiver needs n >= 2")
    basis = _quiver_basis(n)
    pos = {x: k for k, x in enumerate(basis)}
    sc = {}
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            z = _quiver_product(x, y, n)
            if z is not None:
                sc[i, j, pos[z]] = 1
    involution = []
    for kind, i in basis:
        swapped = {"a": "b", "b": "a"}.get(kind, kind)
        involution.append(pos[swapped, i])
    labels = [_quiver_label(x, n) for x in basis]
    alg = Algebra(field, len(basis), sc, labels=labels, involution=involution)

    cells = [f"c{i}" for i in range(n + 1)]
    m_sets = {"c0": ["1"], f"c{n}": [str(n)]}
    index = {("c0", "1", "1"): pos["e", 1], (f"c{n}", str(n), str(n)): pos["L", n]}
    for i in range(1, n):
        lam, s, t = f"c{i}", str(i), str(i + 1)
        m_sets[lam] = [s, t]
        index[lam, s, s] = pos["L", i]
        index[lam, s, t] = pos["a", i]
        index[lam, t, s] = pos["b", i]
        index[lam, t, t] = pos["e", i + 1]

    cd = None
    for order in (cells, cells[::-1]):
        candidate = CellDatum(Poset.chain(order, elements=cells), m_sets, index)
        if verify_cell_datum(alg, candidate).ok:
            cd = candidate
            break
    if cd is None:
        raise NotCellular("neither chain order on the quiver cells is cellular")
    tau = TraceForm.of(alg, [1 if kind == "L" else 0 for kind, _ in basis])
    return alg, cd, tau


def build_truncated_poly(n: int, field: Field = QQ):
    """``K[x]/(x^n)`` with basis ``1, x, ..., x^(n-1)`` as singleton cells.

    Cell ``k`` holds ``x^k``; higher powers are lower in the order.  The trace
    picks the coefficient of ``x^(n-1)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    sc = {(i, j, i + j): 1 for i in range(n) for j in range(n) if i + j < n}
    labels = ["1"] + [f"x^{k}" if k > 1 else "x" for k in range(1, n)]
    alg = Algebra(field, n, sc, labels=labels)
    cells = [str(k) for k in range(n)]
    poset = Poset.chain(cells[::-1], elements=cells)
    cd = CellDatum(poset, {c: ["*"] for c in cells}, {(str(k), "*", "*"): k for k in range(n)})
    tau = TraceForm.of(alg, [1 if k == n - 1 else 0 for k in range(n)])
    return alg, cd, tau


def build_matrix_blocks(sizes: Sequence[int], field: Field = QQ):
    """``M_{k1} + M_{k2} + ...`` on matrix units, one incomparable cell per block."""
    sizes = list(sizes)
    if not sizes or any(k < 1 for k in sizes):
        raise ValueError("block sizes must be a nonempty list of positive integers")
    index, labels, cells, m_sets = {}, [], [], {}
    for b, k in enumerate(sizes):
        lam = f"B{b}"
        cells.append(lam)
        m_sets[lam] = [str(s + 1) for s in range(k)]
        for s in range(k):
            for t in range(k):
                index[lam, str(s + 1), str(t + 1)] = len(labels)
                labels.append(f"E{b}_{s + 1}{t + 1}")
    sc = {}
    for (lam, s, t), i in index.items():
        for u in m_sets[lam]:
            sc[i, index[lam, t, u], index[lam, s, u]] = 1
    involution = [0] * len(labels)
    for (lam, s, t), i in index.items():
        involution[i] = index[lam, t, s]
    alg = Algebra(field, len(labels), sc, labels=labels, involution=involution)
    cd = CellDatum(Poset.antichain(cells), m_sets, index)
    tau = TraceForm.of(alg, [1 if s == t else 0 for (lam, s, t), _ in sorted(index.items(), key=lambda kv: kv[1])])
    return alg, cd, tau


def build_temperley_lieb(n: int, delta, field: Field = QQ):
    """``TL_n(delta)`` on planar diagrams with the normalized Markov trace.

    ``x * y`` stacks ``x`` on top of ``y`` and picks up ``delta`` per closed
    loop.  Cells are through-strand counts ``t = n, n-2, ...`` with fewer
    strands lower; ``C(t, S, T)`` has top half ``S`` and bottom half ``T``.
    The trace is ``delta ** (loops of the closure - n)``.

    Raises :class:`DegenerateTrace` when the trace Gram matrix is singular.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    delta = field(delta)
    if not delta:
        raise ValueError("delta must be nonzero")
    cells = [str(t) for t in range(n, -1, -2)]
    m_sets = {str(t): list(tl.half_diagrams(n, t)) for t in range(n, -1, -2)}
    diagrams, labels, index = [], [], {}
    for lam in cells:
        for s in m_sets[lam]:
            for t in m_sets[lam]:
                index[lam, s, t] = len(diagrams)
                diagrams.append(tl.diagram_from_halves(s, t))
                labels.append(f"{s}.{t}")
    pos = {d: k for k, d in enumerate(diagrams)}
    sc = {}
    for i, x in enumerate(diagrams):
        for j, y in enumerate(diagrams):
            z, loops = tl.compose(x, y, n)
            sc[i, j, pos[z]] = delta ** loops
    involution = [pos[tl.flip(d, n)] for d in diagrams]
    alg = Algebra(field, len(diagrams), sc, labels=labels, involution=involution,
                  identity=[1 if d == tl.identity_diagram(n) else 0 for d in diagrams])
    # fewer through strands = lower, cells listed from n downwards
    cd = CellDatum(Poset.chain(cells[::-1], elements=cells), m_sets, index)
    tau = TraceForm.of(alg, [delta ** (tl.closure_loops(d, n) - n) for d in diagrams])
    if rank(trace_gram(alg, tau)) < alg.dim:
        raise DegenerateTrace(f"Markov trace of TL_{n} is degenerate at delta = {field.format(delta)}")
    return alg, cd, tau


@dataclass
class BuilderParams:
    family: str
    n: int = 1
    field: Field = QQ
    delta: object = None
    blocks: list = dc_field(default_factory=list)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.family != "matrix-blocks" and self.n < 1:
            raise ValueError("n must be >= 1")
        if self.family == "temperley-lieb" and (self.delta is None or not self.field(self.delta)):
            raise ValueError("temperley-lieb needs a nonzero delta")


def build(params: BuilderParams):
    if params.family == "quiver-zigzag":
        return build_quiver_zigzag(params.n, params.field)
    if params.family == "truncated-poly":
        return build_truncated_poly(params.n, params.field)
    if params.family == "matrix-blocks":
        return build_matrix_blocks(params.blocks, params.field)
    return build_temperley_lieb(params.n, params.delta, params.field)
