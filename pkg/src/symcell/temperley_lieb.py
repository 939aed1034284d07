"""Planar diagrams for the Temperley-Lieb algebra TL_n.

A diagram is a perfect non-crossing matching on ``2n`` boundary points,
numbered ``0..n-1`` along the top from left to right and ``n..2n-1`` along
the bottom from right to left, so bottom position ``j`` is point
``2n - 1 - j``.  Diagrams are stored as sorted tuples of pairs ``(a, b)``
with ``a < b``.

Half diagrams describe one side: a tuple of non-crossing arcs plus the
positions of the through-strand endpoints ("defects"), none of which may sit
under an arc.  They print compactly as strings such as ``"()|"``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

Diagram = tuple[tuple[int, int], ...]
HalfDiagram = str

__all__ = [
    "catalan",
    "half_diagrams",
    "diagram_from_halves",
    "halves_of",
    "through_strands",
    "compose",
    "closure_loops",
    "identity_diagram",
    "flip",
]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def half_diagrams(n: int, defects: int) -> tuple[HalfDiagram, ...]:
    """All half diagrams on ``n`` points with the given number of defects.

    Strings use ``(`` and ``)`` for arc ends and ``|`` for defects; a defect
    may not appear while an arc is open.
    """
    out = []

    def grow(prefix: str, open_arcs: int, used_defects: int) -> None:
        if len(prefix) == n:
            if open_arcs == 0 and used_defects == defects:
                out.append(prefix)
            return
        remaining = n - len(prefix)
        if open_arcs + (defects - used_defects) < remaining:
            grow(prefix + "(", open_arcs + 1, used_defects)
        if open_arcs:
            grow(prefix + ")", open_arcs - 1, used_defects)
        if not open_arcs and used_defects < defects:
            grow(prefix + "|", open_arcs, used_defects + 1)

    grow("", 0, 0)
    return tuple(out)


def _parse_half(half: HalfDiagram) -> tuple[list[tuple[int, int]], list[int]]:
    arcs, defects, stack = [], [], []
    for pos, ch in enumerate(half):
        if ch == "(":
            stack.append(pos)
        elif ch == ")":
            arcs.append((stack.pop(), pos))
        elif ch == "|":
            if stack:
                raise ValueError(f"defect under an arc in {half!r}")
            defects.append(pos)
        else:
            raise ValueError(f"bad half-diagram character {ch!r}")
    if stack:
        raise ValueError(f"unbalanced half diagram {half!r}")
    return arcs, defects


def _normalize(pairs) -> Diagram:
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


def diagram_from_halves(top: HalfDiagram, bottom: HalfDiagram) -> Diagram:
    """Diagram with top half ``top`` and bottom half ``bottom``; defects join in order."""
    n = len(top)
    if len(bottom) != n:
        raise ValueError("halves of different sizes")
    bot = lambda j: 2 * n - 1 - j  # noqa: E731
    tarcs, tdef = _parse_half(top)
    barcs, bdef = _parse_half(bottom)
    if len(tdef) != len(bdef):
        raise ValueError("halves have different numbers of defects")
    pairs = list(tarcs)
    pairs += [(bot(a), bot(b)) for a, b in barcs]
    pairs += [(a, bot(b)) for a, b in zip(tdef, bdef)]
    return _normalize(pairs)


def halves_of(d: Diagram, n: int) -> tuple[HalfDiagram, HalfDiagram]:
    top = [""] * n
    bottom = [""] * n
    for a, b in d:
        if b < n:
            top[a], top[b] = "(", ")"
        elif a >= n:
            ja, jb = 2 * n - 1 - b, 2 * n - 1 - a
            bottom[ja], bottom[jb] = "(", ")"
        else:
            top[a] = "|"
            bottom[2 * n - 1 - b] = "|"
    return "".join(top), "".join(bottom)


def through_strands(d: Diagram, n: int) -> int:
    return sum(1 for a, b in d if a < n <= b)


def identity_diagram(n: int) -> Diagram:
    return diagram_from_halves("|" * n, "|" * n)


def flip(d: Diagram, n: int) -> Diagram:
    """Reflect top and bottom."""
    top, bottom = halves_of(d, n)
    return diagram_from_halves(bottom, top)


def _partner_map(d: Diagram) -> dict[int, int]:
    m = {}
    for a, b in d:
        m[a] = b
        m[b] = a
    return m


def compose(x: Diagram, y: Diagram, n: int) -> tuple[Diagram, int]:
    """Stack ``x`` on top of ``y``; return the resulting diagram and the number of closed loops.

    The bottom row of ``x`` is glued to the top row of ``y``: bottom position
    ``j`` of ``x`` (point ``2n-1-j``) meets top point ``j`` of ``y``.
    """
    xp, yp = _partner_map(x), _partner_map(y)
    last = 2 * n - 1
    visited_middle = set()

    def run(side: str, p: int) -> int:
        # leave through an edge of `side` starting at point p, until an outer point is hit
        while True:
            if side == "x":
                q = xp[p]
                if q < n:
                    return q
                visited_middle.add(last - q)
                side, p = "y", last - q
            else:
                q = yp[p]
                if q >= n:
                    return q
                visited_middle.add(q)
                side, p = "x", last - q

    pairs = []
    done = set()
    for p in range(n):
        if p not in done:
            q = run("x", p)
            done.add(q)
            pairs.append((p, q))
    for p in range(n, 2 * n):
        if p not in done:
            q = run("y", p)
            done.add(q)
            pairs.append((p, q))
    loops = 0
    for i in range(n):
        if i in visited_middle:
            continue
        loops += 1
        # walk the closed loop through middle position i
        j = i
        while j not in visited_middle:
            visited_middle.add(j)
            j = last - xp[last - j]  # x-edge from middle j lands on another middle point
            visited_middle.add(j)
            j = yp[j]
    return _normalize(pairs), loops


def closure_loops(d: Diagram, n: int) -> int:
    """Number of loops after joining top point ``k`` to bottom position ``k``."""
    partner = _partner_map(d)
    closing = {}
    for k in range(n):
        closing[k] = 2 * n - 1 - k
        closing[2 * n - 1 - k] = k
    seen = set()
    loops = 0
    for start in range(2 * n):
        if start in seen:
            continue
        loops += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            nxt = partner[cur]
            seen.add(nxt)
            cur = closing[nxt]
    return loops
