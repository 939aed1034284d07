"""JSON algebra files.

An algebra file is a JSON object::

    {
      "format": "symcell-algebra/1",
      "field": "Q",                       # or "Fp:5"
      "dim": 3,
      "basis": ["1", "x", "x^2"],
      "structure_constants": [[0, 0, 0, "1"], [0, 1, 1, "1"], ...],
      "identity": ["1", "0", "0"],        # optional; solved for if absent
      "involution": [0, 1, 2],
      "cells": [{"label": "0", "m": ["*"], "index": [[0]]}, ...],
      "poset": [["1", "0"], ["2", "1"]],  # covering pairs [lower, upper]
      "trace": ["0", "0", "1"]
    }

Scalars are strings: ``"p/q"`` or ``"p"`` over Q and ``"k mod p"`` over
GF(p).  ``index[s][t]`` is the basis index of ``C(label, m[s], m[t])``.
Unknown keys are rejected.
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import Algebra
from .cellular import CellDatum, Poset
from .errors import ParseError, SymcellError, ValidationError
from .field import Field, field_from_tag
from .trace import TraceForm

__all__ = ["FORMAT", "parse_algebra_file", "serialize_algebra", "parse_trace_file", "serialize_trace"]

FORMAT = "symcell-algebra/1"
REQUIRED = ("field", "dim", "basis", "structure_constants", "involution", "cells", "poset", "trace")
OPTIONAL = ("format", "identity", "description")


def _load(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")
    return data


def _scalar(field: Field, value: Any, where: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"scalar must be a string or integer, got {value!r}", where)
    try:
        return field(value) if isinstance(value, int) else field.parse(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(str(exc), where) from None


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", where)
    return value


def _list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f"expected a list, got {type(value).__name__}", where)
    return value


def parse_algebra_file(text: str) -> tuple[Algebra, CellDatum, TraceForm]:
    """Parse and validate an algebra file.

    Raises :class:`ParseError` for malformed content and
    :class:`ValidationError` when the content violates an invariant
    (non-prime modulus, wrong cell sizes, non-associative table, ...).
    """
    data = _load(text)
    unknown = sorted(set(data) - set(REQUIRED) - set(OPTIONAL))
    if unknown:
        raise ValidationError("unknown fields", witness=unknown)
    missing = [k for k in REQUIRED if k not in data]
    if missing:
        raise ParseError(f"missing fields {missing}")
    if "format" in data and data["format"] != FORMAT:
        raise ParseError(f"unsupported format {data['format']!r}", "format")

    if not isinstance(data["field"], str):
        raise ParseError("field must be a string such as 'Q' or 'Fp:5'", "field")
    try:
        field = field_from_tag(data["field"])
    except ValueError as exc:
        raise ValidationError(str(exc), witness=data["field"]) from None

    dim = _int(data["dim"], "dim")
    basis = _list(data["basis"], "basis")
    if len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise ValidationError("basis must list dim string labels", witness=len(basis))

    sc = {}
    for n, entry in enumerate(_list(data["structure_constants"], "structure_constants")):
        where = f"structure_constants[{n}]"
        entry = _list(entry, where)
        if len(entry) != 4:
            raise ParseError("entries are [i, j, k, scalar]", where)
        i, j, k = (_int(x, where) for x in entry[:3])
        if (i, j, k) in sc:
            raise ValidationError("repeated structure constant", witness=(i, j, k))
        sc[i, j, k] = _scalar(field, entry[3], where)

    involution = [_int(x, f"involution[{n}]") for n, x in enumerate(_list(data["involution"], "involution"))]
    if len(involution) != dim:
        raise ValidationError("involution must have dim entries", witness=len(involution))
    identity = None
    if data.get("identity") is not None:
        identity = [_scalar(field, x, f"identity[{n}]") for n, x in enumerate(_list(data["identity"], "identity"))]
        if len(identity) != dim:
            raise ValidationError("identity must have dim coefficients", witness=len(identity))

    cells, m_sets, index = [], {}, {}
    for n, cell in enumerate(_list(data["cells"], "cells")):
        where = f"cells[{n}]"
        if not isinstance(cell, dict) or set(cell) != {"label", "m", "index"}:
            raise ParseError("cells are objects with keys label, m, index", where)
        lam = cell["label"]
        if not isinstance(lam, str):
            raise ParseError("cell label must be a string", where)
        if lam in m_sets:
            raise ValidationError("repeated cell label", witness=lam)
        ms = _list(cell["m"], where + ".m")
        if not all(isinstance(s, str) for s in ms):
            raise ParseError("index-set labels must be strings", where + ".m")
        table = _list(cell["index"], where + ".index")
        if len(table) != len(ms) or any(len(_list(r, where + ".index")) != len(ms) for r in table):
            raise ValidationError("index table must be |m| x |m|", witness=lam)
        cells.append(lam)
        m_sets[lam] = ms
        for s, row in zip(ms, table):
            for t, k in zip(ms, row):
                index[lam, s, t] = _int(k, where + ".index")
    total = sum(len(ms) ** 2 for ms in m_sets.values())
    if total != dim:
        raise ValidationError("sum of squared cell sizes differs from dim", witness=(total, dim))

    covers = []
    for n, pair in enumerate(_list(data["poset"], "poset")):
        pair = _list(pair, f"poset[{n}]")
        if len(pair) != 2 or not all(isinstance(x, str) for x in pair):
            raise ParseError("poset entries are [lower, upper] cell labels", f"poset[{n}]")
        covers.append(tuple(pair))

    trace = [_scalar(field, x, f"trace[{n}]") for n, x in enumerate(_list(data["trace"], "trace"))]
    if len(trace) != dim:
        raise ValidationError("trace must have dim values", witness=len(trace))

    try:
        alg = Algebra(field, dim, sc, labels=basis, identity=identity, involution=involution)
        cd = CellDatum(Poset.from_covers(cells, covers), m_sets, index)
    except ValidationError:
        raise
    except SymcellError as exc:
        raise ValidationError(str(exc)) from None
    return alg, cd, TraceForm(tuple(trace))


def serialize_algebra(alg: Algebra, cd: CellDatum, tau: TraceForm, description: str | None = None) -> str:
    fmt = alg.field.format
    data: dict[str, Any] = {"format": FORMAT}
    if description:
        data["description"] = description
    data.update({
        "field": alg.field.tag,
        "dim": alg.dim,
        "basis": list(alg.labels),
        "structure_constants": [[i, j, k, fmt(c)] for (i, j, k), c in sorted(alg.structure_constants().items())],
        "identity": [fmt(c) for c in alg.identity.coeffs],
        "involution": list(alg.involution),
        "cells": [
            {"label": str(lam), "m": [str(s) for s in cd.m_sets[lam]],
             "index": [[cd.index[lam, s, t] for t in cd.m_sets[lam]] for s in cd.m_sets[lam]]}
            for lam in cd.cells
        ],
        "poset": [[str(a), str(b)] for a, b in cd.poset.covers()],
        "trace": [fmt(v) for v in tau.values],
    })
    return _dump(data)


def _dump(data: dict) -> str:
    # one list item per line keeps files readable and diffable
    parts = []
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            items = ",\n".join("    " + json.dumps(v) for v in value)
            parts.append(f"  {json.dumps(key)}: [\n{items}\n  ]")
        else:
            parts.append(f"  {json.dumps(key)}: {json.dumps(value)}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def serialize_trace(alg: Algebra, tau: TraceForm) -> str:
    return json.dumps({"field": alg.field.tag, "trace": [alg.field.format(v) for v in tau.values]}, indent=2) + "\n"


def parse_trace_file(text: str, alg: Algebra) -> TraceForm:
    """Read a trace from ``{"trace": [...]}`` or from a full algebra file."""
    data = _load(text)
    if "structure_constants" in data:
        _, _, tau = parse_algebra_file(text)
        if len(tau.values) != alg.dim:
            raise ValidationError("alternative trace has the wrong length", witness=len(tau.values))
        return TraceForm(tuple(alg.field(v) for v in tau.values))
    unknown = sorted(set(data) - {"field", "trace"})
    if unknown:
        raise ValidationError("unknown fields", witness=unknown)
    if "trace" not in data:
        raise ParseError("missing field 'trace'")
    if "field" in data and data["field"] != alg.field.tag:
        raise ValidationError("trace file field differs from the algebra's", witness=data["field"])
    values = [_scalar(alg.field, x, f"trace[{n}]") for n, x in enumerate(_list(data["trace"], "trace"))]
    if len(values) != alg.dim:
        raise ValidationError("alternative trace has the wrong length", witness=len(values))
    return TraceForm(tuple(values))
