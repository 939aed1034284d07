from functools import lru_cache

import pytest

from symcell.builders import build_matrix_blocks, build_quiver_zigzag, build_temperley_lieb, build_truncated_poly
from symcell.field import GF, QQ


@lru_cache(maxsize=None)
def corpus():
    """Every builder family at the sizes the cross-family suites run on."""
    out = {}
    for n in (2, 3, 4):
        out[f"quiver{n}"] = build_quiver_zigzag(n)
    out["quiver4_f5"] = build_quiver_zigzag(4, GF(5))
    for n in range(1, 7):
        out[f"poly{n}"] = build_truncated_poly(n)
    out["blocks23"] = build_matrix_blocks([2, 3])
    for n in (1, 2, 3):
        out[f"tl{n}"] = build_temperley_lieb(n, 3)
    out["tl3_f7"] = build_temperley_lieb(3, 2, GF(7))
    return out


CORPUS_NAMES = list(corpus())


@pytest.fixture(params=CORPUS_NAMES)
def corpus_algebra(request):
    return corpus()[request.param]


@pytest.fixture
def q():
    return QQ


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, (status, title) in sorted(RESULTS.items()):
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
