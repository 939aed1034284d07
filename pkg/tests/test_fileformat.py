import json

import pytest

from symcell.builders import build_quiver_zigzag, build_temperley_lieb, build_truncated_poly
from symcell.errors import ParseError, ValidationError
from symcell.field import GF
from symcell.fileformat import parse_algebra_file, parse_trace_file, serialize_algebra, serialize_trace
from symcell.suites import structural_report


def poly_text():
    return serialize_algebra(*build_truncated_poly(3))


def edited(**changes):
    data = json.loads(poly_text())
    data.update(changes)
    return json.dumps(data)


def test_round_trip_poly():
    text = poly_text()
    alg, cd, tau = parse_algebra_file(text)
    assert serialize_algebra(alg, cd, tau) == text
    assert structural_report(alg, cd, tau).ok


@pytest.mark.parametrize("built", [build_quiver_zigzag(3, GF(5)), build_temperley_lieb(3, "5/2")])
def test_round_trip_other_fields(built):
    text = serialize_algebra(*built)
    alg, cd, tau = parse_algebra_file(text)
    assert serialize_algebra(alg, cd, tau) == text
    assert cd.poset == built[1].poset
    assert tau == built[2]


def test_non_prime_modulus():
    with pytest.raises(ValidationError):
        parse_algebra_file(edited(field="Fp:4"))


def test_cell_sizes_must_match_dim():
    data = json.loads(poly_text())
    data["cells"] = data["cells"][:2]
    with pytest.raises(ValidationError):
        parse_algebra_file(json.dumps(data))


def test_unknown_fields_rejected():
    with pytest.raises(ValidationError):
        parse_algebra_file(edited(colour="blue"))
    with pytest.raises(ValidationError):
        parse_algebra_file(edited(field="R"))


def test_malformed():
    with pytest.raises(ParseError) as exc:
        parse_algebra_file("{\n  'dim': 3\n}")
    assert "line 2" in exc.value.location
    with pytest.raises(ParseError):
        parse_algebra_file(edited(dim="three"))
    with pytest.raises(ParseError):
        parse_algebra_file(edited(trace=["1", "x", "0"]))


def test_non_associative_table():
    data = json.loads(poly_text())
    data["structure_constants"] = [e if e[:3] != [1, 1, 2] else [1, 1, 2, "2"] for e in data["structure_constants"]]
    data["structure_constants"].append([1, 2, 2, "1"])
    with pytest.raises(ValidationError):
        parse_algebra_file(json.dumps(data))


def test_identity_is_optional():
    data = json.loads(poly_text())
    del data["identity"]
    alg, _, _ = parse_algebra_file(json.dumps(data))
    assert alg.identity == alg.basis(0)


def test_trace_file():
    alg, _, tau = parse_algebra_file(poly_text())
    assert parse_trace_file(serialize_trace(alg, tau), alg) == tau
    assert parse_trace_file(poly_text(), alg) == tau
    with pytest.raises(ValidationError):
        parse_trace_file(json.dumps({"trace": ["1"]}), alg)
