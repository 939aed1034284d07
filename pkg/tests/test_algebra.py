import pytest
from hypothesis import given, strategies as st

from symcell.algebra import (
    Algebra,
    check_anti_automorphism,
    check_associativity,
    find_identity,
    involution_apply,
    left_mult_matrix,
)
from symcell.builders import build_matrix_blocks, build_quiver_zigzag, build_truncated_poly
from symcell.errors import NoIdentity, ValidationError
from symcell.field import GF, QQ


def matrix_units(scale=1):
    # E11, E12, E21, E22 with E11 E12 optionally corrupted
    idx = {(s, t): 2 * s + t for s in range(2) for t in range(2)}
    sc = {}
    for (s, t), i in idx.items():
        for u in range(2):
            sc[i, idx[t, u], idx[s, u]] = 1
    sc[idx[0, 0], idx[0, 1], idx[0, 1]] = scale
    return Algebra(QQ, 4, sc, labels=["E11", "E12", "E21", "E22"],
                   identity=[1, 0, 0, 1], involution=[0, 2, 1, 3], validate=scale == 1)


def test_identity_is_solved():
    alg, _, _ = build_truncated_poly(4)
    assert find_identity(alg) == alg.basis(0)
    alg, _, _ = build_quiver_zigzag(3)
    assert alg.identity == alg["e1"] + alg["e2"] + alg["e3"]


def test_no_identity():
    # the zero product on one generator has no identity
    with pytest.raises(NoIdentity):
        Algebra(QQ, 1, {})


def test_powers_vanish():
    alg, _, _ = build_truncated_poly(5)
    assert (alg["x^2"] * alg["x^3"]).is_zero()
    assert alg["x^2"] * alg["x^2"] == alg["x^4"]


def test_quiver_relation():
    for n in (3, 4, 5):
        alg, _, _ = build_quiver_zigzag(n)
        for i in range(1, n - 1):
            assert alg[f"a{i}'"] * alg[f"a{i}"] == alg[f"a{i + 1}"] * alg[f"a{i + 1}'"]
            assert (alg[f"a{i}"] * alg[f"a{i + 1}"]).is_zero()
            assert (alg[f"a{i + 1}'"] * alg[f"a{i}'"]).is_zero()


def test_quiver_dimension():
    for n in (2, 3, 6):
        assert build_quiver_zigzag(n)[0].dim == 4 * n - 2


def test_matrix_units_associative():
    assert check_associativity(matrix_units()).ok
    assert check_anti_automorphism(matrix_units()).ok


def test_corrupted_constant_has_witness():
    alg = matrix_units(scale=2)
    report = check_associativity(alg)
    assert not report.ok
    i, j, k, l = report["associativity"].witnesses[0]
    lhs = (alg.basis(i) * alg.basis(j)) * alg.basis(k)
    rhs = alg.basis(i) * (alg.basis(j) * alg.basis(k))
    assert lhs.coeffs[l] != rhs.coeffs[l]


def test_validation_rejects_non_associative():
    with pytest.raises(ValidationError) as exc:
        Algebra(QQ, 4, matrix_units(scale=2).structure_constants(), identity=[1, 0, 0, 1])
    assert exc.value.witness is not None


def test_bad_involution():
    alg = matrix_units()
    with pytest.raises(ValidationError):
        Algebra(QQ, 4, alg.structure_constants(), identity=[1, 0, 0, 1], involution=[0, 1, 1, 3])
    # identity permutation is not anti-multiplicative on M_2
    with pytest.raises(ValidationError):
        Algebra(QQ, 4, alg.structure_constants(), identity=[1, 0, 0, 1])


def test_left_mult_matrix_is_a_representation():
    alg, _, _ = build_quiver_zigzag(3)
    a, b = alg["a1"], alg["a1'"] + alg["e2"]
    assert left_mult_matrix(a * b) == left_mult_matrix(a) @ left_mult_matrix(b)


coeff = st.integers(-3, 3)


@given(st.lists(coeff, min_size=10, max_size=10), st.lists(coeff, min_size=10, max_size=10),
       st.lists(coeff, min_size=10, max_size=10))
def test_random_triples_associate(x, y, z):
    alg, _, _ = build_quiver_zigzag(3)
    a, b, c = alg.element(x), alg.element(y), alg.element(z)
    assert (a * b) * c == a * (b * c)
    assert involution_apply(a * b) == involution_apply(b) * involution_apply(a)
    assert alg.identity * a == a


@given(st.lists(coeff, min_size=13, max_size=13), st.lists(coeff, min_size=13, max_size=13))
def test_blocks_over_gf3(x, y):
    alg, _, _ = build_matrix_blocks([2, 3], GF(3))
    a, b = alg.element(x), alg.element(y)
    assert left_mult_matrix(a) @ left_mult_matrix(b) == left_mult_matrix(a * b)
    assert (a + b) * a == a * a + b * a
