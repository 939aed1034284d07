from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from symcell.builders import build_quiver_zigzag, build_temperley_lieb, build_truncated_poly, quiver_vertex_trace
from symcell.errors import DegenerateTrace
from symcell.field import GF
from symcell.linalg import Matrix
from symcell.trace import (
    TraceForm,
    check_trace,
    compute_dual_basis,
    perturbed_trace,
    perturbed_traces,
    symmetric_functionals,
    trace_gram,
    verify_cellular_duals,
    verify_dual_basis_change,
    verify_dual_multiplication,
)


def test_poly_dual_reverses_powers():
    alg, _, tau = build_truncated_poly(5)
    dual = compute_dual_basis(alg, tau)
    for k in range(5):
        assert dual[k] == alg.basis(4 - k)


def test_tl2_hand_values():
    alg, _, tau = build_temperley_lieb(2, 2)
    one, e = alg["||.||"], alg["().()"]
    assert tau(one) == 1 and tau(e) == Fraction(1, 2)
    gram = trace_gram(alg, tau)
    assert sympy.Matrix(2, 2, lambda i, j: gram[i, j]).det() == Fraction(3, 4)
    assert e * e == e * 2


def test_tl2_degenerate_at_one():
    with pytest.raises(DegenerateTrace):
        build_temperley_lieb(2, 1)


def test_nonsymmetric_functional_rejected():
    alg, _, _ = build_quiver_zigzag(2)
    values = [0] * alg.dim
    values[alg.index("a1")] = 1
    tau = TraceForm.of(alg, values)
    assert not check_trace(alg, tau).ok
    with pytest.raises(DegenerateTrace):
        compute_dual_basis(alg, tau)


def test_quiver_dual_under_vertex_trace():
    # with tau(e_k) = 1 as well, the loop's dual picks up a correction term
    alg, _, _ = build_quiver_zigzag(3)
    tau = quiver_vertex_trace(alg, 3)
    assert check_trace(alg, tau).ok
    dual = compute_dual_basis(alg, tau)
    assert dual[alg.index("a1a1'")] == alg["e1"] - alg["a1a1'"]
    assert dual[alg.index("a2'a2")] == alg["e3"] - alg["a2'a2"]
    assert dual[alg.index("a1")] == alg["a1'"]


def test_dual_defining_property(corpus_algebra):
    alg, _, tau = corpus_algebra
    dual = compute_dual_basis(alg, tau)
    for i in range(alg.dim):
        for j in range(alg.dim):
            assert tau(dual[j] * alg.basis(i)) == (1 if i == j else 0)


def test_multiplication_identities(corpus_algebra):
    alg, _, tau = corpus_algebra
    report = verify_dual_multiplication(alg, tau, compute_dual_basis(alg, tau))
    assert report.ok, report.to_text()


def test_cellular_dual_identities(corpus_algebra):
    alg, cd, tau = corpus_algebra
    report = verify_cellular_duals(alg, cd, tau, compute_dual_basis(alg, tau))
    assert len(report.sorted()) == 8
    assert report.ok, report.to_text()


def test_dual_change_same_trace(corpus_algebra):
    alg, _, tau = corpus_algebra
    report = verify_dual_basis_change(alg, tau, tau)
    assert report.ok
    assert report["dual_change.transition"].values["traces_equal"]


def test_dual_change_perturbed(corpus_algebra):
    alg, _, tau = corpus_algebra
    tau2 = perturbed_trace(alg, tau)
    assert tau2 != tau
    assert check_trace(alg, tau2).ok
    assert verify_dual_basis_change(alg, tau, tau2).ok


def test_poly_perturbation_is_deterministic():
    alg, _, tau = build_truncated_poly(3)
    first = perturbed_trace(alg, tau)
    assert first == perturbed_trace(alg, tau)
    # tau + f with f the first symmetric functional in RREF order (picks off the constant term)
    assert first.values == (1, 0, 1)


def test_symmetric_functionals_of_commutative_algebra():
    alg, _, _ = build_truncated_poly(4)
    assert symmetric_functionals(alg).dim == 4


def test_symmetric_functionals_of_tl3():
    # one per cell for a semisimple cellular algebra: dim of the cocenter
    alg, _, _ = build_temperley_lieb(3, 3)
    assert symmetric_functionals(alg).dim == 2


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_dual_change_random_symmetric_trace(weights):
    alg, _, tau = build_quiver_zigzag(2)
    funcs = symmetric_functionals(alg).basis
    values = [sum(w * f[k] for w, f in zip(weights, funcs)) for k in range(alg.dim)]
    tau2 = TraceForm.of(alg, values)
    gram = trace_gram(alg, tau2)
    nondegenerate = sympy.Matrix(alg.dim, alg.dim, lambda i, j: gram[i, j]).det() != 0
    assert check_trace(alg, tau2).ok == nondegenerate
    if nondegenerate:
        assert verify_dual_basis_change(alg, tau, tau2).ok


def test_perturbations_over_small_field():
    alg, _, tau = build_quiver_zigzag(2, GF(2))
    for cand in perturbed_traces(alg, tau):
        assert check_trace(alg, cand).ok
