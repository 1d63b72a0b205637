import pytest
from hypothesis import given, settings, strategies as st

from knotdelta import v_n
from knotdelta.bounds import (
    E, F, G, H, K, MAX_PROFILE, Functional, Generator, GeneratorSet, best_certificate,
    builtin_functionals, classify_generator, decomposition_profile, evaluate, in_R,
    is_certificate, lower_bound, rlength_exact, search_certificate,
)
from knotdelta.diagram import braid_closure
from knotdelta.group import GroupElement, X, Y
from knotdelta.invariants import crossing_number, invariant_Ilk

RI = {X(0), -Y(0)}
STRUCTURAL = {X(0) + Y(1), -(X(-1) + Y(0)), X(0) - X(-1), Y(1) - Y(0)}


@pytest.mark.parametrize("n", range(1, 11))
def test_evaluations_on_v_n(n):
    v = v_n(n)
    assert evaluate(F, v) == 2
    assert evaluate(G, v) == 2 * n + 2
    assert evaluate(E, v) == 4 * n + 2
    assert best_certificate(v, (F, G, E, H)) == (2 * n + 2, "g")


def test_builtin_values():
    fs = builtin_functionals()
    assert set(fs) == {"f", "g", "e", "h", "k"}
    assert H(X(3)) == -3 and H(Y(3)) == 3
    assert G(X(1)) == 0 and G(Y(5)) == 0
    assert K(3 * X(1) + Y(-7)) == 4
    t = braid_closure([1, 1, 1], 2)
    assert K(invariant_Ilk(t)) == crossing_number(t) == 3


def test_certificates():
    for phi in (F, G, E, H):
        assert is_certificate(phi)
    assert E.norm == 2
    assert not is_certificate(K)
    assert is_certificate(Functional("zero"))
    # e would fail the unit bound: it is 2 on X_0 + Y_1
    assert not is_certificate(Functional("e1", dict(E.values)))
    with pytest.raises(ValueError):
        is_certificate(E, window=(0, 0))


def test_lower_bound_basics():
    assert lower_bound(X(0), [F]) == 1
    assert lower_bound(GroupElement()) == 0
    with pytest.raises(ValueError):
        lower_bound(X(0), [K])


def test_generator_set():
    gens = list(GeneratorSet(-2, 2))
    elements = [g.element for g in gens]
    assert len(elements) == len(set(elements)) == 4 + 4 * 5 * 2
    assert {-x for x in elements} == set(elements)
    for g in gens:
        sup = g.element.support()
        assert -2 <= sup[0] and sup[-1] <= 3
        assert classify_generator(g.element) == g
    with pytest.raises(ValueError):
        GeneratorSet(1, 0)


@pytest.mark.parametrize("v, member", [
    (X(0), True), (-Y(0), True), (X(1), False), (X(2) + Y(2), True),
    (X(-1) + Y(0), True), (X(0) + Y(2), False), (X(3) - X(4), True),
    (Y(4) - Y(3), True), (X(0) - Y(1), False), (2 * X(0), False),
])
def test_membership(v, member):
    assert in_R(v) is member


@pytest.mark.parametrize("v, k", [
    (GroupElement(), 0), (X(0), 1), (v_n(1), 4), (X(1), 2), (2 * X(0) + 2 * Y(0), 2),
])
def test_rlength_small(v, k):
    assert rlength_exact(v) == k


def test_rlength_family():
    for n in range(1, 4):
        assert rlength_exact(v_n(n), limit=2 * n + 2) == 2 * n + 2


def test_rlength_limit():
    assert rlength_exact(v_n(1), limit=3) is None
    with pytest.raises(ValueError):
        rlength_exact(X(0), limit=0)
    with pytest.raises(ValueError):
        rlength_exact(X(0), limit=31)


def small_elements():
    term = st.tuples(st.tuples(st.sampled_from("XY"), st.integers(-2, 2)), st.integers(-2, 2))
    return st.lists(term, min_size=1, max_size=4).map(GroupElement)


@settings(max_examples=150, deadline=None)
@given(small_elements())
def test_certified_bounds_are_sound(v):
    k = rlength_exact(v, limit=10)
    if k is None:
        return
    for phi in (F, G, E, H):
        assert phi.bound(v) <= k


@settings(max_examples=100, deadline=None)
@given(small_elements(), small_elements())
def test_rlength_subadditive(a, b):
    ka, kb = rlength_exact(a, 8), rlength_exact(b, 8)
    if ka is None or kb is None:
        return
    kab = rlength_exact(a + b, 16)
    assert kab is not None and kab <= ka + kb


def test_profile_v1():
    prof = decomposition_profile(v_n(1), 4)
    assert prof.decompositions
    for dec in prof.decompositions:
        elems = [g.element for g in dec]
        assert sum(x in RI for x in elems) == 2
        assert all(x in RI or x in STRUCTURAL for x in elems)
        assert all(g.template != "X_n+Y_n" for g in dec)
        assert sum((g.element for g in dec), GroupElement()) == v_n(1)


def test_profile_small():
    prof = decomposition_profile(X(0), 1)
    assert prof.decompositions == [(Generator("X_0", 0, 1),)]
    assert decomposition_profile(v_n(1), 3).decompositions == []
    with pytest.raises(ValueError):
        decomposition_profile(X(0), MAX_PROFILE + 1)


def test_search_certificate_is_valid():
    v = v_n(1)
    phi = search_certificate(v, steps=600, seed=3)
    assert is_certificate(phi, (-3, 3))
    assert phi.bound(v) <= rlength_exact(v)
