from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import B_VERTICES, P, P_CIRCUITS, P_VERTICES, binomial
from oracles import brute_kernel_vectors, circuit_supports_by_rank, in_kernel
from latbar.circuits import (
    Circuit,
    conformal_circuit,
    enumerate_circuits,
    is_conformal,
    is_extremal,
    restrict_circuits,
    support_family,
)
from latbar.exactalg import IntegerMatrix, vector_content

# a kernel vector of P not in the printed list; see test_extra_circuit_is_genuine
EXTRA_P_CIRCUIT = "x2^2 x8 x10^8 - x3^2 x6^2 x7^4 x11^2"


@pytest.fixture(scope="module")
def p_circuits():
    return enumerate_circuits(P)


def test_small_examples():
    assert [c.vector for c in enumerate_circuits(IntegerMatrix([[1, 1]]))] == [(1, -1)]
    assert enumerate_circuits(IntegerMatrix([[1, 0], [0, 1]])) == []


def test_circuit_invariants(p_circuits):
    for c in p_circuits:
        assert in_kernel(P, c.vector)
        assert vector_content(c.vector) == 1
        first = next(x for x in c.vector if x)
        assert first > 0
    assert len({c.vector for c in p_circuits}) == len(p_circuits)


def test_printed_circuits_are_found(p_circuits):
    ours = {c.binomial().canonical().vector for c in p_circuits}
    printed = {binomial(t, 12).vector for t in P_CIRCUITS}
    assert printed <= ours
    assert ours - printed == {binomial(EXTRA_P_CIRCUIT, 12).vector}


def test_extra_circuit_is_genuine():
    v = binomial(EXTRA_P_CIRCUIT, 12).vector
    assert in_kernel(P, v)
    S = frozenset(i for i, x in enumerate(v) if x)
    # minimal dependent column set by independent rank computations
    cols = sorted(S)
    sub = IntegerMatrix([[P[i, j] for j in cols] for i in range(P.rows)])
    assert S in {frozenset(cols[j] for j in T) for T in circuit_supports_by_rank(sub)}


def test_supports_match_rank_oracle(p_circuits):
    assert {c.support for c in p_circuits} == circuit_supports_by_rank(P)


def test_support_family_p(p_circuits):
    fam = support_family(p_circuits)
    assert set(fam.minimal) == {frozenset(j - 1 for j in E) for E in P_VERTICES}
    assert set(fam.minimal) <= set(fam.members)
    for a, b in combinations(fam.minimal, 2):
        assert not (a < b or b < a)


def test_support_family_single():
    fam = support_family([Circuit((1, -1))])
    assert set(fam.minimal) == {frozenset({0}), frozenset({1})}


def test_restriction_to_b(p_circuits):
    cols = list(range(9))
    R = restrict_circuits(p_circuits, cols)
    direct = enumerate_circuits(P.submatrix(cols))
    assert {c.vector[:9] for c in R} == {c.vector for c in direct}
    assert set(restrict_circuits(p_circuits, range(12))) == set(p_circuits)
    assert restrict_circuits(p_circuits, []) == []
    fam = support_family(direct)
    assert set(fam.minimal) == {frozenset(j - 1 for j in E) for E in B_VERTICES}


def test_conformal_examples(p_circuits):
    c = p_circuits[0]
    assert conformal_circuit(c.vector, P) == c.vector
    assert conformal_circuit(tuple(2 * x for x in c.vector), P) == c.vector
    v = binomial("x1^2 x6 - x2 x3 x9", 12).vector
    u = conformal_circuit(v, P)
    assert is_conformal(u, v)
    assert any(is_conformal(c.vector, v) or is_conformal(tuple(-x for x in c.vector), v)
               for c in p_circuits)
    assert not is_conformal(binomial("x1 x6 - x3 x4", 12).vector, v)
    with pytest.raises(ValueError):
        conformal_circuit((1,) + (0,) * 11, P)
    with pytest.raises(ValueError):
        conformal_circuit((0,) * 12, P)


def test_extremal_examples():
    assert is_extremal(IntegerMatrix([[1, 0], [0, 1]]))
    assert not is_extremal(IntegerMatrix([[1, 0, 1], [0, 1, 1]]))
    assert not is_extremal(P)
    assert is_extremal(P.submatrix(range(9)))


small_configs = st.integers(1, 3).flatmap(
    lambda r: st.integers(2, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-2, 2), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=40, deadline=None)
@given(small_configs)
def test_circuits_against_brute_force(rows):
    A = IntegerMatrix(rows)
    circ = enumerate_circuits(A)
    assert {c.support for c in circ} == circuit_supports_by_rank(A)
    bound = max((abs(x) for c in circ for x in c.vector), default=1)
    if A.cols <= 5 and bound <= 3:
        sups = {c.support for c in circ}
        for v in brute_kernel_vectors(A, bound):
            s = frozenset(i for i, x in enumerate(v) if x)
            # every kernel vector's support contains a circuit support
            assert any(t <= s for t in sups)
        for c in circ:
            for v in brute_kernel_vectors(A, bound):
                s = frozenset(i for i, x in enumerate(v) if x)
                assert not s < c.support


@settings(max_examples=30, deadline=None)
@given(small_configs, st.integers(0, 4))
def test_drop_column_commutes(rows, k):
    A = IntegerMatrix(rows)
    k %= A.cols
    keep = [j for j in range(A.cols) if j != k]
    a = {tuple(c.vector[j] for j in keep) for c in restrict_circuits(enumerate_circuits(A), keep)}
    b = {c.vector for c in enumerate_circuits(A.submatrix(keep))}
    assert a == b


@settings(max_examples=30, deadline=None)
@given(small_configs, st.data())
def test_conformal_circuit_property(rows, data):
    A = IntegerMatrix(rows)
    circ = enumerate_circuits(A)
    if len(circ) < 2:
        return
    a, b = data.draw(st.sampled_from(circ)), data.draw(st.sampled_from(circ))
    s = data.draw(st.sampled_from([1, -1]))
    v = tuple(x + s * y for x, y in zip(a.vector, b.vector))
    if not any(v):
        return
    u = conformal_circuit(v, A)
    assert is_conformal(u, v)
    assert any(c.vector == u or c.vector == tuple(-x for x in u) for c in circ)
