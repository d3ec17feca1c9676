from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import P, P_F, P_MINIMAL, binomial
from oracles import ours_as_set, sympy_member, sympy_reduced_gb
from latbar.determinantal import DeterminantalSpec, f_polys, lattice_of
from latbar.exactalg import IntegerMatrix, LatticeBasis, LatticeError, kernel_basis
from latbar.groebner import (
    Binomial,
    Polynomial,
    TermOrder,
    adeg,
    binomial_polys,
    buchberger,
    default_names,
    eliminate,
    ideal_member,
    intersect_ideals,
    is_groebner_basis,
    lattice_ideal_generators,
    normal_form,
    parse_polynomial,
    radical_member,
    radical_power,
    same_ideal,
    xy_names,
)

N = default_names(12)


def poly(text, n=12):
    return parse_polynomial(text, default_names(n))


def test_adeg():
    A = IntegerMatrix([[1, 1]])
    assert adeg((0, 0), A) == (0,)
    assert adeg((2, 1), A) == (3,)
    b = binomial("x2 x5 - x3 x4", 12)
    assert adeg(b.plus, P) == adeg(b.minus, P)


def test_parse_and_format():
    p = parse_polynomial("-3 x1^2 x4 y2 + 1/2 y1 - 5", xy_names(4))
    assert p.terms[(2, 0, 0, 1, 0, 1, 0, 0)] == -3
    assert p.terms[(0, 0, 0, 0, 1, 0, 0, 0)] == Fraction(1, 2)
    assert parse_polynomial(str(p), xy_names(4)) == p
    assert parse_polynomial("2*x1**2 - x2", default_names(2)) == poly("2 x1^2 - x2", 2)
    with pytest.raises(ValueError):
        parse_polynomial("x1 + z7", default_names(2))


def test_binomial_basics():
    b = Binomial((1, -2, 0))
    assert b.plus == (1, 0, 0) and b.minus == (0, 2, 0)
    assert Binomial((-1, 2)).canonical().vector == (1, -2)
    assert b.degree() == 2
    assert not b.is_squarefree()


def test_buchberger_examples():
    f = poly("x1 - x2", 2)
    assert buchberger([f]) == [f]
    F = f_polys(DeterminantalSpec((1, 1, 1)))
    for o in (TermOrder.lex(6), TermOrder.grevlex(6)):
        assert set(buchberger(F, o)) == {g.monic(o) for g in F}


def test_normal_form_examples():
    G = buchberger([poly("x1 x2 - x3", 3), poly("x2^2 - x1", 3)])
    for g in G:
        assert not normal_form(g, G)
    h = poly("x3^2 + 7", 3)
    G2 = [poly("x1 - x2", 3)]
    assert normal_form(h, G2) == h


def test_ideal_member_examples():
    B = [binomial(t, 12).polynomial() for t in P_MINIMAL]
    F = parse_polynomial(P_F, N)
    assert ideal_member(Polynomial({}, 12), B)
    gens = [F, B[2], B[3], B[4]]
    assert ideal_member(B[0] ** 3, gens)
    assert ideal_member(B[1] ** 3, gens)
    assert not ideal_member(B[0] ** 2, gens)


def test_radical_member_examples():
    x = poly("x1", 2)
    assert radical_member(x, [x])
    assert not radical_member(Polynomial.constant(1, 2), [x])
    assert radical_member(poly("x1", 2), [poly("x1^3", 2)])
    assert radical_power(poly("x1 - x2", 2), [poly("x1^2 - 2 x1 x2 + x2^2", 2)]) == 2


def test_eliminate_examples():
    gens = [poly("x1 - x2", 3)]
    assert eliminate(gens, [0, 1]) == buchberger(gens)
    # (x1 - t, x2 - t^2) eliminating t gives the parabola
    E = eliminate([poly("x1 - x3", 3), poly("x2 - x3^2", 3)], [0, 1])
    assert same_ideal(E, [poly("x2 - x1^2", 3)])


def test_intersection_example():
    spec = DeterminantalSpec((1, 1, 1))
    names = spec.names
    I2 = f_polys(spec)
    Q = [parse_polynomial("x1", names), parse_polynomial("y1", names)]
    H = intersect_ideals(I2, Q)
    JL = [spec.minor(0, 1).polynomial(names), spec.minor(0, 2).polynomial(names)]
    assert same_ideal(H, JL)


def test_intersection_against_sympy():
    # (x1) meet (x2) = (x1 x2)
    H = intersect_ideals([poly("x1", 2)], [poly("x2", 2)])
    assert same_ideal(H, [poly("x1 x2", 2)])


def test_lattice_ideal_generators_examples():
    gens = lattice_ideal_generators(LatticeBasis([(1, -1)]))
    assert [g.vector for g in gens] == [(1, -1)]
    for d in [(1, 1, 1), (2, 3, 5), (1, 2, 2)]:
        spec = DeterminantalSpec(d)
        L = lattice_of(spec)
        G = lattice_ideal_generators(L)
        assert all(L.contains(g.vector) for g in G)
        assert same_ideal(binomial_polys(G, spec.names), f_polys(spec))
    B = [binomial(t, 12).polynomial() for t in P_MINIMAL]
    G = lattice_ideal_generators(kernel_basis(P))
    assert same_ideal([g.polynomial() for g in G], B)


def test_lattice_ideal_generators_rejects_non_positive():
    with pytest.raises(LatticeError):
        lattice_ideal_generators(LatticeBasis([(1, 0)]))


def test_saturation_via_markov_small():
    # d = (1, 1): saturate (x1 y2 - x2 y1) by the product of variables
    spec = DeterminantalSpec((1, 1))
    G = lattice_ideal_generators(lattice_of(spec))
    assert [g.canonical().vector for g in G] == [spec.minor(0, 1).vector]


def test_is_groebner_basis():
    F = [poly("x1^2 - x2", 2), poly("x1 x2 - 1", 2)]
    assert not is_groebner_basis(F, TermOrder.grevlex(2))
    assert is_groebner_basis(buchberger(F), TermOrder.grevlex(2))


# --- property tests -------------------------------------------------------

binomial_sets = st.integers(2, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-2, 2), min_size=n, max_size=n).filter(any),
        min_size=1, max_size=3))


def _polys(vecs):
    return [Binomial(v).polynomial() for v in vecs]


@settings(max_examples=40, deadline=None)
@given(binomial_sets, st.sampled_from(["grevlex", "lex"]))
def test_reduced_gb_matches_sympy(vecs, kind):
    n = len(vecs[0])
    F = _polys(vecs)
    order = TermOrder.grevlex(n) if kind == "grevlex" else TermOrder.lex(n)
    G = buchberger(F, order)
    assert ours_as_set(G) == sympy_reduced_gb(F, n, kind)
    assert is_groebner_basis(G, order)
    # binomial input gives a binomial basis
    assert all(len(g.terms) <= 2 for g in G)
    # order stable
    assert buchberger(F, order) == G


@settings(max_examples=40, deadline=None)
@given(binomial_sets, st.lists(st.integers(-2, 2), min_size=4, max_size=4),
       st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_normal_form_linear(vecs, a, b):
    n = len(vecs[0])
    G = buchberger(_polys(vecs))
    f = Binomial(a[:n]).polynomial() if any(a[:n]) else Polynomial({}, n)
    g = Binomial(b[:n]).polynomial() if any(b[:n]) else Polynomial({}, n)
    assert normal_form(f + g, G) == normal_form(normal_form(f, G) + normal_form(g, G), G)


@settings(max_examples=30, deadline=None)
@given(binomial_sets, st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_member_implies_radical_member(vecs, mult):
    n = len(vecs[0])
    F = _polys(vecs)
    f = F[0] * Polynomial.monomial(mult[:n]) + F[-1]
    assert ideal_member(f, F)
    assert sympy_member(f, F, n)
    assert radical_member(f, F)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=2, max_size=4))
def test_homogeneity_preserved(monos):
    # binomials of equal degree under A = (1 1 1) and (1 2 3)
    A = IntegerMatrix([[1, 1, 1], [1, 2, 3]])
    F = []
    for u in monos:
        for v in monos:
            if u < v and A.apply(u) == A.apply(v):
                F.append(Binomial([x - y for x, y in zip(u, v)]).polynomial())
    if not F:
        return
    for g in buchberger(F):
        assert g.is_homogeneous(A)
