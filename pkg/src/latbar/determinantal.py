"""Binomial ideals of 2-minors of the matrix with rows x_i^{d_i} and y_i^{d_i}.

Variables are ordered x_1..x_m, y_1..y_m (indices 0..m-1 and m..2m-1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Sequence

from .complex import Analysis, analyse
from .exactalg import IntegerMatrix, LatticeBasis, is_saturated, kernel_basis, saturate
from .groebner import (
    Binomial,
    Polynomial,
    TermOrder,
    buchberger,
    ideal_member,
    intersect_ideals,
    is_groebner_basis,
    leading_monomials,
    radical_member,
    same_ideal,
    xy_names,
)
from .markov import DEFAULT_STATE_LIMIT, MarkovReport, markov_basis


class CertificationError(RuntimeError):
    """A claimed value could not be certified."""


@dataclass(frozen=True)
class DeterminantalSpec:
    d: tuple[int, ...]

    def __init__(self, d: Sequence[int]):
        d = tuple(int(x) for x in d)
        if len(d) < 2:
            raise ValueError("need m >= 2")
        if any(x < 1 for x in d):
            raise ValueError("exponents must be positive")
        object.__setattr__(self, "d", d)

    @classmethod
    def parse(cls, text: str) -> "DeterminantalSpec":
        """``m d_1 ... d_m`` on one line."""
        toks = [int(t) for t in text.replace(",", " ").split()]
        if not toks or len(toks) != toks[0] + 1:
            raise ValueError("expected 'm d_1 ... d_m'")
        return cls(toks[1:])

    @property
    def m(self) -> int:
        return len(self.d)

    @property
    def names(self) -> tuple[str, ...]:
        return xy_names(self.m)

    def x(self, i: int) -> int:
        return i

    def y(self, i: int) -> int:
        return self.m + i

    def dstar(self, i: int, j: int) -> tuple[int, int]:
        g = gcd(self.d[i], self.d[j])
        return self.d[i] // g, self.d[j] // g

    def minor(self, i: int, j: int, ei: int | None = None, ej: int | None = None) -> Binomial:
        """``x_i^{ei} y_j^{ej} - x_j^{ej} y_i^{ei}`` (0-based ``i, j``)."""
        ei = self.d[i] if ei is None else ei
        ej = self.d[j] if ej is None else ej
        v = [0] * (2 * self.m)
        v[self.x(i)] += ei
        v[self.y(j)] += ej
        v[self.x(j)] -= ej
        v[self.y(i)] -= ei
        return Binomial(v)


def generators_f(spec: DeterminantalSpec) -> list[Binomial]:
    m = spec.m
    return [spec.minor(i, j) for i in range(m) for j in range(i + 1, m)]


def f_polys(spec: DeterminantalSpec) -> list[Polynomial]:
    return [b.polynomial(spec.names) for b in generators_f(spec)]


def lex_order(spec: DeterminantalSpec) -> TermOrder:
    """Lex with x_1 > ... > x_m > y_1 > ... > y_m."""
    return TermOrder.lex(2 * spec.m)


def sample_orders(n: int, count: int, seed: int = 0) -> list[TermOrder]:
    """Lex and grevlex in both variable directions plus ``count`` random ones."""
    rng = random.Random(seed)
    out = [TermOrder.lex(n), TermOrder.grevlex(n),
           TermOrder.lex(n, range(n - 1, -1, -1)), TermOrder.grevlex(n, range(n - 1, -1, -1))]
    for k in range(count):
        p = list(range(n))
        rng.shuffle(p)
        out.append(TermOrder.lex(n, p) if k % 2 == 0 else TermOrder.grevlex(n, p))
    return out


def verify_universal_gb(spec: DeterminantalSpec, orders: Sequence[TermOrder] | None = None,
                        random_orders: int = 20, seed: int = 0) -> bool:
    F = f_polys(spec)
    orders = list(orders) if orders is not None else sample_orders(2 * spec.m, random_orders, seed)
    for o in orders:
        G = buchberger(F, o)
        if set(G) != {f.monic(o) for f in F}:
            return False
    return True


def lattice_vectors(spec: DeterminantalSpec) -> list[tuple[int, ...]]:
    """``v_1j = (u_1j, -u_1j)`` for j = 2..m."""
    return [spec.minor(0, j).vector for j in range(1, spec.m)]


def lattice_of(spec: DeterminantalSpec) -> LatticeBasis:
    L = LatticeBasis(lattice_vectors(spec), 2 * spec.m)
    for i in range(spec.m):
        for j in range(i + 1, spec.m):
            if not L.contains(spec.minor(i, j).vector):
                raise CertificationError(f"v_{i + 1}{j + 1} is not in the lattice")
    return L


def expected_initial_lex(spec: DeterminantalSpec) -> set[tuple[int, ...]]:
    """x_1^{d_1} y_j^{d_j} (j >= 2) together with x_i^{d_i} y_j^{d_j} (2 <= i < j)."""
    return {spec.minor(i, j).plus for i in range(spec.m) for j in range(i + 1, spec.m)}


def initial_ideal_lex(spec: DeterminantalSpec) -> list[tuple[int, ...]]:
    o = lex_order(spec)
    return sorted(leading_monomials(buchberger(f_polys(spec), o), o))


def is_prime(spec: DeterminantalSpec) -> bool:
    d = spec.d
    return all(gcd(d[i], d[j]) == 1 for i in range(spec.m) for j in range(i + 1, spec.m))


def is_prime_by_saturation(spec: DeterminantalSpec) -> bool:
    return is_saturated(lattice_of(spec))


def saturation_witnesses(spec: DeterminantalSpec) -> list[Binomial]:
    """For gcd(d_i, d_j) > 1: the reduced minor in ``I_Sat(L)`` but not in ``I_L``."""
    out = []
    for i in range(spec.m):
        for j in range(i + 1, spec.m):
            if gcd(spec.d[i], spec.d[j]) > 1:
                a, b = spec.dstar(i, j)
                out.append(spec.minor(i, j, a, b))
    return out


def bar_certificate(spec: DeterminantalSpec, check_complex: bool = True,
                    limit: int = DEFAULT_STATE_LIMIT) -> int:
    """``bar = m(m-1)/2`` from ``ceil(q/2) = mu`` with ``q = m(m-1)`` vertices."""
    m = spec.m
    target = m * (m - 1) // 2
    L = lattice_of(spec)
    mk = markov_basis(L, generators=generators_f(spec), limit=limit)
    if mk.mu != target:
        raise CertificationError(f"mu = {mk.mu}, expected {target}")
    q = len(mk.tmin)
    if check_complex:
        an = analyse(L, markov=mk, limit=limit)
        q = len(an.gamma.vertices)
    if q != m * (m - 1):
        raise CertificationError(f"{q} vertices, expected {m * (m - 1)}")
    if -(-q // 2) != mk.mu:
        raise CertificationError("ceil(q/2) differs from mu")
    return target


# ---------------------------------------------------------------------------
# Lawrence lifting


def lawrence_b(spec: DeterminantalSpec) -> tuple[int, ...]:
    return tuple(prod(spec.d[:i] + spec.d[i + 1:]) for i in range(spec.m))


def lawrence_matrix(b: Sequence[int]) -> IntegerMatrix:
    m = len(b)
    rows = [list(b) + [0] * m]
    for i in range(m):
        r = [0] * (2 * m)
        r[i] = 1
        r[m + i] = 1
        rows.append(r)
    return IntegerMatrix(rows, 2 * m)


@dataclass
class LawrenceResult:
    b: tuple[int, ...]
    matrix: IntegerMatrix
    markov: MarkovReport
    vertex_count: int
    bar_lower: int
    bar_upper: int
    dropped: list[Binomial] = field(default_factory=list)

    @property
    def certified_bar(self) -> int | None:
        return self.bar_lower if self.bar_lower == self.bar_upper else None


def has_pure_power_generator(report: MarkovReport) -> bool:
    """Some generator is ``z^a - M`` with ``z`` a single variable not dividing ``M``."""
    for g in report.generators:
        for a, b in ((g.plus, g.minus), (g.minus, g.plus)):
            sup = [i for i, x in enumerate(a) if x]
            if len(sup) == 1 and b[sup[0]] == 0:
                return True
    return False


def lawrence_ideal(spec: DeterminantalSpec, limit: int = DEFAULT_STATE_LIMIT,
                   try_radical: bool = True) -> LawrenceResult:
    """Toric ideal of the Lawrence lifting of ``b_i = prod_{j != i} d_j``."""
    m = spec.m
    b = lawrence_b(spec)
    A = lawrence_matrix(b)
    L = kernel_basis(A)
    mk = markov_basis(L, limit=limit)
    q = len(mk.tmin)
    lower = m * (m - 1) // 2
    if q < m * (m - 1):
        raise CertificationError(f"only {q} minimal supports, expected at least {m * (m - 1)}")
    if has_pure_power_generator(mk):
        raise CertificationError("a generator has a pure power opposite a coprime monomial")
    upper, dropped = mk.mu, []
    if try_radical and mk.mu > lower:
        from .graphs import radical_upper_bound
        # every generator here is indispensable, so all of them are candidates
        cands = sorted(mk.generators, key=lambda g: (-g.degree(), g.vector))
        upper, dropped = radical_upper_bound(list(mk.generators), cands)
    return LawrenceResult(b, A, mk, q, max(lower, -(-q // 2)), upper, dropped)


# ---------------------------------------------------------------------------
# lattice basis ideal


@dataclass
class LatticeBasisIdealReport:
    generators: list[Binomial]
    groebner_ok: bool
    initial_ok: bool
    intersection_ok: bool
    radical_ok: bool | None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.groebner_ok and self.initial_ok and self.intersection_ok and self.radical_ok is not False


def basis_ideal_gb_candidates(spec: DeterminantalSpec) -> list[Polynomial]:
    """``f_1j`` together with ``g_ij = y_1^{d_1} f_ij`` for 2 <= i < j."""
    names = spec.names
    n = 2 * spec.m
    y1 = [0] * n
    y1[spec.y(0)] = spec.d[0]
    Y = Polynomial.monomial(y1, 1, names)
    R = [spec.minor(0, j).polynomial(names) for j in range(1, spec.m)]
    for i in range(1, spec.m):
        for j in range(i + 1, spec.m):
            R.append(Y * spec.minor(i, j).polynomial(names))
    return R


def lattice_basis_ideal(spec: DeterminantalSpec) -> LatticeBasisIdealReport:
    names = spec.names
    n = 2 * spec.m
    m = spec.m
    d1 = spec.d[0]
    JL = [spec.minor(0, j).polynomial(names) for j in range(1, m)]
    I2 = f_polys(spec)
    lex = lex_order(spec)
    fails: list[str] = []

    R = basis_ideal_gb_candidates(spec)
    gb_ok = is_groebner_basis(R, lex) and same_ideal(R, JL, lex)
    if not gb_ok:
        fails.append("R is not a Groebner basis of J_L under lex")
    # in(J_L) = M1 + y_1^{d_1} M2
    G = buchberger(JL, lex)
    lead = set(leading_monomials(G, lex))
    expect = set()
    for j in range(1, m):
        expect.add(spec.minor(0, j).plus)
    for i in range(1, m):
        for j in range(i + 1, m):
            u = list(spec.minor(i, j).plus)
            u[spec.y(0)] += d1
            expect.add(tuple(u))
    init_ok = lead == expect
    if not init_ok:
        fails.append(f"initial ideal generators differ: {sorted(lead ^ expect)}")

    def mono(idx, e):
        u = [0] * n
        u[idx] = e
        return Polynomial.monomial(u, 1, names)

    Q = [mono(spec.x(0), d1), mono(spec.y(0), d1)]
    H = intersect_ideals(I2, Q)
    inter_ok = same_ideal(H, JL)
    if not inter_ok:
        fails.append("J_L differs from I_2(D) intersected with (x_1^d1, y_1^d1)")

    rad_ok = None
    if is_prime(spec):
        P = [mono(spec.x(0), 1), mono(spec.y(0), 1)]
        K = intersect_ideals(I2, P)
        GJ = buchberger(JL)
        GK = buchberger(K)
        bad = [h for h in K if not radical_member(h, JL, basis=GJ)]
        bad += [f for f in JL if not ideal_member(f, K, basis=GK)]
        rad_ok = not bad
        if bad:
            fails.append("radical mismatch at " + ", ".join(str(p) for p in bad))
    gens = [spec.minor(0, j) for j in range(1, m)]
    return LatticeBasisIdealReport(gens, gb_ok, init_ok, inter_ok, rad_ok, fails)


def g_identity_holds(spec: DeterminantalSpec) -> bool:
    """``y_1^{d_1} f_ij = y_i^{d_i} f_1j - y_j^{d_j} f_1i`` for all 2 <= i < j."""
    names = spec.names
    n = 2 * spec.m

    def ypow(i):
        u = [0] * n
        u[spec.y(i)] = spec.d[i]
        return Polynomial.monomial(u, 1, names)

    f = lambda i, j: spec.minor(i, j).polynomial(names)  # noqa: E731
    for i in range(1, spec.m):
        for j in range(i + 1, spec.m):
            if ypow(0) * f(i, j) != ypow(i) * f(0, j) - ypow(j) * f(0, i):
                return False
    return True


def saturation_check(spec: DeterminantalSpec) -> bool:
    """``Sat(L) = L`` exactly when the exponents are pairwise coprime."""
    return is_saturated(lattice_of(spec)) == is_prime(spec) and \
        all(saturate(lattice_of(spec)).contains(w.vector) for w in saturation_witnesses(spec))


__all__ = [
    "DeterminantalSpec", "CertificationError", "generators_f", "f_polys", "lex_order",
    "sample_orders", "verify_universal_gb", "lattice_vectors", "lattice_of",
    "expected_initial_lex", "initial_ideal_lex", "is_prime", "is_prime_by_saturation",
    "saturation_witnesses", "bar_certificate", "lawrence_b", "lawrence_matrix",
    "LawrenceResult", "lawrence_ideal", "has_pure_power_generator", "LatticeBasisIdealReport",
    "basis_ideal_gb_candidates", "lattice_basis_ideal", "g_identity_holds", "saturation_check",
    "Analysis",
]
