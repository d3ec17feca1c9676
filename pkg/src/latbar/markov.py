"""Fibers, minimal binomial generating sets and indispensability."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .circuits import minimal_sets, support_sort_key
from .exactalg import (
    IntegerMatrix,
    LatticeBasis,
    LatticeError,
    _solve_in_span,
    grading_matrix,
    is_positive,
    kernel_basis,
    positive_functional,
    support,
)
from .groebner import Binomial, Monomial, ResourceLimit, divides, lattice_ideal_generators

DEFAULT_STATE_LIMIT = 10 ** 6


# ---------------------------------------------------------------------------
# fibers


@dataclass(frozen=True)
class Fiber:
    degree: tuple[int, ...]
    monomials: tuple[Monomial, ...]

    def __len__(self):
        return len(self.monomials)

    def __contains__(self, u):
        return tuple(u) in set(self.monomials)


class Grading:
    """A matrix ``A`` together with a strictly positive weight ``w = y A``."""

    def __init__(self, A: IntegerMatrix):
        self.A = A
        w = positive_functional(kernel_basis(A))
        if w is None:
            raise LatticeError("grading is not pointed: some fiber is infinite")
        y = _solve_in_span([list(A.row(i)) for i in range(A.rows)], w)
        if y is None:
            raise LatticeError("positive weight is not in the row space")
        self.w = tuple(w)
        self.y = tuple(y)
        self.order = self._variable_order()

    def weight(self, b: Sequence[int]) -> Fraction:
        return sum((yi * bi for yi, bi in zip(self.y, b)), Fraction(0))

    def _variable_order(self) -> list[int]:
        # pick variables so that rows get exhausted early, which forces values
        A = self.A
        left = set(range(A.cols))
        order = []
        while left:
            best = None
            for j in sorted(left):
                score = min((sum(1 for k in left if A[i, k]) for i in range(A.rows) if A[i, j]),
                            default=A.cols + 1)
                if best is None or score < best[0]:
                    best = (score, j)
            order.append(best[1])
            left.remove(best[1])
        return order

    def fiber(self, b: Sequence[int], limit: int = DEFAULT_STATE_LIMIT) -> Fiber:
        return Fiber(tuple(b), tuple(_enumerate_fiber(self, tuple(b), limit)))


def _enumerate_fiber(G: Grading, b: tuple[int, ...], limit: int) -> list[Monomial]:
    A, w, order = G.A, G.w, G.order
    n, m = A.rows, A.cols
    W = G.weight(b)
    if W < 0:
        return []
    cols = [A.column(j) for j in range(m)]
    # sign pattern of each row over the not-yet-assigned suffix of ``order``
    suffix_pos = [[False] * n for _ in range(m + 1)]
    suffix_neg = [[False] * n for _ in range(m + 1)]
    for t in range(m - 1, -1, -1):
        c = cols[order[t]]
        for i in range(n):
            suffix_pos[t][i] = suffix_pos[t + 1][i] or c[i] > 0
            suffix_neg[t][i] = suffix_neg[t + 1][i] or c[i] < 0
    out: list[Monomial] = []
    u = [0] * m
    states = 0

    def feasible(t, r, rw):
        if rw < 0:
            return False
        for i in range(n):
            if r[i] > 0 and not suffix_pos[t][i]:
                return False
            if r[i] < 0 and not suffix_neg[t][i]:
                return False
        return True

    def rec(t, r, rw):
        nonlocal states
        states += 1
        if states > limit:
            raise ResourceLimit(f"fiber enumeration exceeded {limit} states")
        if t == m:
            if rw == 0 and not any(r):
                out.append(tuple(u))
            return
        j = order[t]
        c = cols[j]
        # a row whose only remaining column is j forces the value
        forced = None
        for i in range(n):
            if c[i] and not (suffix_pos[t + 1][i] or suffix_neg[t + 1][i]):
                if r[i] % c[i]:
                    return
                forced = r[i] // c[i]
                break
        hi = int(rw // w[j])
        values = range(hi + 1) if forced is None else ([forced] if 0 <= forced <= hi else [])
        for x in values:
            r2 = [ri - x * ci for ri, ci in zip(r, c)]
            rw2 = rw - x * w[j]
            if feasible(t + 1, r2, rw2):
                u[j] = x
                rec(t + 1, r2, rw2)
        u[j] = 0

    if feasible(0, list(b), W):
        rec(0, list(b), W)
    out.sort()
    return out


def fiber(b: Sequence[int], A: IntegerMatrix, limit: int = DEFAULT_STATE_LIMIT) -> Fiber:
    """All ``u >= 0`` with ``A u = b``."""
    if A.rows == 0:
        raise LatticeError("empty grading has infinite fibers")
    return Grading(A).fiber(b, limit)


# ---------------------------------------------------------------------------
# Markov bases


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class DegreeClass:
    """A graded piece of ``I_L``: one congruence class of monomials mod ``L``."""

    adeg: tuple[int, ...]
    weight: Fraction
    monomials: tuple[Monomial, ...]
    components: tuple[tuple[Monomial, ...], ...]
    generators: tuple[Binomial, ...]


@dataclass(frozen=True)
class MarkovReport:
    generators: tuple[Binomial, ...]
    degrees: tuple[DegreeClass, ...]
    indispensable_monomials: tuple[Monomial, ...]
    indispensable_binomials: tuple[Binomial, ...]
    tmin: tuple[frozenset[int], ...]
    grading: IntegerMatrix = field(repr=False)

    @property
    def mu(self) -> int:
        return len(self.generators)

    def generator_degrees(self) -> list[tuple[int, ...]]:
        return [d.adeg for d in self.degrees for _ in d.generators]

    def all_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def unique_system(self) -> bool:
        return len(self.indispensable_binomials) == self.mu


def _moves(gens: Sequence[Binomial]) -> list[tuple[Monomial, tuple[int, ...]]]:
    out = []
    for g in gens:
        out.append((g.plus, tuple(-x for x in g.vector)))
        out.append((g.minus, g.vector))
    return out


def _components(monos: Sequence[Monomial], moves) -> list[tuple[Monomial, ...]]:
    members = set(monos)
    uf = _UnionFind(monos)
    for a in monos:
        for lead, step in moves:
            if divides(lead, a):
                b = tuple(x + y for x, y in zip(a, step))
                if b in members:
                    uf.union(a, b)
    groups: dict = {}
    for a in monos:
        groups.setdefault(uf.find(a), []).append(a)
    comps = [tuple(sorted(g)) for g in groups.values()]
    comps.sort()
    return comps


def markov_basis(L: LatticeBasis, generators: Iterable[Binomial] | None = None,
                 limit: int = DEFAULT_STATE_LIMIT, reverse_ties: bool = False) -> MarkovReport:
    """Minimal binomial generating set of ``I_L`` with indispensability data.

    ``generators`` may supply any binomial generating set of ``I_L``; its
    degrees are the candidate degrees. By default the set comes from a
    saturation Groebner basis. ``reverse_ties`` picks the largest instead of
    the smallest representatives, which must not change any invariant.
    """
    if not is_positive(L):
        raise LatticeError("lattice is not positive")
    A = grading_matrix(L)
    if L.rank == 0:
        return MarkovReport((), (), (), (), (), A)
    G = Grading(A)
    gens = list(generators) if generators is not None else lattice_ideal_generators(L)
    for g in gens:
        if not L.contains(g.vector):
            raise LatticeError(f"generator {g} is not in the lattice")

    # one candidate per congruence class of leading monomials
    cands: list[tuple[Fraction, tuple[int, ...], Monomial]] = []
    for g in gens:
        b = A.apply(g.plus)
        cands.append((G.weight(b), b, g.plus))
    cands.sort(key=lambda t: (t[0], t[1], t[2]))

    accepted: list[Binomial] = []
    classes: list[DegreeClass] = []
    seen: dict[tuple, list[set]] = {}
    fibers: dict[tuple, Fiber] = {}
    pick = max if reverse_ties else min
    for weight, b, u in cands:
        known = seen.setdefault(b, [])
        if any(u in s for s in known):
            continue
        if b not in fibers:
            fibers[b] = G.fiber(b, limit)
        cls = tuple(v for v in fibers[b].monomials
                    if L.contains([x - y for x, y in zip(v, u)]))
        known.append(set(cls))
        comps = _components(cls, _moves(accepted))
        if len(comps) < 2:
            continue
        reps = sorted((pick(c) for c in comps), reverse=reverse_ties)
        root = reps[0]
        new = tuple(Binomial([x - y for x, y in zip(root, r)]).canonical() for r in reps[1:])
        accepted.extend(new)
        classes.append(DegreeClass(b, weight, cls, tuple(comps), new))

    indisp_b = tuple(g for c in classes if len(c.monomials) == 2 for g in c.generators)
    monos = set()
    for g in accepted:
        monos.add(g.plus)
        monos.add(g.minus)
    indisp_m = minimal_monomials(monos)
    tmin = minimal_sets(support(u) for u in indisp_m)
    return MarkovReport(tuple(accepted), tuple(classes), indisp_m, indisp_b, tmin, A)


def minimal_monomials(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal members."""
    ms = sorted(set(monos), key=lambda u: (sum(u), u))
    out: list[Monomial] = []
    for u in ms:
        if not any(divides(v, u) for v in out):
            out.append(u)
    return tuple(sorted(out))


def indispensable_monomials(L: LatticeBasis, **kw) -> tuple[Monomial, ...]:
    return markov_basis(L, **kw).indispensable_monomials


def indispensable_binomials(L: LatticeBasis, **kw) -> tuple[Binomial, ...]:
    return markov_basis(L, **kw).indispensable_binomials


def tmin(L: LatticeBasis, **kw) -> tuple[frozenset[int], ...]:
    return markov_basis(L, **kw).tmin


def theorem_2_16_certificate(report: MarkovReport) -> int | None:
    """``bar = mu`` when the generators are squarefree and all indispensable."""
    if report.all_squarefree() and report.unique_system():
        return report.mu
    return None


def sort_supports(sets: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    return sorted((tuple(sorted(s)) for s in sets), key=support_sort_key)
