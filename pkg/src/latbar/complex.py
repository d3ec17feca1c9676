"""The simplicial complex of minimal supports, matchings, coverings and the
bounds report for the binomial arithmetical rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .circuits import Circuit, enumerate_circuits, support_family
from .exactalg import IntegerMatrix, LatticeBasis, grading_matrix
from .groebner import Monomial, Polynomial
from .markov import DEFAULT_STATE_LIMIT, MarkovReport, markov_basis, theorem_2_16_certificate

Face = frozenset[int]


class UnresolvedFaceError(RuntimeError):
    """A face status needed by a search was not decided within the bound."""


class InconsistencyError(RuntimeError):
    """Two independent computations disagree."""


@dataclass(frozen=True)
class GammaComplex:
    vertices: tuple[frozenset[int], ...]
    faces: frozenset[Face]
    witnesses: dict = field(compare=False)
    unknown: frozenset[Face] = frozenset()
    degree_bound: int = 0
    face_cap: int = 4

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-1)

    def is_face(self, T: Iterable[int]) -> bool:
        return frozenset(T) in self.faces

    def faces_of_dim(self, k: int) -> list[Face]:
        return sorted((f for f in self.faces if len(f) == k + 1), key=sorted)

    def edges(self) -> list[Face]:
        return self.faces_of_dim(1)

    def vertex_index(self, E: Iterable[int]) -> int | None:
        E = frozenset(E)
        try:
            return self.vertices.index(E)
        except ValueError:
            return None

    def components(self) -> list[tuple[int, ...]]:
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for f in self.faces:
            fs = sorted(f)
            for a in fs[1:]:
                ra, rb = find(fs[0]), find(a)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        groups: dict = {}
        for v in range(len(self.vertices)):
            groups.setdefault(find(v), []).append(v)
        return sorted((tuple(g) for g in groups.values()), key=lambda g: (len(g), g))

    def component_shape(self, comp: Sequence[int]) -> str:
        """``vertex``, ``edge``, ``k-simplex`` or ``other``."""
        k = len(comp)
        if k == 1:
            return "vertex"
        if frozenset(comp) in self.faces:
            return "edge" if k == 2 else f"{k - 1}-simplex"
        return "other"

    def census(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.components():
            s = self.component_shape(c)
            out[s] = out.get(s, 0) + 1
        return out

    def induced(self, verts: Iterable[int]) -> "GammaComplex":
        """Induced subcomplex, keeping vertex labels of the parent."""
        keep = frozenset(verts)
        faces = frozenset(f for f in self.faces if f <= keep)
        unknown = frozenset(f for f in self.unknown if f <= keep)
        wit = {f: w for f, w in self.witnesses.items() if f in faces}
        return GammaComplex(self.vertices, faces, wit, unknown, self.degree_bound, self.face_cap)

    def support_vertices(self) -> frozenset[int]:
        return frozenset(v for f in self.faces for v in f)

    def dump(self) -> str:
        lines = [f"vertices {len(self.vertices)}"]
        for i, E in enumerate(self.vertices):
            lines.append(f"  E{i + 1} = {{{', '.join(str(j + 1) for j in sorted(E))}}}")
        for f in sorted(self.faces, key=lambda f: (len(f), sorted(f))):
            wit = self.witnesses.get(f, ())
            ws = " ; ".join(_fmt_mono(u) for u in wit)
            ids = " ".join(f"E{v + 1}" for v in sorted(f))
            lines.append(f"{len(f) - 1} | {ids} | {ws}")
        lines.append(f"unknown (degree bound {self.degree_bound}, face cap {self.face_cap})")
        for f in sorted(self.unknown, key=lambda f: (len(f), sorted(f))):
            lines.append("  " + " ".join(f"E{v + 1}" for v in sorted(f)))
        return "\n".join(lines)


def _fmt_mono(u: Monomial) -> str:
    from .groebner import format_monomial
    return format_monomial(u)


def _exact_support_monomials(E: Sequence[int], m: int, bound: int):
    """Monomials with support exactly ``E`` and total degree at most ``bound``."""
    E = sorted(E)
    k = len(E)
    if k > bound:
        return

    def rec(i, left, cur):
        if i == k:
            u = [0] * m
            for j, e in zip(E, cur):
                u[j] = e
            yield tuple(u)
            return
        rest = k - i - 1
        for e in range(1, left - rest + 1):
            yield from rec(i + 1, left - e, cur + [e])

    yield from rec(0, bound, [])


def default_degree_bound(circuits: Sequence[Circuit]) -> int:
    top = max((max(sum(x for x in c.vector if x > 0), -sum(x for x in c.vector if x < 0))
               for c in circuits), default=1)
    return 2 * top


def build_gamma(A: IntegerMatrix, circuits: Sequence[Circuit], degree_bound: int | None = None,
                face_cap: int = 4) -> GammaComplex:
    """Vertices are the minimal circuit-half supports; edges come from circuits
    whose halves are exactly two vertices; larger faces need a witness tuple
    of equal-degree monomials with the prescribed supports.
    """
    circuits = list(circuits)
    verts = support_family(circuits).minimal
    index = {E: i for i, E in enumerate(verts)}
    m = A.cols
    bound = degree_bound if degree_bound is not None else default_degree_bound(circuits)
    faces: set[Face] = {frozenset([i]) for i in range(len(verts))}
    witnesses: dict = {}
    for i, E in enumerate(verts):
        u = [0] * m
        for j in E:
            u[j] = 1
        witnesses[frozenset([i])] = (tuple(u),)
    for c in circuits:
        p, n = c.halves
        if p in index and n in index:
            f = frozenset([index[p], index[n]])
            if f not in faces:
                faces.add(f)
                a, b = c.binomial().plus, c.binomial().minus
                witnesses[f] = (a, b) if index[p] < index[n] else (b, a)

    unknown: set[Face] = set()
    degree_sets: dict[int, dict] = {}

    def degrees_of(v):
        if v not in degree_sets:
            d: dict = {}
            for u in _exact_support_monomials(verts[v], m, bound):
                d.setdefault(A.apply(u), u)
            degree_sets[v] = d
        return degree_sets[v]

    level = [f for f in faces if len(f) == 2]
    size = 3
    while level:
        cands = set()
        for f, g in combinations(sorted(level, key=sorted), 2):
            h = f | g
            if len(h) == size and all(h - {x} in faces for x in h):
                cands.add(h)
        if size > face_cap:
            unknown.update(cands)
            break
        nxt = []
        for h in sorted(cands, key=sorted):
            vs = sorted(h)
            common = set(degrees_of(vs[0]))
            for v in vs[1:]:
                common &= set(degrees_of(v))
            if common:
                b = min(common)
                faces.add(h)
                witnesses[h] = tuple(degrees_of(v)[b] for v in vs)
                nxt.append(h)
            else:
                unknown.add(h)
        level = nxt
        size += 1
    return GammaComplex(tuple(verts), frozenset(faces), witnesses, frozenset(unknown), bound, face_cap)


def gamma_of_polynomial(F: Polynomial, gamma: GammaComplex) -> GammaComplex:
    """Induced subcomplex on the vertices equal to a support of a term of F."""
    sups = {frozenset(i for i, x in enumerate(u) if x) for u in F.terms}
    verts = [i for i, E in enumerate(gamma.vertices) if E in sups]
    return gamma.induced(verts)


def spanning_check(subcomplexes: Iterable[GammaComplex], gamma: GammaComplex) -> bool:
    covered: set[int] = set()
    for s in subcomplexes:
        covered |= s.support_vertices()
    return covered == set(range(len(gamma.vertices)))


# ---------------------------------------------------------------------------
# matchings and coverings


@dataclass(frozen=True)
class JMatching:
    J: frozenset[int]
    faces: tuple[Face, ...]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for f in self.faces for v in f)

    def __len__(self):
        return len(self.faces)


def omega(gamma: GammaComplex) -> frozenset[int]:
    top = max([gamma.dim] + [len(f) - 1 for f in gamma.unknown])
    return frozenset(range(top + 1))


def _check_unknown(gamma: GammaComplex, dims: Iterable[int]):
    dims = set(dims)
    bad = sorted((f for f in gamma.unknown if len(f) - 1 in dims), key=lambda f: (len(f), sorted(f)))
    if bad:
        names = ", ".join("{" + ",".join(f"E{v + 1}" for v in sorted(f)) + "}" for f in bad)
        raise UnresolvedFaceError(
            f"face status unresolved within degree bound {gamma.degree_bound}: {names}")


def _bitmask(f: Iterable[int]) -> int:
    m = 0
    for v in f:
        m |= 1 << v
    return m


def min_maximal_matching(gamma: GammaComplex, J: Iterable[int]) -> JMatching:
    """A maximal J-matching of minimum cardinality."""
    J = frozenset(J)
    _check_unknown(gamma, J)
    allowed = [f for f in gamma.faces if len(f) - 1 in J]
    chosen: list[Face] = []
    for comp in gamma.components():
        cset = set(comp)
        faces = [f for f in allowed if f <= cset]
        by_vertex: dict[int, list[tuple[int, Face]]] = {v: [] for v in comp}
        for f in sorted(faces, key=lambda f: (-len(f), sorted(f))):
            by_vertex[min(f)].append((_bitmask(f), f))
        memo: dict[int, tuple[int, int, tuple]] = {}

        def best(mask):
            # value = (coverage, -count); returns (cov, -cnt, faces)
            if mask == 0:
                return (0, 0, ())
            if mask in memo:
                return memo[mask]
            v = (mask & -mask).bit_length() - 1
            rest = mask & ~(1 << v)
            cov, ncnt, fs = best(rest)
            res = (cov, ncnt, fs)
            for bm, f in by_vertex[v]:
                if bm & mask == bm:
                    c2, n2, f2 = best(mask & ~bm)
                    cand = (c2 + len(f), n2 - 1, (f,) + f2)
                    if cand[:2] > res[:2]:
                        res = cand
            memo[mask] = res
            return res

        chosen.extend(best(_bitmask(comp))[2])
    chosen.sort(key=lambda f: (sorted(f)))
    return JMatching(J, tuple(chosen))


def delta(gamma: GammaComplex, J: Iterable[int]) -> int:
    return len(min_maximal_matching(gamma, J))


def _min_cover(gamma: GammaComplex, faces: Sequence[Face]) -> int:
    total = 0
    for comp in gamma.components():
        cset = set(comp)
        fs = [(_bitmask(f), f) for f in faces if f <= cset]
        memo: dict[int, int] = {}

        def best(mask):
            if mask == 0:
                return 0
            if mask in memo:
                return memo[mask]
            v = (mask & -mask).bit_length() - 1
            r = min(1 + best(mask & ~bm) for bm, f in fs if v in f)
            memo[mask] = r
            return r

        total += best(_bitmask(comp))
    return total


def covering_numbers(gamma: GammaComplex) -> tuple[int, int]:
    """``(b, c)``: fewest 0/1-simplices, resp. simplices, whose union spans."""
    _check_unknown(gamma, omega(gamma))
    low = [f for f in gamma.faces if len(f) <= 2]
    b = _min_cover(gamma, low)
    c = _min_cover(gamma, list(gamma.faces))
    return b, c


# ---------------------------------------------------------------------------
# bounds


@dataclass(frozen=True)
class BoundsReport:
    ht: int
    q: int
    half_q: int
    delta01: int
    delta_omega: int | None
    b_D: int
    c_D: int | None
    mu: int
    certified_bar: int | None
    certificate: str | None
    ara_A_lower: int | None
    complete_intersection: bool
    census: dict

    @property
    def bar_lower(self) -> int:
        return max(self.ht, self.half_q, self.delta01)

    def as_dict(self) -> dict:
        return {
            "ht": self.ht, "q": self.q, "ceil_q_over_2": self.half_q,
            "delta_01": self.delta01, "delta_omega": self.delta_omega,
            "b_D": self.b_D, "c_D": self.c_D, "mu": self.mu,
            "bar_lower": self.bar_lower, "certified_bar": self.certified_bar,
            "certificate": self.certificate, "ara_A_lower": self.ara_A_lower,
            "complete_intersection": self.complete_intersection,
            "components": dict(sorted(self.census.items())),
        }


@dataclass
class Analysis:
    """Everything computed for one lattice."""

    lattice: LatticeBasis
    grading: IntegerMatrix
    circuits: list[Circuit]
    gamma: GammaComplex
    markov: MarkovReport
    report: BoundsReport


def analyse(L: LatticeBasis, degree_bound: int | None = None, face_cap: int = 4,
            limit: int = DEFAULT_STATE_LIMIT, markov: MarkovReport | None = None,
            circuits: Sequence[Circuit] | None = None) -> Analysis:
    A = grading_matrix(L)
    circuits = list(circuits) if circuits is not None else enumerate_circuits(A)
    gamma = build_gamma(A, circuits, degree_bound, face_cap)
    mk = markov if markov is not None else markov_basis(L, limit=limit)
    if set(mk.tmin) != set(gamma.vertices):
        raise InconsistencyError("minimal supports of indispensable monomials differ from C_min")
    q = len(gamma.vertices)
    half_q = math.ceil(q / 2)
    d01 = delta(gamma, {0, 1})
    try:
        om = omega(gamma)
        d_om = delta(gamma, om)
        b_D, c_D = covering_numbers(gamma)
    except UnresolvedFaceError:
        d_om = c_D = None
        b_D = _min_cover(gamma, [f for f in gamma.faces if len(f) <= 2])
    cert = None
    bar = None
    if d01 == mk.mu:
        bar, cert = mk.mu, "matching"
    elif theorem_2_16_certificate(mk) is not None:
        bar, cert = mk.mu, "unique-squarefree"
    rep = BoundsReport(
        ht=L.rank, q=q, half_q=half_q, delta01=d01, delta_omega=d_om, b_D=b_D, c_D=c_D,
        mu=mk.mu, certified_bar=bar, certificate=cert, ara_A_lower=d_om,
        complete_intersection=mk.mu == L.rank, census=gamma.census(),
    )
    if d01 > mk.mu or (d_om is not None and d_om > d01):
        raise InconsistencyError("lower bound exceeds an upper bound")
    return Analysis(L, A, circuits, gamma, mk, rep)


def bounds_report(L: LatticeBasis, degree_bound: int | None = None, face_cap: int = 4,
                  limit: int = DEFAULT_STATE_LIMIT) -> BoundsReport:
    return analyse(L, degree_bound, face_cap, limit).report


def vertex_label_sets(gamma: GammaComplex, comp: Iterable[int]) -> list[tuple[int, ...]]:
    """Vertex supports with 1-based column indices."""
    return [tuple(j + 1 for j in sorted(gamma.vertices[v])) for v in comp]
