"""Toric ideals of graphs: even closed walks, circuits, chords and F4s,
condition (#), the complex of minimal supports and the bar = mu test.

Vertices and edges are 0-based internally; text I/O is 1-based.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from .circuits import Circuit, canonical_sign
from .complex import GammaComplex, InconsistencyError, build_gamma
from .exactalg import IntegerMatrix, LatticeBasis, kernel_basis
from .groebner import Binomial, Monomial, radical_member
from .markov import MarkovReport, markov_basis


class GraphError(ValueError):
    pass


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u + 1}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u + 1},{v + 1}) out of range")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"repeated edge ({u + 1},{v + 1})")
            seen.add(key)
        if self.n and not self._connected():
            raise GraphError("graph is not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 1-based vertex pairs."""
        return cls(n, tuple((u - 1, v - 1) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def _connected(self) -> bool:
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def edge_index(self) -> dict[frozenset, int]:
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    def edge_set(self) -> frozenset:
        return frozenset(frozenset(e) for e in self.edges)

    def is_bipartite(self) -> bool:
        adj = self.adjacency()
        color = {0: 0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
        return True

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"] + [f"{u + 1} {v + 1}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty graph file")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed graph file: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"expected {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    if n < 3:
        raise GraphError("complete graph needs n >= 3")
    return Graph.from_edges(n, list(combinations(range(1, n + 1), 2)))


def wheel(n: int) -> Graph:
    """Rim cycle on 1..n followed by the spokes to the hub n+1."""
    if n < 3:
        raise GraphError("wheel needs n >= 3")
    rim = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n + 1, rim + [(i, n + 1) for i in range(1, n + 1)])


GENERATORS = {"cycle": cycle, "complete": complete, "wheel": wheel}


def named_graph(spec: str) -> Graph:
    """``wheel:5``, ``cycle:8`` or ``complete:4``."""
    kind, _, arg = spec.partition(":")
    if kind not in GENERATORS or not arg.isdigit():
        raise GraphError(f"unknown graph generator {spec!r}")
    return GENERATORS[kind](int(arg))


def incidence_config(G: Graph) -> IntegerMatrix:
    rows = [[0] * G.m for _ in range(G.n)]
    for j, (u, v) in enumerate(G.edges):
        rows[u][j] = 1
        rows[v][j] = 1
    return IntegerMatrix(rows, G.m)


def graph_lattice(G: Graph) -> LatticeBasis:
    return kernel_basis(incidence_config(G))


# ---------------------------------------------------------------------------
# walks


@dataclass(frozen=True)
class Walk:
    """Closed walk ``v_0 -e_0- v_1 ... -e_{s-1}- v_0``; ``vertices[k]`` starts ``edges[k]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self):
        return len(self.edges)

    @property
    def is_even(self) -> bool:
        return len(self.edges) % 2 == 0

    @property
    def is_cycle(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


def walk_from_edges(G: Graph, edges: Sequence[int]) -> Walk:
    """Orient an edge sequence into a closed walk."""
    edges = tuple(edges)
    if not edges:
        raise GraphError("empty walk")
    E = G.edges
    for start in E[edges[0]]:
        verts = []
        cur = start
        ok = True
        for e in edges:
            a, b = E[e]
            if cur == a:
                verts.append(a)
                cur = b
            elif cur == b:
                verts.append(b)
                cur = a
            else:
                ok = False
                break
        if ok and cur == start:
            return Walk(tuple(verts), edges)
    raise GraphError("edge sequence is not a closed walk")


def walk_from_vertices(G: Graph, verts: Sequence[int]) -> Walk:
    idx = G.edge_index()
    k = len(verts)
    try:
        edges = tuple(idx[frozenset((verts[i], verts[(i + 1) % k]))] for i in range(k))
    except KeyError:
        raise GraphError("consecutive vertices are not adjacent") from None
    return Walk(tuple(verts), edges)


def walk_monomials(w: Walk, m: int) -> tuple[Monomial, Monomial]:
    """Products over odd and even positions (1-based)."""
    plus = [0] * m
    minus = [0] * m
    for k, e in enumerate(w.edges):
        (plus if k % 2 == 0 else minus)[e] += 1
    return tuple(plus), tuple(minus)


def binomial_of_walk(w: Walk, G: Graph) -> Binomial:
    if not w.is_even:
        raise GraphError("walk has odd length")
    plus, minus = walk_monomials(w, G.m)
    if plus == minus:
        raise GraphError("walk gives the zero binomial")
    return Binomial.from_monomials(plus, minus)


# ---------------------------------------------------------------------------
# cycles and circuit walks


def simple_cycles(G: Graph) -> list[tuple[int, ...]]:
    """Every cycle once, as a vertex tuple rooted at its smallest vertex."""
    adj = [sorted(s) for s in G.adjacency()]
    out = []
    for r in range(G.n):
        path = [r]
        on = {r}

        def rec(x):
            for y in adj[x]:
                if y == r and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif y > r and y not in on:
                    path.append(y)
                    on.add(y)
                    rec(y)
                    path.pop()
                    on.remove(y)

        rec(r)
    return out


def _rotate(cyc: Sequence[int], v: int) -> list[int]:
    i = list(cyc).index(v)
    return list(cyc[i:]) + list(cyc[:i])


def _paths_between(G: Graph, adj, a: int, targets: frozenset, avoid: frozenset):
    """Simple paths from ``a`` to a vertex of ``targets`` whose interior avoids ``avoid``."""
    path = [a]
    on = {a}

    def rec(x):
        for y in adj[x]:
            if y in on:
                continue
            if y in targets:
                yield path + [y]
            elif y not in avoid:
                path.append(y)
                on.add(y)
                yield from rec(y)
                path.pop()
                on.remove(y)

    yield from rec(a)


EVEN_CYCLE = "even-cycle"
SHARED_VERTEX = "odd-cycles-sharing-vertex"
JOINED_BY_PATH = "odd-cycles-joined-by-path"


@dataclass(frozen=True)
class CircuitWalk:
    walk: Walk
    shape: str
    binomial: Binomial

    def circuit(self) -> Circuit:
        return Circuit(canonical_sign(self.binomial.vector))


def enumerate_circuit_walks(G: Graph) -> list[CircuitWalk]:
    """Circuits of the graph's toric ideal, one walk per circuit binomial."""
    cycles = simple_cycles(G)
    adj = [sorted(s) for s in G.adjacency()]
    odd = [c for c in cycles if len(c) % 2]
    found: dict[Binomial, CircuitWalk] = {}

    def add(verts, shape):
        w = walk_from_vertices(G, verts)
        b = binomial_of_walk(w, G).canonical()
        if b not in found:
            found[b] = CircuitWalk(w, shape, b)

    for c in cycles:
        if len(c) % 2 == 0:
            add(c, EVEN_CYCLE)
    for c1, c2 in combinations(odd, 2):
        s1, s2 = set(c1), set(c2)
        common = s1 & s2
        if len(common) == 1:
            v = next(iter(common))
            add(_rotate(c1, v) + _rotate(c2, v), SHARED_VERTEX)
        elif not common:
            avoid = frozenset(s1 | s2)
            for a in c1:
                for p in _paths_between(G, adj, a, frozenset(s2), avoid):
                    b = p[-1]
                    verts = _rotate(c1, a) + p[:-1] + _rotate(c2, b) + p[:0:-1]
                    add(verts, JOINED_BY_PATH)
    return sorted(found.values(), key=lambda cw: (cw.binomial.degree(),
                                                  [-x for x in cw.binomial.vector]))


# ---------------------------------------------------------------------------
# primitivity and chords


def _divisors(u: Monomial):
    for exps in product(*[range(x + 1) for x in u]):
        yield exps


def is_primitive_binomial(plus: Monomial, minus: Monomial, A: IntegerMatrix) -> bool:
    """No other binomial of ``I_A`` has halves dividing ``plus`` and ``minus``."""
    by_deg: dict = {}
    for b in _divisors(minus):
        if any(b):
            by_deg.setdefault(A.apply(b), []).append(b)
    for a in _divisors(plus):
        if not any(a):
            continue
        for b in by_deg.get(A.apply(a), ()):
            if (a, b) != (plus, minus):
                return False
    return True


def is_primitive(w: Walk, G: Graph) -> bool:
    if not w.is_even:
        raise GraphError("walk has odd length")
    plus, minus = walk_monomials(w, G.m)
    if any(x and y for x, y in zip(plus, minus)):
        return False
    return is_primitive_binomial(plus, minus, incidence_config(G))


def _blocks(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> list[frozenset[int]]:
    """Vertex sets of the biconnected components (Hopcroft-Tarjan)."""
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    blocks = []
    counter = [0]

    def dfs(u, parent):
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        for v in adj[u]:
            if v not in disc:
                stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = set()
                    while True:
                        e = stack.pop()
                        comp.update(e)
                        if e == (u, v):
                            break
                    blocks.append(frozenset(comp))
            elif v != parent and disc[v] < disc[u]:
                stack.append((u, v))
                low[u] = min(low[u], disc[v])

    for v in adj:
        if v not in disc:
            dfs(v, None)
    return blocks


BRIDGE, EVEN, ODD = "bridge", "even", "odd"


@dataclass(frozen=True)
class F4:
    """Walk edges ``i`` and ``k`` (same parity, ``i < k`` as positions) and
    the two odd chords; edge ids are graph edge indices."""

    walk_edges: tuple[int, int]
    chords: tuple[int, int]
    positions: tuple[int, int]

    def as_tuple(self) -> tuple[int, int, int, int]:
        (i, k), (j, l) = self.walk_edges, self.chords
        return (i, j, k, l)


@dataclass
class ChordReport:
    chords: dict[int, str] = field(default_factory=dict)
    positions: dict[int, tuple[int, int]] = field(default_factory=dict)
    effective: dict[tuple[int, int], bool] = field(default_factory=dict)
    strongly: dict[tuple[int, int], bool] = field(default_factory=dict)
    f4s: list[F4] = field(default_factory=list)
    crosses: dict[tuple[int, int], bool] = field(default_factory=dict)

    def odd_chords(self) -> list[int]:
        return sorted(e for e, t in self.chords.items() if t == ODD)

    def crosses_f4(self, chord: int, f4: F4) -> bool:
        return self.crosses[(chord, self.f4s.index(f4))]

    def is_empty(self) -> bool:
        return not self.chords


def chord_report(w: Walk, G: Graph) -> ChordReport:
    """Bridges, even and odd chords, effective crossings, F4s and crossings.

    Chord endpoints are located at their first occurrence along the walk.
    """
    if not is_primitive(w, G):
        raise GraphError("walk is not primitive")
    rep = ChordReport()
    s = len(w)
    wedges = set(w.edges)
    first: dict[int, int] = {}
    for k, v in enumerate(w.vertices):
        first.setdefault(v, k + 1)
    blocks = _blocks(w.vertex_set(), [G.edges[e] for e in wedges])
    for e, (a, b) in enumerate(G.edges):
        if e in wedges or a not in first or b not in first:
            continue
        k, l = sorted((first[a], first[b]))
        rep.positions[e] = (k, l)
        if not any(a in B and b in B for B in blocks):
            rep.chords[e] = BRIDGE
        elif (l - k) % 2 == 0:
            rep.chords[e] = ODD
        else:
            rep.chords[e] = EVEN
    odd = rep.odd_chords()
    for e1, e2 in combinations(odd, 2):
        t, j = rep.positions[e1]
        t2, j2 = rep.positions[e2]
        eff = (t2 - t) % 2 == 1 and (t < t2 < j < j2 or t2 < t < j2 < j)
        rep.effective[(e1, e2)] = eff
    # F4s: 4-cycles made of two same-parity walk edges and two crossing odd chords
    pos_of: dict[int, list[int]] = {}
    for k, e in enumerate(w.edges):
        pos_of.setdefault(e, []).append(k + 1)
    for (e1, e2), eff in sorted(rep.effective.items()):
        if not eff:
            continue
        c1, c2 = set(G.edges[e1]), set(G.edges[e2])
        for p, q in combinations(range(1, s + 1), 2):
            if (q - p) % 2:
                continue
            ei, ek = w.edges[p - 1], w.edges[q - 1]
            if ei == ek:
                continue
            a, b = set(G.edges[ei]), set(G.edges[ek])
            if not (a & b) and _is_four_cycle(a, b, c1, c2):
                rep.f4s.append(F4((ei, ek), (min(e1, e2), max(e1, e2)), (p, q)))
    for (e1, e2), eff in rep.effective.items():
        formed = any(set(f.chords) == {e1, e2} for f in rep.f4s)
        rep.strongly[(e1, e2)] = eff and not formed
    for idx, f in enumerate(rep.f4s):
        p, q = f.positions
        w2 = set(w.vertices[p:q])          # vertices of edges strictly between p and q
        w1 = set(w.vertices[q:]) | set(w.vertices[:p])
        for e in odd:
            if e in f.chords:
                rep.crosses[(e, idx)] = False
                continue
            a, b = G.edges[e]
            rep.crosses[(e, idx)] = (a in w1 and b in w2) or (a in w2 and b in w1)
    return rep


def _is_four_cycle(a: set, b: set, c1: set, c2: set) -> bool:
    # a, b disjoint walk edges; each chord must join an end of a to an end of b
    if (c1 & a) and (c1 & b) and (c2 & a) and (c2 & b):
        return (c1 | c2) == (a | b) and c1 != c2
    return False


def canonical_f4(t: Sequence[int]) -> tuple[int, int, int, int]:
    """``(i, j, k, l)`` with walk edges ``i < k`` and chords ``j < l``."""
    i, j, k, l = t
    i, k = sorted((i, k))
    j, l = sorted((j, l))
    return (i, j, k, l)


# ---------------------------------------------------------------------------
# condition (#)


def _is_induced(G: Graph, verts: set[int], edges: set[frozenset]) -> bool:
    return all(frozenset(e) in edges for e in G.edges if e[0] in verts and e[1] in verts)


def _cycle_edges(c: Sequence[int]) -> set[frozenset]:
    return {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}


def sharp_violations(G: Graph, first_only: bool = False):
    """Induced subgraphs made of two disjoint odd cycles joined by a path."""
    adj = [sorted(s) for s in G.adjacency()]
    found = []
    odd = [c for c in simple_cycles(G) if len(c) % 2 and _is_induced(G, set(c), _cycle_edges(c))]
    for c1, c2 in combinations(odd, 2):
        s1, s2 = set(c1), set(c2)
        if s1 & s2:
            continue
        base = _cycle_edges(c1) | _cycle_edges(c2)
        avoid = frozenset(s1 | s2)
        for a in c1:
            for p in _paths_between(G, adj, a, frozenset(s2), avoid):
                verts = s1 | s2 | set(p)
                edges = base | {frozenset((p[i], p[i + 1])) for i in range(len(p) - 1)}
                if _is_induced(G, verts, edges):
                    found.append((c1, tuple(p), c2))
                    if first_only:
                        return found
    return found


def condition_sharp(G: Graph) -> bool:
    return not sharp_violations(G, first_only=True)


def complement_weakly_chordal(G: Graph) -> bool:
    """Any two disjoint edges are joined by a third edge."""
    E = [frozenset(e) for e in G.edges]
    for e, f in combinations(E, 2):
        if e & f:
            continue
        if not any(g != e and g != f and g & e and g & f for g in E):
            return False
    return True


# ---------------------------------------------------------------------------
# complex and certificate


SHAPES = {"vertex", "edge", "2-simplex"}


def gamma_G(G: Graph, circuit_walks: Sequence[CircuitWalk] | None = None,
            degree_bound: int | None = None, face_cap: int = 4) -> GammaComplex:
    cws = circuit_walks if circuit_walks is not None else enumerate_circuit_walks(G)
    circuits = sorted({cw.circuit() for cw in cws})
    gamma = build_gamma(incidence_config(G), circuits, degree_bound, face_cap)
    if not condition_sharp(G):
        warnings.warn("graph violates condition (#); component shapes are not guaranteed")
        return gamma
    for comp in gamma.components():
        shape = gamma.component_shape(comp)
        if shape not in SHAPES:
            raise InconsistencyError(f"component {comp} has unexpected shape {shape}")
    return gamma


@dataclass(frozen=True)
class Theorem314Result:
    certified_bar: int | None
    violators: tuple[Binomial, ...]


def theorem_3_14_certificate(G: Graph, report: MarkovReport | None = None,
                             circuits: Iterable[Circuit] | None = None) -> Theorem314Result:
    """Check that no minimal circuit binomial has two squarefree monomials
    that are both non-indispensable; then ``bar = mu``.

    Minimal binomials of a degree are exactly the differences of monomials
    lying in different components of its fiber graph, so the check does not
    depend on the chosen generators.
    """
    if not condition_sharp(G):
        raise GraphError("graph violates condition (#)")
    L = graph_lattice(G)
    rep = report if report is not None else markov_basis(L)
    circ = {c.vector for c in (circuits if circuits is not None
                               else (cw.circuit() for cw in enumerate_circuit_walks(G)))}
    indisp = set(rep.indispensable_monomials)
    violators = []
    for d in rep.degrees:
        comps = d.components
        for c1, c2 in combinations(comps, 2):
            for u in c1:
                for v in c2:
                    if u in indisp or v in indisp:
                        continue
                    if max(u) > 1 or max(v) > 1:
                        continue
                    vec = canonical_sign([x - y for x, y in zip(u, v)])
                    if vec in circ:
                        violators.append(Binomial(vec))
    violators.sort(key=lambda b: b.vector, reverse=True)
    return Theorem314Result(None if violators else rep.mu, tuple(violators))


def radical_upper_bound(generators: Sequence[Binomial], candidates: Sequence[Binomial]) -> tuple[int, list[Binomial]]:
    """Greedily drop candidates lying in the radical of the remaining generators.

    Returns the size of the smaller set (an upper bound for ``bar`` when
    ``generators`` generate the ideal) and the dropped binomials.
    """
    current = list(generators)
    dropped = []
    for c in candidates:
        rest = [g for g in current if g != c]
        if len(rest) == len(current):
            continue
        if radical_member(c.polynomial(), [g.polynomial() for g in rest]):
            current = rest
            dropped.append(c)
    return len(current), dropped


@dataclass(frozen=True)
class GraphBar:
    mu: int
    lower: int
    upper: int
    method: str
    dropped: tuple[Binomial, ...] = ()

    @property
    def certified_bar(self) -> int | None:
        return self.lower if self.lower == self.upper else None


def graph_bar(G: Graph, report: MarkovReport | None = None,
              circuit_walks: Sequence[CircuitWalk] | None = None) -> GraphBar:
    """Bounds on ``bar`` from the matching number and, failing the squarefree
    certificate, from dropping redundant generators up to radical."""
    from .complex import analyse
    L = graph_lattice(G)
    rep = report if report is not None else markov_basis(L)
    cws = circuit_walks if circuit_walks is not None else enumerate_circuit_walks(G)
    circuits = sorted({cw.circuit() for cw in cws})
    an = analyse(L, markov=rep, circuits=circuits)
    lower = an.report.bar_lower
    if an.report.certified_bar is not None:
        return GraphBar(rep.mu, lower, rep.mu, an.report.certificate)
    if condition_sharp(G) and theorem_3_14_certificate(G, rep, circuits).certified_bar is not None:
        return GraphBar(rep.mu, rep.mu, rep.mu, "squarefree-circuits")
    indisp = set(rep.indispensable_binomials)
    cands = [g for g in reversed(rep.generators) if g not in indisp]
    upper, dropped = radical_upper_bound(list(rep.generators), cands)
    return GraphBar(rep.mu, lower, upper, "radical", tuple(dropped))


def minimal_binomials_at(report: MarkovReport, degree_index: int) -> list[Binomial]:
    """All minimal binomials of one generator degree (up to sign)."""
    d = report.degrees[degree_index]
    out = []
    for c1, c2 in combinations(d.components, 2):
        for u in c1:
            for v in c2:
                out.append(Binomial([x - y for x, y in zip(u, v)]).canonical())
    return out


def edge_labels(bits: Iterable[int]) -> list[int]:
    return [e + 1 for e in bits]


def check_walk_moves(report: MarkovReport) -> bool:
    """No generator has a pure power ``x_i^a`` opposite a monomial without ``x_i``."""
    for g in report.generators:
        for a, b in ((g.plus, g.minus), (g.minus, g.plus)):
            sup = [i for i, x in enumerate(a) if x]
            if len(sup) == 1 and b[sup[0]] == 0:
                return False
    return True


__all__ = [
    "Graph", "Walk", "CircuitWalk", "ChordReport", "F4", "GraphError", "Theorem314Result",
    "parse_graph", "cycle", "complete", "wheel", "named_graph", "incidence_config",
    "graph_lattice", "walk_from_edges", "walk_from_vertices", "walk_monomials",
    "binomial_of_walk", "simple_cycles", "enumerate_circuit_walks", "is_primitive",
    "is_primitive_binomial", "chord_report", "canonical_f4", "condition_sharp",
    "sharp_violations", "complement_weakly_chordal", "gamma_G", "theorem_3_14_certificate",
    "radical_upper_bound", "graph_bar", "GraphBar", "minimal_binomials_at", "check_walk_moves",
    "EVEN_CYCLE", "SHARED_VERTEX", "JOINED_BY_PATH", "BRIDGE", "EVEN", "ODD",
]
