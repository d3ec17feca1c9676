"""Polynomials over Q with dense exponent vectors, term orders, Buchberger's
algorithm, normal forms, elimination, ideal and radical membership, and the
binomial generators of a lattice ideal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exactalg import (
    IntegerMatrix,
    LatticeBasis,
    LatticeError,
    is_positive,
    negative_part,
    positive_part,
    support,
)

Monomial = tuple[int, ...]


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def xy_names(m: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(m)) + tuple(f"y{i + 1}" for i in range(m))


# ---------------------------------------------------------------------------
# monomials


def adeg(u: Sequence[int], A: IntegerMatrix) -> tuple[int, ...]:
    """A-degree ``A u`` of the monomial with exponent vector ``u``."""
    if any(x < 0 for x in u):
        raise ValueError("monomial exponents must be nonnegative")
    return A.apply(u)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def is_squarefree(a: Monomial) -> bool:
    return all(x <= 1 for x in a)


def format_monomial(u: Sequence[int], names: Sequence[str] | None = None) -> str:
    names = names or default_names(len(u))
    parts = []
    for n, e in zip(names, u):
        if e == 1:
            parts.append(n)
        elif e:
            parts.append(f"{n}^{e}")
    return " ".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# term orders


@dataclass(frozen=True)
class TermOrder:
    """Monomial order given by a kind and a variable priority permutation.

    ``priority[0]`` is the largest variable. ``kind`` is ``"lex"``,
    ``"grevlex"`` or ``"elim"``; the latter is a block order comparing the
    first ``block`` variables of ``priority`` by grevlex, then the rest by
    grevlex, and eliminates those first variables.
    """

    kind: str
    priority: tuple[int, ...]
    block: int = 0
    _key: Callable = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        p = self.priority
        if sorted(p) != list(range(len(p))):
            raise ValueError("priority must be a permutation")
        if self.kind == "lex":
            def key(u, p=p):
                return tuple([u[i] for i in p])
        elif self.kind == "grevlex":
            rp = p[::-1]

            def key(u, rp=rp):
                return (sum(u), tuple([-u[i] for i in rp]))
        elif self.kind == "elim":
            head, tail = p[:self.block], p[self.block:]
            rh, rt = head[::-1], tail[::-1]

            def key(u, rh=rh, rt=rt):
                return (sum(u[i] for i in rh), tuple([-u[i] for i in rh]),
                        sum(u[i] for i in rt), tuple([-u[i] for i in rt]))
        else:
            raise ValueError(f"unknown term order kind {self.kind!r}")
        object.__setattr__(self, "_key", key)

    @classmethod
    def lex(cls, n: int, priority: Sequence[int] | None = None) -> "TermOrder":
        return cls("lex", tuple(priority) if priority is not None else tuple(range(n)))

    @classmethod
    def grevlex(cls, n: int, priority: Sequence[int] | None = None) -> "TermOrder":
        return cls("grevlex", tuple(priority) if priority is not None else tuple(range(n)))

    @classmethod
    def elimination(cls, n: int, eliminate: Iterable[int]) -> "TermOrder":
        elim = sorted(set(eliminate))
        rest = [i for i in range(n) if i not in elim]
        return cls("elim", tuple(elim + rest), len(elim))

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def key(self, u: Monomial):
        return self._key(u)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Finite map from exponent vectors to nonzero rationals."""

    __slots__ = ("nvars", "terms", "names")

    def __init__(self, terms: dict | Iterable = (), nvars: int | None = None,
                 names: Sequence[str] | None = None):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        d: dict[Monomial, Fraction] = {}
        for u, c in items:
            u = tuple(u)
            c = Fraction(c)
            if c:
                d[u] = d.get(u, 0) + c
                if not d[u]:
                    del d[u]
        if nvars is None:
            if names is not None:
                nvars = len(names)
            elif d:
                nvars = len(next(iter(d)))
            else:
                raise ValueError("cannot infer the number of variables")
        self.nvars = nvars
        self.terms = d
        self.names = tuple(names) if names is not None else None

    # construction helpers
    @classmethod
    def monomial(cls, u: Sequence[int], coeff=1, names=None) -> "Polynomial":
        return cls({tuple(u): coeff}, len(u), names)

    @classmethod
    def constant(cls, c, nvars: int, names=None) -> "Polynomial":
        return cls({(0,) * nvars: c} if c else {}, nvars, names)

    @classmethod
    def variable(cls, i: int, nvars: int, names=None) -> "Polynomial":
        u = [0] * nvars
        u[i] = 1
        return cls({tuple(u): 1}, nvars, names)

    def _names(self):
        return self.names or default_names(self.nvars)

    def _like(self, terms) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = terms
        p.names = self.names
        return p

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self.terms)
        for u, c in other.terms.items():
            v = d.get(u, 0) + c
            if v:
                d[u] = v
            else:
                d.pop(u, None)
        return self._like(d)

    __radd__ = __add__

    def __neg__(self):
        return self._like({u: -c for u, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._like({u: c * other for u, c in self.terms.items()}) if other else self._like({})
        other = self._coerce(other)
        d: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = tuple(x + y for x, y in zip(u, v))
                c = d.get(w, 0) + a * b
                if c:
                    d[w] = c
                else:
                    d.pop(w, None)
        return self._like(d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        r = Polynomial.constant(1, self.nvars, self.names)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def mul_term(self, u: Monomial, c) -> "Polynomial":
        return self._like({tuple(x + y for x, y in zip(v, u)): a * c for v, a in self.terms.items()})

    def leading(self, order: TermOrder) -> tuple[Monomial, Fraction]:
        u = max(self.terms, key=order.key)
        return u, self.terms[u]

    def leading_monomial(self, order: TermOrder) -> Monomial:
        return max(self.terms, key=order.key)

    def monic(self, order: TermOrder) -> "Polynomial":
        _, c = self.leading(order)
        return self * (1 / c) if c != 1 else self

    def monomials(self) -> list[Monomial]:
        return list(self.terms)

    def sorted_terms(self, order: TermOrder) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def is_binomial(self) -> bool:
        return len(self.terms) <= 2

    def is_homogeneous(self, A: IntegerMatrix) -> bool:
        """A-homogeneity: all monomials share one A-degree."""
        return len({A.apply(u) for u in self.terms}) <= 1

    def uses_only(self, variables: Iterable[int]) -> bool:
        keep = set(variables)
        return all(not x or i in keep for u in self.terms for i, x in enumerate(u))

    def extend(self, extra: int, names: Sequence[str] | None = None) -> "Polynomial":
        """Embed into a ring with ``extra`` new trailing variables."""
        z = (0,) * extra
        return Polynomial({u + z: c for u, c in self.terms.items()}, self.nvars + extra, names)

    def drop_trailing(self, k: int, names: Sequence[str] | None = None) -> "Polynomial":
        if any(any(u[self.nvars - k:]) for u in self.terms):
            raise ValueError("polynomial involves the variables being dropped")
        return Polynomial({u[:self.nvars - k]: c for u, c in self.terms.items()},
                          self.nvars - k, names)

    def format(self, order: TermOrder | None = None, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        order = order or TermOrder.grevlex(self.nvars)
        names = names or self._names()
        out = []
        for i, (u, c) in enumerate(self.sorted_terms(order)):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = format_monomial(u, names)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a} {mono}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"Polynomial({self.format()!r})"

    __str__ = format


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^([A-Za-z]\w*?)(?:(?:\^|\*\*)(\d+))?$")


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse text such as ``-3 x1^2 x4 y2 + x5``.

    Factors are separated by spaces or ``*``; powers use ``^`` or ``**``.
    """
    index = {n: i for i, n in enumerate(names)}
    s = text.replace("**", "^").strip()
    if not s:
        raise ValueError("empty polynomial")
    terms: dict = {}
    pos = 0
    # tokenise on +/- that are not part of an exponent
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks).replace(" ", "") != s.replace(" ", ""):
        raise ValueError(f"cannot parse polynomial {text!r}")
    for chunk in chunks:
        chunk = chunk.strip()
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:].strip()
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        u = [0] * len(names)
        for f in chunk.replace("*", " ").split():
            if re.fullmatch(r"\d+(/\d+)?", f):
                coeff *= Fraction(f)
                continue
            m = _FACTOR_RE.match(f)
            if not m or m.group(1) not in index:
                raise ValueError(f"unknown factor {f!r} in {text!r}")
            u[index[m.group(1)]] += int(m.group(2) or 1)
        u = tuple(u)
        terms[u] = terms.get(u, 0) + coeff
        pos += 1
    return Polynomial({u: c for u, c in terms.items() if c}, len(names), names)


# ---------------------------------------------------------------------------
# binomials


@dataclass(frozen=True)
class Binomial:
    """``x^{u+} - x^{u-}`` for a nonzero integer vector ``u``."""

    vector: tuple[int, ...]

    def __init__(self, vector: Sequence[int]):
        v = tuple(int(x) for x in vector)
        if not any(v):
            raise ValueError("zero vector gives the zero binomial")
        object.__setattr__(self, "vector", v)

    @classmethod
    def from_monomials(cls, plus: Sequence[int], minus: Sequence[int]) -> "Binomial":
        return cls([a - b for a, b in zip(plus, minus)])

    @property
    def plus(self) -> Monomial:
        return positive_part(self.vector)

    @property
    def minus(self) -> Monomial:
        return negative_part(self.vector)

    @property
    def nvars(self) -> int:
        return len(self.vector)

    def canonical(self) -> "Binomial":
        """Sign convention: the first nonzero coordinate is positive."""
        first = next(x for x in self.vector if x)
        return self if first > 0 else Binomial([-x for x in self.vector])

    def polynomial(self, names: Sequence[str] | None = None) -> Polynomial:
        return Polynomial({self.plus: 1, self.minus: -1}, self.nvars, names)

    def degree(self) -> int:
        return max(sum(self.plus), sum(self.minus))

    def is_squarefree(self) -> bool:
        return is_squarefree(self.plus) and is_squarefree(self.minus)

    def supports(self) -> tuple[frozenset[int], frozenset[int]]:
        return support(self.plus), support(self.minus)

    def format(self, names: Sequence[str] | None = None) -> str:
        return f"{format_monomial(self.plus, names)} - {format_monomial(self.minus, names)}"

    def __str__(self):
        return self.format()


def binomial_from_polynomial(p: Polynomial) -> Binomial:
    """Inverse of :meth:`Binomial.polynomial` for ``c (M - N)``."""
    if len(p.terms) != 2:
        raise ValueError(f"not a binomial: {p}")
    (u, a), (v, b) = p.terms.items()
    if a != -b:
        raise ValueError(f"not a pure difference of monomials: {p}")
    if a < 0:
        u, v = v, u
    return Binomial([x - y for x, y in zip(u, v)])


# ---------------------------------------------------------------------------
# reduction and Buchberger


class _Basis:
    """Working set of monic polynomials with cached leading monomials."""

    def __init__(self, order: TermOrder):
        self.order = order
        self.polys: list[dict] = []
        self.lms: list[Monomial] = []
        self.active: list[int] = []

    def add(self, p: dict, lm: Monomial) -> int:
        self.polys.append(p)
        self.lms.append(lm)
        return len(self.polys) - 1


def _reduce(f: dict, reducers: Sequence[tuple[Monomial, dict]], key, full: bool = True) -> dict:
    """Remainder of ``f`` on division by monic ``reducers`` (lm, terms)."""
    p = dict(f)
    r: dict = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for g_lm, g in reducers:
            if all(x <= y for x, y in zip(g_lm, lm)):
                q = tuple(y - x for x, y in zip(g_lm, lm))
                for u, a in g.items():
                    w = tuple(x + y for x, y in zip(u, q))
                    v = p.get(w, 0) - c * a
                    if v:
                        p[w] = v
                    else:
                        p.pop(w, None)
                break
        else:
            if not full:
                r.update(p)
                return r
            r[lm] = c
            del p[lm]
    return r


def _monic(p: dict, key) -> tuple[dict, Monomial]:
    lm = max(p, key=key)
    c = p[lm]
    if c != 1:
        p = {u: a / c for u, a in p.items()}
    return p, lm


def _spoly(f: dict, flm: Monomial, g: dict, glm: Monomial) -> dict:
    L = mono_lcm(flm, glm)
    qf = mono_div(L, flm)
    qg = mono_div(L, glm)
    d: dict = {}
    for u, a in f.items():
        w = tuple(x + y for x, y in zip(u, qf))
        d[w] = d.get(w, 0) + a
    for u, a in g.items():
        w = tuple(x + y for x, y in zip(u, qg))
        v = d.get(w, 0) - a
        if v:
            d[w] = v
        else:
            d.pop(w, None)
    return {u: a for u, a in d.items() if a}


class ResourceLimit(RuntimeError):
    """A configured computation ceiling was exceeded."""


def _groebner(gens: Sequence[dict], order: TermOrder, max_pairs: int | None = None) -> list[tuple[Monomial, dict]]:
    key = order.key
    B = _Basis(order)
    pairs: list[tuple[int, int, Monomial]] = []

    def update(h: dict, hlm: Monomial):
        k = B.add(h, hlm)
        # Gebauer-Moeller criteria
        C = [(g, mono_lcm(hlm, B.lms[g])) for g in B.active]
        D = []
        while C:
            g, L = C.pop(0)
            if coprime(hlm, B.lms[g]) or not (
                any(divides(L2, L) for _, L2 in C) or any(divides(L2, L) for _, L2 in D)
            ):
                D.append((g, L))
        E = [(g, L) for g, L in D if not coprime(hlm, B.lms[g])]
        kept = []
        for i, j, L in pairs:
            if divides(hlm, L) and mono_lcm(B.lms[i], hlm) != L and mono_lcm(B.lms[j], hlm) != L:
                continue
            kept.append((i, j, L))
        pairs[:] = kept + [(g, k, L) for g, L in E]
        B.active = [g for g in B.active if not divides(hlm, B.lms[g])] + [k]

    for f in gens:
        if not f:
            continue
        reducers = [(B.lms[g], B.polys[g]) for g in B.active]
        h = _reduce(f, reducers, key)
        if h:
            h, hlm = _monic(h, key)
            update(h, hlm)
    processed = 0
    while pairs:
        # normal selection strategy: smallest lcm first
        idx = min(range(len(pairs)), key=lambda t: (key(pairs[t][2]), pairs[t][0], pairs[t][1]))
        i, j, _ = pairs.pop(idx)
        processed += 1
        if max_pairs is not None and processed > max_pairs:
            raise ResourceLimit(f"Buchberger exceeded {max_pairs} S-pairs")
        s = _spoly(B.polys[i], B.lms[i], B.polys[j], B.lms[j])
        if not s:
            continue
        reducers = [(B.lms[g], B.polys[g]) for g in B.active]
        h = _reduce(s, reducers, key)
        if h:
            h, hlm = _monic(h, key)
            update(h, hlm)
    # reduced basis
    active = [(B.lms[g], B.polys[g]) for g in B.active]
    minimal = [(lm, p) for lm, p in active
               if not any(divides(lm2, lm) and lm2 != lm for lm2, _ in active)]
    seen = set()
    uniq = []
    for lm, p in minimal:
        if lm not in seen:
            seen.add(lm)
            uniq.append((lm, p))
    out = []
    for idx, (lm, p) in enumerate(uniq):
        others = [q for t, q in enumerate(uniq) if t != idx]
        tail = {u: a for u, a in p.items() if u != lm}
        r = _reduce(tail, others, key)
        r[lm] = Fraction(1)
        out.append((lm, r))
    out.sort(key=lambda t: key(t[0]))
    return out


def _to_dicts(polys: Sequence[Polynomial]) -> tuple[list[dict], int, tuple | None]:
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    n = polys[0].nvars
    if any(p.nvars != n for p in polys):
        raise ValueError("polynomials live in different rings")
    names = next((p.names for p in polys if p.names), None)
    return [dict(p.terms) for p in polys], n, names


def buchberger(gens: Sequence[Polynomial], order: TermOrder | None = None,
               max_pairs: int | None = None) -> list[Polynomial]:
    """Reduced Groebner basis, monic, sorted by increasing leading monomial."""
    dicts, n, names = _to_dicts(gens)
    order = order or TermOrder.grevlex(n)
    if order.nvars != n:
        raise ValueError("term order and ring disagree on the number of variables")
    G = _groebner(dicts, order, max_pairs)
    return [Polynomial(p, n, names) for _, p in G]


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder | None = None) -> Polynomial:
    """Fully reduced remainder of ``f`` on division by ``G``."""
    order = order or TermOrder.grevlex(f.nvars)
    reducers = []
    for g in G:
        if not g:
            continue
        d, lm = _monic(dict(g.terms), order.key)
        reducers.append((lm, d))
    return f._like(_reduce(f.terms, reducers, order.key))


def leading_monomials(G: Sequence[Polynomial], order: TermOrder) -> list[Monomial]:
    return [g.leading_monomial(order) for g in G]


def is_groebner_basis(G: Sequence[Polynomial], order: TermOrder) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    key = order.key
    items = []
    for g in G:
        d, lm = _monic(dict(g.terms), key)
        items.append((lm, d))
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            (la, pa), (lb, pb) = items[a], items[b]
            if coprime(la, lb):
                continue
            s = _spoly(pa, la, pb, lb)
            if s and _reduce(s, items, key):
                return False
    return True


def ideal_member(f: Polynomial, gens: Sequence[Polynomial], order: TermOrder | None = None,
                 basis: Sequence[Polynomial] | None = None) -> bool:
    if not f:
        return True
    order = order or TermOrder.grevlex(f.nvars)
    G = basis if basis is not None else buchberger(gens, order)
    return not normal_form(f, G, order)


def same_ideal(F: Sequence[Polynomial], G: Sequence[Polynomial], order: TermOrder | None = None) -> bool:
    n = F[0].nvars
    order = order or TermOrder.grevlex(n)
    return buchberger(F, order) == buchberger(G, order)


def radical_member(f: Polynomial, gens: Sequence[Polynomial], max_power: int = 4,
                   basis: Sequence[Polynomial] | None = None) -> bool:
    """Decide whether some power of ``f`` lies in ``(gens)``.

    Powers up to ``max_power`` are tried against a Groebner basis first (a
    hit is a certificate); otherwise the question is settled exactly by
    testing ``1 in (gens, 1 - t f)`` with one auxiliary variable ``t``.
    """
    if not f:
        return True
    n = f.nvars
    order = TermOrder.grevlex(n)
    G = basis if basis is not None else buchberger(gens, order)
    if any(g.terms.keys() == {(0,) * n} for g in G):
        return True
    p = f
    for _ in range(max_power):
        if not normal_form(p, G, order):
            return True
        p = p * f
    return rabinowitsch_member(f, gens)


def rabinowitsch_member(f: Polynomial, gens: Sequence[Polynomial]) -> bool:
    n = f.nvars
    ext = [g.extend(1) for g in gens]
    t = Polynomial.variable(n, n + 1)
    G = buchberger(ext + [1 - t * f.extend(1)], TermOrder.grevlex(n + 1))
    return any(g.terms.keys() == {(0,) * (n + 1)} for g in G)


def radical_power(f: Polynomial, gens: Sequence[Polynomial], max_power: int = 8,
                  basis: Sequence[Polynomial] | None = None) -> int | None:
    """Smallest ``k <= max_power`` with ``f^k`` in ``(gens)``, else None."""
    order = TermOrder.grevlex(f.nvars)
    G = basis if basis is not None else buchberger(gens, order)
    p = f
    for k in range(1, max_power + 1):
        if not normal_form(p, G, order):
            return k
        p = p * f
    return None


def eliminate(gens: Sequence[Polynomial], keep: Iterable[int],
              max_pairs: int | None = None) -> list[Polynomial]:
    """Groebner basis of ``(gens)`` intersected with ``K[keep]``."""
    n = gens[0].nvars
    keep = set(keep)
    drop = [i for i in range(n) if i not in keep]
    if not drop:
        return buchberger(gens, TermOrder.grevlex(n), max_pairs)
    G = buchberger(gens, TermOrder.elimination(n, drop), max_pairs)
    return [g for g in G if g.uses_only(keep)]


def intersect_ideals(I: Sequence[Polynomial], Q: Sequence[Polynomial]) -> list[Polynomial]:
    """Generators of ``I cap Q`` as ``(t I + (1 - t) Q) cap K[x]``."""
    n = I[0].nvars
    names = next((p.names for p in list(I) + list(Q) if p.names), None)
    t = Polynomial.variable(n, n + 1)
    gens = [t * f.extend(1) for f in I] + [(1 - t) * g.extend(1) for g in Q]
    E = eliminate(gens, range(n))
    return [g.drop_trailing(1, names) for g in E]


def lattice_ideal_generators(L: LatticeBasis, max_pairs: int | None = None) -> list[Binomial]:
    """Binomial generators of ``I_L`` by saturating the lattice basis ideal.

    ``I_L = (x^{u+} - x^{u-} : u in basis) : (x_1 ... x_m)^inf``, computed with
    one auxiliary variable ``t`` and ``t x_1 ... x_m - 1``.
    """
    if not is_positive(L):
        raise LatticeError("lattice is not positive")
    m = L.dim
    gens = [Binomial(u).polynomial().extend(1) for u in L.basis]
    gens.append(Polynomial({(1,) * (m + 1): 1, (0,) * (m + 1): -1}, m + 1))
    E = eliminate(gens, range(m), max_pairs)
    out = []
    for g in E:
        b = binomial_from_polynomial(g.drop_trailing(1)).canonical()
        out.append(b)
    return out


def binomial_polys(bins: Iterable[Binomial], names: Sequence[str] | None = None) -> list[Polynomial]:
    return [b.polynomial(names) for b in bins]
