"""Circuits of a vector configuration and their support family."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .exactalg import (
    IntegerMatrix,
    in_cone,
    integral_primitive,
    rank,
    rational_nullspace,
    support,
)
from .groebner import Binomial

Support = frozenset[int]


@dataclass(frozen=True, order=True)
class Circuit:
    """Primitive kernel vector of minimal support, first nonzero entry positive."""

    vector: tuple[int, ...]

    def __post_init__(self):
        v = self.vector
        first = next((x for x in v if x), 0)
        if first <= 0:
            raise ValueError("circuit vector must be nonzero with positive leading entry")

    @property
    def support(self) -> Support:
        return support(self.vector)

    @property
    def plus_support(self) -> Support:
        return frozenset(i for i, x in enumerate(self.vector) if x > 0)

    @property
    def minus_support(self) -> Support:
        return frozenset(i for i, x in enumerate(self.vector) if x < 0)

    @property
    def halves(self) -> tuple[Support, Support]:
        return self.plus_support, self.minus_support

    def binomial(self) -> Binomial:
        return Binomial(self.vector)

    def __str__(self):
        return str(self.binomial())


def canonical_sign(v: Sequence[int]) -> tuple[int, ...]:
    first = next(x for x in v if x)
    return tuple(v) if first > 0 else tuple(-x for x in v)


def circuit_sort_key(c: Circuit):
    return (len(c.support), sorted(c.support), [-x for x in c.vector])


def enumerate_circuits(A: IntegerMatrix) -> list[Circuit]:
    """All circuits of the columns of ``A``, canonically signed and sorted."""
    m = A.cols
    r = rank(A)
    cols = A.columns()
    found: list[Circuit] = []
    masks: list[int] = []
    for size in range(1, min(r + 1, m) + 1):
        for S in combinations(range(m), size):
            mask = 0
            for i in S:
                mask |= 1 << i
            if any(c & mask == c for c in masks):
                continue
            sub = [[cols[j][i] for j in S] for i in range(A.rows)]
            ns = rational_nullspace(sub, size)
            if len(ns) != 1 or any(x == 0 for x in ns[0]):
                continue
            small = integral_primitive(ns[0])
            v = [0] * m
            for j, x in zip(S, small):
                v[j] = x
            found.append(Circuit(canonical_sign(v)))
            masks.append(mask)
    found.sort(key=circuit_sort_key)
    return found


def is_conformal(u: Sequence[int], v: Sequence[int]) -> bool:
    """``supp(u+) <= supp(v+)`` and ``supp(u-) <= supp(v-)``."""
    return all((x <= 0 or y > 0) and (x >= 0 or y < 0) for x, y in zip(u, v))


def conformal_circuit(v: Sequence[int], A: IntegerMatrix) -> tuple[int, ...]:
    """A circuit vector conformal to the nonzero kernel vector ``v``.

    The result is signed so that it is conformal to ``v`` itself.
    """
    v = tuple(v)
    if not any(v):
        raise ValueError("zero vector has no conformal circuit")
    if any(A.apply(v)):
        raise ValueError("vector is not in the kernel")
    S = sorted(support(v))
    for c in enumerate_circuits(A.submatrix(S)):
        full = [0] * len(v)
        for j, x in zip(S, c.vector):
            full[j] = x
        for cand in (tuple(full), tuple(-x for x in full)):
            if is_conformal(cand, v):
                return cand
    raise AssertionError("no conformal circuit found; kernel vector decomposition failed")


@dataclass(frozen=True)
class SupportFamily:
    members: frozenset[Support]
    minimal: tuple[Support, ...]


def support_sort_key(E: Iterable[int]):
    return tuple(sorted(E))


def minimal_sets(sets: Iterable[Support]) -> tuple[Support, ...]:
    uniq = sorted(set(sets), key=lambda E: (len(E), support_sort_key(E)))
    out: list[Support] = []
    for E in uniq:
        if not any(F <= E for F in out):
            out.append(E)
    return tuple(sorted(out, key=support_sort_key))


def support_family(circuits: Iterable[Circuit]) -> SupportFamily:
    members = set()
    for c in circuits:
        members.update(c.halves)
    return SupportFamily(frozenset(members), minimal_sets(members))


def restrict_circuits(circuits: Iterable[Circuit], columns: Iterable[int]) -> list[Circuit]:
    cols = frozenset(columns)
    return sorted((c for c in circuits if c.support <= cols), key=circuit_sort_key)


def is_extremal(A: IntegerMatrix) -> bool:
    """No column lies in the rational cone of the remaining columns."""
    cols = A.columns()
    for i, a in enumerate(cols):
        rest = cols[:i] + cols[i + 1:]
        if in_cone(a, rest):
            return False
    return True
