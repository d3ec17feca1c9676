"""Exact integer linear algebra: ranks, kernels, Hermite normal form,
lattice saturation and the grading matrix of a lattice.

Everything here works on Python integers and :class:`fractions.Fraction`;
there is no floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]


class LatticeError(ValueError):
    """Raised when a lattice violates a precondition (dependence, positivity)."""


@dataclass(frozen=True)
class IntegerMatrix:
    entries: tuple[tuple[int, ...], ...]
    ncols: int

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "ncols", ncols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(zip(*self.entries), self.rows) if self.rows else IntegerMatrix([], 0)

    def submatrix(self, cols: Sequence[int]) -> "IntegerMatrix":
        return IntegerMatrix([[r[j] for j in cols] for r in self.entries], len(cols))

    def apply(self, u: Sequence[int]) -> Vector:
        """Matrix-vector product ``M u``."""
        if len(u) != self.ncols:
            raise ValueError(f"vector of length {len(u)} for a matrix with {self.ncols} columns")
        return tuple(sum(a * b for a, b in zip(r, u) if a and b) for r in self.entries)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.entries)


def vector_content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> Vector:
    """Divide out the content; the zero vector is returned unchanged."""
    g = vector_content(v)
    return tuple(v) if g in (0, 1) else tuple(x // g for x in v)


def positive_part(u: Sequence[int]) -> Vector:
    return tuple(x if x > 0 else 0 for x in u)


def negative_part(u: Sequence[int]) -> Vector:
    return tuple(-x if x < 0 else 0 for x in u)


def support(u: Sequence[int]) -> frozenset[int]:
    """0-based indices of the nonzero coordinates."""
    return frozenset(i for i, x in enumerate(u) if x)


# ---------------------------------------------------------------------------
# elimination


def rank(M: IntegerMatrix | Sequence[Sequence[int]]) -> int:
    """Rational rank by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in (M.entries if isinstance(M, IntegerMatrix) else M)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            a = rows[i][c]
            rows[i] = [(p * x - a * y) // prev for x, y in zip(rows[i], rows[r])]
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def rational_nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[list[Fraction]]:
    """Basis of the rational right kernel from the reduced row echelon form."""
    R = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        p = R[r][c]
        R[r] = [x / p for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                a = R[i][c]
                R[i] = [x - a * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        basis.append(v)
    return basis


def integral_primitive(v: Sequence[Fraction]) -> Vector:
    """Scale a rational vector to the primitive integer vector on its ray."""
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(x * den) for x in v])


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[Vector]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped. Pivots are positive and entries above each pivot
    are reduced into ``[0, pivot)``, so two generating sets span the same
    lattice iff their HNFs are equal.
    """
    A = [list(r) for r in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        # gather the gcd of column c (rows r..) into row r
        for i in range(r + 1, len(A)):
            if A[i][c] == 0:
                continue
            if A[r][c] == 0:
                A[r], A[i] = A[i], A[r]
                continue
            g, s, t = _xgcd(A[r][c], A[i][c])
            a, b = A[r][c] // g, A[i][c] // g
            A[r], A[i] = (
                [s * x + t * y for x, y in zip(A[r], A[i])],
                [b * x - a * y for x, y in zip(A[r], A[i])],
            )
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
    return [tuple(row) for row in A[:r]]


def _column_hnf_transform(M: IntegerMatrix) -> tuple[list[list[int]], list[list[int]]]:
    """Row-reduce ``[M^T | I]``; returns (reduced M^T part, transform rows)."""
    m = M.cols
    aug = [list(M.column(j)) + [1 if k == j else 0 for k in range(m)] for j in range(m)]
    n = M.rows
    red = hermite_normal_form(aug, n + m) if aug else []
    return [list(r[:n]) for r in red], [list(r[n:]) for r in red]


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of ``Z^m`` given by linearly independent generators.

    The stored basis is the row Hermite normal form, so equal lattices
    compare equal.
    """

    dim: int
    basis: tuple[Vector, ...]

    def __init__(self, vectors: Iterable[Sequence[int]], dim: int | None = None):
        vecs = [tuple(int(x) for x in v) for v in vectors]
        if dim is None:
            if not vecs:
                raise ValueError("empty lattice needs an explicit ambient dimension")
            dim = len(vecs[0])
        if any(len(v) != dim for v in vecs):
            raise ValueError("vectors of unequal length")
        if rank(vecs) != len(vecs) if vecs else False:
            raise LatticeError("lattice basis vectors are linearly dependent")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis", tuple(hermite_normal_form(vecs, dim)))

    @classmethod
    def from_generators(cls, vectors: Iterable[Sequence[int]], dim: int | None = None) -> "LatticeBasis":
        vecs = [tuple(v) for v in vectors]
        if dim is None:
            dim = len(vecs[0])
        return cls(hermite_normal_form(vecs, dim), dim)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def as_matrix(self) -> IntegerMatrix:
        return IntegerMatrix(self.basis, self.dim)

    def contains(self, v: Sequence[int]) -> bool:
        """Exact membership test by back-substitution against the HNF."""
        v = list(v)
        for row in self.basis:
            c = next(j for j, x in enumerate(row) if x)
            q, rem = divmod(v[c], row[c])
            if rem:
                return False
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def contains_lattice(self, other: "LatticeBasis") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def kernel_basis(M: IntegerMatrix) -> LatticeBasis:
    """Z-basis of ``{u in Z^cols : M u = 0}`` (always a saturated lattice)."""
    red, transform = _column_hnf_transform(M)
    ker = [t for r, t in zip(red, transform) if not any(r)]
    # HNF drops zero rows of the augmented matrix only; kernel rows sit after
    # the rows with nonzero M-part because of the echelon shape.
    return LatticeBasis(ker, M.cols)


def orthogonal_lattice(L: LatticeBasis) -> LatticeBasis:
    """Basis of ``{v in Z^m : v . u = 0 for all u in L}``."""
    return kernel_basis(IntegerMatrix(L.basis, L.dim))


def saturate(L: LatticeBasis) -> LatticeBasis:
    """``Sat(L) = {u : d u in L for some d != 0}``."""
    O = orthogonal_lattice(L)
    return kernel_basis(IntegerMatrix(O.basis, L.dim))


def is_saturated(L: LatticeBasis) -> bool:
    return saturate(L) == L


def grading_matrix(L: LatticeBasis, check_positive: bool = True) -> IntegerMatrix:
    """Integer matrix ``A`` with ``m - rank(L)`` rows and ``ker_Z(A) = Sat(L)``.

    When a strictly positive integer vector exists in the row space, it is
    made the first row (the other rows stay a lattice basis of the
    orthogonal complement), which keeps fibers easy to enumerate.
    """
    if check_positive and not is_positive(L):
        raise LatticeError("lattice is not positive: L meets N^m outside 0")
    O = orthogonal_lattice(L)
    rows = [list(r) for r in O.basis]
    if not rows:
        return IntegerMatrix([], L.dim)
    w = positive_functional(L)
    if w is not None:
        rows = _put_positive_first(rows, w)
    return IntegerMatrix(rows, L.dim)


def _put_positive_first(rows: list[list[int]], w: Vector) -> list[list[int]]:
    # express w in the (unimodular) basis and complete it: if the coefficient
    # vector c is primitive, a unimodular change of basis has c as first row.
    coeffs = _solve_in_span(rows, w)
    if coeffs is None:
        return rows
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    c = primitive([int(x * den) for x in coeffs])
    U = _unimodular_completion(list(c))
    return [[sum(U[i][k] * rows[k][j] for k in range(len(rows))) for j in range(len(rows[0]))]
            for i in range(len(rows))]


def _solve_in_span(rows: list[list[int]], w: Sequence[int]) -> list[Fraction] | None:
    k = len(rows)
    n = len(w)
    # solve c . rows = w, i.e. rows^T c = w
    aug = [[Fraction(rows[i][j]) for i in range(k)] + [Fraction(w[j])] for j in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                a = aug[i][c]
                aug[i] = [x - a * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(aug[i][k] for i in range(r, n)):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][k]
    return sol


def _unimodular_completion(c: list[int]) -> list[list[int]]:
    """Unimodular integer matrix whose first row is the primitive vector ``c``."""
    k = len(c)
    # column operations reducing c to e_1; record them on an identity
    V = [[1 if i == j else 0 for j in range(k)] for i in range(k)]  # c . V = e1 at the end
    cur = list(c)
    for j in range(1, k):
        if cur[j] == 0:
            continue
        g, s, t = _xgcd(cur[0], cur[j])
        a, b = cur[0] // g, cur[j] // g
        # new col0 = s*col0 + t*colj ; new colj = -b*col0 + a*colj
        for row in V:
            x, y = row[0], row[j]
            row[0], row[j] = s * x + t * y, -b * x + a * y
        cur[0], cur[j] = g, 0
    if cur[0] < 0:
        for row in V:
            row[0] = -row[0]
    # c . V = e1  =>  V^{-1} has first row c
    return _integer_inverse(V)


def _integer_inverse(V: list[list[int]]) -> list[list[int]]:
    k = len(V)
    aug = [[Fraction(x) for x in V[i]] + [Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for c in range(k):
        piv = next(i for i in range(c, k) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c]:
                a = aug[i][c]
                aug[i] = [x - a * y for x, y in zip(aug[i], aug[c])]
    out = [[int(x) for x in row[k:]] for row in aug]
    assert all(x == int(x) for row in aug for x in row[k:])
    return out


# ---------------------------------------------------------------------------
# Fourier-Motzkin


def fm_feasible(ineqs: Sequence[tuple[Sequence[Fraction], Fraction]], nvars: int) -> list[Fraction] | None:
    """Find a rational ``x`` with ``a . x <= b`` for every ``(a, b)``, or None.

    Plain Fourier-Motzkin elimination with duplicate removal; a witness is
    rebuilt by back-substitution through the eliminated variables.
    """
    system = [([Fraction(x) for x in a], Fraction(b)) for a, b in ineqs]
    stages = []
    remaining = list(range(nvars))
    while remaining:
        # eliminate the variable that produces the fewest new rows
        best = None
        for v in remaining:
            pos = sum(1 for a, _ in system if a[v] > 0)
            neg = sum(1 for a, _ in system if a[v] < 0)
            cost = pos * neg - pos - neg
            if best is None or cost < best[0]:
                best = (cost, v)
        v = best[1]
        remaining.remove(v)
        P = [(a, b) for a, b in system if a[v] > 0]
        N = [(a, b) for a, b in system if a[v] < 0]
        Z = [(a, b) for a, b in system if a[v] == 0]
        stages.append((v, P, N))
        new = {}
        for a, b in Z:
            new[_fm_key(a, b)] = (a, b)
        for ap, bp in P:
            for an, bn in N:
                lp, ln = ap[v], -an[v]
                a = [x * ln + y * lp for x, y in zip(ap, an)]
                b = bp * ln + bn * lp
                a[v] = Fraction(0)
                if not any(a):
                    if b < 0:
                        return None
                    continue
                a, b = _fm_normalize(a, b)
                new[_fm_key(a, b)] = (a, b)
        system = list(new.values())
    if any(b < 0 for a, b in system):
        return None
    x = [Fraction(0)] * nvars
    for v, P, N in reversed(stages):
        lo, hi = None, None
        for a, b in P:
            val = (b - sum(a[j] * x[j] for j in range(nvars) if j != v)) / a[v]
            hi = val if hi is None or val < hi else hi
        for a, b in N:
            val = (b - sum(a[j] * x[j] for j in range(nvars) if j != v)) / a[v]
            lo = val if lo is None or val > lo else lo
        if lo is not None and hi is not None:
            if lo > hi:
                return None
            x[v] = (lo + hi) / 2
        elif lo is not None:
            x[v] = lo
        elif hi is not None:
            x[v] = hi
    return x


def _fm_normalize(a: list[Fraction], b: Fraction) -> tuple[list[Fraction], Fraction]:
    s = max(abs(x) for x in a)
    return [x / s for x in a], b / s


def _fm_key(a, b):
    return tuple(a) + (b,)


def positive_functional(L: LatticeBasis) -> Vector | None:
    """Integer vector ``w`` orthogonal to ``L`` with every coordinate > 0.

    Exists iff ``L`` is positive (Gordan's alternative). A few cheap
    candidates are tried first; otherwise ``y O >= 1`` is solved by
    Fourier-Motzkin over the orthogonal lattice basis ``O``.
    """
    O = orthogonal_lattice(L)
    rows = [list(r) for r in O.basis]
    if not rows:
        return None
    cands = [[sum(col) for col in zip(*rows)]]
    cands += [list(r) for r in rows] + [[-x for x in r] for r in rows]
    for c in cands:
        if all(x > 0 for x in c):
            return primitive(c)
    k = len(rows)
    ineqs = [([-Fraction(rows[i][j]) for i in range(k)], Fraction(-1)) for j in range(L.dim)]
    y = fm_feasible(ineqs, k)
    if y is None:
        return None
    w = [sum(y[i] * rows[i][j] for i in range(k)) for j in range(L.dim)]
    return integral_primitive(w)


def is_positive(L: LatticeBasis) -> bool:
    """True iff ``L`` meets ``N^m`` only in 0."""
    if L.rank == 0:
        return True
    if L.rank == L.dim:
        return False
    return positive_functional(L) is not None


def in_cone(target: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    """Exact test whether ``target`` is a nonnegative rational combination."""
    n = len(target)
    k = len(generators)
    if k == 0:
        return not any(target)
    # equalities sum_j lam_j g_j = target, parametrised over the free variables
    rows = [[generators[j][i] for j in range(k)] for i in range(n)]
    aug = [[Fraction(x) for x in rows[i]] + [Fraction(target[i])] for i in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                a = aug[i][c]
                aug[i] = [x - a * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][k] for i in range(r, n)):
        return False
    free = [c for c in range(k) if c not in pivots]
    # lam_pivot = rhs - sum coeff*lam_free >= 0 ; lam_free >= 0
    ineqs = []
    for i, c in enumerate(pivots):
        a = [aug[i][f] for f in free]
        ineqs.append((a, aug[i][k]))
    for t in range(len(free)):
        a = [Fraction(0)] * len(free)
        a[t] = Fraction(-1)
        ineqs.append((a, Fraction(0)))
    if not free:
        return all(b >= 0 for _, b in ineqs)
    return fm_feasible(ineqs, len(free)) is not None


def parse_matrix(text: str) -> IntegerMatrix:
    """Parse ``rows cols`` followed by row-major integers; ``#`` lines are comments."""
    tokens = []
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        tokens.extend(s.split())
    if len(tokens) < 2:
        raise ValueError("matrix header `rows cols` missing")
    nr, nc = int(tokens[0]), int(tokens[1])
    vals = [int(t) for t in tokens[2:]]
    if len(vals) != nr * nc:
        raise ValueError(f"expected {nr * nc} entries, found {len(vals)}")
    return IntegerMatrix([vals[i * nc:(i + 1) * nc] for i in range(nr)], nc)


def format_matrix(M: IntegerMatrix) -> str:
    return f"{M.rows} {M.cols}\n{M}\n"

