"""Exact rational linear algebra and strict polyhedral feasibility.

Vectors are tuples of ``Fraction`` (or ``int``), matrices are tuples of
row tuples.  Nothing in this module touches floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Sequence

Vector = tuple
Matrix = tuple

MAX_FEASIBILITY_DIM = 8


class DimensionError(ValueError):
    """Raised on inconsistent or unsupported dimensions."""


def as_fraction_vector(v) -> Vector:
    return tuple(Fraction(a) for a in v)


def as_matrix(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple((0,) * m for _ in range(n))


def shape(M: Matrix) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M)) if M else ()


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(c, A: Matrix) -> Matrix:
    return tuple(tuple(c * a for a in row) for row in A)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise DimensionError(f"cannot multiply {shape(A)} by {shape(B)}")
    cols = tuple(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def mat_vec(A: Matrix, v: Sequence) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in A)


def vec_add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def normalize_matrix(M: Matrix) -> Matrix:
    """Replace integral ``Fraction`` entries by ``int`` so equal matrices hash equal."""
    return tuple(tuple(_simplify(a) for a in row) for row in M)


def normalize_vector(v: Sequence) -> Vector:
    return tuple(_simplify(a) for a in v)


def _simplify(a):
    a = Fraction(a)
    return a.numerator if a.denominator == 1 else a


def _integer_rows(rows) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in rows:
        row = [Fraction(a) for a in row]
        m = 1
        for a in row:
            m = lcm(m, a.denominator)
        out.append([int(a * m) for a in row])
    return out


def det(M: Matrix) -> Fraction:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionError("det requires a square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in M:
        row = [Fraction(a) for a in row]
        m = 1
        for a in row:
            m = lcm(m, a.denominator)
        scale /= m
        rows.append([int(a * m) for a in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1] * scale


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; integer-scaled forward pass keeps entries small."""
    A = [[Fraction(a) for a in r] for r in _integer_rows(rows)]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A, pivots


def rank(M: Matrix) -> int:
    if not M:
        return 0
    return len(_echelon([list(r) for r in M])[1])


def kernel(M: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of the right null space of ``M``."""
    if not M:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    n = len(M[0])
    R, pivots = _echelon([list(r) for r in M])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def left_kernel(M: Matrix) -> list[Vector]:
    """Basis of ``{y : y^T M = 0}``; ``b`` is in the range of ``M`` iff every such ``y`` kills it."""
    return kernel(transpose(M), len(M))


def inverse(M: Matrix) -> Matrix:
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionError("inverse requires a square matrix")
    aug = [[Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    R, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)


@dataclass(frozen=True)
class LinearSolution:
    """Solution set ``particular + span(kernel)``; ``particular`` is None when inconsistent."""

    particular: Vector | None
    kernel: tuple = ()

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def kind(self) -> str:
        if self.particular is None:
            return "inconsistent"
        return "unique" if not self.kernel else "parametric"


def solve_linear(M: Matrix, b: Sequence) -> LinearSolution:
    nrows, ncols = shape(M)
    if len(b) != nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {nrows}")
    if nrows == 0:
        return LinearSolution(tuple(Fraction(0) for _ in range(ncols)), tuple(kernel(M, ncols)))
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = _echelon(aug)
    if ncols in pivots:
        return LinearSolution(None, ())
    x = [Fraction(0)] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return LinearSolution(tuple(x), tuple(basis))


def lattice_points_in_box(lo: Sequence[int], hi: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Integer points of the box ``lo <= p <= hi``, lexicographic order."""
    if len(lo) != len(hi):
        raise DimensionError("box corners differ in length")
    ranges = [range(int(a), int(b) + 1) for a, b in zip(lo, hi)]
    return itertools.product(*ranges)


# --- strict feasibility -------------------------------------------------------

@dataclass(frozen=True)
class StrictSystem:
    """Constraints ``<n, x> + c > 0`` (strict), ``>= 0`` (weak) and ``= 0`` (equalities).

    Pairings are plain coordinate dot products.
    """

    strict: tuple = ()
    equalities: tuple = ()
    weak: tuple = ()
    dim: int | None = None

    def ambient_dim(self) -> int:
        if self.dim is not None:
            return self.dim
        for group in (self.strict, self.equalities, self.weak):
            if group:
                return len(group[0][0])
        return 0

    def satisfied_by(self, x: Sequence) -> bool:
        return (all(dot(n, x) + c > 0 for n, c in self.strict)
                and all(dot(n, x) + c >= 0 for n, c in self.weak)
                and all(dot(n, x) + c == 0 for n, c in self.equalities))


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Vector | None = None

    def __bool__(self) -> bool:
        return self.feasible


@dataclass
class _Row:
    coeffs: list
    const: Fraction
    strict: bool = field(default=False)


def _canonical(row: _Row):
    """Scale by the reciprocal of the largest absolute coefficient; None for constant rows."""
    m = Fraction(max((abs(a) for a in row.coeffs), default=0))
    if m == 0:
        return None
    return _Row([a / m for a in row.coeffs], row.const / m, row.strict)


def _dedupe(rows: list[_Row]) -> list[_Row]:
    best: dict[tuple, _Row] = {}
    for r in rows:
        key = tuple(r.coeffs)
        cur = best.get(key)
        # smaller constant is tighter; strict wins ties
        if cur is None or r.const < cur.const or (r.const == cur.const and r.strict):
            best[key] = r
    return list(best.values())


def _constant_ok(row: _Row) -> bool:
    return row.const > 0 if row.strict else row.const >= 0


def _fm_feasible(rows: list[_Row], nvars: int) -> Vector | None:
    """Fourier-Motzkin elimination with back substitution; returns a witness or None."""
    stages: list[list[_Row]] = []
    current = rows
    for j in range(nvars):
        cleaned = []
        for r in current:
            c = _canonical(r)
            if c is None:
                if not _constant_ok(r):
                    return None
            else:
                cleaned.append(c)
        current = _dedupe(cleaned)
        stages.append(current)
        pos = [r for r in current if r.coeffs[j] > 0]
        neg = [r for r in current if r.coeffs[j] < 0]
        nxt = [r for r in current if r.coeffs[j] == 0]
        for p in pos:
            for q in neg:
                a, b = p.coeffs[j], -q.coeffs[j]
                nxt.append(_Row([b * x + a * y for x, y in zip(p.coeffs, q.coeffs)],
                                b * p.const + a * q.const, p.strict or q.strict))
        current = nxt
    for r in current:
        if not _constant_ok(r):
            return None

    x = [Fraction(0)] * nvars
    for j in reversed(range(nvars)):
        lo = hi = None
        lo_strict = hi_strict = False
        for r in stages[j]:
            a = r.coeffs[j]
            rest = r.const + sum(r.coeffs[k] * x[k] for k in range(j + 1, nvars))
            if a == 0:
                continue
            bound = -Fraction(rest) / a
            if a > 0:
                if lo is None or bound > lo or (bound == lo and r.strict):
                    lo, lo_strict = bound, r.strict
            else:
                if hi is None or bound < hi or (bound == hi and r.strict):
                    hi, hi_strict = bound, r.strict
        x[j] = _pick(lo, lo_strict, hi, hi_strict)
    return tuple(x)


def _pick(lo, lo_strict, hi, hi_strict) -> Fraction:
    """A value inside the (nonempty) interval; prefers 0, then the midpoint."""

    def inside(v):
        above = lo is None or v > lo or (v == lo and not lo_strict)
        below = hi is None or v < hi or (v == hi and not hi_strict)
        return above and below

    if inside(Fraction(0)):
        return Fraction(0)
    if hi is None:
        return lo + 1
    if lo is None:
        return hi - 1
    if lo == hi:
        return lo
    return (lo + hi) / 2


def strictly_feasible(system: StrictSystem) -> Feasibility:
    """Decide exactly whether the system has a solution and return one if so."""
    n = system.ambient_dim()
    if n > MAX_FEASIBILITY_DIM:
        raise DimensionError(f"feasibility is limited to dimension {MAX_FEASIBILITY_DIM}, got {n}")
    for group in (system.strict, system.equalities, system.weak):
        for normal, _ in group:
            if len(normal) != n:
                raise DimensionError("constraint normal has the wrong dimension")

    if system.equalities:
        E = tuple(tuple(nrm) for nrm, _ in system.equalities)
        sol = solve_linear(E, [-Fraction(c) for _, c in system.equalities])
        if not sol.consistent:
            return Feasibility(False)
        p, K = sol.particular, sol.kernel
    else:
        p = tuple(Fraction(0) for _ in range(n))
        K = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))

    k = len(K)
    rows = []
    for group, strict in ((system.strict, True), (system.weak, False)):
        for normal, c in group:
            coeffs = [Fraction(dot(normal, kv)) for kv in K]
            rows.append(_Row(coeffs, Fraction(dot(normal, p)) + Fraction(c), strict))
    t = _fm_feasible(rows, k)
    if t is None:
        return Feasibility(False)
    x = tuple(pi + sum(tj * kv[i] for tj, kv in zip(t, K)) for i, pi in enumerate(p))
    assert system.satisfied_by(x), "feasibility witness failed back-check"
    return Feasibility(True, x)


def common_denominator(v: Sequence) -> tuple[tuple[int, ...], int]:
    """Write ``v`` as ``u / q`` with integer ``u`` and positive ``q``."""
    q = 1
    for a in v:
        q = lcm(q, Fraction(a).denominator)
    return tuple(int(Fraction(a) * q) for a in v), q


def integer_scaled(M: Matrix) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Write ``M`` as ``N / d`` with integer ``N`` and positive ``d``."""
    d = 1
    for row in M:
        for a in row:
            d = lcm(d, Fraction(a).denominator)
    N = tuple(tuple(int(Fraction(a) * d) for a in row) for row in M)
    g = 0
    for row in N:
        for a in row:
            g = gcd(g, a)
    g = gcd(g, d) or 1
    return tuple(tuple(a // g for a in row) for row in N), d // g
