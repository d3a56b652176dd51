"""Deformed tiles ``(S - w)(A)`` for a small endomorphism ``S``.

``S`` acts on simple-root coordinates.  At ``S = 0`` the tiles are the
alcoves ``-w(A)``, i.e. the Stiefel diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exactgeo as eg
from .locate import scanner
from .rootsys import build_root_system
from .tiles import Tile
from .weyl import AffineWeylElement, InvariantViolation, enumerate_weyl

NORM_BOUND = "norm_bound"
PATH_ASSERTED = "path_asserted"


class InadmissibleDeformationError(ValueError):
    pass


def adjoint(rs, S) -> tuple:
    """Adjoint for the Gram inner product, ``gram^{-1} S^T gram``."""
    Ginv = eg.inverse(rs.gram)
    return eg.normalize_matrix(eg.mat_mul(eg.mat_mul(Ginv, eg.transpose(S)), rs.gram))


def frobenius_norm_squared(rs, S) -> Fraction:
    """``tr(S* S)``, the squared Frobenius norm in an orthonormal frame."""
    P = eg.mat_mul(adjoint(rs, S), S)
    return Fraction(sum(P[i][i] for i in range(rs.rank)))


def is_positive_definite(M) -> bool:
    """Sylvester's criterion on a symmetric rational matrix."""
    n = len(M)
    return all(eg.det(tuple(tuple(M[i][j] for j in range(k)) for i in range(k))) > 0
               for k in range(1, n + 1))


def operator_norm_below_one(rs, S) -> bool:
    """Exact test of ``||S|| < 1`` for the operator norm of the Gram metric:
    ``gram - S^T gram S`` must be positive definite."""
    Q = eg.mat_sub(rs.gram, eg.mat_mul(eg.mat_mul(eg.transpose(S), rs.gram), S))
    return is_positive_definite(Q)


@dataclass(frozen=True)
class Deformation:
    system: str
    S: tuple
    admissibility_certificate: str
    frobenius_squared: Fraction = field(default=Fraction(0))
    operator_norm_below_one: bool = False

    @property
    def rank(self) -> int:
        return len(self.S)


def parse_matrix(text: str, rank: int | None = None) -> tuple:
    """``"1/2,0;0,1/2"`` -> rational matrix; a single entry means that multiple of the identity."""
    rows = [[Fraction(a.strip()) for a in r.split(",")] for r in text.strip().split(";") if r.strip()]
    if rank is not None and len(rows) == 1 and len(rows[0]) == 1 and rank > 1:
        c = rows[0][0]
        return tuple(tuple(c if i == j else Fraction(0) for j in range(rank)) for i in range(rank))
    width = {len(r) for r in rows}
    if len(width) != 1 or width.pop() != len(rows):
        raise ValueError(f"S must be a square matrix, got rows {rows}")
    if rank is not None and len(rows) != rank:
        raise ValueError(f"S has size {len(rows)}, expected {rank}")
    return tuple(tuple(r) for r in rows)


def scalar(rank: int, c) -> tuple:
    c = Fraction(c)
    return tuple(tuple(c if i == j else Fraction(0) for j in range(rank)) for i in range(rank))


def make_deformation(rs, S, assert_path: bool = False) -> Deformation:
    """Validate ``S``.  Without ``assert_path`` an exact certificate of ``||S|| < 1`` is required."""
    rs = build_root_system(rs)
    S = tuple(tuple(Fraction(a) for a in row) for row in S)
    if len(S) != rs.rank or any(len(row) != rs.rank for row in S):
        raise InadmissibleDeformationError(f"S must be {rs.rank}x{rs.rank}")
    for w in enumerate_weyl(rs):
        if eg.det(eg.mat_sub(S, w.matrix)) == 0:
            raise InadmissibleDeformationError(f"det(S - w) = 0 for w with word {w.word}")
    frob = frobenius_norm_squared(rs, S)
    below = frob < 1 or operator_norm_below_one(rs, S)
    if not assert_path and not below:
        raise InadmissibleDeformationError(
            "no exact certificate of ||S|| < 1; pass assert_path=True (CLI: --assert-path) "
            "if S is known to lie in the component of 0")
    cert = NORM_BOUND if below else PATH_ASSERTED
    return Deformation(rs.label, S, cert, frob, below)


def deformed_normals(d: Deformation, w) -> list[tuple]:
    """Inward normals ``(S* - w^{-1})^{-1} alpha_i`` of the faces of ``(S - w)(A)``."""
    lin = w.linear if isinstance(w, AffineWeylElement) else w
    rs = build_root_system(d.system)
    A = eg.mat_sub(adjoint(rs, d.S), eg.inverse(lin.matrix))
    try:
        P = eg.inverse(A)
    except ZeroDivisionError:
        raise InadmissibleDeformationError("S - w is singular") from None
    return [eg.normalize_vector(eg.mat_vec(P, a)) for a in rs.affine_roots]


def deformed_tile(d: Deformation, w: AffineWeylElement) -> Tile:
    rs = build_root_system(d.system)
    A = eg.mat_sub(d.S, w.matrix)
    verts = tuple(eg.normalize_vector(eg.vec_sub(eg.mat_vec(A, v), w.translation))
                  for v in rs.alcove_vertices)
    ns = deformed_normals(d, w)
    hs = tuple((tuple(rs.lower(n)), Fraction(rs.inner(n, w.translation) + int(i == 0)))
               for i, n in enumerate(ns))
    return Tile(w, rs.rank, verts, hs, (), abs(eg.det(A)), rs.label, tuple(ns))


def deformed_contains(t: Tile, xi: Sequence) -> bool:
    xi = eg.as_fraction_vector(xi)
    return all(eg.dot(n, xi) + c > 0 for n, c in t.halfspaces)


def deformed_closure_contains(t: Tile, xi: Sequence) -> bool:
    xi = eg.as_fraction_vector(xi)
    return all(eg.dot(n, xi) + c >= 0 for n, c in t.halfspaces)


def deformed_preimage(d: Deformation, w: AffineWeylElement, xi) -> tuple:
    A = eg.mat_sub(d.S, w.matrix)
    return eg.normalize_vector(eg.mat_vec(eg.inverse(A), eg.vec_add(eg.as_fraction_vector(xi),
                                                                    w.translation)))


@dataclass(frozen=True)
class DeformedLocation:
    """``open`` is the unique open tile holding the point, or None on a tile boundary."""

    open: AffineWeylElement | None
    closed: tuple

    @property
    def on_boundary(self) -> bool:
        return self.open is None


def deformed_locate(d: Deformation, xi: Sequence) -> DeformedLocation:
    rs = build_root_system(d.system)
    xi = eg.as_fraction_vector(xi)
    if len(xi) != rs.rank:
        raise eg.DimensionError(f"point has {len(xi)} coordinates, expected {rs.rank}")
    sc = scanner(rs.label, d.S)
    u, q = eg.common_denominator(xi)
    open_hits, closed_hits = [], []
    for e in sc.entries:
        for lam in sc.lambdas(e, xi):
            vals = sc.walls(e, u, q, lam)
            if all(v >= 0 for v in vals):
                w = sc.element(e, lam)
                closed_hits.append(w)
                if all(v > 0 for v in vals):
                    open_hits.append(w)
    if len(open_hits) > 1:
        raise InvariantViolation(f"{xi} lies in {len(open_hits)} open deformed tiles")
    return DeformedLocation(open_hits[0] if open_hits else None, tuple(closed_hits))


@dataclass(frozen=True)
class DetIdentityReport:
    holds: bool
    total: Fraction
    order: int
    all_positive: bool
    rows: tuple  # (word, det(S - w), det(id - S w^{-1}))


def abs_det_identity(rs, S) -> DetIdentityReport:
    """Check ``sum_w |det(S - w)| = |W|`` and ``det(id - S w^{-1}) > 0`` for every ``w``.

    ``S`` need not be admissible; a False result is a finding, not an error.
    """
    rs = build_root_system(rs)
    S = tuple(tuple(Fraction(a) for a in row) for row in S)
    I = eg.identity(rs.rank)
    rows = []
    total = Fraction(0)
    positive = True
    for w in enumerate_weyl(rs):
        a = eg.det(eg.mat_sub(S, w.matrix))
        b = eg.det(eg.mat_sub(I, eg.mat_mul(S, eg.inverse(w.matrix))))
        total += abs(a)
        positive = positive and b > 0
        rows.append((w.word, a, b))
    order = len(rows)
    return DetIdentityReport(total == order and positive, total, order, positive, tuple(rows))


def stiefel(rs) -> Deformation:
    rs = build_root_system(rs)
    return make_deformation(rs, scalar(rs.rank, 0))

