"""The tiles ``V_w = (id - w)(A)`` and the finite cones ``D_w = (id - w)(C)``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import exactgeo as eg
from .rootsys import RootSystem, build_root_system
from .weyl import (AffineWeylElement, WeylElement, enumerate_weyl, identity_element,
                   regular_elements)


class NotRegularError(ValueError):
    """The operation needs ``id - w`` to be invertible."""


def normals(w, rs: RootSystem | None = None) -> list[tuple]:
    """``n_{w,i} = (id - w^{-1})^{-1} alpha_i`` for ``i = 0..l``."""
    lin = w.linear if isinstance(w, AffineWeylElement) else w
    rs = build_root_system(rs or lin.system)
    Minv = eg.inverse(lin.matrix)
    A = eg.mat_sub(eg.identity(rs.rank), Minv)
    try:
        P = eg.inverse(A)
    except ZeroDivisionError:
        raise NotRegularError(f"id - w is singular for {lin.matrix}") from None
    return [eg.normalize_vector(eg.mat_vec(P, a)) for a in rs.affine_roots]


@dataclass(frozen=True)
class Tile:
    """One tile ``(id - w)(A)``.

    For regular ``w`` the tile is cut out by ``halfspaces``: pairs of a
    coordinate-form functional ``gram @ n_i`` and offset ``<n_i, lambda_w> + delta_i0``,
    so ``xi`` is inside iff every ``functional . xi + offset > 0``.  ``normals``
    holds the vectors ``n_i`` themselves.
    """

    element: AffineWeylElement
    dim: int
    vertices: tuple
    halfspaces: tuple = ()
    kernel_basis: tuple = ()
    volume_multiple: Fraction = Fraction(0)
    system: str = field(default="", repr=False)
    normals: tuple = ()

    @property
    def regular(self) -> bool:
        return not self.kernel_basis

    def facet_vertices(self, i: int) -> tuple:
        """Closure of the face ``V_{w,i}``: every vertex except the one opposite face ``i``."""
        return tuple(v for k, v in enumerate(self.vertices) if k != i)


def _vertices(rs, element, shift=None) -> tuple:
    M = element.matrix
    base = eg.identity(rs.rank) if shift is None else shift
    A = eg.mat_sub(base, M)
    return tuple(eg.normalize_vector(eg.vec_sub(eg.mat_vec(A, v), element.translation))
                 for v in rs.alcove_vertices)


def tile_of(w: AffineWeylElement) -> Tile:
    rs = build_root_system(w.system)
    l = rs.rank
    F = w.linear.fixed_matrix()
    ker = tuple(eg.kernel(F))
    verts = _vertices(rs, w)
    if ker:
        return Tile(w, l - len(ker), verts, (), ker, Fraction(0), rs.label)
    ns = normals(w, rs)
    hs = []
    for i, n in enumerate(ns):
        off = rs.inner(n, w.translation) + int(i == 0)
        hs.append((tuple(rs.lower(n)), Fraction(off)))
    return Tile(w, l, verts, tuple(hs), (), Fraction(eg.det(F)), rs.label, tuple(ns))


def contains(t: Tile, xi: Sequence) -> bool:
    """Exact membership of ``xi`` in the open tile."""
    xi = eg.as_fraction_vector(xi)
    if t.regular:
        return all(eg.dot(n, xi) + c > 0 for n, c in t.halfspaces)
    return _contains_parametric(t.element, xi)


def closure_contains(t: Tile, xi: Sequence) -> bool:
    """Membership in the closed tile."""
    xi = eg.as_fraction_vector(xi)
    if t.regular:
        return all(eg.dot(n, xi) + c >= 0 for n, c in t.halfspaces)
    rs = build_root_system(t.system)
    sol = eg.solve_linear(t.element.linear.fixed_matrix(), eg.vec_add(xi, t.element.translation))
    if not sol.consistent:
        return False
    return _meets_alcove(rs, sol, closed=True)


def preimage(w: AffineWeylElement, xi: Sequence) -> tuple:
    """``(id - w)^{-1} xi`` for regular ``w``."""
    P = eg.inverse(w.linear.fixed_matrix())
    return eg.normalize_vector(eg.mat_vec(P, eg.vec_add(eg.as_fraction_vector(xi), w.translation)))


def contains_by_preimage(w: AffineWeylElement, xi: Sequence) -> bool:
    """Membership via ``(id - w)^{-1}`` and the alcove walls; independent of the normals."""
    rs = build_root_system(w.system)
    if w.is_regular:
        return rs.in_alcove(preimage(w, xi))
    return _contains_parametric(w, eg.as_fraction_vector(xi))


def _meets_alcove(rs, sol: eg.LinearSolution, closed: bool = False) -> bool:
    p, K = sol.particular, sol.kernel
    rows = []
    for a, c in rs.alcove_halfspaces():
        low = rs.lower(a)
        rows.append((tuple(eg.dot(low, k) for k in K), eg.dot(low, p) + c))
    if not K:
        return all(c >= 0 if closed else c > 0 for _, c in rows)
    system = (eg.StrictSystem(weak=tuple(rows), dim=len(K)) if closed
              else eg.StrictSystem(strict=tuple(rows), dim=len(K)))
    return eg.strictly_feasible(system).feasible


def _contains_parametric(w: AffineWeylElement, xi) -> bool:
    rs = build_root_system(w.system)
    sol = eg.solve_linear(w.linear.fixed_matrix(), eg.vec_add(xi, w.translation))
    if not sol.consistent:
        return False
    return _meets_alcove(rs, sol)


def volume(t: Tile) -> Fraction:
    """``vol(V_w) / vol(A) = det(id - w)``."""
    if not t.regular:
        raise NotRegularError("volume multiple is defined for regular tiles only")
    return t.volume_multiple


@dataclass(frozen=True)
class FundamentalRegion:
    """``X``: the tiles indexed by the finite Weyl group."""

    system: str
    tiles: tuple
    regular_tiles: tuple

    def contains(self, xi) -> bool:
        return any(contains(t, xi) for t in self.tiles)

    def total_volume_multiple(self) -> Fraction:
        return sum((t.volume_multiple for t in self.regular_tiles), Fraction(0))


@lru_cache(maxsize=None)
def _fundamental_region(label: str, allow_large: bool) -> FundamentalRegion:
    rs = build_root_system(label)
    zero = tuple(0 for _ in range(rs.rank))
    tiles = tuple(tile_of(AffineWeylElement(zero, w, w.word))
                  for w in enumerate_weyl(rs, allow_large=allow_large))
    return FundamentalRegion(label, tiles, tuple(t for t in tiles if t.regular))


def fundamental_region(rs, allow_large: bool = False) -> FundamentalRegion:
    rs = build_root_system(rs)
    return _fundamental_region(rs.label, allow_large)


# --- finite cones -----------------------------------------------------------

@dataclass(frozen=True)
class Cone:
    """``D_w = (id - w)(C)`` for a finite element ``w``."""

    element: WeylElement
    system: eg.StrictSystem

    def contains(self, xi) -> bool:
        return cone_contains(self, xi)


def waldspurger_cone(w: WeylElement) -> Cone:
    rs = build_root_system(w.system)
    return Cone(w, rs.chamber_system())


def cone_contains(c: Cone, xi: Sequence) -> bool:
    """Does the solution set of ``(id - w) x = xi`` meet the open chamber?"""
    rs = build_root_system(c.element.system)
    sol = eg.solve_linear(c.element.fixed_matrix(), eg.as_fraction_vector(xi))
    if not sol.consistent:
        return False
    p, K = sol.particular, sol.kernel
    rows = []
    for a in rs.simple_roots:
        low = rs.lower(a)
        rows.append((tuple(eg.dot(low, k) for k in K), eg.dot(low, p)))
    if not K:
        return all(v > 0 for _, v in rows)
    return eg.strictly_feasible(eg.StrictSystem(strict=tuple(rows), dim=len(K))).feasible


def regular_weyl(rs) -> list[WeylElement]:
    return regular_elements(enumerate_weyl(rs))


def identity_tile(rs) -> Tile:
    return tile_of(identity_element(rs))
