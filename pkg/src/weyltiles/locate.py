"""Point location in the tiling by the affine Weyl group.

For any rational ``xi`` the unique ``w`` with ``xi`` in ``(id - w)(A)`` is
found by taking a regular tile whose closure holds ``xi``, reading off the
walls of the alcove that the preimage lies on, and correcting by the
element of the wall stabilizer that Waldspurger's lemma singles out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import exactgeo as eg
from .rootsys import build_root_system
from .tiles import contains, preimage, tile_of
from .weyl import (AffineWeylElement, InvariantViolation, WeylElement, compose,
                   enumerate_weyl, parabolic)


def _ceil_div(a: Fraction, d: int) -> int:
    return math.ceil(Fraction(a) / d)


def _floor_div(a: Fraction, d: int) -> int:
    return math.floor(Fraction(a) / d)


@dataclass(frozen=True)
class _Entry:
    w: WeylElement
    vmin: tuple
    vmax: tuple
    chart: tuple | None      # (L, d) integer wall map, invertible case
    range_rows: tuple | None  # integer left-kernel rows, singular case
    opnorm: Fraction


class _Scanner:
    """Per-element data for scanning ``(base - w)(A) - lambda`` over all ``w`` in ``W``.

    ``base`` is the identity for the main tiling and ``S`` for deformed tilings.
    """

    def __init__(self, label: str, base: tuple | None = None):
        rs = build_root_system(label)
        self.rs = rs
        self.base = eg.identity(rs.rank) if base is None else base
        self.scales = rs.coroot_scales
        self.marks = rs.marks
        self.entries = []
        for w in enumerate_weyl(rs):
            A = eg.mat_sub(self.base, w.matrix)
            imgs = [eg.mat_vec(A, v) for v in rs.alcove_vertices]
            vmin = tuple(min(p[j] for p in imgs) for j in range(rs.rank))
            vmax = tuple(max(p[j] for p in imgs) for j in range(rs.rank))
            opnorm = max(sum(abs(Fraction(a)) for a in row) for row in A)
            if eg.det(A) != 0:
                L, d = eg.integer_scaled(eg.mat_mul(rs.gram, eg.inverse(A)))
                self.entries.append(_Entry(w, vmin, vmax, (L, d), None, opnorm))
            else:
                rows = [eg.common_denominator(y)[0] for y in eg.left_kernel(A)]
                self.entries.append(_Entry(w, vmin, vmax, None, tuple(rows), opnorm))

    def lambdas(self, e: _Entry, xi: Sequence[Fraction]) -> Iterable[tuple[int, ...]]:
        """Coroot-lattice ``lambda`` with ``xi + lambda`` in the box around ``(base - w)(closed A)``."""
        lo = [_ceil_div(a - x, d) for a, x, d in zip(e.vmin, xi, self.scales)]
        hi = [_floor_div(b - x, d) for b, x, d in zip(e.vmax, xi, self.scales)]
        if any(a > b for a, b in zip(lo, hi)):
            return
        for m in eg.lattice_points_in_box(lo, hi):
            yield tuple(mi * d for mi, d in zip(m, self.scales))

    def norm_lambdas(self, e: _Entry, xi) -> Iterable[tuple[int, ...]]:
        """Coarser box ``|lambda|_inf <= ceil(opnorm * R_A + |xi|_inf)``."""
        R = max(max((abs(Fraction(a)) for a in v), default=0) for v in self.rs.alcove_vertices)
        B = math.ceil(e.opnorm * R + max(abs(Fraction(a)) for a in xi))
        lo = [-(B // d) for d in self.scales]
        hi = [B // d for d in self.scales]
        for m in eg.lattice_points_in_box(lo, hi):
            yield tuple(mi * d for mi, d in zip(m, self.scales))

    def walls(self, e: _Entry, u, q, lam) -> list[int]:
        """Integers with the signs of ``<alpha_i, x> + delta_i0`` at ``x = (base - w)^{-1}(xi + lam)``."""
        L, d = e.chart
        v = [ui + q * li for ui, li in zip(u, lam)]
        g = [sum(a * b for a, b in zip(row, v)) for row in L]
        return [q * d - sum(c * gi for c, gi in zip(self.marks, g))] + g

    def in_range(self, e: _Entry, u, q, lam) -> bool:
        v = [ui + q * li for ui, li in zip(u, lam)]
        return all(sum(a * b for a, b in zip(row, v)) == 0 for row in e.range_rows)

    def element(self, e: _Entry, lam) -> AffineWeylElement:
        return AffineWeylElement(tuple(lam), e.w, e.w.word)


@lru_cache(maxsize=None)
def scanner(label: str, base: tuple | None = None) -> _Scanner:
    return _Scanner(label, base)


def _prepare(rs, xi):
    rs = build_root_system(rs)
    xi = eg.as_fraction_vector(xi)
    if len(xi) != rs.rank:
        raise eg.DimensionError(f"point has {len(xi)} coordinates, {rs.label} has rank {rs.rank}")
    return rs, xi


def candidate_window(rs, xi: Sequence, bound: str = "vertex") -> list[AffineWeylElement]:
    """Every regular ``w`` whose closed tile contains ``xi``, in canonical order.

    ``bound="norm"`` scans the coarser row-sum box instead; both are complete.
    """
    rs, xi = _prepare(rs, xi)
    sc = scanner(rs.label)
    u, q = eg.common_denominator(xi)
    out = []
    for e in sc.entries:
        if e.chart is None:
            continue
        lams = sc.lambdas(e, xi) if bound == "vertex" else sc.norm_lambdas(e, xi)
        for lam in lams:
            if all(v >= 0 for v in sc.walls(e, u, q, lam)):
                out.append(sc.element(e, lam))
    return out


def tiles_containing(rs, xi: Sequence) -> list[AffineWeylElement]:
    """Brute force: every ``w`` (regular or not) with ``xi`` in the open tile ``V_w``."""
    rs, xi = _prepare(rs, xi)
    sc = scanner(rs.label)
    u, q = eg.common_denominator(xi)
    out = []
    for e in sc.entries:
        for lam in sc.lambdas(e, xi):
            if e.chart is not None:
                if all(v > 0 for v in sc.walls(e, u, q, lam)):
                    out.append(sc.element(e, lam))
            elif sc.in_range(e, u, q, lam):
                w = sc.element(e, lam)
                if contains(tile_of(w), xi):
                    out.append(w)
    return out


def _cone_rows(rs, I):
    return tuple((tuple(rs.lower(rs.affine_roots[i])), Fraction(0)) for i in I)


def waldspurger_candidates(w, I: Iterable[int]) -> list[AffineWeylElement]:
    """Every ``q`` in the stabilizer of ``A_I`` with ``ker(id - w q)`` meeting
    ``{x : <alpha_i, x> > 0 for i in I}`` (linear parts only)."""
    lin = w.linear if isinstance(w, AffineWeylElement) else w
    rs = build_root_system(lin.system)
    I = tuple(sorted(set(I)))
    cone = _cone_rows(rs, I)
    passing = []
    for q in parabolic(rs, I).elements:
        F = eg.mat_sub(eg.identity(rs.rank), eg.mat_mul(lin.matrix, q.matrix))
        system = eg.StrictSystem(strict=cone,
                                 equalities=tuple((row, 0) for row in F), dim=rs.rank)
        if eg.strictly_feasible(system).feasible:
            passing.append(q)
    return passing


def waldspurger_q(w, I: Iterable[int]) -> AffineWeylElement:
    """The unique wall-stabilizer element selected by Waldspurger's lemma."""
    found = waldspurger_candidates(w, I)
    if len(found) != 1:
        raise InvariantViolation(
            f"expected exactly one q for I={sorted(set(I))}, found {len(found)}")
    return found[0]


@dataclass(frozen=True)
class Location:
    element: AffineWeylElement
    tile_dim: int
    stabilizer: tuple
    via: AffineWeylElement


def locate_details(rs, xi: Sequence, cross_check: bool = False) -> Location:
    rs, xi = _prepare(rs, xi)
    candidates = candidate_window(rs, xi)
    if not candidates:
        raise InvariantViolation(f"no closed regular tile contains {xi}")
    results = []
    for w in candidates if cross_check else candidates[:1]:
        x = preimage(w, xi)
        I = tuple(i for i, v in enumerate(rs.alcove_values(x)) if v == 0)
        result = compose(w, waldspurger_q(w, I)) if I else w
        t = tile_of(result)
        if not contains(t, xi):
            raise InvariantViolation(f"located element does not contain {xi}")
        results.append(Location(result, t.dim, I, w))
    first = results[0]
    for r in results[1:]:
        if r.element != first.element:
            raise InvariantViolation(f"candidates disagree on the tile containing {xi}")
    return first


def locate(rs, xi: Sequence, cross_check: bool = False) -> AffineWeylElement:
    """The unique ``w`` in the affine Weyl group with ``xi`` in ``(id - w)(A)``."""
    return locate_details(rs, xi, cross_check).element
