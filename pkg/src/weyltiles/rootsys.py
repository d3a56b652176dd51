"""Irreducible crystallographic root systems over the rationals.

Every vector lives in simple-root coordinates and pairs through the Gram
matrix ``gram[i][j] = <alpha_i, alpha_j>``, with long roots of squared
length 2.  Nodes follow Bourbaki numbering ``1..l``; the affine node is 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial

from . import exactgeo as eg

_LABEL = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")

# Published |W| for the finite types.
_WEYL_ORDER = {
    "A": lambda l: factorial(l + 1),
    "B": lambda l: 2 ** l * factorial(l),
    "C": lambda l: 2 ** l * factorial(l),
    "D": lambda l: 2 ** (l - 1) * factorial(l),
    "E": lambda l: {6: 51840, 7: 2903040, 8: 696729600}[l],
    "F": lambda l: 1152,
    "G": lambda l: 12,
}


class InvalidRootSystemError(ValueError):
    """The requested type label does not name an implemented irreducible root system."""

    def __init__(self, label, reason: str = ""):
        self.label = label
        msg = f"invalid root system label {label!r}"
        super().__init__(f"{msg}: {reason}" if reason else msg)


def parse_label(label: str) -> tuple[str, int]:
    m = _LABEL.match(str(label))
    if not m:
        raise InvalidRootSystemError(label, "expected a series letter A-G followed by the rank")
    series, l = m.group(1).upper(), int(m.group(2))
    minimum = {"A": 1, "B": 2, "C": 3, "D": 4}
    if series in minimum and l < minimum[series]:
        raise InvalidRootSystemError(label, f"{series}_l requires l >= {minimum[series]}")
    if series == "E" and l not in (6, 7, 8):
        raise InvalidRootSystemError(label, "E_l exists only for l = 6, 7, 8")
    if series == "F" and l != 4:
        raise InvalidRootSystemError(label, "F_l exists only for l = 4")
    if series == "G" and l != 2:
        raise InvalidRootSystemError(label, "G_l exists only for l = 2")
    return series, l


def _gram(series: str, l: int) -> tuple[tuple[Fraction, ...], ...]:
    half = Fraction(1, 2)
    G = [[Fraction(0)] * l for _ in range(l)]

    def link(i, j, value):
        G[i - 1][j - 1] = G[j - 1][i - 1] = Fraction(value)

    if series == "A":
        norms = [2] * l
        edges = [(i, i + 1, -1) for i in range(1, l)]
    elif series == "B":
        norms = [2] * (l - 1) + [1]
        edges = [(i, i + 1, -1) for i in range(1, l)]
    elif series == "C":
        norms = [1] * (l - 1) + [2]
        edges = [(i, i + 1, -half) for i in range(1, l - 1)] + [(l - 1, l, -1)]
    elif series == "D":
        norms = [2] * l
        edges = [(i, i + 1, -1) for i in range(1, l - 1)] + [(l - 2, l, -1)]
    elif series == "E":
        norms = [2] * l
        edges = [(1, 3, -1), (2, 4, -1)] + [(i, i + 1, -1) for i in range(3, l)]
    elif series == "F":
        norms = [2, 2, 1, 1]
        edges = [(1, 2, -1), (2, 3, -1), (3, 4, -half)]
    else:  # G2, alpha_1 short
        norms = [Fraction(2, 3), 2]
        edges = [(1, 2, -1)]
    for i, n in enumerate(norms):
        G[i][i] = Fraction(n)
    for i, j, v in edges:
        link(i, j, v)
    return tuple(tuple(r) for r in G)


@dataclass(frozen=True)
class Root:
    """A root by its simple-root coefficients."""

    coeffs: tuple[int, ...]
    is_long: bool

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def vector(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a) for a in self.coeffs)


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    gram: tuple = field(repr=False)
    positive_roots: tuple = field(repr=False)

    @property
    def label(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def series_rank(self) -> tuple[str, int]:
        return self.series, self.rank

    # -- pairings -------------------------------------------------------------
    def inner(self, u, v) -> Fraction:
        G = self.gram
        return sum(u[i] * G[i][j] * v[j] for i in range(self.rank) for j in range(self.rank)
                   if u[i] and v[j])

    def norm2(self, v) -> Fraction:
        return self.inner(v, v)

    def lower(self, v) -> tuple[Fraction, ...]:
        """Coefficients of the functional ``x -> <v, x>`` in coordinate form."""
        return eg.mat_vec(self.gram, v)

    def coroot(self, v) -> tuple[Fraction, ...]:
        return eg.normalize_vector(eg.vec_scale(Fraction(2) / self.norm2(v), v))

    @cached_property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return eg.identity(self.rank)

    @cached_property
    def simple_coroots(self) -> tuple[tuple, ...]:
        return tuple(self.coroot(a) for a in self.simple_roots)

    @cached_property
    def coroot_scales(self) -> tuple[int, ...]:
        """``alpha_i^vee = d_i alpha_i``; coroot-lattice vectors have ``x_i`` divisible by ``d_i``."""
        return tuple(int(Fraction(2) / self.gram[i][i]) for i in range(self.rank))

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=lambda r: (r.height, r.coeffs))

    @property
    def lowest_root(self) -> tuple[int, ...]:
        return tuple(-a for a in self.highest_root.coeffs)

    @cached_property
    def marks(self) -> tuple[int, ...]:
        return self.highest_root.coeffs

    @cached_property
    def coweights(self) -> tuple[tuple[Fraction, ...], ...]:
        """Fundamental coweights, ``<alpha_i, coweights[j]> = delta_ij``."""
        inv = eg.inverse(self.gram)
        return tuple(eg.normalize_vector(col) for col in eg.transpose(inv))

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        total = [Fraction(0)] * self.rank
        for r in self.positive_roots:
            for i, a in enumerate(r.coeffs):
                total[i] += a
        return eg.normalize_vector(t / 2 for t in total)

    @cached_property
    def dual_coxeter(self) -> int:
        h = 1 + self.inner(self.highest_root.coeffs, self.rho)
        assert h.denominator == 1
        return int(h)

    @cached_property
    def alcove_vertices(self) -> tuple[tuple, ...]:
        """Vertex ``k`` is opposite the face ``k``; vertex 0 is the origin."""
        zero = tuple(0 for _ in range(self.rank))
        verts = [zero]
        for w, c in zip(self.coweights, self.marks):
            verts.append(eg.normalize_vector(Fraction(a) / c for a in w))
        return tuple(verts)

    @cached_property
    def base_point(self) -> tuple[Fraction, ...]:
        """``rho / h^vee``, an interior point of the alcove."""
        return eg.normalize_vector(Fraction(a) / self.dual_coxeter for a in self.rho)

    @cached_property
    def weyl_order(self) -> int:
        return _WEYL_ORDER[self.series](self.rank)

    @cached_property
    def affine_roots(self) -> tuple[tuple, ...]:
        """``alpha_0, alpha_1, ..., alpha_l`` with ``alpha_0 = -alpha_max``."""
        return (self.lowest_root,) + self.simple_roots

    @cached_property
    def extended_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        """``a_ij = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>`` over nodes ``0..l``."""
        roots = self.affine_roots
        return tuple(tuple(2 * self.inner(a, b) / self.norm2(b) for b in roots) for a in roots)

    # -- alcove ---------------------------------------------------------------
    def alcove_halfspaces(self) -> list[tuple[tuple, Fraction]]:
        """``(alpha_i, delta_i0)`` for ``i = 0..l``; ``x`` is in the alcove iff every
        ``<alpha_i, x> + delta_i0 > 0``."""
        return [(a, Fraction(int(i == 0))) for i, a in enumerate(self.affine_roots)]

    def alcove_values(self, x) -> tuple[Fraction, ...]:
        """``<alpha_i, x> + delta_i0`` for ``i = 0..l``."""
        g = self.lower(x)
        vals = [Fraction(1) - sum(c * gi for c, gi in zip(self.marks, g))]
        vals.extend(Fraction(gi) for gi in g)
        return tuple(vals)

    def in_alcove(self, x) -> bool:
        return all(v > 0 for v in self.alcove_values(x))

    def in_closed_alcove(self, x) -> bool:
        return all(v >= 0 for v in self.alcove_values(x))

    def alcove_system(self) -> eg.StrictSystem:
        """The open alcove as a coordinate-form strict system."""
        return eg.StrictSystem(
            strict=tuple((self.lower(a), c) for a, c in self.alcove_halfspaces()),
            dim=self.rank)

    def chamber_system(self) -> eg.StrictSystem:
        return eg.StrictSystem(strict=tuple((self.lower(a), 0) for a in self.simple_roots),
                               dim=self.rank)

    @cached_property
    def alcove_volume_squared(self) -> Fraction:
        """``vol(A)^2`` for the Gram metric."""
        vs = self.alcove_vertices[1:]
        d = eg.det(tuple(tuple(v) for v in vs))
        return eg.det(self.gram) * d * d / factorial(self.rank) ** 2

    def in_coroot_lattice(self, v) -> bool:
        return all(Fraction(a).denominator == 1 and int(a) % d == 0
                   for a, d in zip(v, self.coroot_scales))

    def to_coroot_coords(self, v) -> tuple:
        return eg.normalize_vector(Fraction(a) / d for a, d in zip(v, self.coroot_scales))

    def from_coroot_coords(self, m) -> tuple:
        return eg.normalize_vector(Fraction(a) * d for a, d in zip(m, self.coroot_scales))

    def __reduce__(self):
        return build_root_system, (self.label,)


def _reflect_root(gram, scales, i, v):
    # s_i(v) = v - <alpha_i^vee, v> alpha_i, using <alpha_i^vee, v> = d_i <alpha_i, v>
    pairing = scales[i] * sum(gram[i][j] * v[j] for j in range(len(v)))
    assert pairing.denominator == 1
    out = list(v)
    out[i] -= int(pairing)
    return tuple(out)


@lru_cache(maxsize=None)
def _build(series: str, l: int) -> RootSystem:
    gram = _gram(series, l)
    scales = tuple(Fraction(2) / gram[i][i] for i in range(l))
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(l):
                u = _reflect_root(gram, scales, i, v)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    positive = []
    for v in seen:
        if all(a >= 0 for a in v):
            n2 = sum(v[i] * gram[i][j] * v[j] for i in range(l) for j in range(l))
            positive.append(Root(v, n2 == 2))
    positive.sort(key=lambda r: (r.height, r.coeffs))
    return RootSystem(series, l, gram, tuple(positive))


def build_root_system(label) -> RootSystem:
    """Root system for a label such as ``"G2"``, ``"A3"`` or ``"F4"``."""
    if isinstance(label, RootSystem):
        return label
    series, l = parse_label(label)
    return _build(series, l)
