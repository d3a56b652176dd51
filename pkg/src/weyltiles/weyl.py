"""Finite and affine Weyl group elements.

Linear parts are integer matrices acting on simple-root coordinates.  An
affine element is ``x -> matrix @ x + translation`` with the translation in
the coroot lattice, also written in simple-root coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import exactgeo as eg
from .rootsys import RootSystem, build_root_system

DEFAULT_CAP = 10 ** 6
PARABOLIC_CAP = 1152


class GroupTooLargeError(RuntimeError):
    """Enumeration would exceed the configured element cap."""


class MismatchedSystemsError(ValueError):
    pass


class InvariantViolation(AssertionError):
    """An exact check that a theorem guarantees has failed."""


def _matmul(A, B):
    if all(type(a) is int for row in A for a in row) and all(type(b) is int for row in B for b in row):
        cols = tuple(zip(*B))
        return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)
    return eg.normalize_matrix(eg.mat_mul(A, B))


@dataclass(frozen=True)
class WeylElement:
    system: str
    matrix: tuple
    word: tuple = field(default=(), compare=False)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def apply(self, x: Sequence) -> tuple:
        return eg.normalize_vector(eg.mat_vec(self.matrix, x))

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        _check_same(self.system, other.system)
        return WeylElement(self.system, _matmul(self.matrix, other.matrix),
                           _cancel(self.word + other.word))

    def inverse(self) -> "WeylElement":
        return WeylElement(self.system, eg.normalize_matrix(eg.inverse(self.matrix)),
                           tuple(reversed(self.word)))

    @property
    def is_identity(self) -> bool:
        return self.matrix == eg.identity(self.rank)

    def fixed_matrix(self) -> tuple:
        """``id - w``."""
        return eg.mat_sub(eg.identity(self.rank), self.matrix)

    def det_id_minus(self) -> Fraction:
        return eg.det(self.fixed_matrix())

    @property
    def is_regular(self) -> bool:
        return self.det_id_minus() != 0

    def sort_key(self):
        return (len(self.word), tuple(itertools.chain.from_iterable(self.matrix)))


@dataclass(frozen=True)
class AffineWeylElement:
    translation: tuple
    linear: WeylElement
    word: tuple = field(default=(), compare=False)

    @property
    def system(self) -> str:
        return self.linear.system

    @property
    def rank(self) -> int:
        return self.linear.rank

    @property
    def matrix(self) -> tuple:
        return self.linear.matrix

    def apply(self, x: Sequence) -> tuple:
        return eg.normalize_vector(eg.vec_add(eg.mat_vec(self.matrix, x), self.translation))

    def __matmul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        return compose(self, other)

    def inverse(self) -> "AffineWeylElement":
        return inverse(self)

    @property
    def is_regular(self) -> bool:
        return self.linear.is_regular

    def sort_key(self):
        return (len(self.word), tuple(self.translation),
                tuple(itertools.chain.from_iterable(self.matrix)))

    def canonical_key(self):
        return (tuple(self.translation), tuple(itertools.chain.from_iterable(self.matrix)))


def _cancel(word: tuple) -> tuple:
    """Drop adjacent repeated generators (``s_i s_i = 1``)."""
    out: list = []
    for i in word:
        if out and out[-1] == i:
            out.pop()
        else:
            out.append(i)
    return tuple(out)


def _check_same(a: str, b: str) -> None:
    if a != b:
        raise MismatchedSystemsError(f"elements belong to different root systems: {a} vs {b}")


def compose(a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
    """``x -> a(b(x))``, i.e. ``(l1, u)(l2, v) = (l1 + u l2, u v)``."""
    _check_same(a.system, b.system)
    lam = eg.normalize_vector(eg.vec_add(a.translation, eg.mat_vec(a.matrix, b.translation)))
    return AffineWeylElement(lam, a.linear @ b.linear, _cancel(a.word + b.word))


def inverse(a: AffineWeylElement) -> AffineWeylElement:
    lin = a.linear.inverse()
    lam = eg.normalize_vector(tuple(-t for t in eg.mat_vec(lin.matrix, a.translation)))
    return AffineWeylElement(lam, lin, tuple(reversed(a.word)))


def apply(a, x: Sequence) -> tuple:
    return a.apply(x)


def reflection_matrix(rs: RootSystem, root: Sequence) -> tuple:
    """Matrix of ``x -> x - <root, x> root^vee``."""
    cor = rs.coroot(root)
    low = rs.lower(root)
    n = rs.rank
    M = tuple(tuple(int(i == j) - cor[i] * low[j] for j in range(n)) for i in range(n))
    M = eg.normalize_matrix(M)
    assert all(isinstance(a, int) for row in M for a in row)
    return M


def identity_element(rs) -> AffineWeylElement:
    rs = build_root_system(rs)
    zero = tuple(0 for _ in range(rs.rank))
    return AffineWeylElement(zero, WeylElement(rs.label, eg.identity(rs.rank)))


def finite_element(rs, matrix, word=()) -> WeylElement:
    rs = build_root_system(rs)
    return WeylElement(rs.label, eg.normalize_matrix(matrix), tuple(word))


def simple_reflection(rs, i: int) -> AffineWeylElement:
    """``s_i : x -> x - (<alpha_i, x> + delta_i0) alpha_i^vee`` for ``0 <= i <= l``."""
    rs = build_root_system(rs)
    if not 0 <= i <= rs.rank:
        raise IndexError(f"reflection index {i} outside 0..{rs.rank}")
    root = rs.affine_roots[i]
    M = reflection_matrix(rs, root)
    if i == 0:
        lam = rs.coroot(rs.highest_root.coeffs)
    else:
        lam = tuple(0 for _ in range(rs.rank))
    return AffineWeylElement(tuple(lam), WeylElement(rs.label, M, () if i == 0 else (i,)), (i,))


def root_reflection(rs, root: Sequence) -> WeylElement:
    rs = build_root_system(rs)
    return WeylElement(rs.label, reflection_matrix(rs, root))


def translation(rs, lam: Sequence) -> AffineWeylElement:
    rs = build_root_system(rs)
    lam = eg.normalize_vector(lam)
    if not rs.in_coroot_lattice(lam):
        raise ValueError(f"{lam} is not in the coroot lattice of {rs.label}")
    return AffineWeylElement(lam, WeylElement(rs.label, eg.identity(rs.rank)))


def affine(rs, lam: Sequence, w: WeylElement) -> AffineWeylElement:
    return compose(translation(rs, lam), AffineWeylElement(tuple(0 for _ in lam), w, ()))


def _bfs(generators: list, identity, multiply, cap: int, key) -> list:
    seen = {key(identity): identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = multiply(g, s)
                k = key(h)
                if k not in seen:
                    seen[k] = h
                    nxt.append(h)
                    if len(seen) > cap:
                        raise GroupTooLargeError(
                            f"group exceeds the cap of {cap} elements; "
                            "pass allow_large=True (CLI: --allow-large) to raise the cap")
        frontier = nxt
    return list(seen.values())


@lru_cache(maxsize=None)
def _enumerate_weyl(label: str, cap: int) -> tuple:
    rs = build_root_system(label)
    gens = [WeylElement(label, reflection_matrix(rs, a), (i + 1,))
            for i, a in enumerate(rs.simple_roots)]
    ident = WeylElement(label, eg.identity(rs.rank))
    elems = _bfs(gens, ident, lambda g, s: g @ s, cap, lambda g: g.matrix)
    elems.sort(key=WeylElement.sort_key)
    return tuple(elems)


def enumerate_weyl(rs, cap: int = DEFAULT_CAP, allow_large: bool = False) -> list[WeylElement]:
    """All elements of ``W`` in canonical order (word length, then matrix entries)."""
    rs = build_root_system(rs)
    if allow_large:
        cap = max(cap, rs.weyl_order)
    if rs.weyl_order > cap:
        raise GroupTooLargeError(
            f"|W({rs.label})| = {rs.weyl_order} exceeds the cap of {cap}; "
            "pass allow_large=True (CLI: --allow-large) to enumerate it")
    return list(_enumerate_weyl(rs.label, cap))


def regular_elements(group: Iterable) -> list:
    """Elements whose linear part has no nonzero fixed vector."""
    return [g for g in group if g.is_regular]


@dataclass(frozen=True)
class ParabolicSubgroup:
    index_set: tuple
    elements: tuple

    def __len__(self) -> int:
        return len(self.elements)

    def linear_parts(self) -> list[WeylElement]:
        return [e.linear for e in self.elements]


@lru_cache(maxsize=None)
def _parabolic(label: str, index_set: tuple, cap: int) -> ParabolicSubgroup:
    rs = build_root_system(label)
    gens = [simple_reflection(rs, i) for i in index_set]
    elems = _bfs(gens, identity_element(rs), compose, cap, AffineWeylElement.canonical_key)
    elems.sort(key=AffineWeylElement.sort_key)
    return ParabolicSubgroup(index_set, tuple(elems))


def parabolic(rs, I: Iterable[int], cap: int | None = None) -> ParabolicSubgroup:
    """The subgroup generated by ``s_i, i in I`` for a proper subset ``I`` of ``0..l``."""
    rs = build_root_system(rs)
    I = tuple(sorted(set(I)))
    if any(not 0 <= i <= rs.rank for i in I):
        raise IndexError(f"index set {I} not inside 0..{rs.rank}")
    if len(I) == rs.rank + 1:
        raise ValueError("the full index set generates the infinite affine Weyl group")
    if cap is None:
        cap = max(PARABOLIC_CAP, rs.weyl_order)
    return _parabolic(rs.label, I, cap)


@dataclass(frozen=True)
class DiagramAutomorphism:
    """Symmetry ``tau`` of the extended Dynkin diagram with its Euclidean map ``g``."""

    system: str
    node_permutation: tuple
    matrix: tuple
    translation: tuple

    def apply(self, x: Sequence) -> tuple:
        return eg.normalize_vector(eg.vec_add(eg.mat_vec(self.matrix, x), self.translation))

    def inverse_apply(self, y: Sequence) -> tuple:
        inv = eg.inverse(self.matrix)
        return eg.normalize_vector(eg.mat_vec(inv, eg.vec_sub(y, self.translation)))

    def conjugate(self, w: AffineWeylElement) -> AffineWeylElement:
        """``g w g^{-1}``."""
        R, t = self.matrix, self.translation
        Rinv = eg.inverse(R)
        M = eg.normalize_matrix(eg.mat_mul(eg.mat_mul(R, w.matrix), Rinv))
        # g w g^-1 (y) = R M R^-1 (y - t) + R lam + t
        lam = eg.vec_add(eg.vec_sub(eg.mat_vec(R, w.translation), eg.mat_vec(M, t)), t)
        return AffineWeylElement(eg.normalize_vector(lam), WeylElement(w.system, M),
                                 tuple(self.node_permutation[i] for i in w.word))


def _cartan_permutations(C) -> list[tuple]:
    n = len(C)
    out = []

    def extend(perm, used):
        k = len(perm)
        if k == n:
            out.append(tuple(perm))
            return
        for c in range(n):
            if c in used or C[c][c] != C[k][k]:
                continue
            if all(C[perm[j]][c] == C[j][k] and C[c][perm[j]] == C[k][j] for j in range(k)):
                perm.append(c)
                used.add(c)
                extend(perm, used)
                perm.pop()
                used.discard(c)

    extend([], set())
    return out


def diagram_automorphisms(rs) -> list[DiagramAutomorphism]:
    """All symmetries of the extended Dynkin diagram, realised as alcove isometries."""
    rs = build_root_system(rs)
    C = rs.extended_cartan
    verts = rs.alcove_vertices
    l = rs.rank
    B = eg.transpose(tuple(verts[1:]))  # columns are the nonzero vertices
    Binv = eg.inverse(B)
    result = []
    for tau in _cartan_permutations(C):
        t = verts[tau[0]]
        img = eg.transpose(tuple(eg.vec_sub(verts[tau[i]], t) for i in range(1, l + 1)))
        R = eg.normalize_matrix(eg.mat_mul(img, Binv))
        if eg.mat_mul(eg.mat_mul(eg.transpose(R), rs.gram), R) != rs.gram:
            raise InvariantViolation(f"diagram symmetry {tau} of {rs.label} is not an isometry")
        g = DiagramAutomorphism(rs.label, tau, R, tuple(t))
        for i in range(l + 1):
            if g.conjugate(simple_reflection(rs, i)) != simple_reflection(rs, tau[i]):
                raise InvariantViolation(f"g s_{i} g^-1 != s_{tau[i]} for {rs.label}")
        result.append(g)
    result.sort(key=lambda g: g.node_permutation)
    return result


def affine_window(rs, radius: int = 1, group: Sequence[WeylElement] | None = None
                  ) -> list[AffineWeylElement]:
    """Elements ``(lambda, w)`` with coroot coordinates of ``lambda`` in ``[-radius, radius]``."""
    rs = build_root_system(rs)
    group = enumerate_weyl(rs) if group is None else group
    out = []
    for m in eg.lattice_points_in_box([-radius] * rs.rank, [radius] * rs.rank):
        lam = rs.from_coroot_coords(m)
        for w in group:
            out.append(AffineWeylElement(lam, w, w.word))
    return out


def permutes_roots(rs, w: WeylElement) -> bool:
    roots = {r.coeffs for r in rs.positive_roots}
    roots |= {tuple(-a for a in r) for r in roots}
    return {w.apply(r) for r in roots} == roots
