"""Exact invariant suites over the tilings, reported as pass/fail with witnesses."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import exactgeo as eg
from . import serialize as ser
from .deformed import (abs_det_identity, deformed_contains, deformed_locate, deformed_preimage,
                       deformed_tile, make_deformation, scalar)
from .locate import candidate_window, locate, tiles_containing, waldspurger_candidates
from .rootsys import build_root_system
from .tiles import (closure_contains, cone_contains, contains, fundamental_region, normals,
                    tile_of, waldspurger_cone)
from .weyl import (AffineWeylElement, _matmul, InvariantViolation, WeylElement, affine_window, compose,
                   diagram_automorphisms, enumerate_weyl, identity_element, root_reflection,
                   simple_reflection)

DEFAULT_MAX_DENOMINATOR = 997


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    witness: dict | None = None


@dataclass
class VerificationReport:
    suite: str
    system: str
    parameters: dict
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, witness=None, **detail) -> Check:
        c = Check(name, bool(passed), detail, witness)
        self.checks.append(c)
        return c

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"suite": self.suite, "system": self.system, "parameters": self.parameters,
                "passed": self.passed, "checks": [asdict(c) for c in self.checks]}


def sample_point(rng: random.Random, rank: int, radius, max_den: int = DEFAULT_MAX_DENOMINATOR):
    """Uniform rational point of ``[-radius, radius]^rank`` with a shared denominator from ``1..max_den``."""
    q = rng.randint(1, max_den)
    bound = int(Fraction(radius) * q)
    return tuple(Fraction(rng.randint(-bound, bound), q) for _ in range(rank))


def _wit(point=None, *elements, **extra) -> dict:
    out = {}
    if point is not None:
        out["point"] = ser.vector(point)
    if elements:
        out["elements"] = [ser.element(e) for e in elements]
    out.update(extra)
    return out


# --- suites --------------------------------------------------------------------

def suite_det_identity(rs, **_) -> VerificationReport:
    rs = build_root_system(rs)
    rep = VerificationReport("det_identity", rs.label, {})
    W = enumerate_weyl(rs)
    total = Fraction(0)
    bad = []
    for w in W:
        d = w.det_id_minus()
        total += d
        singular = bool(eg.kernel(w.fixed_matrix()))
        if d < 0 or (d == 0) != singular:
            bad.append(w)
    rep.add("sum det(id - w) = |W|", total == len(W), None if total == len(W) else
            {"sum": ser.rational(total)}, sum=ser.rational(total), order=len(W))
    rep.add("det(id - w) >= 0, zero iff fixed vector", not bad,
            {"words": [list(w.word) for w in bad[:5]]} if bad else None, checked=len(W))
    return rep


def suite_pairing(rs, **_) -> VerificationReport:
    rs = build_root_system(rs)
    rep = VerificationReport("pairing", rs.label, {})
    bad = []
    count = 0
    for w in enumerate_weyl(rs):
        if not w.is_regular:
            continue
        for i, n in enumerate(normals(w, rs)):
            count += 1
            if rs.inner(n, rs.coroot(rs.affine_roots[i])) != 1:
                bad.append((w, i))
    rep.add("<n_{w,i}, alpha_i^vee> = 1", not bad,
            {"cases": [[list(w.word), i] for w, i in bad[:5]]} if bad else None, checked=count)
    return rep


def suite_census(rs, **_) -> VerificationReport:
    rs = build_root_system(rs)
    rep = VerificationReport("census", rs.label, {})
    X = fundamental_region(rs)
    mults = sorted(ser.rational(t.volume_multiple) for t in X.regular_tiles)
    rep.add("sum of regular volume multiples = |W|", X.total_volume_multiple() == len(X.tiles),
            regular=len(X.regular_tiles), multiples=mults, order=len(X.tiles))
    return rep


def suite_partition(rs, samples: int = 1000, radius=3, seed: int = 0,
                    max_den: int = DEFAULT_MAX_DENOMINATOR, **_) -> VerificationReport:
    rs = build_root_system(rs)
    rep = VerificationReport("partition", rs.label,
                             {"samples": samples, "radius": str(radius), "seed": seed,
                              "max_denominator": max_den})
    origin = tuple(Fraction(0) for _ in range(rs.rank))
    hits0 = tiles_containing(rs, origin)
    rep.add("origin lies only in V_id", hits0 == [identity_element(rs)],
            None if hits0 == [identity_element(rs)] else _wit(origin, *hits0))
    rng = random.Random(seed)
    violations = []
    dims: dict[int, int] = {}
    for k in range(samples):
        xi = sample_point(rng, rs.rank, radius, max_den)
        try:
            w = locate(rs, xi)
        except InvariantViolation as exc:
            violations.append(_wit(xi, index=k, error=str(exc)))
            continue
        hits = tiles_containing(rs, xi)
        if hits != [w]:
            violations.append(_wit(xi, w, *hits, index=k, hits=len(hits)))
        else:
            d = tile_of(w).dim
            dims[d] = dims.get(d, 0) + 1
    rep.add("each sample in exactly one tile, equal to locate()", not violations,
            {"violations": violations[:5]} if violations else None,
            samples=samples, violations=len(violations), tile_dims=dims)
    return rep


def suite_base_points(rs, window: int = 1, **_) -> VerificationReport:
    rs = build_root_system(rs)
    rep = VerificationReport("base_points", rs.label, {"window": window})
    b = rs.base_point
    rep.add("rho / h^vee in the open alcove", rs.in_alcove(b), base_point=ser.vector(b))
    elems = affine_window(rs, window)
    bad = []
    for w in elems:
        xi = eg.vec_sub(b, w.apply(b))
        if not contains(tile_of(w), xi) or locate(rs, xi) != w:
            bad.append(_wit(xi, w))
    rep.add("b - w(b) in V_w and locate(b - w(b)) = w", not bad,
            {"violations": bad[:5]} if bad else None, elements=len(elems))
    return rep


def _vertex_set(points) -> frozenset:
    return frozenset(eg.normalize_vector(p) for p in points)


def _imul(M, v) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def _scaled_vertices(rs) -> tuple[int, tuple]:
    """``(D, D * vertices)`` with every scaled alcove vertex integral."""
    D = math.lcm(*(Fraction(a).denominator for v in rs.alcove_vertices for a in v))
    return D, tuple(tuple(int(a * D) for a in v) for v in rs.alcove_vertices)


def _tile_vertices(scaled, lam, M) -> frozenset:
    """``D`` times the vertex set of ``(id - w)(closed A)``, in integers."""
    D, verts = scaled
    out = set()
    for v in verts:
        Mv = _imul(M, v)
        out.add(tuple(a - b - D * c for a, b, c in zip(v, Mv, lam)))
    return frozenset(out)


def suite_symmetries(rs, window: int = 1, **_) -> VerificationReport:
    rs = build_root_system(rs)
    rep = VerificationReport("symmetries", rs.label, {"window": window})
    elems = affine_window(rs, window)
    W = {w.matrix for w in enumerate_weyl(rs)}
    inv = {w.matrix: w.inverse().matrix for w in enumerate_weyl(rs)}
    scaled = _scaled_vertices(rs)
    verts = {w: _tile_vertices(scaled, w.translation, w.matrix) for w in elems}
    bad = []
    for w in elems:
        Minv = inv[w.matrix]
        lam_inv = tuple(-a for a in _imul(Minv, w.translation))
        img = {tuple(-a for a in _imul(w.matrix, v))
               for v in _tile_vertices(scaled, lam_inv, Minv)}
        if img != verts[w]:
            bad.append(_wit(None, w))
    rep.add("-w~(V_{w^-1}) = V_w", not bad, {"violations": bad[:5]} if bad else None,
            elements=len(elems))
    autos = diagram_automorphisms(rs)
    alcove = _vertex_set(rs.alcove_vertices)
    bad_alcove = [g.node_permutation for g in autos
                  if _vertex_set(g.apply(v) for v in rs.alcove_vertices) != alcove]
    rep.add("g maps the closed alcove to itself", not bad_alcove,
            {"permutations": bad_alcove} if bad_alcove else None, automorphisms=len(autos))
    bad = []
    for g in autos:
        R, t = g.matrix, g.translation
        Rinv = eg.normalize_matrix(eg.inverse(R))
        D = scaled[0]
        tD = tuple(int(a * D) for a in t)
        for w in elems:
            # same formula as DiagramAutomorphism.conjugate, on integer data
            M = _matmul(_matmul(R, w.matrix), Rinv)
            lamD = tuple(D * a - b + c for a, b, c in zip(_imul(R, w.translation), _imul(M, tD), tD))
            ok = M in W and all(a % D == 0 for a in lamD)
            if ok:
                lam = tuple(a // D for a in lamD)
                ok = rs.in_coroot_lattice(lam)
            if ok:
                # (id - g w g^-1) g = R (id - w): the linear part carries V_w over
                img = {_imul(R, v) for v in verts[w]}
                ok = img == _tile_vertices(scaled, lam, M)
            if not ok:
                bad.append(_wit(None, w, permutation=list(g.node_permutation)))
    rep.add("R_g(V_w) = V_{tau(w)}", not bad, {"violations": bad[:5]} if bad else None,
            automorphisms=len(autos), elements=len(elems))
    return rep


def suite_segments(rs, **_) -> VerificationReport:
    rs = build_root_system(rs)
    rep = VerificationReport("segments", rs.label, {})
    zero = tuple(0 for _ in range(rs.rank))
    bad = []
    for root in rs.positive_roots:
        s = root_reflection(rs, root.coeffs)
        t = tile_of(AffineWeylElement(zero, s))
        cor = rs.coroot(root.coeffs)
        lam = max(Fraction(a, c) for a, c in zip(root.coeffs, rs.marks))
        params = []
        collinear = True
        for v in t.vertices:
            j = next(k for k, c in enumerate(cor) if c != 0)
            tv = Fraction(v[j]) / cor[j]
            collinear = collinear and eg.normalize_vector(eg.vec_scale(tv, cor)) == v
            params.append(tv)
        ok = t.dim == 1 and collinear and min(params) == 0 and max(params) == lam
        if not ok:
            bad.append({"root": list(root.coeffs), "expected": ser.rational(lam),
                        "params": [ser.rational(p) for p in params]})
    rep.add("closure(V_{s_alpha}) = [0, max(a_i/c_i) alpha^vee]", not bad,
            {"violations": bad} if bad else None, roots=len(rs.positive_roots))
    return rep


def _cone_sample(rng, rank, radius, max_den, inside: bool):
    q = rng.randint(1, max_den)
    bound = int(Fraction(radius) * q)
    while True:
        if inside:
            coords = [0 if rng.random() < 0.2 else rng.randint(0, bound) for _ in range(rank)]
        else:
            coords = [rng.randint(-bound, bound) for _ in range(rank)]
            if all(c >= 0 for c in coords):
                continue
        return tuple(Fraction(c, q) for c in coords)


def suite_waldspurger_finite(rs, samples: int = 1000, outside: int = 100, radius=3,
                             seed: int = 0, max_den: int = DEFAULT_MAX_DENOMINATOR,
                             **_) -> VerificationReport:
    """The closed positive-root cone is the set of points with nonnegative simple-root coordinates."""
    rs = build_root_system(rs)
    rep = VerificationReport("waldspurger_finite", rs.label,
                             {"samples": samples, "outside": outside, "radius": str(radius),
                              "seed": seed, "max_denominator": max_den})
    cones = [waldspurger_cone(w) for w in enumerate_weyl(rs)]

    def holders(xi):
        return [c.element for c in cones if cone_contains(c, xi)]

    origin = tuple(Fraction(0) for _ in range(rs.rank))
    h = holders(origin)
    rep.add("0 only in D_id", len(h) == 1 and h[0].is_identity)
    bad = []
    for root in rs.positive_roots:
        s = root_reflection(rs, root.coeffs)
        for t in (Fraction(1, 3), Fraction(2), Fraction(7, 2)):
            h = holders(eg.vec_scale(t, root.coeffs))
            if h != [s]:
                bad.append({"root": list(root.coeffs), "t": ser.rational(t)})
        if holders(eg.vec_scale(-1, root.coeffs)):
            bad.append({"root": list(root.coeffs), "t": -1})
    rep.add("t alpha (t > 0) only in D_{s_alpha}; -alpha in none", not bad,
            {"violations": bad[:5]} if bad else None)
    rng = random.Random(seed)
    bad_in, bad_out = [], []
    for k in range(samples):
        xi = _cone_sample(rng, rs.rank, radius, max_den, True)
        h = holders(xi)
        if len(h) != 1:
            bad_in.append(_wit(xi, index=k, holders=len(h)))
    for k in range(outside):
        xi = _cone_sample(rng, rs.rank, radius, max_den, False)
        h = holders(xi)
        if h:
            bad_out.append(_wit(xi, index=k, holders=len(h)))
    rep.add("closed cone samples in exactly one D_w", not bad_in,
            {"violations": bad_in[:5]} if bad_in else None, samples=samples)
    rep.add("samples outside the cone in no D_w", not bad_out,
            {"violations": bad_out[:5]} if bad_out else None, samples=outside)
    return rep


def suite_lemme(rs, **_) -> VerificationReport:
    rs = build_root_system(rs)
    rep = VerificationReport("lemme", rs.label, {})
    nodes = range(rs.rank + 1)
    bad = []
    count = 0
    for w in enumerate_weyl(rs):
        for k in range(rs.rank + 1):
            for I in itertools.combinations(nodes, k):
                count += 1
                found = waldspurger_candidates(w, I)
                if len(found) != 1:
                    bad.append({"word": list(w.word), "I": list(I), "found": len(found)})
    rep.add("exactly one q in W_I per (w, I)", not bad, {"violations": bad[:5]} if bad else None,
            pairs=count)
    return rep


# --- rank-2 facet geometry -----------------------------------------------------

def _line_key(f, c):
    """Unoriented key and orientation sign of the line ``f . xi + c = 0``."""
    j = next(k for k, a in enumerate(f) if a != 0)
    s = f[j]
    s = Fraction(s)
    return (tuple(a / s for a in f), c / s), (1 if s > 0 else -1)


def _param(f, p):
    return -f[1] * p[0] + f[0] * p[1]


def _interval(f, pts):
    ts = sorted(_param(f, p) for p in pts)
    return ts[0], ts[-1]


def _subtract(iv, others):
    """``iv`` minus a union of closed intervals, as a list of nondegenerate pieces."""
    pieces = [iv]
    for a, b in others:
        nxt = []
        for lo, hi in pieces:
            if b <= lo or a >= hi:
                nxt.append((lo, hi))
                continue
            if a > lo:
                nxt.append((lo, a))
            if b < hi:
                nxt.append((b, hi))
        pieces = nxt
    return [p for p in pieces if p[1] > p[0]]


def _x_facets(rs):
    X = fundamental_region(rs)
    facets = []
    for t in X.regular_tiles:
        for i, (f, c) in enumerate(t.halfspaces):
            key, sign = _line_key(f, c)
            facets.append({"tile": t, "i": i, "key": key, "sign": sign,
                           "iv": _interval(key[0], t.facet_vertices(i))})
    return facets


def suite_face_classification(rs, **_) -> VerificationReport:
    rs = build_root_system(rs)
    if rs.rank != 2:
        raise ValueError("face classification is implemented for rank 2")
    rep = VerificationReport("face_classification", rs.label, {})
    facets = _x_facets(rs)
    amax = rs.highest_root.coeffs
    boundary = []
    for fa in facets:
        opposite = [fb["iv"] for fb in facets if fb["key"] == fa["key"] and fb["sign"] != fa["sign"]]
        for piece in _subtract(fa["iv"], opposite):
            boundary.append((fa, piece))
    bad = []
    kinds: dict[tuple, set] = {}
    counts = {"horizontal": 0, "vertical": 0}
    for fa, piece in boundary:
        n = fa["tile"].normals[fa["i"]]
        pairing = rs.inner(n, amax)
        horizontal = fa["i"] == 0
        counts["horizontal" if horizontal else "vertical"] += 1
        kinds.setdefault((fa["key"], fa["sign"]), set()).add(horizontal)
        if pairing == 0 or (pairing < 0) != horizontal:
            bad.append(_wit(None, fa["tile"].element, face=fa["i"],
                            pairing=ser.rational(pairing)))
    mixed = [k for k, v in kinds.items() if len(v) > 1]
    rep.add("<n, alpha_max> < 0 on horizontal and > 0 on vertical boundary facets", not bad,
            {"violations": bad} if bad else None, pieces=len(boundary), **counts)
    rep.add("no boundary line is both horizontal and vertical", not mixed, lines=len(kinds))
    return rep


def suite_gluing(rs, **_) -> VerificationReport:
    """Across each face ``V_{w,i}`` of a regular tile of ``X`` lie tiles ``w s_i s_j`` on the other side."""
    rs = build_root_system(rs)
    if rs.rank != 2:
        raise ValueError("gluing is implemented for rank 2")
    rep = VerificationReport("gluing", rs.label, {})
    bad = []
    checked = 0
    for t in fundamental_region(rs).regular_tiles:
        for i, (f, c) in enumerate(t.halfspaces):
            key, sign = _line_key(f, c)
            iv = _interval(key[0], t.facet_vertices(i))
            sigma = compose(t.element, simple_reflection(rs, i))
            covers = []
            for j in range(rs.rank + 1):
                if j == i:
                    continue
                w2 = compose(sigma, simple_reflection(rs, j))
                if not w2.is_regular:
                    continue
                t2 = tile_of(w2)
                key2, sign2 = _line_key(*t2.halfspaces[j])
                if key2 != key:
                    continue
                iv2 = _interval(key[0], t2.facet_vertices(j))
                if min(iv[1], iv2[1]) <= max(iv[0], iv2[0]):
                    continue
                checked += 1
                n1, n2 = t.normals[i], t2.normals[j]
                ratio = _proportional(n1, n2)
                if sign2 == sign or ratio is None or ratio >= 0:
                    bad.append(_wit(None, t.element, w2, face=i, other_face=j))
                covers.append(iv2)
            if _subtract(iv, covers):
                bad.append(_wit(None, t.element, face=i, uncovered=True))
    rep.add("glued faces have negatively proportional normals and cover each face", not bad,
            {"violations": bad[:5]} if bad else None, glued_pairs=checked)
    return rep


def _proportional(u, v):
    """``r`` with ``u = r v``, or None."""
    j = next((k for k, a in enumerate(v) if a != 0), None)
    if j is None:
        return None
    r = Fraction(u[j]) / v[j]
    return r if all(Fraction(a) == r * b for a, b in zip(u, v)) else None


def _ray_keeps(t, xi, direction) -> bool:
    """``xi + s direction`` lies in the closed tile for all small ``s > 0``."""
    for f, c in t.halfspaces:
        v = eg.dot(f, xi) + c
        if v < 0 or (v == 0 and eg.dot(f, direction) < 0):
            return False
    return True


def ray_in_interior_of_x(rs, xi, direction) -> bool:
    """Exact test that ``xi + s direction`` is in ``int(X)`` for small ``s > 0``.

    Closed regular tiles cover space, so a point is interior to ``X`` iff every closed
    regular tile through it has zero translation.  Along the ray, for small ``s``, those
    are the tiles through ``xi`` that the ray does not leave at once.
    """
    zero = tuple(0 for _ in range(rs.rank))
    along = [w for w in candidate_window(rs, xi) if _ray_keeps(tile_of(w), xi, direction)]
    return bool(along) and all(w.translation == zero for w in along)


def suite_alphamax(rs, samples: int = 20, seed: int = 0, **_) -> VerificationReport:
    """Points of ``X`` on lower-dimensional tiles, pushed along ``alpha_max``, enter ``int(X)``."""
    rs = build_root_system(rs)
    rep = VerificationReport("alphamax", rs.label, {"samples": samples, "seed": seed})
    X = fundamental_region(rs)
    amax = rs.highest_root.coeffs
    rng = random.Random(seed)
    pts = []
    for t in X.tiles:
        w = t.element
        if t.regular:
            continue
        b = rs.base_point
        pts.append((w, eg.vec_sub(b, w.apply(b))))
        for _ in range(samples):
            x = _alcove_sample(rs, rng)
            pts.append((w, eg.vec_sub(x, w.apply(x))))
    bad = []
    for w, xi in pts:
        if not contains(tile_of(w), xi):
            bad.append(_wit(xi, w, reason="sample not in its tile"))
        elif not ray_in_interior_of_x(rs, xi, amax):
            bad.append(_wit(xi, w))
    rep.add("xi + s alpha_max in int(X) for small s > 0", not bad,
            {"violations": bad[:5]} if bad else None, points=len(pts))
    return rep


def _alcove_sample(rs, rng, max_den: int = 97):
    """Random interior point: a positive rational combination of the alcove vertices."""
    weights = [Fraction(rng.randint(1, max_den)) for _ in rs.alcove_vertices]
    total = sum(weights)
    x = [Fraction(0)] * rs.rank
    for wt, v in zip(weights, rs.alcove_vertices):
        for j in range(rs.rank):
            x[j] += wt / total * v[j]
    return tuple(x)


# --- deformed tilings -------------------------------------------------------------

def suite_deformed(rs, S=None, samples: int = 1000, radius=3, seed: int = 0,
                   max_den: int = DEFAULT_MAX_DENOMINATOR, assert_path: bool = False,
                   **_) -> VerificationReport:
    rs = build_root_system(rs)
    S = scalar(rs.rank, Fraction(1, 2)) if S is None else S
    rep = VerificationReport("deformed", rs.label,
                             {"S": ser.matrix(S), "samples": samples, "radius": str(radius),
                              "seed": seed, "max_denominator": max_den})
    d = make_deformation(rs, S, assert_path=assert_path)
    ident = abs_det_identity(rs, d.S)
    rep.add("sum |det(S - w)| = |W| and det(id - S w^-1) > 0", ident.holds,
            total=ser.rational(ident.total), order=ident.order, certificate=d.admissibility_certificate)
    rng = random.Random(seed)
    bad = []
    boundary = 0
    for k in range(samples):
        xi = sample_point(rng, rs.rank, radius, max_den)
        try:
            loc = deformed_locate(d, xi)
        except InvariantViolation as exc:
            bad.append(_wit(xi, index=k, error=str(exc)))
            continue
        if not loc.closed:
            bad.append(_wit(xi, index=k, reason="no closed tile"))
        elif loc.open is None:
            boundary += 1
            if len(loc.closed) < 2:
                bad.append(_wit(xi, *loc.closed, index=k, reason="boundary point in one closed tile"))
        else:
            t = deformed_tile(d, loc.open)
            if not (deformed_contains(t, xi) and rs.in_alcove(deformed_preimage(d, loc.open, xi))):
                bad.append(_wit(xi, loc.open, index=k, reason="normal and preimage tests disagree"))
    rep.add("open tiles disjoint, closed tiles cover", not bad,
            {"violations": bad[:5]} if bad else None, samples=samples, boundary=boundary)
    return rep


def alcove_walk(rs, xi):
    """Stiefel-diagram oracle: the ``w`` with ``-xi`` in the alcove ``w(A)``, found by folding.

    Returns ``(translation, matrix, on_wall)`` using only the reflection formula.
    """
    rs = build_root_system(rs)
    l = rs.rank
    marks = rs.marks
    cor = [rs.coroot(a) for a in rs.affine_roots]

    def values(x):
        g = rs.lower(x)
        return [1 - sum(c * gi for c, gi in zip(marks, g))] + list(g)

    def reflect(i, x):
        v = values(x)[i]
        return tuple(a - v * b for a, b in zip(x, cor[i]))

    x = tuple(-Fraction(a) for a in xi)
    word = []
    while True:
        vals = values(x)
        bad = next((i for i, v in enumerate(vals) if v < 0), None)
        if bad is None:
            break
        x = reflect(bad, x)
        word.append(bad)

    def act(p):
        for i in reversed(word):
            p = reflect(i, p)
        return p

    zero = tuple(Fraction(0) for _ in range(l))
    lam = act(zero)
    cols = [eg.vec_sub(act(tuple(Fraction(int(i == j)) for i in range(l))), lam) for j in range(l)]
    M = eg.normalize_matrix(eg.transpose(cols))
    return eg.normalize_vector(lam), M, any(v == 0 for v in values(x))


def suite_stiefel(rs, samples: int = 1000, radius=3, seed: int = 0,
                  max_den: int = DEFAULT_MAX_DENOMINATOR, **_) -> VerificationReport:
    rs = build_root_system(rs)
    rep = VerificationReport("stiefel", rs.label,
                             {"samples": samples, "radius": str(radius), "seed": seed,
                              "max_denominator": max_den})
    d = make_deformation(rs, scalar(rs.rank, 0))
    rng = random.Random(seed)
    bad = []
    walls = 0
    for k in range(samples):
        xi = sample_point(rng, rs.rank, radius, max_den)
        lam, M, on_wall = alcove_walk(rs, xi)
        loc = deformed_locate(d, xi)
        keys = {(w.translation, w.matrix) for w in loc.closed}
        if on_wall:
            walls += 1
            ok = loc.open is None and (lam, M) in keys
        else:
            ok = loc.open is not None and (loc.open.translation, loc.open.matrix) == (lam, M)
        if not ok:
            bad.append(_wit(xi, index=k, on_wall=on_wall))
    rep.add("S = 0 location equals the alcove walk", not bad,
            {"violations": bad[:5]} if bad else None, samples=samples, on_wall=walls)
    return rep


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "det_identity": suite_det_identity,
    "pairing": suite_pairing,
    "census": suite_census,
    "partition": suite_partition,
    "base_points": suite_base_points,
    "symmetries": suite_symmetries,
    "segments": suite_segments,
    "waldspurger_finite": suite_waldspurger_finite,
    "lemme": suite_lemme,
    "face_classification": suite_face_classification,
    "gluing": suite_gluing,
    "alphamax": suite_alphamax,
    "deformed": suite_deformed,
    "stiefel": suite_stiefel,
}

RANK2_ONLY = {"face_classification", "gluing"}


def run_suite(name: str, rs, **params) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](rs, **params)
