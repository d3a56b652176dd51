"""SVG pictures of rank-2 tilings.

Geometry stays exact in simple-root coordinates.  The drawing basis comes
from ``gram = U^T D U`` (``U`` unit upper triangular): ``y_k = sqrt(D_k) (U x)_k``.
Square roots appear only when numbers are written out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import exactgeo as eg
from .deformed import make_deformation, scalar
from .rootsys import build_root_system
from .weyl import AffineWeylElement, enumerate_weyl

MODES = ("tiling", "X", "stiefel", "deformed")
DIGITS = 12


class RenderError(ValueError):
    pass


def parse_window(text: str) -> tuple[Fraction, Fraction]:
    """``"lo:hi"`` -> (lo, hi) with lo < hi."""
    parts = text.split(":")
    if len(parts) != 2:
        raise RenderError(f"window must look like lo:hi, got {text!r}")
    lo, hi = (Fraction(p.strip()) for p in parts)
    if not lo < hi:
        raise RenderError(f"empty window {text!r}")
    return lo, hi


# --- exact signs of small surd expressions ------------------------------------

def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_surd(q, s) -> int:
    """sign(q sqrt(s)), s >= 0."""
    return 0 if s == 0 else _sign(q)


def _sign_two(q, s, r, t) -> int:
    """sign(q sqrt(s) + r sqrt(t))."""
    a, b = _sign_surd(q, s), _sign_surd(r, t)
    if a == 0 or b == 0 or a == b:
        return a or b
    return a * _sign(q * q * s - r * r * t)


def surd_sign(p, q, s, r, t) -> int:
    """Exact sign of ``p + q sqrt(s) + r sqrt(t)`` for rationals with ``s, t >= 0``."""
    p, q, s, r, t = (Fraction(v) for v in (p, q, s, r, t))
    x = _sign_two(q, s, r, t)
    sp = _sign(p)
    if sp == 0 or x == 0 or sp == x:
        return sp or x
    # opposite signs: compare p^2 with (q sqrt s + r sqrt t)^2
    u = p * p - q * q * s - r * r * t
    v = 2 * q * r  # coefficient of sqrt(st)
    diff = _sign(u) if v == 0 or s * t == 0 else _sign_two(u, 1, -v, s * t)
    return sp if diff > 0 else (0 if diff == 0 else x)


# --- drawing basis -------------------------------------------------------------

@dataclass(frozen=True)
class Frame:
    """``y1 = sqrt(a) (x1 + k x2)``, ``y2 = sqrt(e) x2``."""

    a: Fraction
    k: Fraction
    e: Fraction

    @classmethod
    def of(cls, gram) -> "Frame":
        a = Fraction(gram[0][0])
        b = Fraction(gram[0][1])
        return cls(a, b / a, Fraction(gram[1][1]) - b * b / a)

    def decimal(self, x: Sequence) -> tuple[Decimal, Decimal]:
        with localcontext() as ctx:
            ctx.prec = 40
            sa = Decimal(self.a.numerator).sqrt() / Decimal(self.a.denominator).sqrt()
            se = Decimal(self.e.numerator).sqrt() / Decimal(self.e.denominator).sqrt()
            u = Fraction(x[0]) + self.k * Fraction(x[1])
            y1 = sa * Decimal(u.numerator) / Decimal(u.denominator)
            v = Fraction(x[1])
            y2 = se * Decimal(v.numerator) / Decimal(v.denominator)
            return +y1, +y2


def _fmt(d: Decimal) -> str:
    with localcontext() as ctx:
        ctx.prec = DIGITS
        d = +d
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


# --- exact window test -----------------------------------------------------------

def _window_axes(frame: Frame):
    """Window as ``lo/sqrt(c) <= f . x <= hi/sqrt(c)`` for two rational ``f``."""
    return (((Fraction(1), frame.k), frame.a), ((Fraction(0), Fraction(1)), frame.e))


def _corners(frame: Frame, lo, hi):
    """Window corners in root coordinates as (rational, coeff of 1/sqrt(a), coeff of 1/sqrt(e)) pairs.

    ``x2 = y2/sqrt(e)``, ``x1 = y1/sqrt(a) - k y2/sqrt(e)``.
    """
    out = []
    for y1 in (lo, hi):
        for y2 in (lo, hi):
            out.append(((Fraction(y1), -frame.k * y2), (Fraction(0), Fraction(y2))))
    return out


def _axes_of(points) -> list:
    pts = list(points)
    axes = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = eg.vec_sub(pts[j], pts[i])
            if any(d):
                axes.append((-d[1], d[0]))
                axes.append(tuple(d))
    return axes


def meets_window(frame: Frame, lo, hi, points) -> bool:
    """Exact: the convex hull of ``points`` meets the closed drawing window ``[lo, hi]^2``."""
    pts = [tuple(Fraction(a) for a in p) for p in points]
    # window-edge axes: one surd each
    for f, c in _window_axes(frame):
        vals = [eg.dot(f, p) for p in pts]
        # hull interval against [lo/sqrt c, hi/sqrt c], i.e. compare v sqrt(c) with lo, hi
        if surd_sign(-hi, min(vals), c, 0, 0) > 0 or surd_sign(-lo, max(vals), c, 0, 0) < 0:
            return False
    corners = _corners(frame, lo, hi)
    ia, ie = 1 / frame.a, 1 / frame.e
    for g in _axes_of(pts):
        vals = [eg.dot(g, p) for p in pts]
        pmin, pmax = min(vals), max(vals)
        # g . corner = alpha / sqrt(a) + beta / sqrt(e); 1/sqrt(c) = sqrt(1/c)
        proj = [(g[0] * cx[0], g[0] * cx[1] + g[1] * cy[1]) for cx, cy in
                ((c[0], c[1]) for c in corners)]
        above = all(surd_sign(-pmax, al, ia, be, ie) > 0 for al, be in proj)
        below = all(surd_sign(-pmin, al, ia, be, ie) < 0 for al, be in proj)
        if above or below:
            return False
    return True


def _window_box(frame: Frame, lo, hi) -> tuple[list[float], list[float]]:
    """Float bounding box of the window in root coordinates, padded; only used to enumerate."""
    sa, se = math.sqrt(frame.a), math.sqrt(frame.e)
    xs, ys = [], []
    for y1 in (lo, hi):
        for y2 in (lo, hi):
            x2 = float(y2) / se
            xs.append(float(y1) / sa - float(frame.k) * x2)
            ys.append(x2)
    return [min(xs) - 1, min(ys) - 1], [max(xs) + 1, max(ys) + 1]


# --- tiles ------------------------------------------------------------------

@dataclass(frozen=True)
class Drawn:
    element: AffineWeylElement
    dim: int
    points: tuple      # exact root coordinates, hull order for polygons
    multiple: Fraction

    @property
    def css_class(self) -> str:
        m = self.multiple
        return f"det-{m.numerator}" if m.denominator == 1 else f"det-{m.numerator}_{m.denominator}"


def _hull(points) -> tuple:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def drawn_tiles(rs, mode: str = "tiling", window=(-3, 3), S=None,
                assert_path: bool = False) -> list[Drawn]:
    """Every tile of the chosen picture whose exact closure meets the window, in canonical order."""
    rs = build_root_system(rs)
    if rs.rank != 2:
        raise RenderError(f"rendering needs rank 2, {rs.label} has rank {rs.rank}")
    if mode not in MODES:
        raise RenderError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    lo, hi = (Fraction(a) for a in window)
    frame = Frame.of(rs.gram)
    if mode == "stiefel":
        base = scalar(2, 0)
    elif mode == "deformed":
        if S is None:
            raise RenderError("deformed mode needs S")
        base = make_deformation(rs, S, assert_path=assert_path).S
    else:
        base = eg.identity(2)
    wlo, whi = _window_box(frame, lo, hi)
    out = []
    for w in enumerate_weyl(rs):
        A = eg.mat_sub(base, w.matrix)
        imgs = [eg.normalize_vector(eg.mat_vec(A, v)) for v in rs.alcove_vertices]
        if mode in ("tiling", "stiefel", "deformed"):
            ranges = []
            for j, d in enumerate(rs.coroot_scales):
                a = min(p[j] for p in imgs) - whi[j]
                b = max(p[j] for p in imgs) - wlo[j]
                ranges.append(range(math.floor(a / d), math.ceil(b / d) + 1))
            lams = [tuple(m * d for m, d in zip(ms, rs.coroot_scales))
                    for ms in eg.lattice_points_in_box([r.start for r in ranges],
                                                       [r.stop - 1 for r in ranges])]
        else:
            lams = [(0, 0)]
        mult = abs(eg.det(A))
        for lam in lams:
            pts = [eg.vec_sub(p, lam) for p in imgs]
            if not meets_window(frame, lo, hi, pts):
                continue
            hull = _hull(tuple(eg.normalize_vector(p)) for p in pts)
            dim = min(len(hull) - 1, 2)
            out.append(Drawn(AffineWeylElement(tuple(lam), w, w.word), dim, hull, mult))
    out.sort(key=lambda t: (-t.dim, t.element.sort_key()))
    return out


_STYLE = """
polygon { stroke: #333333; stroke-width: 0.01; }
polygon.det-1 { fill: #e8ecf4; }
polygon.det-2 { fill: #b8c4dc; }
polygon.det-3 { fill: #8c9cc0; }
polygon.det-4 { fill: #4c5c88; }
line.segment { stroke: #aa2222; stroke-width: 0.02; }
circle.point { fill: #aa2222; }
circle.origin { fill: none; stroke: #000000; stroke-width: 0.02; }
"""


def render_svg(rs, mode: str = "tiling", window=(-3, 3), S=None, assert_path: bool = False) -> str:
    rs = build_root_system(rs)
    tiles = drawn_tiles(rs, mode, window, S, assert_path)
    frame = Frame.of(rs.gram)
    lo, hi = (Fraction(a) for a in window)

    def xy(p):
        y1, y2 = frame.decimal(p)
        return _fmt(y1), _fmt(-y2)

    size = hi - lo
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
             f'viewBox="{_fmt(Decimal(lo.numerator) / lo.denominator)} '
             f'{_fmt(-Decimal(hi.numerator) / hi.denominator)} '
             f'{_fmt(Decimal(size.numerator) / size.denominator)} '
             f'{_fmt(Decimal(size.numerator) / size.denominator)}" width="600" height="600">',
             f'<title>{rs.label} {mode}</title>',
             f"<style>{_STYLE}</style>"]
    for t in tiles:
        lam = ",".join(str(Fraction(a)) for a in t.element.translation)
        mat = ";".join(",".join(str(a) for a in row) for row in t.element.matrix)
        meta = f'data-lambda="{lam}" data-matrix="{mat}"'
        if t.dim == 2:
            pts = " ".join(",".join(xy(p)) for p in t.points)
            lines.append(f'<polygon class="tile {t.css_class}" {meta} points="{pts}"/>')
        elif t.dim == 1:
            (x1, y1), (x2, y2) = xy(t.points[0]), xy(t.points[-1])
            lines.append(f'<line class="segment" {meta} x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        else:
            x, y = xy(t.points[0])
            lines.append(f'<circle class="point" {meta} cx="{x}" cy="{y}" r="0.03"/>')
    lines.append('<circle class="origin" cx="0" cy="0" r="0.06"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
