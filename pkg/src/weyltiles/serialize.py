"""JSON encoding.  Integral values are bare JSON numbers, other rationals are ``"p/q"`` strings."""

from __future__ import annotations

import json
from fractions import Fraction

from .exactgeo import normalize_matrix, normalize_vector
from .rootsys import RootSystem, build_root_system
from .tiles import Tile
from .weyl import AffineWeylElement, WeylElement


def rational(a):
    a = Fraction(a)
    if a.denominator == 1:
        return a.numerator
    return f"{a.numerator}/{a.denominator}"


def parse_rational(v) -> Fraction:
    if isinstance(v, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    raise TypeError(f"cannot read {v!r} as an exact rational")


def vector(v) -> list:
    return [rational(a) for a in v]


def matrix(M) -> list:
    return [vector(row) for row in M]


def root_system(rs: RootSystem) -> dict:
    return {
        "type": rs.label,
        "rank": rs.rank,
        "node_order": "bourbaki; affine node 0",
        "gram": matrix(rs.gram),
        "positive_roots": [{"coeffs": list(r.coeffs), "is_long": r.is_long}
                           for r in rs.positive_roots],
        "highest_root": list(rs.highest_root.coeffs),
        "marks": list(rs.marks),
        "coweights": matrix(rs.coweights),
        "rho": vector(rs.rho),
        "dual_coxeter": rs.dual_coxeter,
        "alcove_vertices": matrix(rs.alcove_vertices),
        "weyl_order": rs.weyl_order,
        "alcove_volume_squared": rational(rs.alcove_volume_squared),
    }


def weyl_element(w: WeylElement) -> dict:
    return {"matrix": matrix(w.matrix), "word": list(w.word)}


def element(w: AffineWeylElement) -> dict:
    rs = build_root_system(w.system)
    return {
        "translation": vector(w.translation),
        "coroot_coords": vector(rs.to_coroot_coords(w.translation)),
        "matrix": matrix(w.matrix),
        "word": list(w.word),
    }


def element_from_json(system: str, data: dict) -> AffineWeylElement:
    M = normalize_matrix([[parse_rational(a) for a in row] for row in data["matrix"]])
    lam = normalize_vector(parse_rational(a) for a in data["translation"])
    word = tuple(data.get("word", ()))
    return AffineWeylElement(lam, WeylElement(system, M, word), word)


def tile(t: Tile) -> dict:
    out = {"element": element(t.element), "dim": t.dim, "vertices": matrix(t.vertices)}
    if t.regular:
        out["normals"] = matrix(t.normals)
    out["volume_multiple"] = rational(t.volume_multiple)
    return out


def dumps(obj, **kw) -> str:
    kw.setdefault("indent", 2)
    return json.dumps(obj, **kw)
