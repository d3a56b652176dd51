import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weyltiles import exactgeo as eg
from weyltiles.locate import (candidate_window, locate, locate_details, tiles_containing,
                              waldspurger_candidates, waldspurger_q)
from weyltiles.rootsys import build_root_system
from weyltiles.tiles import closure_contains, contains, tile_of
from weyltiles.weyl import (AffineWeylElement, affine_window, diagram_automorphisms,
                            enumerate_weyl, identity_element, root_reflection)

coarse = st.fractions(min_value=-3, max_value=3, max_denominator=6)
fine = st.fractions(min_value=-3, max_value=3, max_denominator=997)


def point(rank, elems=coarse):
    return st.tuples(*([elems] * rank))


def test_candidates_a1_origin():
    cands = candidate_window("A1", (0,))
    assert any(w.translation == (0,) and w.matrix == ((-1,),) for w in cands)


def test_candidates_are_closure_hits():
    rs = build_root_system("G2")
    xi = tuple(Fraction(a, 2) for a in rs.highest_root.coeffs)
    cands = candidate_window(rs, xi)
    assert cands and all(closure_contains(tile_of(w), xi) for w in cands)
    far = candidate_window(rs, (10, 0))
    assert far and all(any(w.translation) for w in far)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
@given(data=st.data())
def test_vertex_box_matches_norm_box(label, data):
    rs = build_root_system(label)
    xi = data.draw(point(rs.rank))
    key = lambda ws: sorted(w.sort_key() for w in ws)
    assert key(candidate_window(rs, xi)) == key(candidate_window(rs, xi, bound="norm"))


def test_waldspurger_examples():
    rs = build_root_system("A1")
    minus = enumerate_weyl(rs)[1]
    q = waldspurger_q(minus, (1,))
    assert q.matrix == ((-1,),)
    assert waldspurger_q(minus, ()).matrix == ((1,),)
    g2 = build_root_system("G2")
    rot120 = next(w for w in enumerate_weyl(g2) if w.det_id_minus() == 3)
    assert len(waldspurger_candidates(rot120, (2,))) == 1


def test_locate_examples():
    rs = build_root_system("G2")
    assert locate(rs, (0, 0)) == identity_element(rs)
    amax = rs.highest_root.coeffs
    w = locate(rs, tuple(Fraction(a, 2) for a in amax))
    assert w == AffineWeylElement((0, 0), root_reflection(rs, amax))
    loc = locate_details("A1", (Fraction(1, 2),))
    assert loc.tile_dim == 1 and loc.element.matrix == ((-1,),) and loc.element.translation == (0,)
    w = locate("B2", (5, Fraction(7, 3)))
    assert any(w.translation) and contains(tile_of(w), (5, Fraction(7, 3)))


def test_wrong_arity():
    with pytest.raises(eg.DimensionError):
        locate("G2", (1, 2, 3))


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_base_points_locate_back(label):
    rs = build_root_system(label)
    b = rs.base_point
    elems = affine_window(rs, 2)
    assert len(elems) >= 100
    for w in elems:
        assert locate(rs, eg.vec_sub(b, w.apply(b))) == w


def a1_oracle(x):
    """1-d tiling by hand: integers are points V_(-x, id); the rest sit in (m, m+1)."""
    if x.denominator == 1:
        return (-int(x),), ((1,),)
    return (-math.floor(x),), ((-1,),)


def test_a1_exhaustive_small_denominators():
    seen = set()
    for q in range(1, 21):
        for p in range(-3 * q, 3 * q + 1):
            x = Fraction(p, q)
            if x in seen:
                continue
            seen.add(x)
            w = locate("A1", (x,))
            assert (w.translation, w.matrix) == a1_oracle(x)
            assert tiles_containing("A1", (x,)) == [w]


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3", "C3"])
@given(data=st.data())
def test_locate_is_the_only_tile(label, data):
    rs = build_root_system(label)
    xi = data.draw(point(rs.rank, st.one_of(coarse, fine)))
    w = locate(rs, xi)
    assert tiles_containing(rs, xi) == [w]
    assert locate_details(rs, xi, cross_check=True).element == w


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
@given(data=st.data())
def test_translation_equivariance(label, data):
    rs = build_root_system(label)
    xi = data.draw(point(2))
    m = data.draw(st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
    mu = rs.from_coroot_coords(m)
    w, w2 = locate(rs, xi), locate(rs, eg.vec_add(xi, mu))
    # V_(lambda, w) = V_(0, w) - lambda
    assert w2.matrix == w.matrix
    assert w2.translation == eg.normalize_vector(eg.vec_sub(w.translation, mu))


@pytest.mark.parametrize("label", ["A2", "B2"])
@given(data=st.data())
def test_diagram_symmetry_equivariance(label, data):
    rs = build_root_system(label)
    xi = data.draw(point(2))
    for g in diagram_automorphisms(rs):
        w = locate(rs, xi)
        assert locate(rs, eg.mat_vec(g.matrix, xi)) == g.conjugate(w)
