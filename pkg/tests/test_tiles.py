import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weyltiles import exactgeo as eg
from weyltiles.rootsys import build_root_system
from weyltiles.tiles import (NotRegularError, closure_contains, cone_contains, contains,
                             contains_by_preimage, fundamental_region, identity_tile, normals,
                             preimage, tile_of, volume, waldspurger_cone)
from weyltiles.weyl import (AffineWeylElement, affine_window, enumerate_weyl, root_reflection)

rat = st.fractions(min_value=-3, max_value=3, max_denominator=12)


def finite(label, M):
    rs = build_root_system(label)
    w = next(w for w in enumerate_weyl(rs) if w.matrix == M)
    return AffineWeylElement(tuple(0 for _ in range(rs.rank)), w, w.word)


def minus_id(label):
    rs = build_root_system(label)
    return finite(label, tuple(tuple(-int(i == j) for j in range(rs.rank)) for i in range(rs.rank)))


def signed_permutation_dets(n, even=False):
    out = []
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            if even and signs.count(-1) % 2:
                continue
            M = [[signs[i] if perm[i] == j else 0 for j in range(n)] for i in range(n)]
            out.append(eg.det(eg.mat_sub(eg.identity(n), M)))
    return Counter(out)


def dihedral_dets(m):
    # rotations by 2 pi k / m: det(id - R) = 2 - 2 cos; reflections: 0
    cos = {6: [1, Fraction(1, 2), Fraction(-1, 2), -1, Fraction(-1, 2), Fraction(1, 2)],
           4: [1, 0, -1, 0], 3: [1, Fraction(-1, 2), Fraction(-1, 2)]}[m]
    return Counter([2 - 2 * c for c in cos] + [0] * m)


@pytest.mark.parametrize("label, oracle", [
    ("G2", lambda: dihedral_dets(6)),
    ("B2", lambda: dihedral_dets(4)),
    ("A2", lambda: dihedral_dets(3)),
    ("B3", lambda: signed_permutation_dets(3)),
    ("C3", lambda: signed_permutation_dets(3)),
    ("D4", lambda: signed_permutation_dets(4, even=True)),
])
def test_determinant_multiset_against_independent_realisation(label, oracle):
    got = Counter(w.det_id_minus() for w in enumerate_weyl(label))
    assert got == oracle()


def test_census_g2_b2_a1():
    X = fundamental_region("G2")
    assert len(X.tiles) == 12 and len(X.regular_tiles) == 5
    assert sorted(t.volume_multiple for t in X.regular_tiles) == [1, 1, 3, 3, 4]
    X = fundamental_region("B2")
    assert len(X.tiles) == 8 and sorted(t.volume_multiple for t in X.regular_tiles) == [2, 2, 4]
    X = fundamental_region("A1")
    assert X.total_volume_multiple() == 2


def test_normals_examples():
    rs = build_root_system("A1")
    assert normals(minus_id("A1")) == [(Fraction(-1, 2),), (Fraction(1, 2),)]
    rs = build_root_system("G2")
    assert normals(minus_id("G2")) == [tuple(Fraction(a, 2) for a in r) for r in rs.affine_roots]
    # B2 rotation by 90 degrees: both eigenvalues are +-i, det(id - w) = 2
    rs = build_root_system("B2")
    rot = next(w for w in enumerate_weyl(rs) if w.det_id_minus() == 2)
    P = eg.inverse(eg.mat_sub(eg.identity(2), eg.inverse(rot.matrix)))
    for i, n in enumerate(normals(rot, rs)):
        assert n == eg.normalize_vector(eg.mat_vec(P, rs.affine_roots[i]))
        assert rs.inner(n, rs.coroot(rs.affine_roots[i])) == 1
    with pytest.raises(NotRegularError):
        normals(finite("B2", ((1, 0), (0, 1))))


def test_identity_and_segments():
    rs = build_root_system("G2")
    t = identity_tile(rs)
    assert t.dim == 0 and set(t.vertices) == {(0, 0)}
    assert contains(t, (0, 0)) and not contains(t, (1, 0))
    amax = rs.highest_root.coeffs
    s = tile_of(AffineWeylElement((0, 0), root_reflection(rs, amax)))
    assert s.dim == 1 and set(s.vertices) == {(0, 0), amax}
    assert contains(s, tuple(Fraction(a, 2) for a in amax))
    assert not contains(s, amax) and closure_contains(s, amax)
    for i, a in enumerate(rs.simple_roots):
        s = tile_of(AffineWeylElement((0, 0), root_reflection(rs, a)))
        end = tuple(Fraction(c, rs.marks[i]) for c in rs.coroot(a))
        assert set(s.vertices) == {(0, 0), eg.normalize_vector(end)}


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3"])
def test_regular_tile_vertex_halfspace_consistency(label):
    rs = build_root_system(label)
    for w in affine_window(rs, 1)[:300]:
        t = tile_of(w)
        if not t.regular:
            continue
        for k, v in enumerate(t.vertices):
            vals = [eg.dot(f, v) + c for f, c in t.halfspaces]
            assert all(x >= 0 for x in vals)
            # vertex k is opposite face k and lies on all the others
            assert [i for i, x in enumerate(vals) if x == 0] == [i for i in range(rs.rank + 1) if i != k]


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
@given(data=st.data())
def test_contains_two_routes_agree(label, data):
    rs = build_root_system(label)
    w = data.draw(st.sampled_from(affine_window(rs, 1)))
    if data.draw(st.booleans()):
        # a point that is certainly inside: image of an alcove point
        x = tuple(Fraction(a) for a in rs.base_point)
        xi = eg.vec_sub(x, w.apply(x))
    else:
        xi = tuple(data.draw(rat) for _ in range(2))
    assert contains(tile_of(w), xi) == contains_by_preimage(w, xi)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_base_points(label):
    rs = build_root_system(label)
    b = rs.base_point
    for w in affine_window(rs, 1)[:200]:
        xi = eg.vec_sub(b, w.apply(b))
        t = tile_of(w)
        assert contains(t, xi)
        if t.regular:
            assert preimage(w, xi) == eg.normalize_vector(b)


def test_volumes():
    rs = build_root_system("G2")
    X = fundamental_region(rs)
    for t in X.regular_tiles:
        assert volume(t) == t.volume_multiple == t.element.linear.det_id_minus()
    assert sum(volume(t) for t in X.regular_tiles) == len(X.tiles)
    with pytest.raises(NotRegularError):
        volume(identity_tile(rs))


def test_cones():
    rs = build_root_system("A2")
    d_id = waldspurger_cone(enumerate_weyl(rs)[0])
    assert cone_contains(d_id, (0, 0)) and not cone_contains(d_id, (1, 0))
    for r in rs.positive_roots:
        s = waldspurger_cone(root_reflection(rs, r.coeffs))
        assert cone_contains(s, eg.vec_scale(Fraction(5, 2), r.coeffs))
        assert not cone_contains(s, eg.vec_scale(-1, r.coeffs))


@pytest.mark.parametrize("label", ["A2", "B2"])
@given(data=st.data())
def test_cone_images_found_once(label, data):
    rs = build_root_system(label)
    W = enumerate_weyl(rs)
    w = data.draw(st.sampled_from(W))
    # random point of the open chamber: positive combination of fundamental coweights
    coef = [data.draw(st.fractions(min_value=Fraction(1, 50), max_value=3, max_denominator=50))
            for _ in range(2)]
    x = eg.vec_add(eg.vec_scale(coef[0], rs.coweights[0]), eg.vec_scale(coef[1], rs.coweights[1]))
    xi = eg.vec_sub(x, w.apply(x))
    holders = [v for v in W if cone_contains(waldspurger_cone(v), xi)]
    assert holders == [w]
