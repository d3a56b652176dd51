import json
from fractions import Fraction

import pytest

from weyltiles import serialize as ser
from weyltiles import verify
from weyltiles.locate import locate
from weyltiles.rootsys import build_root_system
from weyltiles.tiles import contains, tile_of
from weyltiles.weyl import identity_element


@pytest.mark.parametrize("name", sorted(verify.SUITES))
@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_suites_pass_small(name, label):
    rep = verify.run_suite(name, label, samples=60, seed=11)
    assert rep.passed, [(c.name, c.witness) for c in rep.failures()]
    json.dumps(rep.to_dict(), default=str)


@pytest.mark.parametrize("name", ["det_identity", "pairing", "partition", "symmetries",
                                  "segments", "lemme", "alphamax", "stiefel"])
def test_suites_pass_rank3(name):
    assert verify.run_suite(name, "A3", samples=40, seed=2).passed


def test_rank2_only():
    with pytest.raises(ValueError):
        verify.suite_face_classification("A3")


def test_deterministic_reports():
    a = verify.suite_partition("G2", samples=30, seed=5).to_dict()
    b = verify.suite_partition("G2", samples=30, seed=5).to_dict()
    assert a == b
    assert verify.suite_partition("G2", samples=30, seed=6).to_dict()["parameters"]["seed"] == 6


def test_sampling_is_exact():
    import random
    rng = random.Random(0)
    for _ in range(100):
        p = verify.sample_point(rng, 3, 3)
        assert all(isinstance(a, Fraction) and abs(a) <= 3 and a.denominator <= 997 for a in p)


def test_broken_locate_is_caught_with_replayable_witness(monkeypatch):
    monkeypatch.setattr(verify, "locate", lambda rs, xi: identity_element(rs))
    rep = verify.suite_partition("A2", samples=10, seed=1)
    assert not rep.passed
    w = rep.failures()[0].witness["violations"][0]
    xi = tuple(ser.parse_rational(a) for a in w["point"])
    # replay in isolation: the real answer holds the point, the bogus one does not
    assert contains(tile_of(locate("A2", xi)), xi)
    assert not contains(tile_of(identity_element("A2")), xi)


def test_broken_normals_are_caught(monkeypatch):
    real = verify.normals
    monkeypatch.setattr(verify, "normals", lambda w, rs: [tuple(2 * a for a in n) for n in real(w, rs)])
    assert not verify.suite_pairing("G2").passed


def test_walk_oracle_examples():
    rs = build_root_system("A1")
    # xi = -1/4 lies in -A = (-1/2, 0): w = id
    assert verify.alcove_walk(rs, (Fraction(-1, 4),)) == ((0,), ((1,),), False)
    assert verify.alcove_walk(rs, (0,))[2]
    lam, M, wall = verify.alcove_walk("G2", (Fraction(7, 3), Fraction(-5, 4)))
    assert not wall


def test_ray_interior_test():
    rs = build_root_system("G2")
    amax = rs.highest_root.coeffs
    assert verify.ray_in_interior_of_x(rs, (0, 0), amax)
    # pushing the origin away from alpha_max leaves X
    assert not verify.ray_in_interior_of_x(rs, (0, 0), tuple(-a for a in amax))


def test_segment_middle_root_g2():
    rs = build_root_system("G2")
    rep = verify.suite_segments(rs)
    assert rep.passed and rep.checks[0].detail["roots"] == 6


def test_face_classification_counts():
    for label in ("A2", "B2", "G2"):
        rep = verify.suite_face_classification(label)
        assert rep.passed
        d = rep.checks[0].detail
        assert d["horizontal"] > 0 and d["vertical"] > 0


def test_deformed_suite_accepts_matrix():
    S = ((Fraction(1, 5), Fraction(1, 10)), (0, Fraction(-1, 4)))
    assert verify.suite_deformed("B2", S=S, samples=50).passed
