import pytest

import laumon


def test_enumerate_matches_kostant():
    pts = laumon.enumerate_points(3, [1, 1])
    assert pts == [[[1], [0, 1]], [[1], [1, 0]]]
    assert laumon.kostant_count(3, [1, 1]) == 2
    assert laumon.kostant_count(3, [2, 1]) == 2


def test_tangent_character_matches_oracle():
    c = laumon.characters(2, [[1]])
    assert c["tangent"] == c["oracle"]
    assert len(c["tangent"]) == 2


def test_bad_input_raises():
    with pytest.raises(ValueError):
        laumon.enumerate_points(3, [1])
    with pytest.raises(ValueError):
        laumon.run_suite("nope", 2, 1)


def test_relations_suite_passes():
    rep = laumon.run_suite("relations", 3, 2)
    assert rep["fail"] == 0
    assert rep["pass"] > 0
    assert all(r["status"] in ("pass", "skipped-out-of-box") for r in rep["records"])


def test_convention_b_fails_two_path():
    assert laumon.run_suite("two_path", 2, 2, convention="B")["fail"] > 0


def test_whittaker_pairing():
    w = laumon.whittaker(3, [1, 1])
    assert w["pairing_matches"]
    assert w["k"]["degree"] == [1, 1]


def test_toda_verdict():
    v = laumon.toda_calibration(2, 3)
    assert v["passes"]
    assert v["sigma"] == -1


def test_mrak_randomized_is_seeded():
    a = laumon.run_suite("mrak", 5, 2, seed=7, i=4)
    b = laumon.run_suite("mrak", 5, 2, seed=7, i=4)
    assert a == b
    assert a["fail"] == 0
