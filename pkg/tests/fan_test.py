import json

import pytest

from hck.toric import (
    hirzebruch_fan,
    load_fan,
    make_fan,
    orbit_cones,
    parse_fan,
    product_fan,
    projective_space_fan,
)
from hck.utils.errors import FanError, RangeError
from tests.utils import brute_force_faces

P2_DOCUMENT = {
    "dim": 2,
    "rays": [[1, 0], [0, 1], [-1, -1]],
    "max_cones": [[0, 1], [0, 2], [1, 2]],
}


def test_parse_p2(p2_fan):
    fan = parse_fan(P2_DOCUMENT)
    assert fan == p2_fan
    assert fan.rays == ((1, 0), (0, 1), (-1, -1))
    assert parse_fan(json.dumps(P2_DOCUMENT)) == fan


def test_parse_p1xp1(p1xp1_fan):
    document = {
        "dim": 2,
        "rays": [[1, 0], [-1, 0], [0, 1], [0, -1]],
        "max_cones": [[0, 2], [0, 3], [1, 2], [1, 3]],
    }
    assert parse_fan(document) == p1xp1_fan


@pytest.mark.parametrize(
    "document,message",
    [
        ({**P2_DOCUMENT, "rays": [[2, 0], [0, 1], [-1, -1]]}, "not primitive"),
        ({**P2_DOCUMENT, "rays": [[1, 0], [1, 0], [-1, -1]]}, "duplicate"),
        ({**P2_DOCUMENT, "rays": [[0, 0], [0, 1], [-1, -1]]}, "zero"),
        ({**P2_DOCUMENT, "rays": [[1, 0, 0], [0, 1], [-1, -1]]}, "entries"),
        ({**P2_DOCUMENT, "rays": [[1, 0], [1, 2], [-1, -1]]}, "not smooth"),
        ({**P2_DOCUMENT, "max_cones": [[0, 1], [1, 2]]}, "expected 2"),
        ({**P2_DOCUMENT, "max_cones": [[0, 1], [1, 2], [0, 3]]}, "missing ray"),
        ({**P2_DOCUMENT, "max_cones": [[0, 1], [1, 2], [0]]}, "full-dimensional"),
        ({**P2_DOCUMENT, "max_cones": [[0, 1], [1, 0], [1, 2]]}, "twice"),
        ({**P2_DOCUMENT, "max_cones": []}, "no maximal cones"),
        ({**P2_DOCUMENT, "name": "P2"}, "Unknown"),
        ({"dim": 2, "rays": [[1, 0]]}, "Missing"),
        ({**P2_DOCUMENT, "dim": True}, "dim"),
        ({**P2_DOCUMENT, "rays": [[1, 0], [0, 1.5], [-1, -1]]}, "rays"),
        ([1, 2], "object"),
        ("{", "JSON"),
        pytest.param("[" * 100000, "JSON", id="nested-too-deep"),
    ],
)
def test_invalid_fans(document, message):
    with pytest.raises(FanError, match=message):
        parse_fan(document)


def test_load_fan(tmp_path, write_fan, p1xp1_fan):
    assert load_fan(write_fan(p1xp1_fan)) == p1xp1_fan
    with pytest.raises(FanError):
        load_fan(tmp_path / "missing.json")


def test_load_fan_rejects_undecodable_bytes(tmp_path):
    path = tmp_path / "binary.json"
    path.write_bytes(b'{"dim": 1}\xff')
    with pytest.raises(FanError, match="Cannot read"):
        load_fan(path)


def test_to_document_round_trip(sample_fans):
    for fan in sample_fans:
        assert parse_fan(fan.to_document()) == fan


def test_standard_fans():
    p3 = projective_space_fan(3)
    assert len(p3.rays) == 4
    assert len(p3.max_cones) == 4
    f2 = hirzebruch_fan(2)
    assert f2.rays == ((1, 0), (0, 1), (-1, 2), (0, -1))
    assert product_fan(projective_space_fan(1), projective_space_fan(2)).dim == 3
    with pytest.raises(RangeError):
        projective_space_fan(0)
    with pytest.raises(RangeError):
        hirzebruch_fan(-1)


def test_make_fan_sorts_ray_indices():
    fan = make_fan(2, [[1, 0], [0, 1], [-1, -1]], [[1, 0], [2, 1], [2, 0]])
    assert fan.max_cones == ((0, 1), (1, 2), (0, 2))


def test_orbit_cones(p2_fan, p1xp1_fan):
    assert orbit_cones(p2_fan, 0) == [(0, 1), (0, 2), (1, 2)]
    assert orbit_cones(p2_fan, 1) == [(0,), (1,), (2,)]
    assert orbit_cones(p2_fan, 2) == [()]
    assert len(orbit_cones(p1xp1_fan, 1)) == 4
    with pytest.raises(RangeError):
        orbit_cones(p2_fan, 3)


def test_orbit_cones_match_brute_force(sample_fans):
    for fan in sample_fans:
        for p in range(fan.dim + 1):
            cones = orbit_cones(fan, p)
            assert cones == sorted(brute_force_faces(fan, fan.dim - p))
