import pytest

from octog2 import roots as rt
from octog2.roots import ALL_ROOTS, BETA, GAMMA, RootLabel


def test_cartan_matrix():
    assert rt.cartan_matrix() == ((2, -1), (-3, 2))


def test_coordinates():
    assert rt.root_coordinates(BETA.prime()) == (-1, 1)
    assert rt.root_coordinates(-GAMMA.prime()) == (0, 1)
    assert rt.root_coordinates(-BETA.prime(2)) == (1, 0)
    assert rt.label_of((1, 1)) is None and not rt.is_root((1, 1))


def test_frobenius_rotation_matches_labels():
    for r in ALL_ROOTS:
        assert rt.frobenius_coordinates(r.coordinates) == r.prime().coordinates
        assert rt.label_of(tuple(-c for c in r.coordinates)) == -r
    v = (5, -3)
    assert rt.frobenius_coordinates(rt.frobenius_coordinates(rt.frobenius_coordinates(v))) == v


def test_positive_roots_and_lengths():
    assert set(rt.POSITIVE_ROOTS) == {BETA, GAMMA, BETA.prime(), -BETA.prime(2), GAMMA.prime(2), -GAMMA.prime()}
    for r in ALL_ROOTS:
        assert rt.squared_length(r.coordinates) == (2 if r.is_short else 6)
    assert rt.simple_root_expansion((-1, 1)) == (1, 1)


def test_parse_and_render():
    for r in ALL_ROOTS:
        assert RootLabel.parse(str(r)) == r
    assert RootLabel.parse("-b''") == -BETA.prime(2)
    with pytest.raises(ValueError):
        RootLabel.parse("delta")
    with pytest.raises(ValueError):
        RootLabel("medium")


def test_dominance_and_orientation():
    assert rt.is_dominated_by((0, 0), (1, 0))
    assert not rt.is_dominated_by((1, 0), (0, 0))
    assert rt.anticlockwise(BETA.coordinates, BETA.prime().coordinates)
    assert not rt.anticlockwise(BETA.prime().coordinates, BETA.coordinates)
