"""Weyl orbit BFS: transitivity on curves, roots and rulings."""
import pytest

from delpezzo.enumeration import exceptional_curves, roots, ruling_classes
from delpezzo.errors import NotInOrbitError, OrbitOverflowError
from delpezzo.lattice import (
    line_class,
    minus_k,
    point_class,
    simple_roots,
)
from delpezzo.weyl import (
    FUNDAMENTAL_DIMS,
    apply_word,
    orbit,
    weight_vector,
    word_to,
)


@pytest.mark.parametrize("r", range(3, 9))
def test_orbit_of_point_class_is_all_curves(r):
    o = orbit(point_class(r, r))
    assert o.elements == frozenset(exceptional_curves(r))


@pytest.mark.parametrize("r", range(4, 9))
def test_orbit_of_first_simple_root_is_all_roots(r):
    o = orbit(simple_roots(r)[0])
    assert o.elements == frozenset(roots(r))


def test_r3_root_system_has_two_components():
    # A2 x A1: the first simple root reaches 6 roots, the third the other 2
    o1 = orbit(simple_roots(3)[0])
    o3 = orbit(simple_roots(3)[2])
    assert len(o1) == 6 and len(o3) == 2
    assert o1.elements | o3.elements == frozenset(roots(3))


@pytest.mark.parametrize("r", range(3, 9))
def test_orbit_of_pencil_class_is_all_rulings(r):
    o = orbit(line_class(r) - point_class(r, 1))
    assert o.elements == frozenset(ruling_classes(r))


def test_words_reproduce_elements():
    o = orbit(point_class(6, 6))
    for x, w in o.words.items():
        assert apply_word(o.seed, w) == x


def test_word_to_and_missing_target():
    r = 4
    w = word_to(point_class(r, 4), point_class(r, 1))
    assert apply_word(point_class(r, 4), w) == point_class(r, 1)
    with pytest.raises(NotInOrbitError):
        word_to(point_class(r, 4), line_class(r))


def test_anticanonical_class_is_fixed():
    for r in range(3, 9):
        assert len(orbit(minus_k(r))) == 1
        assert weight_vector(minus_k(r)) == (0,) * r


def test_orbit_cap_overflow():
    with pytest.raises(OrbitOverflowError):
        orbit(point_class(8, 8), cap=10)


def test_fundamental_dims_table():
    # nonzero-weight count of the last fundamental representation; for
    # r <= 7 it equals the curve count, for r = 8 curves + rank = dimension
    for r in range(4, 8):
        assert FUNDAMENTAL_DIMS[r] == len(exceptional_curves(r))
    assert FUNDAMENTAL_DIMS[8] == len(exceptional_curves(8)) + 8
