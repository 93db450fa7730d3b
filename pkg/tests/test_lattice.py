"""Picard lattice basics: bilinear form, reflections, embeddings."""
import pytest
from hypothesis import given, strategies as st

from delpezzo.errors import ContractionError, NotARootError
from delpezzo.lattice import (
    PicClass,
    canonical_class,
    canonical_key,
    contract_last,
    degree,
    embed_blowdown,
    intersect,
    is_nef,
    line_class,
    minus_k,
    point_class,
    reflect,
    simple_roots,
    zero,
)


def classes(r):
    return st.builds(
        PicClass,
        st.tuples(*([st.integers(min_value=-9, max_value=9)] * (r + 1))),
    )


def test_basis_intersections():
    r = 5
    l0 = line_class(r)
    assert intersect(l0, l0) == 1
    for i in range(1, r + 1):
        li = point_class(r, i)
        assert intersect(li, li) == -1
        assert intersect(l0, li) == 0
        for j in range(i + 1, r + 1):
            assert intersect(li, point_class(r, j)) == 0


def test_canonical_class_square():
    # (K, K) = 9 - r for every r
    for r in range(3, 9):
        k = canonical_class(r)
        assert intersect(k, k) == 9 - r
        assert minus_k(r) == -k
        assert degree(minus_k(r)) == 9 - r


def test_degree_of_basis():
    for r in range(3, 9):
        assert degree(line_class(r)) == 3
        for i in range(1, r + 1):
            assert degree(point_class(r, i)) == 1


@given(classes(4), classes(4), classes(4))
def test_bilinearity(a, b, c):
    assert intersect(a + b, c) == intersect(a, c) + intersect(b, c)
    assert intersect(a, b) == intersect(b, a)
    assert intersect(3 * a, b) == 3 * intersect(a, b)


@given(classes(5))
def test_reflection_is_involutive_isometry(x):
    alphas = simple_roots(5)
    for alpha in alphas:
        y = reflect(x, alpha)
        assert reflect(y, alpha) == x
        assert intersect(y, y) == intersect(x, x)
        assert degree(y) == degree(x)


def test_simple_roots_are_roots():
    for r in range(3, 9):
        for alpha in simple_roots(r):
            assert intersect(alpha, alpha) == -2
            assert intersect(alpha, canonical_class(r)) == 0
        assert len(simple_roots(r)) == r


def test_reflect_rejects_non_roots():
    with pytest.raises(NotARootError):
        reflect(line_class(4), line_class(4))


@given(classes(4), classes(4))
def test_embed_preserves_intersection(a, b):
    assert intersect(embed_blowdown(a), embed_blowdown(b)) == intersect(a, b)


def test_embed_contract_roundtrip():
    d = PicClass((2, -1, 0, -1, 0))
    assert contract_last(embed_blowdown(d)) == d
    with pytest.raises(ContractionError):
        contract_last(PicClass((1, 0, 0, 0, -1)))


def test_canonical_key_orders_by_degree_first():
    r = 4
    assert canonical_key(point_class(r, 1)) < canonical_key(minus_k(r))


def test_zero_and_arithmetic():
    r = 3
    a = PicClass((1, -1, 0, 0))
    assert a + zero(r) == a
    assert a - a == zero(r)
    assert -a == PicClass((-1, 1, 0, 0))
    assert 2 * a == a + a


def test_is_nef():
    assert is_nef(minus_k(5))
    assert is_nef(line_class(5) - point_class(5, 1))
    assert not is_nef(point_class(5, 1))
