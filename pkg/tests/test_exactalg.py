"""Exact rational linear algebra and homogeneous plane polynomials."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from delpezzo.exactalg import (
    PlanePoly,
    det,
    monomial_basis,
    mul_int_terms,
    nullspace,
    rank,
    rref,
)

F = Fraction


def rational():
    return st.fractions(
        min_value=-20, max_value=20, max_denominator=7
    )


def matrices(n, m):
    return st.lists(
        st.lists(rational(), min_size=m, max_size=m), min_size=n, max_size=n
    )


def test_rank_known():
    assert rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert rank([]) == 0


def test_det_known():
    # 3x3 with determinant -306, cross-checked by cofactor expansion by hand
    m = [[F(6), F(1), F(1)], [F(4), F(-2), F(5)], [F(2), F(8), F(7)]]
    assert det(m) == F(-306)
    assert det([[F(1, 2), F(0)], [F(0), F(4)]]) == F(2)


@given(matrices(3, 3))
def test_det_vanishes_iff_rank_deficient(m):
    assert (det(m) == 0) == (rank(m) < 3)


@given(matrices(3, 5))
def test_nullspace_vectors_annihilate(m):
    ker = nullspace(m, ncols=5)
    assert len(ker) == 5 - rank(m)
    for v in ker:
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_rref_is_reduced():
    rows, pivots = rref([[F(2), F(4), F(6)], [F(1), F(3), F(5)]])
    assert list(pivots) == [0, 1]
    assert rows[0][0] == 1 and rows[1][1] == 1
    assert rows[0][1] == 0  # entry above the second pivot cleared


def test_nullspace_deterministic():
    m = [[F(1), F(1), F(1), F(1)]]
    assert nullspace(m) == nullspace(m)


def test_monomial_basis_size_and_order():
    # C(d+2, 2) monomials, graded-lex descending in (i, j)
    for d in range(0, 7):
        basis = monomial_basis(d)
        assert len(basis) == (d + 1) * (d + 2) // 2
        assert all(sum(m) == d for m in basis)
        assert list(basis) == sorted(basis, reverse=True)


def test_planepoly_roundtrip_and_eval():
    d = 2
    vec = [F(i + 1) for i in range(6)]
    p = PlanePoly.from_coeff_vector(d, vec)
    assert p.coeff_vector() == tuple(vec)
    # explicit evaluation: x^2+2xy+3xz+4y^2+5yz+6z^2 at (1,1,1) is 21
    assert p.evaluate((F(1), F(1), F(1))) == F(21)


def test_planepoly_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        PlanePoly({(1, 0, 0): F(1), (2, 0, 0): F(1)})


def test_planepoly_product_degree_adds():
    x = PlanePoly.variable(0)
    y = PlanePoly.variable(1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.degree == 2


def test_partial_derivative():
    x = PlanePoly.variable(0)
    z = PlanePoly.variable(2)
    p = x * x * z  # x^2 z
    assert p.partial(0) == PlanePoly({(1, 0, 1): F(2)})
    assert p.derivative((2, 0, 0)) == PlanePoly({(0, 0, 1): F(2)})
    assert p.derivative((0, 1, 0)).is_zero()


def test_monic_and_primitive():
    p = PlanePoly({(2, 0, 0): F(4), (0, 2, 0): F(6)})
    q = p.monic()
    assert q.terms[(2, 0, 0)] == 1
    int_terms, s = p.primitive()
    assert int_terms == {(2, 0, 0): 2, (0, 2, 0): 3}
    assert s * F(4) == 2


def test_mul_int_terms_matches_poly_product():
    a = {(1, 0, 0): 2, (0, 1, 0): -3}
    b = {(1, 0, 0): 1, (0, 0, 1): 5}
    pa = PlanePoly({k: F(v) for k, v in a.items()})
    pb = PlanePoly({k: F(v) for k, v in b.items()})
    prod = mul_int_terms(a, b)
    assert PlanePoly({k: F(v) for k, v in prod.items()}) == pa * pb
