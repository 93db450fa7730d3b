"""Point configurations, general position, interpolation, sections."""
from fractions import Fraction

import pytest

from delpezzo.enumeration import exceptional_curves
from delpezzo.errors import ConfigError, SamplingError
from delpezzo.lattice import PicClass, minus_k, point_class
from delpezzo.plane_geometry import (
    PointConfig,
    h0_dim,
    interpolate,
    random_config,
    section_of,
    validate_general_position,
)

F = Fraction


def square_config():
    # four points of a projective frame: no 3 collinear by construction
    return PointConfig(
        (
            (F(1), F(0), F(0)),
            (F(0), F(1), F(0)),
            (F(0), F(0), F(1)),
            (F(1), F(1), F(1)),
        )
    )


def test_points_normalized_and_distinct():
    cfg = PointConfig(((F(2), F(4), F(0)), (F(0), F(3), F(0)), (F(0), F(0), F(5))))
    assert cfg.points[0] == (F(1), F(2), F(0))
    with pytest.raises(ConfigError):
        PointConfig(((F(1), F(0), F(0)), (F(2), F(0), F(0)), (F(0), F(1), F(0))))


def test_json_roundtrip_and_rejections():
    cfg = random_config(5, seed=0)
    again = PointConfig.from_json(cfg.to_json())
    assert again.points == cfg.points
    with pytest.raises(ConfigError):
        PointConfig.from_json('{"r": 3, "points": [[1, 0.5, 0], [0,1,0], [0,0,1]]}')
    with pytest.raises(ConfigError):
        PointConfig.from_json('{"r": 4, "points": [[1,0,0],[0,1,0],[0,0,1]]}')
    half = PointConfig.from_json('{"points": [["1/2",1,0],[0,1,0],[0,0,1]]}')
    assert half.points[0] == (F(1), F(2), F(0))


def test_collinear_violation_detected():
    cfg = PointConfig(
        ((F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(1), F(1), F(0)), (F(0), F(0), F(1)))
    )
    v = validate_general_position(cfg)
    assert any(x.kind == "collinear" and x.indices == (1, 2, 3) for x in v)


def test_coconic_violation_detected():
    # six points on the conic xz = y^2
    pts = [(1, 0, 0), (1, 1, 1), (1, 2, 4), (1, 3, 9), (1, -1, 1), (0, 0, 1)]
    cfg = PointConfig(tuple(tuple(F(c) for c in p) for p in pts))
    v = validate_general_position(cfg)
    assert any(x.kind == "coconic" for x in v)
    assert not any(x.kind == "collinear" for x in v)


def test_interpolate_line_through_two_points():
    cfg = square_config()
    basis = interpolate(1, [1, 1, 0, 0], cfg)
    assert len(basis) == 1
    line = basis[0]
    assert line.evaluate(cfg.points[0]) == 0
    assert line.evaluate(cfg.points[1]) == 0
    assert line.evaluate(cfg.points[2]) != 0


def test_interpolate_conic_through_five():
    cfg = random_config(5, seed=3)
    basis = interpolate(2, [1] * 5, cfg)
    assert len(basis) == 1
    for p in cfg.points:
        assert basis[0].evaluate(p) == 0


def test_interpolate_multiplicity_two():
    cfg = random_config(7, seed=1)
    mults = [2, 1, 1, 1, 1, 1, 1]
    basis = interpolate(3, mults, cfg)
    assert len(basis) == 1
    cubic = basis[0]
    p = cfg.points[0]
    for var in range(3):
        assert cubic.partial(var).evaluate(p) == 0


def test_section_of_each_class_vanishes_correctly():
    r = 5
    cfg = random_config(r, seed=4)
    for e in exceptional_curves(r):
        s = section_of(e, cfg)
        if e.coeffs[0] == 0:
            assert s.poly.degree == 0
            continue
        assert s.poly.degree == e.coeffs[0]
        for i, p in enumerate(cfg.points, start=1):
            mult = -e.coeffs[i]
            if mult >= 1:
                assert s.poly.evaluate(p) == 0


def test_h0_dim():
    assert h0_dim(minus_k(6)) == 4
    assert h0_dim(minus_k(8)) == 2
    with pytest.raises(ValueError):
        h0_dim(point_class(4, 1))


@pytest.mark.parametrize("r", range(3, 9))
def test_random_config_is_valid_and_deterministic(r):
    bound = 7 if r == 8 else 20
    cfg1 = random_config(r, seed=10, coord_bound=bound)
    cfg2 = random_config(r, seed=10, coord_bound=bound)
    assert cfg1.points == cfg2.points
    assert validate_general_position(cfg1) == []


def test_sampling_gives_up():
    with pytest.raises(SamplingError):
        random_config(8, seed=1, coord_bound=3, retry_cap=1)
