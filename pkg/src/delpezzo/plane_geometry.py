"""Plane point configurations, general position, and curve interpolation.

Sections of exceptional classes are realized as plane curves of prescribed
degree with prescribed multiplicities at the blown-up points; multiplicity b
is imposed through the vanishing of all order-(b-1) partial derivatives
(characteristic 0, so the lower orders follow by the Euler relation).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import List, Sequence, Tuple

from .enumeration import classify_family
from .errors import ConfigError, DegeneracyError, SamplingError
from .exactalg import (
    PlanePoly,
    Rat,
    monomial_basis,
    nullspace,
    rank,
)
from .lattice import MAX_R, MIN_R, PicClass, degree, intersect, is_nef

Point = Tuple[Rat, Rat, Rat]

DEFAULT_COORD_BOUND = 20
DEFAULT_RETRY_CAP = 1000


def _normalize_point(coords: Sequence[Rat]) -> Point:
    vals = tuple(Fraction(c) for c in coords)
    if len(vals) != 3:
        raise ConfigError("a projective point needs exactly 3 coordinates")
    lead = next((v for v in vals if v != 0), None)
    if lead is None:
        raise ConfigError("(0:0:0) is not a projective point")
    return tuple(v / lead for v in vals)  # type: ignore[return-value]


@dataclass(frozen=True)
class PointConfig:
    """r points of the projective plane with exact rational coordinates.

    Points are stored normalized (first nonzero coordinate = 1) and must be
    pairwise distinct; call validate_general_position to check the full
    general-position conditions.
    """

    points: Tuple[Point, ...]
    seed: int | None = None

    def __post_init__(self) -> None:
        pts = tuple(_normalize_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not MIN_R <= self.r <= MAX_R:
            raise ConfigError(f"{self.r} points given; expected {MIN_R}..{MAX_R}")
        if len(set(pts)) != len(pts):
            raise ConfigError("points must be pairwise distinct")

    @property
    def r(self) -> int:
        return len(self.points)

    def drop_last(self) -> "PointConfig":
        return PointConfig(self.points[:-1])

    def to_json(self) -> str:
        def enc(v: Fraction):
            return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

        return json.dumps(
            {"r": self.r, "points": [[enc(c) for c in p] for p in self.points]}
        )

    @classmethod
    def from_json(cls, text: str) -> "PointConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict) or "points" not in data:
            raise ConfigError('expected an object with a "points" field')
        pts = []
        for raw in data["points"]:
            coords = []
            for v in raw:
                if isinstance(v, bool) or isinstance(v, float):
                    raise ConfigError(
                        f"coordinate {v!r} is not exact; use integers or 'a/b'"
                    )
                if isinstance(v, int):
                    coords.append(Fraction(v))
                elif isinstance(v, str):
                    try:
                        coords.append(Fraction(v))
                    except (ValueError, ZeroDivisionError) as exc:
                        raise ConfigError(f"bad rational {v!r}") from exc
                else:
                    raise ConfigError(f"bad coordinate {v!r}")
            pts.append(tuple(coords))
        cfg = cls(tuple(pts))
        if "r" in data and data["r"] != cfg.r:
            raise ConfigError(f'"r" field {data["r"]} != number of points {cfg.r}')
        return cfg


@dataclass(frozen=True)
class Violation:
    """One failed general-position condition with the point indices (1-based)."""

    kind: str  # "collinear" | "coconic" | "nodal_cubic"
    indices: Tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}{self.indices}"


def _condition_rows(
    d: int, mults: Sequence[int], points: Sequence[Point]
) -> List[List[Rat]]:
    basis = monomial_basis(d)
    rows: List[List[Rat]] = []
    for p, b in zip(points, mults):
        if b <= 0:
            continue
        x, y, z = p
        # all order-(b-1) derivatives of all basis monomials, evaluated at p
        for u in range(b - 1, -1, -1):
            for v in range(b - 1 - u, -1, -1):
                w = b - 1 - u - v
                row: List[Rat] = []
                for (i, j, k) in basis:
                    if i < u or j < v or k < w:
                        row.append(Fraction(0))
                        continue
                    c = 1
                    for t in range(u):
                        c *= i - t
                    for t in range(v):
                        c *= j - t
                    for t in range(w):
                        c *= k - t
                    row.append(c * x ** (i - u) * y ** (j - v) * z ** (k - w))
                rows.append(row)
    return rows


def interpolate(
    d: int, mults: Sequence[int], cfg: PointConfig
) -> List[PlanePoly]:
    """Basis of degree-d forms with multiplicity >= mults[i] at point i.

    The basis comes from a deterministic reduced-echelon kernel, so repeated
    calls give identical output.  An empty list means no such curves exist.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if len(mults) != cfg.r:
        raise ValueError("one multiplicity per configured point expected")
    rows = _condition_rows(d, mults, cfg.points)
    kernel = nullspace(rows, ncols=len(monomial_basis(d)))
    return [PlanePoly.from_coeff_vector(d, vec) for vec in kernel]


def validate_general_position(cfg: PointConfig) -> List[Violation]:
    """All violated general-position conditions (empty list = valid).

    Checks: no 3 points collinear; for r >= 6 no 6 points on a conic; for
    r = 8 the cubic through any 7 points, double at one of them, avoids the
    eighth point.
    """
    violations: List[Violation] = []
    pts = cfg.points
    for (i, p), (j, q), (k, s) in combinations(enumerate(pts, start=1), 3):
        if rank([list(p), list(q), list(s)]) < 3:
            violations.append(Violation("collinear", (i, j, k)))
    if cfg.r >= 6:
        quad = monomial_basis(2)
        for six in combinations(enumerate(pts, start=1), 6):
            rows = [
                [x**a * y**b * z**c for (a, b, c) in quad]
                for _, (x, y, z) in six
            ]
            if rank(rows) < 6:
                violations.append(Violation("coconic", tuple(i for i, _ in six)))
    if cfg.r == 8:
        for eighth in range(1, 9):
            others = [i for i in range(1, 9) if i != eighth]
            for dbl in others:
                mults = [0] * 8
                for i in others:
                    mults[i - 1] = 1
                mults[dbl - 1] = 2
                cubics = interpolate(3, mults, cfg)
                if len(cubics) != 1 or cubics[0].evaluate(pts[eighth - 1]) == 0:
                    violations.append(
                        Violation("nodal_cubic", (dbl, eighth))
                    )
    return violations


@dataclass(frozen=True)
class Section:
    """A normalized global section of an exceptional class, as a plane curve.

    For blown-up point classes l_i the plane model has no curve equation and
    the section is the constant 1.  Otherwise the polynomial is the unique
    generator of the interpolation space, normalized to leading graded-lex
    coefficient 1.
    """

    curve_class: PicClass
    poly: PlanePoly

    @cached_property
    def primitive(self) -> Tuple[dict, Fraction]:
        """Cached integer form (int_terms, s) with int_terms = s * poly."""
        return self.poly.primitive()


def section_of(e: PicClass, cfg: PointConfig) -> Section:
    """The unique normalized section of an exceptional class."""
    classify_family(e)  # raises ClassificationError for non-exceptional input
    if e.r != cfg.r:
        raise ValueError(f"class on X_{e.r} but configuration has {cfg.r} points")
    if e.coeffs[0] == 0:
        return Section(e, PlanePoly.constant(Fraction(1)))
    mults = [-c for c in e.coeffs[1:]]
    basis = interpolate(e.coeffs[0], mults, cfg)
    if len(basis) != 1:
        raise DegeneracyError(
            f"interpolation space of {e} has dimension {len(basis)}, not 1; "
            "configuration is not general enough"
        )
    return Section(e, basis[0].monic())


def h0_dim(d: PicClass) -> int:
    """Riemann-Roch dimension ((D,D) + (D,-K))/2 + 1 for nef effective D."""
    deg = degree(d)
    if deg < 0 or not is_nef(d):
        raise ValueError(f"{d} is not nef and effective; formula not asserted")
    self_int = intersect(d, d)
    assert (self_int + deg) % 2 == 0
    return (self_int + deg) // 2 + 1


def random_config(
    r: int,
    seed: int,
    coord_bound: int = DEFAULT_COORD_BOUND,
    retry_cap: int = DEFAULT_RETRY_CAP,
) -> PointConfig:
    """Deterministic seeded sampling of a valid general-position configuration.

    Integer coordinates are drawn uniformly from [-coord_bound, coord_bound];
    the whole configuration is resampled until it passes validation.
    """
    if coord_bound < 3:
        raise ValueError("coord_bound must be at least 3")
    rng = random.Random(seed)
    for _ in range(retry_cap):
        pts: List[Point] = []
        seen = set()
        ok = True
        for _ in range(r):
            for _ in range(retry_cap):
                raw = tuple(
                    Fraction(rng.randint(-coord_bound, coord_bound))
                    for _ in range(3)
                )
                if all(v == 0 for v in raw):
                    continue
                p = _normalize_point(raw)
                if p not in seen:
                    seen.add(p)
                    pts.append(p)
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        cfg = PointConfig(tuple(pts), seed=seed)
        if not validate_general_position(cfg):
            return cfg
    raise SamplingError(
        f"no valid configuration for r={r}, seed={seed} within {retry_cap} tries"
    )
