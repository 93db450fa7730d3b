"""Distinguished finite subsets of the Picard lattice.

Exceptional curves, roots, rulings and their fibers, plus the family
classification of exceptional curves (points, lines, conics, cubics with a
double point, quartics, quintics, sextics).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from .errors import ClassificationError, DelPezzoError
from .lattice import (
    MAX_R,
    MIN_R,
    PicClass,
    canonical_key,
    degree,
    intersect,
    line_class,
    minus_k,
    point_class,
)

N_EXCEPTIONAL = {3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}

FAMILY_TAGS = (
    "point",
    "line",
    "conic",
    "cubic",
    "quartic",
    "quintic",
    "sextic",
)

# (plane degree, multiplicity multiset) per family; index data records which
# blown-up points carry which multiplicity.
_FAMILY_PATTERNS = {
    "point": (0, ()),
    "line": (1, (1, 1)),
    "conic": (2, (1, 1, 1, 1, 1)),
    "cubic": (3, (2, 1, 1, 1, 1, 1, 1)),
    "quartic": (4, (2, 2, 2, 1, 1, 1, 1, 1)),
    "quintic": (5, (2, 2, 2, 2, 2, 2, 1, 1)),
    "sextic": (6, (3, 2, 2, 2, 2, 2, 2, 2)),
}

# (heavy multiplicity, light multiplicity) per family; the sextic family has
# light multiplicity 2 rather than 1.
_FAMILY_MULTS = {
    "point": (1, 1),
    "line": (1, 1),
    "conic": (1, 1),
    "cubic": (2, 1),
    "quartic": (2, 1),
    "quintic": (2, 1),
    "sextic": (3, 2),
}


@dataclass(frozen=True)
class CurveFamily:
    """Family tag plus the participating point indices.

    ``heavy`` lists the points of higher multiplicity (the double points for
    cubics/quartics/quintics, the triple point for sextics); ``light`` lists
    the remaining participating points.  For the "point" family ``heavy``
    holds the single blown-up point index.
    """

    tag: str
    heavy: Tuple[int, ...]
    light: Tuple[int, ...]

    def to_class(self, r: int) -> PicClass:
        if self.tag == "point":
            return point_class(r, self.heavy[0])
        plane_deg, _ = _FAMILY_PATTERNS[self.tag]
        coeffs = [plane_deg] + [0] * r
        heavy_mult, light_mult = _FAMILY_MULTS[self.tag]
        for i in self.heavy:
            coeffs[i] = -heavy_mult
        for i in self.light:
            coeffs[i] = -light_mult
        return PicClass(tuple(coeffs))


def classify_family(e: PicClass) -> CurveFamily:
    """Match an exceptional class to its unique plane-curve family."""
    if intersect(e, e) != -1 or degree(e) != 1:
        raise ClassificationError(f"{e} is not an exceptional class")
    m0 = e.coeffs[0]
    if m0 == 0:
        idx = [i for i, c in enumerate(e.coeffs) if i >= 1 and c == 1]
        if len(idx) != 1 or any(c not in (0, 1) for c in e.coeffs[1:]):
            raise ClassificationError(f"{e} matches no family pattern")
        return CurveFamily("point", (idx[0],), ())
    by_mult: Dict[int, List[int]] = {}
    for i, c in enumerate(e.coeffs[1:], start=1):
        if c > 0:
            raise ClassificationError(f"{e} matches no family pattern")
        if c < 0:
            by_mult.setdefault(-c, []).append(i)
    mult_multiset = tuple(
        sorted((m for m, pts in by_mult.items() for _ in pts), reverse=True)
    )
    for tag, (plane_deg, pattern) in _FAMILY_PATTERNS.items():
        if tag != "point" and m0 == plane_deg and mult_multiset == pattern:
            heavy_mult, light_mult = _FAMILY_MULTS[tag]
            heavy = tuple(by_mult.get(heavy_mult, [])) if heavy_mult > light_mult else ()
            light = tuple(by_mult.get(light_mult, []))
            return CurveFamily(tag, heavy, light)
    raise ClassificationError(f"{e} matches no family pattern")


@lru_cache(maxsize=None)
def exceptional_curves(r: int) -> Tuple[PicClass, ...]:
    """All classes E with (E,E) = -1 and (E,-K) = 1, in canonical order.

    Generated family by family: blown-up points, lines through point pairs,
    conics through 5 points, cubics with one double point through 7, and the
    three r=8 families of quartics, quintics and sextics.
    """
    if not MIN_R <= r <= MAX_R:
        raise ValueError(f"r={r} outside {MIN_R}..{MAX_R}")
    pts = range(1, r + 1)
    out: List[PicClass] = [point_class(r, i) for i in pts]
    out += [CurveFamily("line", (), pair).to_class(r) for pair in combinations(pts, 2)]
    if r >= 5:
        out += [
            CurveFamily("conic", (), five).to_class(r)
            for five in combinations(pts, 5)
        ]
    if r >= 7:
        for seven in combinations(pts, 7):
            for dbl in seven:
                rest = tuple(i for i in seven if i != dbl)
                out.append(CurveFamily("cubic", (dbl,), rest).to_class(r))
    if r == 8:
        for triple in combinations(pts, 3):
            rest = tuple(i for i in pts if i not in triple)
            out.append(CurveFamily("quartic", triple, rest).to_class(r))
        for six in combinations(pts, 6):
            rest = tuple(i for i in pts if i not in six)
            out.append(CurveFamily("quintic", six, rest).to_class(r))
        for trip in pts:
            rest = tuple(i for i in pts if i != trip)
            out.append(CurveFamily("sextic", (trip,), rest).to_class(r))
    return tuple(sorted(out, key=canonical_key))


def _bounded_vectors(
    n: int, total: int, sq: int, lo: int, hi: int
) -> List[Tuple[int, ...]]:
    """Integer vectors of length n with given sum and sum of squares."""
    out: List[Tuple[int, ...]] = []
    vec: List[int] = []
    maxsq = max(lo * lo, hi * hi)

    def rec(k: int, s: int, q: int) -> None:
        if k == n:
            if s == 0 and q == 0:
                out.append(tuple(vec))
            return
        rem = n - k - 1
        for v in range(lo, hi + 1):
            q2 = q - v * v
            if q2 < 0:
                continue
            s2 = s - v
            if not rem * lo <= s2 <= rem * hi:
                continue
            if q2 > rem * maxsq:
                continue
            if rem > 0 and s2 * s2 > q2 * rem:
                continue
            if rem == 0 and (s2 != 0 or q2 != 0):
                continue
            vec.append(v)
            rec(k + 1, s2, q2)
            vec.pop()

    rec(0, total, sq)
    return out


def exceptional_curves_diophantine(r: int) -> Tuple[PicClass, ...]:
    """Independent route: bounded search for (E,E) = -1, (E,-K) = 1.

    The plane degree is bounded by 6 (the family list ends at sextics) and
    each |m_i| by sqrt(m_0^2 + 1) <= 7.
    """
    out: List[PicClass] = []
    for m0 in range(0, 7):
        sq = m0 * m0 + 1
        total = 1 - 3 * m0  # from (E, -K) = 3*m0 + sum(m_i) = 1
        for tail in _bounded_vectors(r, total, sq, -7, 7):
            out.append(PicClass((m0,) + tail))
    return tuple(sorted(out, key=canonical_key))


@lru_cache(maxsize=None)
def roots(r: int) -> Tuple[PicClass, ...]:
    """All classes a with (a,a) = -2 and (a,K) = 0, in canonical order.

    Bounded search with |m_0| <= 3; agreement with the Weyl-orbit oracle is
    asserted in the test suite rather than trusted.
    """
    if not MIN_R <= r <= MAX_R:
        raise ValueError(f"r={r} outside {MIN_R}..{MAX_R}")
    out: List[PicClass] = []
    for m0 in range(-3, 4):
        sq = m0 * m0 + 2
        total = -3 * m0  # from (a, -K) = 0
        for tail in _bounded_vectors(r, total, sq, -3, 3):
            out.append(PicClass((m0,) + tail))
    return tuple(sorted(out, key=canonical_key))


@dataclass(frozen=True)
class Ruling:
    """A class D with (D,D) = 0 and degree 2, plus its reducible fibers.

    Each fiber is an unordered pair {E, E'} of exceptional classes with
    E + E' = D and (E, E') = 1, stored with the canonically smaller class
    first.
    """

    cls: PicClass
    fibers: Tuple[Tuple[PicClass, PicClass], ...]


def _ruling_lattice_solutions(r: int) -> Tuple[PicClass, ...]:
    """All lattice classes with (D,D) = 0 and (D,-K) = 2.

    Bound: r*m_0^2 >= (sum m_i)^2 = (2 - 3*m_0)^2 by Cauchy-Schwarz forces
    1 <= m_0 <= 11 for r <= 8, and |m_i| <= m_0.
    """
    out: List[PicClass] = []
    for m0 in range(0, 12):
        if r * m0 * m0 < (2 - 3 * m0) ** 2:
            continue
        for tail in _bounded_vectors(r, 2 - 3 * m0, m0 * m0, -m0, m0):
            out.append(PicClass((m0,) + tail))
    return tuple(sorted(out, key=canonical_key))


@lru_cache(maxsize=None)
def rulings(r: int) -> Tuple[Ruling, ...]:
    """All rulings with their fibers, in canonical order of the class.

    Every sum E + E' of exceptional classes with (E, E') = 1 is collected,
    and the resulting set of classes is checked against the direct lattice
    enumeration of (D,D) = 0, degree 2; a mismatch would mean the two
    characterizations of rulings are not equivalent and raises an error.
    """
    curves = exceptional_curves(r)
    fibers: Dict[PicClass, List[Tuple[PicClass, PicClass]]] = {}
    for e1, e2 in combinations(curves, 2):
        if intersect(e1, e2) == 1:
            fibers.setdefault(e1 + e2, []).append((e1, e2))
    lattice_solutions = _ruling_lattice_solutions(r)
    if sorted(fibers, key=canonical_key) != list(lattice_solutions):
        raise DelPezzoError(
            "ruling characterizations disagree: sum-of-pairs classes != "
            "lattice solutions of (D,D)=0, deg=2"
        )
    return tuple(
        Ruling(d, tuple(sorted(fibers[d], key=lambda p: canonical_key(p[0]))))
        for d in lattice_solutions
    )


def pairs_with_intersection(
    r: int, k: int, total: PicClass
) -> List[Tuple[PicClass, PicClass]]:
    """Unordered exceptional pairs {E, E'} with (E,E') = k and E + E' = total."""
    curves = exceptional_curves(r)
    out = []
    for e1, e2 in combinations(curves, 2):
        if e1 + e2 == total and intersect(e1, e2) == k:
            out.append((e1, e2))
    return out


# Two reference decompositions of -K into exceptional summands per surface,
# used by the degree-1 generation checks.
_MINUS_K_DECOMPOSITIONS = {
    4: (
        ((1, -1, -1, 0, 0), (1, 0, 0, -1, -1), (1, 0, -1, -1, 0),
         (0, 0, 1, 0, 0), (0, 0, 0, 1, 0)),
        ((1, -1, 0, -1, 0), (1, 0, -1, 0, -1), (1, 0, -1, -1, 0),
         (0, 0, 1, 0, 0), (0, 0, 0, 1, 0)),
    ),
    5: (
        ((1, -1, -1, 0, 0, 0), (1, 0, 0, -1, -1, 0), (1, 0, 0, 0, -1, -1),
         (0, 0, 0, 0, 1, 0)),
        ((1, -1, 0, 0, 0, -1), (1, 0, -1, -1, 0, 0), (1, 0, 0, -1, -1, 0),
         (0, 0, 0, 1, 0, 0)),
    ),
    6: (
        ((1, -1, -1, 0, 0, 0, 0), (1, 0, 0, -1, -1, 0, 0),
         (1, 0, 0, 0, 0, -1, -1)),
        ((1, -1, 0, 0, 0, 0, -1), (1, 0, 0, 0, -1, -1, 0),
         (1, 0, -1, -1, 0, 0, 0)),
    ),
    7: (
        ((2, -1, -1, -1, -1, -1, 0, 0), (1, 0, 0, 0, 0, 0, -1, -1)),
        ((2, 0, 0, -1, -1, -1, -1, -1), (1, -1, -1, 0, 0, 0, 0, 0)),
    ),
}


def verify_anticanonical_decompositions(r: int) -> bool:
    """Check the reference -K decompositions as exact lattice identities."""
    if r not in _MINUS_K_DECOMPOSITIONS:
        raise ValueError(f"no reference decompositions for r={r}")
    curve_set = set(exceptional_curves(r))
    for decomposition in _MINUS_K_DECOMPOSITIONS[r]:
        summands = [PicClass(c) for c in decomposition]
        if any(s not in curve_set for s in summands):
            return False
        total = summands[0]
        for s in summands[1:]:
            total = total + s
        if total != minus_k(r):
            return False
    return True


def disjoint_partner_count(r: int, e: PicClass) -> int:
    """Number of exceptional classes E' != E with (E, E') = 0."""
    return sum(
        1 for e2 in exceptional_curves(r) if e2 != e and intersect(e, e2) == 0
    )


def ruling_classes(r: int) -> Tuple[PicClass, ...]:
    return tuple(rl.cls for rl in rulings(r))


def family_census(r: int) -> Dict[str, int]:
    """Count of exceptional curves per family."""
    census: Dict[str, int] = {}
    for e in exceptional_curves(r):
        tag = classify_family(e).tag
        census[tag] = census.get(tag, 0) + 1
    return census
