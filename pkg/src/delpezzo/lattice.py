"""The Picard lattice Z^{r+1} of a blown-up projective plane.

Classes are integer vectors (m_0, m_1, ..., m_r) in the basis l_0 (line
class) and l_1..l_r (exceptional fibers over the blown-up points), with the
signature (1, -1, ..., -1) intersection form.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

from .errors import ContractionError, DimensionMismatchError, NotARootError

MIN_R = 3
MAX_R = 8


@dataclass(frozen=True)
class PicClass:
    """Divisor class m_0*l_0 + m_1*l_1 + ... + m_r*l_r on the surface X_r."""

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not MIN_R <= self.r <= MAX_R:
            raise ValueError(
                f"class has {len(coeffs)} coordinates; expected r+1 with "
                f"{MIN_R} <= r <= {MAX_R}"
            )

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "PicClass") -> "PicClass":
        _same_surface(self, other)
        return PicClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "PicClass") -> "PicClass":
        _same_surface(self, other)
        return PicClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "PicClass":
        return PicClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "PicClass":
        return PicClass(tuple(n * a for a in self.coeffs))

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            parts.append(f"{sign}{'' if mag == 1 else mag}l{i}")
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"PicClass{self.coeffs}"


def _same_surface(a: PicClass, b: PicClass) -> None:
    if a.r != b.r:
        raise DimensionMismatchError(f"classes live on X_{a.r} and X_{b.r}")


def zero(r: int) -> PicClass:
    return PicClass((0,) * (r + 1))


def line_class(r: int) -> PicClass:
    """l_0, the pull-back of a general line."""
    return PicClass((1,) + (0,) * r)


def point_class(r: int, i: int) -> PicClass:
    """l_i, the exceptional fiber over the i-th blown-up point (1-based)."""
    if not 1 <= i <= r:
        raise ValueError(f"point index {i} outside 1..{r}")
    return PicClass(tuple(1 if j == i else 0 for j in range(r + 1)))


def canonical_class(r: int) -> PicClass:
    """K = -3*l_0 + l_1 + ... + l_r."""
    return PicClass((-3,) + (1,) * r)


def minus_k(r: int) -> PicClass:
    """The anticanonical class -K = 3*l_0 - l_1 - ... - l_r."""
    return PicClass((3,) + (-1,) * r)


def intersect(a: PicClass, b: PicClass) -> int:
    """Intersection number under the (1, -1, ..., -1) diagonal form."""
    _same_surface(a, b)
    s = a.coeffs[0] * b.coeffs[0]
    for x, y in zip(a.coeffs[1:], b.coeffs[1:]):
        s -= x * y
    return s


def degree(d: PicClass) -> int:
    """The anticanonical degree (D, -K)."""
    return intersect(d, minus_k(d.r))


def canonical_key(d: PicClass) -> Tuple[int, Tuple[int, ...]]:
    """Graded-lexicographic sort key: by degree, then by coordinates."""
    return (degree(d), d.coeffs)


@lru_cache(maxsize=None)
def simple_roots(r: int) -> Tuple[PicClass, ...]:
    """Simple roots a_1 = l_1-l_2, a_2 = l_2-l_3, a_3 = l_0-l_1-l_2-l_3,
    a_i = l_{i-1}-l_i for i >= 4."""
    if not MIN_R <= r <= MAX_R:
        raise ValueError(f"r={r} outside {MIN_R}..{MAX_R}")
    roots = [
        point_class(r, 1) - point_class(r, 2),
        point_class(r, 2) - point_class(r, 3),
        line_class(r) - point_class(r, 1) - point_class(r, 2) - point_class(r, 3),
    ]
    for i in range(4, r + 1):
        roots.append(point_class(r, i - 1) - point_class(r, i))
    return tuple(roots)


def reflect(x: PicClass, alpha: PicClass) -> PicClass:
    """Reflection x -> x + (x, alpha) * alpha in a (-2)-class alpha."""
    if intersect(alpha, alpha) != -2:
        raise NotARootError(f"{alpha} has self-intersection != -2")
    return x + intersect(x, alpha) * alpha


def embed_blowdown(d: PicClass) -> PicClass:
    """Isometric embedding Pic(X_{r-1}) -> Pic(X_r), appending coefficient 0.

    Intersection numbers and the anticanonical degree are both preserved
    (the new coordinate pairs trivially with the enlarged -K).
    """
    if d.r >= MAX_R:
        raise ValueError(f"cannot embed beyond r={MAX_R}")
    return PicClass(d.coeffs + (0,))


def contract_last(d: PicClass) -> PicClass:
    """Inverse of embed_blowdown; requires coefficient 0 at l_r."""
    if d.coeffs[-1] != 0:
        raise ContractionError(f"{d} meets the last exceptional fiber")
    if d.r <= MIN_R:
        raise ValueError(f"cannot contract below r={MIN_R}")
    return PicClass(d.coeffs[:-1])


def is_nef(d: PicClass) -> bool:
    """True iff (D, E) >= 0 for every exceptional curve class E."""
    from . import enumeration  # deferred: enumeration builds on this module

    return all(intersect(d, e) >= 0 for e in enumeration.exceptional_curves(d.r))
