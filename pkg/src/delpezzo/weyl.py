"""Weyl group orbits in the Picard lattice via simple-reflection BFS.

Group elements are never materialized; every statement checked here is
orbit-level.  Words are recorded during the BFS, shortest first, ties broken
by the smaller reflection index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from .errors import NotInOrbitError, OrbitOverflowError
from .lattice import PicClass, canonical_key, intersect, reflect, simple_roots

DEFAULT_ORBIT_CAP = 10**6

# Dimension of the fundamental representation attached to the last simple
# root; equals the number of exceptional curves for r <= 7, while for r = 8
# the 240 curves account for the nonzero weights of the 248-dimensional
# adjoint representation (zero weight multiplicity 8).
FUNDAMENTAL_DIMS = {4: 10, 5: 16, 6: 27, 7: 56, 8: 248}


@dataclass(frozen=True)
class OrbitResult:
    """A finite Weyl orbit with a realizing reflection word per element.

    Words are sequences of 0-based indices into simple_roots(r); applying
    the reflections left to right to the seed reproduces the element.
    """

    seed: PicClass
    words: Dict[PicClass, Tuple[int, ...]] = field(compare=False)

    @property
    def elements(self) -> frozenset:
        return frozenset(self.words)

    def sorted_elements(self) -> Tuple[PicClass, ...]:
        return tuple(sorted(self.words, key=canonical_key))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, x: PicClass) -> bool:
        return x in self.words


def apply_word(seed: PicClass, word: Sequence[int]) -> PicClass:
    """Apply a sequence of simple reflections (by index) to a class."""
    alphas = simple_roots(seed.r)
    x = seed
    for i in word:
        x = reflect(x, alphas[i])
    return x


@lru_cache(maxsize=None)
def _orbit_cached(seed: PicClass, cap: int) -> OrbitResult:
    alphas = simple_roots(seed.r)
    words: Dict[PicClass, Tuple[int, ...]] = {seed: ()}
    frontier = [seed]
    while frontier:
        next_frontier = []
        for x in frontier:
            wx = words[x]
            for i, alpha in enumerate(alphas):
                y = x + intersect(x, alpha) * alpha
                if y not in words:
                    words[y] = wx + (i,)
                    next_frontier.append(y)
            if len(words) > cap:
                raise OrbitOverflowError(
                    f"orbit of {seed} exceeded cap of {cap} elements"
                )
        frontier = next_frontier
    return OrbitResult(seed=seed, words=words)


def orbit(seed: PicClass, cap: int = DEFAULT_ORBIT_CAP) -> OrbitResult:
    """BFS closure of the seed under the r simple reflections."""
    return _orbit_cached(seed, cap)


def word_to(seed: PicClass, target: PicClass) -> Tuple[int, ...]:
    """A shortest reflection word w with w(seed) = target."""
    result = orbit(seed)
    if target not in result.words:
        raise NotInOrbitError(f"{target} is not in the orbit of {seed}")
    return result.words[target]


def weight_vector(d: PicClass) -> Tuple[int, ...]:
    """The pairing vector ((D, a_1), ..., (D, a_r)) against the simple roots."""
    return tuple(intersect(d, alpha) for alpha in simple_roots(d.r))
