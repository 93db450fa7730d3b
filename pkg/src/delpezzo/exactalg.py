"""Exact linear algebra over Q and polynomials in three homogeneous variables.

All elimination is fraction-free (Bareiss) on integer-rescaled rows; results
are normalized to reduced echelon form over the rationals, so identical input
yields bit-identical output.  No floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Sequence, Tuple

Rat = Fraction

Monomial = Tuple[int, int, int]

VAR_NAMES = ("x", "y", "z")


# ---------------------------------------------------------------------------
# integer-rescaled Bareiss elimination


def _row_to_ints(row: Sequence[Rat]) -> List[int]:
    """Scale a rational row to a primitive integer row (content divided out)."""
    den = 1
    for c in row:
        d = c.denominator
        den = den * d // gcd(den, d)
    ints = [int(c.numerator * (den // c.denominator)) for c in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _bareiss_echelon(rows: List[List[int]]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Pivots are the first nonzero entry scan (no magnitude pivoting), which
    keeps the procedure deterministic.  Returns the nonzero echelon rows and
    the pivot column indices.
    """
    m = len(rows)
    if m == 0:
        return [], []
    n = len(rows[0])
    prev = 1
    rank = 0
    pivots: List[int] = []
    for col in range(n):
        pr = next((i for i in range(rank, m) if rows[i][col] != 0), None)
        if pr is None:
            continue
        if pr != rank:
            rows[rank], rows[pr] = rows[pr], rows[rank]
        piv = rows[rank][col]
        for i in range(rank + 1, m):
            fac = rows[i][col]
            row_i = rows[i]
            row_p = rows[rank]
            for j in range(col + 1, n):
                row_i[j] = (piv * row_i[j] - fac * row_p[j]) // prev
            row_i[col] = 0
        prev = piv
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return rows[:rank], pivots


def _rref_from_echelon(
    ech: List[List[int]], pivots: List[int]
) -> List[List[Rat]]:
    """Normalize integer echelon rows to a reduced echelon form over Q."""
    rows = [[Fraction(v) for v in row] for row in ech]
    for i in reversed(range(len(pivots))):
        p = pivots[i]
        piv = rows[i][p]
        rows[i] = [v / piv for v in rows[i]]
        for k in range(i):
            fac = rows[k][p]
            if fac:
                rows[k] = [a - fac * b for a, b in zip(rows[k], rows[i])]
    return rows


def rref(rows: Sequence[Sequence[Rat]]) -> Tuple[List[List[Rat]], List[int]]:
    """Reduced row echelon form and pivot columns (zero rows dropped)."""
    ints = [_row_to_ints(row) for row in rows]
    ech, pivots = _bareiss_echelon(ints)
    return _rref_from_echelon(ech, pivots), pivots


def rank(rows: Sequence[Sequence[Rat]]) -> int:
    """Exact rank."""
    ints = [_row_to_ints(row) for row in rows]
    _, pivots = _bareiss_echelon(ints)
    return len(pivots)


def nullspace(
    rows: Sequence[Sequence[Rat]], ncols: int | None = None
) -> List[Tuple[Rat, ...]]:
    """Basis of the right kernel, in reduced echelon form.

    Each basis vector carries a 1 at its free column and zeros at the other
    free columns, so the output is deterministic and pivot-normalized.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(rows[0])
    reduced, pivots = rref(rows)
    pivset = set(pivots)
    basis: List[Tuple[Rat, ...]] = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, p in enumerate(pivots):
            if p < free:
                vec[p] = -reduced[i][free]
        basis.append(tuple(vec))
    return basis


def det(rows: Sequence[Sequence[Rat]]) -> Rat:
    """Exact determinant of a square matrix (Bareiss with scale tracking)."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    work: List[List[Fraction]] = [[Fraction(v) for v in row] for row in rows]
    scale = Fraction(1)
    ints: List[List[int]] = []
    for row in work:
        den = 1
        for c in row:
            d = c.denominator
            den = den * d // gcd(den, d)
        scale /= den
        ints.append([int(c.numerator * (den // c.denominator)) for c in row])
    sign = 1
    prev = 1
    for col in range(n):
        pr = next((i for i in range(col, n) if ints[i][col] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != col:
            ints[col], ints[pr] = ints[pr], ints[col]
            sign = -sign
        piv = ints[col][col]
        for i in range(col + 1, n):
            fac = ints[i][col]
            for j in range(col + 1, n):
                ints[i][j] = (piv * ints[i][j] - fac * ints[col][j]) // prev
            ints[i][col] = 0
        prev = piv
    return sign * scale * prev


@dataclass(frozen=True)
class QMatrix:
    """Dense rational matrix; a thin immutable wrapper over row tuples."""

    rows: Tuple[Tuple[Rat, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def rank(self) -> int:
        return rank(self.rows)

    def nullspace(self) -> List[Tuple[Rat, ...]]:
        return nullspace(self.rows, ncols=self.ncols)

    def rref(self) -> Tuple[List[List[Rat]], List[int]]:
        return rref(self.rows)

    def det(self) -> Rat:
        return det(self.rows)


# ---------------------------------------------------------------------------
# homogeneous polynomials in x, y, z


@lru_cache(maxsize=None)
def monomial_basis(d: int) -> Tuple[Monomial, ...]:
    """Degree-d monomial exponents, graded-lex descending with x > y > z."""
    if d < 0:
        return ()
    basis = [
        (i, j, d - i - j)
        for i in range(d, -1, -1)
        for j in range(d - i, -1, -1)
    ]
    return tuple(basis)


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= n - t
    return out


class PlanePoly:
    """Homogeneous polynomial in x, y, z with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, Rat]):
        clean: Dict[Monomial, Rat] = {}
        deg = None
        for mono, c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            if deg is None:
                deg = sum(mono)
            elif sum(mono) != deg:
                raise ValueError("non-homogeneous term set")
            clean[mono] = c
        self.terms = clean

    # -- constructors

    @classmethod
    def zero(cls) -> "PlanePoly":
        return cls({})

    @classmethod
    def constant(cls, c: Rat) -> "PlanePoly":
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def variable(cls, i: int) -> "PlanePoly":
        mono = tuple(1 if j == i else 0 for j in range(3))
        return cls({mono: Fraction(1)})  # type: ignore[dict-item]

    @classmethod
    def from_coeff_vector(cls, d: int, vec: Sequence[Rat]) -> "PlanePoly":
        basis = monomial_basis(d)
        if len(vec) != len(basis):
            raise ValueError("coefficient vector length mismatch")
        return cls({mono: Fraction(c) for mono, c in zip(basis, vec)})

    # -- basic queries

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return sum(next(iter(self.terms)))

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_coeff(self) -> Rat:
        return self.terms[self.leading_monomial()]

    def coeff_vector(self, d: int | None = None) -> Tuple[Rat, ...]:
        if d is None:
            d = self.degree
            if d < 0:
                raise ValueError("degree required for the zero polynomial")
        return tuple(self.terms.get(m, Fraction(0)) for m in monomial_basis(d))

    # -- arithmetic

    def __add__(self, other: "PlanePoly") -> "PlanePoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return PlanePoly(out)

    def __sub__(self, other: "PlanePoly") -> "PlanePoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) - c
        return PlanePoly(out)

    def __neg__(self) -> "PlanePoly":
        return PlanePoly({m: -c for m, c in self.terms.items()})

    def scale(self, c: Rat) -> "PlanePoly":
        c = Fraction(c)
        if c == 0:
            return PlanePoly.zero()
        return PlanePoly({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: "PlanePoly") -> "PlanePoly":
        out: Dict[Monomial, Fraction] = {}
        for (a1, b1, c1), u in self.terms.items():
            for (a2, b2, c2), v in other.terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, Fraction(0)) + u * v
        return PlanePoly(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- calculus and evaluation

    def evaluate(self, point: Sequence[Rat]) -> Rat:
        x, y, z = (Fraction(v) for v in point)
        if x == 0 and y == 0 and z == 0:
            raise ValueError("evaluation at (0,0,0) is not a projective point")
        total = Fraction(0)
        for (i, j, k), c in self.terms.items():
            total += c * x**i * y**j * z**k
        return total

    def partial(self, var: int) -> "PlanePoly":
        out: Dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            e = mono[var]
            if e == 0:
                continue
            new = list(mono)
            new[var] = e - 1
            out[tuple(new)] = c * e  # type: ignore[index]
        return PlanePoly(out)

    def derivative(self, order: Tuple[int, int, int]) -> "PlanePoly":
        out: Dict[Monomial, Fraction] = {}
        u, v, w = order
        for (i, j, k), c in self.terms.items():
            if i < u or j < v or k < w:
                continue
            fac = _falling(i, u) * _falling(j, v) * _falling(k, w)
            out[(i - u, j - v, k - w)] = c * fac
        return PlanePoly(out)

    # -- normal forms

    def monic(self) -> "PlanePoly":
        """Normalize so the leading graded-lex coefficient is 1."""
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(1 / self.leading_coeff())

    def primitive(self) -> Tuple[Dict[Monomial, int], Fraction]:
        """Integer form with coprime coefficients and positive leading sign.

        Returns (int_terms, s) with int_terms == s * self as polynomials.
        """
        if self.is_zero():
            return {}, Fraction(1)
        den = 1
        for c in self.terms.values():
            d = c.denominator
            den = den * d // gcd(den, d)
        ints = {
            m: int(c.numerator * (den // c.denominator))
            for m, c in self.terms.items()
        }
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if ints[max(ints)] < 0:
            g = -g
        if g != 1:
            ints = {m: v // g for m, v in ints.items()}
        return ints, Fraction(den, g)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            factors = [
                f"{VAR_NAMES[i]}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono)
                if e > 0
            ]
            body = "*".join(factors)
            mag = abs(c)
            coeff = "" if (mag == 1 and body) else str(mag)
            lead = "-" if c < 0 else ("+" if parts else "")
            sep = "*" if coeff and body else ""
            parts.append(f"{lead}{coeff}{sep}{body}" if body or coeff else lead + "1")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"PlanePoly({self})"


def mul_int_terms(
    a: Dict[Monomial, int], b: Dict[Monomial, int]
) -> Dict[Monomial, int]:
    """Product of two integer-coefficient term dicts (hot path helper)."""
    out: Dict[Monomial, int] = {}
    get = out.get
    for (a1, b1, c1), u in a.items():
        for (a2, b2, c2), v in b.items():
            key = (a1 + a2, b1 + b2, c1 + c2)
            out[key] = get(key, 0) + u * v
    return out
