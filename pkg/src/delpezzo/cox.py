"""Cox-ring generators, ruling relations, and the Grassmannian model at r=4.

Generators are the sections of all exceptional curves (plus two anticanonical
cubics at r=8).  Every quadratic relation produced here is an exact
polynomial identity among products of generator sections.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from . import enumeration
from .enumeration import Ruling, pairs_with_intersection, rulings
from .errors import (
    CheckFailureError,
    DegeneracyError,
    EvaluationError,
    GenerationFailureError,
    ModelMismatchError,
)
from .exactalg import (
    PlanePoly,
    Rat,
    monomial_basis,
    mul_int_terms,
    nullspace,
    rank,
)
from .lattice import (
    PicClass,
    canonical_key,
    degree,
    intersect,
    is_nef,
    line_class,
    minus_k,
    point_class,
    zero,
)
from .plane_geometry import PointConfig, Section, h0_dim, interpolate, section_of


@dataclass(frozen=True)
class Generator:
    """One Cox-ring degree-1 generator: a class plus its section polynomial."""

    index: int
    cls: PicClass
    section: Section
    kind: str  # "curve" | "anticanonical"


@dataclass(frozen=True)
class GeneratorSet:
    """All generators for a configuration, in canonical class order.

    r <= 7: one generator per exceptional curve.  r = 8: additionally the two
    echelon-basis cubics through all eight points, both of class -K.
    """

    cfg: PointConfig
    gens: Tuple[Generator, ...]

    @property
    def r(self) -> int:
        return self.cfg.r

    def __len__(self) -> int:
        return len(self.gens)

    @cached_property
    def by_class(self) -> Dict[PicClass, Tuple[int, ...]]:
        table: Dict[PicClass, List[int]] = {}
        for g in self.gens:
            table.setdefault(g.cls, []).append(g.index)
        return {cls: tuple(idx) for cls, idx in table.items()}

    def index_of(self, cls: PicClass) -> int:
        """Index of the unique generator of an exceptional class."""
        indices = self.by_class[cls]
        if len(indices) != 1:
            raise KeyError(f"class {cls} has {len(indices)} generators")
        return indices[0]


def build_generators(cfg: PointConfig) -> GeneratorSet:
    """Sections for all exceptional classes (+ anticanonical pair at r=8)."""
    r = cfg.r
    entries: List[Tuple[PicClass, Section, str]] = []
    for e in enumeration.exceptional_curves(r):
        entries.append((e, section_of(e, cfg), "curve"))
    if r == 8:
        cubics = interpolate(3, [1] * 8, cfg)
        if len(cubics) != 2:
            raise DegeneracyError(
                f"anticanonical space has dimension {len(cubics)}, not 2"
            )
        for poly in cubics:
            entries.append((minus_k(8), Section(minus_k(8), poly), "anticanonical"))
    entries.sort(key=lambda t: (canonical_key(t[0]), t[2]))
    gens = tuple(
        Generator(i, cls, sec, kind) for i, (cls, sec, kind) in enumerate(entries)
    )
    return GeneratorSet(cfg=cfg, gens=gens)


def generator_classes(r: int) -> Tuple[PicClass, ...]:
    """The degree-1 generator classes of the effective monoid."""
    classes = list(enumeration.exceptional_curves(r))
    if r == 8:
        classes.append(minus_k(8))
    return tuple(sorted(classes, key=canonical_key))


def decompose_effective(d: PicClass) -> List[Tuple[PicClass, ...]]:
    """All multisets of generator classes summing to D.

    Every generator has degree 1, so each multiset has exactly degree(D)
    elements; the search is a depth-degree(D) backtrack with coordinate
    pruning.  Empty output means D is not effective.
    """
    r = d.r
    deg = degree(d)
    if deg < 0:
        return []
    if deg == 0:
        return [()] if d == zero(r) else []
    classes = generator_classes(r)
    class_set = {cls: i for i, cls in enumerate(classes)}
    lo = [min(c.coeffs[i] for c in classes) for i in range(r + 1)]
    hi = [max(c.coeffs[i] for c in classes) for i in range(r + 1)]
    out: List[Tuple[PicClass, ...]] = []
    acc: List[PicClass] = []

    def feasible(rem: PicClass, k: int) -> bool:
        return all(
            k * lo[i] <= rem.coeffs[i] <= k * hi[i] for i in range(r + 1)
        )

    def rec(start: int, rem: PicClass, k: int) -> None:
        if k == 1:
            i = class_set.get(rem)
            if i is not None and i >= start:
                out.append(tuple(acc) + (rem,))
            return
        for i in range(start, len(classes)):
            nrem = rem - classes[i]
            if not feasible(nrem, k - 1):
                continue
            acc.append(classes[i])
            rec(i, nrem, k - 1)
            acc.pop()

    rec(0, d, deg)
    return out


def _decompose_generator_indices(
    d: PicClass, genset: GeneratorSet
) -> List[Tuple[int, ...]]:
    """Nondecreasing generator-index multisets whose classes sum to D."""
    out: List[Tuple[int, ...]] = []
    for multiset in decompose_effective(d):
        choices: List[Tuple[int, ...]] = [()]
        # expand repeated classes into index multisets (only -K at r=8 has
        # more than one generator)
        i = 0
        while i < len(multiset):
            j = i
            while j < len(multiset) and multiset[j] == multiset[i]:
                j += 1
            count = j - i
            indices = genset.by_class[multiset[i]]
            expanded = []
            for combo in combinations_with_replacement_sorted(indices, count):
                expanded.extend(tuple(prefix) + combo for prefix in choices)
            choices = expanded
            i = j
        out.extend(choices)
    return sorted(set(tuple(sorted(c)) for c in out))


def combinations_with_replacement_sorted(
    items: Sequence[int], k: int
) -> List[Tuple[int, ...]]:
    from itertools import combinations_with_replacement

    return list(combinations_with_replacement(sorted(items), k))


@dataclass(frozen=True)
class QuadraticRelation:
    """An exact linear dependency among fiber products of one ruling.

    terms: (coefficient, (generator index, generator index)) with nonzero
    coefficients only; the identity sum(c * s_i * s_j) = 0 holds exactly.
    """

    ruling: PicClass
    terms: Tuple[Tuple[Rat, Tuple[int, int]], ...]

    def residual(self, genset: GeneratorSet) -> PlanePoly:
        """The relation re-expanded symbolically; zero iff the relation holds."""
        total = PlanePoly.zero()
        for c, (i, j) in self.terms:
            prod = genset.gens[i].section.poly * genset.gens[j].section.poly
            total = total + prod.scale(c)
        return total


def relation_json(rel: QuadraticRelation, genset: GeneratorSet) -> dict:
    def enc(c: Fraction) -> str | int:
        return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    return {
        "ruling": list(rel.ruling.coeffs),
        "terms": [
            {
                "c": enc(c),
                "pair": [
                    list(genset.gens[i].cls.coeffs),
                    list(genset.gens[j].cls.coeffs),
                ],
            }
            for c, (i, j) in rel.terms
        ],
    }


def ruling_relations(
    rl: Ruling, genset: GeneratorSet
) -> List[QuadraticRelation]:
    """Quadratic relations among the fiber products of one ruling.

    The r-1 fiber products live in the 2-dimensional section space of the
    ruling class; the kernel of their coefficient matrix has dimension
    exactly r-3 on a general configuration, and anything else raises.
    """
    r = genset.r
    d = rl.cls.coeffs[0]
    basis = monomial_basis(d)
    position = {m: i for i, m in enumerate(basis)}
    columns: List[List[int]] = []
    scales: List[Fraction] = []
    pairs: List[Tuple[int, int]] = []
    for e1, e2 in rl.fibers:
        i1 = genset.index_of(e1)
        i2 = genset.index_of(e2)
        t1, s1 = genset.gens[i1].section.primitive
        t2, s2 = genset.gens[i2].section.primitive
        prod = mul_int_terms(t1, t2)
        col = [0] * len(basis)
        for mono, c in prod.items():
            col[position[mono]] = c
        columns.append(col)
        scales.append(s1 * s2)
        pairs.append((i1, i2))
    matrix = [
        [Fraction(columns[k][row]) for k in range(len(columns))]
        for row in range(len(basis))
    ]
    kernel = nullspace(matrix, ncols=len(columns))
    expected = max(r - 3, 0)
    if len(kernel) != expected:
        raise DegeneracyError(
            f"ruling {rl.cls}: kernel dimension {len(kernel)}, expected {expected}"
        )
    relations = []
    for vec in kernel:
        coeffs = [c * s for c, s in zip(vec, scales)]
        lead = next(c for c in coeffs if c != 0)
        coeffs = [c / lead for c in coeffs]
        terms = tuple(
            (c, pairs[k]) for k, c in enumerate(coeffs) if c != 0
        )
        relations.append(QuadraticRelation(ruling=rl.cls, terms=terms))
    return relations


def all_ruling_relations(genset: GeneratorSet) -> List[QuadraticRelation]:
    out: List[QuadraticRelation] = []
    for rl in rulings(genset.r):
        out.extend(ruling_relations(rl, genset))
    return out


# ---------------------------------------------------------------------------
# the Grassmannian G(3,5) model at r = 4


def _cross(a: Sequence[Rat], b: Sequence[Rat]) -> Tuple[Rat, Rat, Rat]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _det3(cols: Sequence[Sequence[Rat]]) -> Rat:
    (a, d, g), (b, e, h), (c, f, i) = cols
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _proportionality(p: PlanePoly, q: PlanePoly) -> Rat:
    """The scalar c with p = c*q, or raise if the polys are not proportional."""
    if p.is_zero() or q.is_zero():
        raise ModelMismatchError("zero polynomial in proportionality check")
    c = p.leading_coeff() / q.leading_coeff()
    if p.leading_monomial() != q.leading_monomial() or not (p - q.scale(c)).is_zero():
        raise ModelMismatchError(f"{p} is not proportional to {q}")
    return c


def _dual_sign(u: int, v: int) -> int:
    """Sign of the permutation (u, v, complement) of (1..5)."""
    comp = [i for i in range(1, 6) if i not in (u, v)]
    perm = [u, v] + comp
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def pluecker_model_r4(cfg: PointConfig, genset: GeneratorSet | None = None) -> dict:
    """The 3x5 minor model of the Cox ring at r=4.

    Builds the matrix with columns p_1..p_4 and (x, y, z), assigns the ten
    maximal minors to generators (lines get the minors through column 5,
    point classes get the minor on the complementary triple of {1,2,3,4}),
    and checks: minors match interpolated sections up to scalar, all five
    three-term identities among the minors vanish identically, and each
    ruling relation is proportional to the corresponding minor identity.
    """
    if cfg.r != 4:
        raise ValueError("the minor model is specific to r=4")
    if genset is None:
        genset = build_generators(cfg)
    pts = cfg.points
    xyz = [PlanePoly.variable(i) for i in range(3)]

    def minor(idx: Tuple[int, int, int]) -> PlanePoly:
        if 5 in idx:
            i, j = [t for t in idx if t != 5]
            cx, cy, cz = _cross(pts[i - 1], pts[j - 1])
            return (
                xyz[0].scale(cx) + xyz[1].scale(cy) + xyz[2].scale(cz)
            )
        return PlanePoly.constant(_det3([pts[t - 1] for t in idx]))

    # generator class attached to each 3-subset of {1..5}
    def minor_class(idx: Tuple[int, int, int]) -> PicClass:
        if 5 in idx:
            i, j = [t for t in idx if t != 5]
            return line_class(4) - point_class(4, i) - point_class(4, j)
        (k,) = set(range(1, 5)) - set(idx)
        return point_class(4, k)

    subsets = list(combinations(range(1, 6), 3))
    minors = {idx: minor(idx) for idx in subsets}
    scalars: Dict[Tuple[int, int, int], Fraction] = {}
    checks: List[dict] = []

    for idx in subsets:
        cls = minor_class(idx)
        sec = genset.gens[genset.index_of(cls)].section.poly
        try:
            scalars[idx] = _proportionality(minors[idx], sec)
        except ModelMismatchError as exc:
            raise ModelMismatchError(
                f"minor {idx} does not match the section of {cls}: {exc}"
            ) from exc
    checks.append(
        {"name": "minors_match_sections", "count": len(subsets), "pass": True}
    )

    # five three-term identities, one per 4-subset of {1..5}, via the dual
    # G(2,5) coordinates q_uv = sign(u,v,comp) * minor(comp)
    def dual(u: int, v: int) -> PlanePoly:
        comp = tuple(i for i in range(1, 6) if i not in (u, v))
        return minors[comp].scale(_dual_sign(u, v))

    identity_by_ruling: Dict[PicClass, List[Tuple[Fraction, Tuple[int, int]]]] = {}
    for four in combinations(range(1, 6), 4):
        a, b, c, d = four
        expansion = (
            dual(a, b) * dual(c, d)
            - dual(a, c) * dual(b, d)
            + dual(a, d) * dual(b, c)
        )
        if not expansion.is_zero():
            raise ModelMismatchError(
                f"minor identity for columns {four} does not vanish"
            )
        # record the identity as signed generator-pair coefficients
        term_list = []
        rul = None
        for sign, (u, v, u2, v2) in (
            (1, (a, b, c, d)),
            (-1, (a, c, b, d)),
            (1, (a, d, b, c)),
        ):
            idx1 = tuple(i for i in range(1, 6) if i not in (u, v))
            idx2 = tuple(i for i in range(1, 6) if i not in (u2, v2))
            cls1, cls2 = minor_class(idx1), minor_class(idx2)
            rul = cls1 + cls2
            coeff = (
                Fraction(sign * _dual_sign(u, v) * _dual_sign(u2, v2))
                * scalars[idx1]
                * scalars[idx2]
            )
            g1, g2 = sorted(
                (genset.index_of(cls1), genset.index_of(cls2))
            )
            term_list.append((coeff, (g1, g2)))
        assert rul is not None
        identity_by_ruling[rul] = term_list
    checks.append(
        {"name": "three_term_identities_vanish", "count": 5, "pass": True}
    )

    # each ruling relation must be proportional to the matching minor identity
    matched = 0
    for rl in rulings(4):
        (rel,) = ruling_relations(rl, genset)
        identity = identity_by_ruling.get(rl.cls)
        if identity is None:
            raise ModelMismatchError(f"no minor identity for ruling {rl.cls}")
        id_map = {pair: c for c, pair in identity}
        rel_map = {pair: c for c, pair in rel.terms}
        if set(id_map) != set(rel_map):
            raise ModelMismatchError(
                f"ruling {rl.cls}: term supports differ between relation and "
                "minor identity"
            )
        pair0 = next(iter(rel_map))
        ratio = id_map[pair0] / rel_map[pair0]
        if any(id_map[p] != ratio * rel_map[p] for p in rel_map):
            raise ModelMismatchError(
                f"ruling {rl.cls}: relation is not proportional to the minor "
                "identity"
            )
        matched += 1
    checks.append(
        {"name": "relations_match_minor_identities", "count": matched, "pass": True}
    )
    return {"pass": True, "checks": checks}


# ---------------------------------------------------------------------------
# degree-1 generation


def _product_int_vector(
    genset: GeneratorSet, indices: Sequence[int], d: int
) -> List[int]:
    basis = monomial_basis(d)
    position = {m: i for i, m in enumerate(basis)}
    terms = {(0, 0, 0): 1}
    for i in indices:
        terms = mul_int_terms(terms, genset.gens[i].section.primitive[0])
    vec = [0] * len(basis)
    for mono, c in terms.items():
        vec[position[mono]] = c
    return vec


def verify_degree_one_generation(d: PicClass, genset: GeneratorSet) -> dict:
    """Check that products of degree-1 generators span H^0 of the class D.

    Non-nef effective classes are peeled first: while some exceptional E has
    (D, E) < 0, E is a fixed component and is subtracted off.  The rank of
    the product coefficient matrix must then equal the Riemann-Roch
    dimension of the peeled nef class.
    """
    peeled: List[PicClass] = []
    current = d
    curves = enumeration.exceptional_curves(genset.r)
    while degree(current) > 0:
        neg = next(
            (e for e in curves if intersect(current, e) < 0), None
        )
        if neg is None:
            break
        current = current - neg
        peeled.append(neg)
    if degree(current) < 0:
        return {
            "class": d,
            "peeled": tuple(peeled),
            "effective": False,
            "pass": False,
        }
    decomps = _decompose_generator_indices(current, genset)
    if not decomps:
        return {
            "class": d,
            "peeled": tuple(peeled),
            "effective": False,
            "pass": False,
        }
    target = h0_dim(current)
    plane_deg = current.coeffs[0]
    matrix = [
        [Fraction(v) for v in _product_int_vector(genset, idx, plane_deg)]
        for idx in decomps
    ]
    got = rank(matrix)
    report = {
        "class": d,
        "peeled": tuple(peeled),
        "effective": True,
        "num_products": len(decomps),
        "rank": got,
        "h0": target,
        "pass": got == target,
    }
    if got < target:
        raise GenerationFailureError(
            f"{d}: products span rank {got} < h0 = {target}"
        )
    return report


def anticanonical_pair_rank(genset: GeneratorSet) -> dict:
    """r=8: rank of the 120 exceptional-pair products of class -2K.

    These products alone must already span the 4-dimensional space of
    bi-anticanonical sections.
    """
    if genset.r != 8:
        raise ValueError("the -2K pair check is specific to r=8")
    pairs = pairs_with_intersection(8, 3, 2 * minus_k(8))
    rows = []
    for e1, e2 in pairs:
        idx = (genset.index_of(e1), genset.index_of(e2))
        rows.append([Fraction(v) for v in _product_int_vector(genset, idx, 6)])
    got = rank(rows)
    return {"num_pairs": len(pairs), "rank": got, "h0": 4, "pass": got == 4}


# ---------------------------------------------------------------------------
# torsor points and the Jacobian codimension check


def sample_torsor_point(
    genset: GeneratorSet, q: Sequence[Rat], t: Sequence[Rat]
) -> Tuple[Rat, ...]:
    """Coordinates of a universal-torsor point, one per generator.

    The coordinate of a generator with class (m_0, ..., m_r) is its section
    evaluated at the plane point q, rescaled by the torus character
    t_0^{m_0} * ... * t_r^{m_r}.
    """
    q = tuple(Fraction(v) for v in q)
    t = tuple(Fraction(v) for v in t)
    if len(t) != genset.r + 1 or any(v == 0 for v in t):
        raise ValueError("t must have r+1 nonzero entries")
    qn = next(v for v in q if v != 0)
    q_norm = tuple(v / qn for v in q)
    if any(q_norm == p for p in genset.cfg.points):
        raise EvaluationError("q coincides with a blown-up point")
    coords = []
    for g in genset.gens:
        val = g.section.poly.evaluate(q)
        if val == 0 and g.cls.coeffs[0] >= 1:
            raise EvaluationError(f"q lies on the section curve of {g.cls}")
        char = Fraction(1)
        for m, ti in zip(g.cls.coeffs, t):
            char *= ti**m
        coords.append(val * char)
    return tuple(coords)


def random_torsor_point(
    genset: GeneratorSet, seed: int, retry_cap: int = 1000
) -> Tuple[Tuple[Rat, ...], Tuple[Rat, ...], Tuple[Rat, ...]]:
    """Deterministic seeded (q, t, coordinates) with q off all section curves."""
    rng = random.Random(seed)
    for _ in range(retry_cap):
        q = (Fraction(1), Fraction(rng.randint(-50, 50)), Fraction(rng.randint(-50, 50)))
        t = tuple(Fraction(v) for v in (rng.randint(1, 9) for _ in range(genset.r + 1)))
        try:
            coords = sample_torsor_point(genset, q, t)
        except EvaluationError:
            continue
        return q, t, coords
    raise CheckFailureError("could not sample a torsor point off all curves")


def relation_value(
    rel: QuadraticRelation, coords: Sequence[Rat]
) -> Rat:
    return sum((c * coords[i] * coords[j] for c, (i, j) in rel.terms), Fraction(0))


def jacobian_codim_check(
    genset: GeneratorSet, num_points: int = 5, seed: int = 0
) -> dict:
    """Exact Jacobian rank of all ruling quadrics at sampled torsor points.

    The universal torsor has dimension r+3, so at a smooth point the rank
    must be N_r - (r+3); the quadrics must also vanish exactly there.
    """
    r = genset.r
    if r not in (4, 5, 6):
        raise ValueError("the Jacobian check covers r in {4, 5, 6}")
    relations = all_ruling_relations(genset)
    n = len(genset.gens)
    expected = n - (r + 3)
    results = []
    for k in range(num_points):
        _, _, coords = random_torsor_point(genset, seed + k)
        if any(relation_value(rel, coords) != 0 for rel in relations):
            raise CheckFailureError("a ruling quadric fails at a torsor point")
        jac = []
        for rel in relations:
            row = [Fraction(0)] * n
            for c, (i, j) in rel.terms:
                row[i] += c * coords[j]
                row[j] += c * coords[i]
            jac.append(row)
        results.append(rank(jac))
    report = {
        "num_relations": len(relations),
        "expected_rank": expected,
        "ranks": results,
        "pass": all(v == expected for v in results),
    }
    if not report["pass"]:
        raise CheckFailureError(
            f"Jacobian rank {results} != expected {expected} at sample points"
        )
    return report


# ---------------------------------------------------------------------------
# blowdown consistency


def blowdown_relation_check(cfg: PointConfig, genset: GeneratorSet | None = None) -> dict:
    """Push X_{r-1} ruling relations forward to X_r along the last blowup.

    The first r-1 points define X_{r-1}; embedding classes by appending a
    zero coefficient (the substitution x_{l_r} = 1 in the plane model, where
    the section of l_r is the constant 1), every ruling relation of X_{r-1}
    must remain an exact relation among X_r generator sections, supported on
    fibers of the embedded ruling.
    """
    r = cfg.r
    sub_cfg = cfg.drop_last()
    sub_gens = build_generators(sub_cfg)
    if genset is None:
        genset = build_generators(cfg)
    fiber_sets = {rl.cls: set(rl.fibers) for rl in rulings(r)}
    checked = 0
    for rl in rulings(r - 1):
        embedded_cls = PicClass(rl.cls.coeffs + (0,))
        fibers_r = fiber_sets[embedded_cls]
        for rel in ruling_relations(rl, sub_gens):
            total = PlanePoly.zero()
            for c, (i, j) in rel.terms:
                e1 = PicClass(sub_gens.gens[i].cls.coeffs + (0,))
                e2 = PicClass(sub_gens.gens[j].cls.coeffs + (0,))
                pair = tuple(sorted((e1, e2), key=canonical_key))
                if pair not in fibers_r:
                    raise CheckFailureError(
                        f"embedded pair {pair} is not a fiber of {embedded_cls}"
                    )
                prod = (
                    genset.gens[genset.index_of(e1)].section.poly
                    * genset.gens[genset.index_of(e2)].section.poly
                )
                total = total + prod.scale(c)
            if not total.is_zero():
                raise CheckFailureError(
                    f"embedded relation of ruling {rl.cls} fails on X_{r}"
                )
            checked += 1
    return {"relations_checked": checked, "pass": True}
