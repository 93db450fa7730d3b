"""Command-line front end: enumeration dumps, verification suites, reports.

All randomness flows through --seed; reports are byte-identical across runs
with the same arguments (timing is collected but only printed on request).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Sequence

from . import cox, enumeration, plane_geometry, weyl
from .enumeration import (
    N_EXCEPTIONAL,
    classify_family,
    exceptional_curves,
    exceptional_curves_diophantine,
    roots,
    rulings,
    verify_anticanonical_decompositions,
)
from .errors import DelPezzoError
from .lattice import line_class, minus_k, point_class, simple_roots
from .plane_geometry import PointConfig, random_config, validate_general_position

ROOT_COUNTS = {3: 8, 4: 20, 5: 40, 6: 72, 7: 126, 8: 240}
RULING_COUNTS = {3: 3, 4: 5, 5: 10, 6: 27, 7: 126, 8: 2160}

SUITES = ("counts", "weyl", "relations", "generation", "jacobian", "all")


def _check(name: str, expected, actual) -> dict:
    return {
        "name": name,
        "expected": expected,
        "actual": actual,
        "pass": expected == actual,
    }


def _suite_counts(r: int) -> List[dict]:
    curves = exceptional_curves(r)
    checks = [
        _check("exceptional_count", N_EXCEPTIONAL[r], len(curves)),
        _check(
            "diophantine_matches_families",
            True,
            exceptional_curves_diophantine(r) == curves,
        ),
        _check("root_count", ROOT_COUNTS[r], len(roots(r))),
        _check("ruling_count", RULING_COUNTS[r], len(rulings(r))),
        _check(
            "fibers_per_ruling",
            True,
            all(len(rl.fibers) == r - 1 for rl in rulings(r)),
        ),
    ]
    if 4 <= r <= 7:
        checks.append(
            _check(
                "anticanonical_decompositions",
                True,
                verify_anticanonical_decompositions(r),
            )
        )
    return checks


def _root_orbit_union(r: int) -> frozenset:
    """Union of simple-root orbits; a single orbit for r >= 4, while the
    r = 3 root system splits into two components."""
    covered: set = set()
    for alpha in simple_roots(r):
        covered |= weyl.orbit(alpha).elements
    return frozenset(covered)


def _suite_weyl(r: int) -> List[dict]:
    curve_orbit = weyl.orbit(point_class(r, r))
    root_set = _root_orbit_union(r) if r == 3 else weyl.orbit(simple_roots(r)[0]).elements
    ruling_orbit = weyl.orbit(line_class(r) - point_class(r, 1))
    words_ok = all(
        weyl.apply_word(curve_orbit.seed, w) == x
        for x, w in curve_orbit.words.items()
    )
    return [
        _check(
            "curve_orbit_matches_enumeration",
            True,
            curve_orbit.elements == frozenset(exceptional_curves(r)),
        ),
        _check(
            "root_orbit_matches_enumeration",
            True,
            root_set == frozenset(roots(r)),
        ),
        _check(
            "ruling_orbit_matches_enumeration",
            True,
            ruling_orbit.elements == frozenset(rl.cls for rl in rulings(r)),
        ),
        _check("orbit_words_reproduce_elements", True, words_ok),
    ]


def _get_config(r: int, seed: int, config_path: str | None) -> PointConfig:
    if config_path is not None:
        with open(config_path, "r", encoding="utf-8") as fh:
            cfg = PointConfig.from_json(fh.read())
        if cfg.r != r:
            raise DelPezzoError(f"config has {cfg.r} points but --r is {r}")
        violations = validate_general_position(cfg)
        if violations:
            raise DelPezzoError(
                "config is degenerate: " + ", ".join(map(str, violations))
            )
        return cfg
    return random_config(r, seed, coord_bound=7 if r == 8 else 20)


def _thread_cap() -> int:
    """Worker cap from COX_DELPEZZO_THREADS (default 1; report order is
    fixed either way)."""
    raw = os.environ.get("COX_DELPEZZO_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def _suite_relations(r: int, cfg: PointConfig) -> List[dict]:
    genset = cox.build_generators(cfg)
    kernel_ok = True
    term_ok = True
    with ThreadPoolExecutor(max_workers=_thread_cap()) as pool:
        all_rels = list(
            pool.map(lambda rl: cox.ruling_relations(rl, genset), rulings(r))
        )
    for rels in all_rels:
        kernel_ok &= len(rels) == max(r - 3, 0)
        term_ok &= all(len(rel.terms) >= 3 for rel in rels)
    return [
        _check("generator_count", N_EXCEPTIONAL[r] + (2 if r == 8 else 0), len(genset)),
        _check("kernel_dimension_r_minus_3", True, kernel_ok),
        _check("relations_have_3_plus_terms", True, term_ok),
    ]


def _suite_generation(r: int, cfg: PointConfig) -> List[dict]:
    genset = cox.build_generators(cfg)
    checks = []
    if r <= 6:
        classes = _nef_classes_of_low_degree(r, 3)
        ok = all(
            cox.verify_degree_one_generation(d, genset)["pass"] for d in classes
        )
        checks.append(_check(f"nef_degree_le_3_generation[{len(classes)}]", True, ok))
    else:
        report = cox.verify_degree_one_generation(minus_k(r), genset)
        checks.append(_check("anticanonical_generation", True, report["pass"]))
    if r == 4:
        cox.pluecker_model_r4(cfg, genset)
        checks.append(_check("grassmannian_minor_model", True, True))
    if r == 8:
        pair_report = cox.anticanonical_pair_rank(genset)
        checks.append(_check("bi_anticanonical_pair_rank", 4, pair_report["rank"]))
    return checks


def _nef_classes_of_low_degree(r: int, max_degree: int):
    from itertools import combinations_with_replacement

    from .lattice import degree, is_nef, zero

    gens = cox.generator_classes(r)
    seen = set()
    for k in range(0, max_degree + 1):
        for combo in combinations_with_replacement(gens, k):
            total = zero(r)
            for g in combo:
                total = total + g
            seen.add(total)
    return sorted(
        (d for d in seen if degree(d) <= max_degree and is_nef(d)),
        key=lambda d: (degree(d), d.coeffs),
    )


def _suite_jacobian(r: int, cfg: PointConfig, seed: int) -> List[dict]:
    genset = cox.build_generators(cfg)
    report = cox.jacobian_codim_check(genset, num_points=5, seed=seed)
    return [
        _check("jacobian_rank", [report["expected_rank"]] * 5, report["ranks"]),
    ]


def cmd_verify(args) -> int:
    t0 = time.monotonic()
    checks: List[dict] = []
    r = args.r
    suites = (
        ["counts", "weyl", "relations", "generation", "jacobian"]
        if args.suite == "all"
        else [args.suite]
    )
    cfg = None
    for suite in suites:
        if suite == "counts":
            checks += [dict(c, suite="counts") for c in _suite_counts(r)]
        elif suite == "weyl":
            checks += [dict(c, suite="weyl") for c in _suite_weyl(r)]
        elif suite in ("relations", "generation", "jacobian"):
            if suite == "jacobian" and r not in (4, 5, 6):
                if args.suite != "all":
                    print(f"jacobian suite covers r in 4..6, not r={r}", file=sys.stderr)
                    return 2
                continue
            if cfg is None:
                cfg = _get_config(r, args.seed, args.config)
            if suite == "relations":
                checks += [dict(c, suite="relations") for c in _suite_relations(r, cfg)]
            elif suite == "generation":
                checks += [dict(c, suite="generation") for c in _suite_generation(r, cfg)]
            else:
                checks += [
                    dict(c, suite="jacobian") for c in _suite_jacobian(r, cfg, args.seed)
                ]
    elapsed = time.monotonic() - t0
    report = {
        "command": "verify",
        "inputs": {"r": r, "seed": args.seed, "config": args.config, "suite": args.suite},
        "checks": checks,
    }
    if args.show_timing:
        report["timing_seconds"] = round(elapsed, 3)
    if args.format == "json":
        print(json.dumps(report, indent=2, default=str))
    else:
        for c in checks:
            status = "pass" if c["pass"] else "FAIL"
            print(f"[{status}] {c['suite']}/{c['name']}: "
                  f"expected={c['expected']} actual={c['actual']}")
        if args.show_timing:
            print(f"elapsed: {elapsed:.3f}s")
    failed = [c for c in checks if not c["pass"]]
    if failed:
        print("failed checks: " + ", ".join(c["name"] for c in failed), file=sys.stderr)
        return 1
    return 0


def _print_rows(rows: List[List[str]], header: List[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([dict(zip(header, row)) for row in rows], indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        widths = [
            max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(h)
            for i, h in enumerate(header)
        ]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for row in rows:
            print("  ".join(str(v).ljust(w) for v, w in zip(row, widths)))


def cmd_curves(args) -> int:
    rows = []
    for e in exceptional_curves(args.r):
        fam = classify_family(e)
        rows.append([str(e), fam.tag, " ".join(map(str, e.coeffs))])
    _print_rows(rows, ["class", "family", "coeffs"], args.format)
    return 0


def cmd_roots(args) -> int:
    rows = [[str(a), " ".join(map(str, a.coeffs))] for a in roots(args.r)]
    _print_rows(rows, ["root", "coeffs"], args.format)
    return 0


def cmd_rulings(args) -> int:
    rows = []
    for rl in rulings(args.r):
        fibers = "; ".join(f"{a} + {b}" for a, b in rl.fibers)
        rows.append([str(rl.cls), str(len(rl.fibers)), fibers])
    _print_rows(rows, ["ruling", "fibers", "fiber_pairs"], args.format)
    return 0


def cmd_sample_config(args) -> int:
    cfg = random_config(args.r, args.seed, coord_bound=args.bound)
    text = cfg.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_sections(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        cfg = PointConfig.from_json(fh.read())
    genset = cox.build_generators(cfg)
    rows = [
        [str(g.cls), g.kind, str(g.section.poly)] for g in genset.gens
    ]
    _print_rows(rows, ["class", "kind", "section"], args.format)
    return 0


def cmd_relations(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        cfg = PointConfig.from_json(fh.read())
    genset = cox.build_generators(cfg)
    all_rulings = rulings(cfg.r)
    selected = (
        [all_rulings[args.ruling]] if args.ruling is not None else all_rulings
    )
    out = []
    for rl in selected:
        for rel in cox.ruling_relations(rl, genset):
            out.append(cox.relation_json(rel, genset))
    print(json.dumps(out, indent=2))
    return 0


def cmd_pluecker(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        cfg = PointConfig.from_json(fh.read())
    report = cox.pluecker_model_r4(cfg)
    print(json.dumps(report, indent=2))
    return 0 if report["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delpezzo",
        description="Exact combinatorics and Cox-ring structure of blown-up planes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_r(p):
        p.add_argument("--r", type=int, required=True, choices=range(3, 9))

    def add_format(p, choices=("table", "json", "csv")):
        p.add_argument("--format", choices=choices, default="table")

    p = sub.add_parser("curves", help="exceptional curves with family tags")
    add_r(p)
    add_format(p)
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("roots", help="root system enumeration dump")
    add_r(p)
    add_format(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("rulings", help="rulings and their fibers")
    add_r(p)
    add_format(p, choices=("table", "json"))
    p.set_defaults(func=cmd_rulings)

    p = sub.add_parser("sample-config", help="write a validated point configuration")
    add_r(p)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, default=plane_geometry.DEFAULT_COORD_BOUND)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sample_config)

    p = sub.add_parser("sections", help="all generator polynomials")
    p.add_argument("--config", required=True)
    add_format(p, choices=("table", "json"))
    p.set_defaults(func=cmd_sections)

    p = sub.add_parser("relations", help="exact ruling relations (JSON)")
    p.add_argument("--config", required=True)
    p.add_argument("--ruling", type=int, default=None)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("pluecker", help="the r=4 Grassmannian minor report")
    p.add_argument("--config", required=True)
    p.set_defaults(func=cmd_pluecker)

    p = sub.add_parser("verify", help="verification suites")
    add_r(p)
    p.add_argument("--config", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--show-timing", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DelPezzoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
