"""Command-line front end: file I/O, random instances, and orchestration of
the reconstruction, stability and critical-value checks.

Exit codes: 0 = pass, 1 = a theorem-backed property failed (implementation
bug), 2 = input error.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .complexes import (
    ComplexFormatError,
    MultiFilteredComplex,
    ValidationError,
    complex_to_text,
    coordinate_grid,
    parse_complex,
)
from .generate import random_complex
from .grades import Grade, rational
from .homology import diagram_1d, pbn
from .metric import (
    SkeletonMismatch,
    interpolate,
    stability_check,
    sup_norm_distance,
)
from .space import (
    mu_infinity,
    mu_proper,
    ray_section,
    reconstruct_pbn,
    sample_space,
    window_count_infinity,
    window_count_proper,
)
from .critical import check_cornerpoint_critical, is_homological_critical

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _parse_grade(text: str) -> Grade:
    return Grade.from_seq(t.strip() for t in text.split(","))


def _load(path: str) -> MultiFilteredComplex:
    return parse_complex(Path(path).read_text())


def _degrees(args, cx: MultiFilteredComplex) -> list[int]:
    if args.degree:
        return list(args.degree)
    return list(range(max(cx.dimension, 0) + 1)) if cx.size else [0]


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _pers_str(value) -> str:
    return "inf" if value == math.inf else str(value)


def _space_json(cx, degrees, p):
    doc = {"degrees": {}}
    for k in degrees:
        points = sample_space(cx, k, p=p)
        doc["degrees"][str(k)] = {
            "proper": [
                {
                    "u": c.u.as_strings(),
                    "v": c.v.as_strings(),
                    "multiplicity": c.multiplicity,
                    "persistence": str(c.persistence),
                }
                for c in points
                if not c.at_infinity
            ],
            "at_infinity": [
                {"u": c.u.as_strings(), "multiplicity": c.multiplicity}
                for c in points
                if c.at_infinity
            ],
        }
    return doc


def _space_csv(cx, degrees, p):
    n = cx.n
    header = (
        ["degree", "kind"]
        + [f"u_{i+1}" for i in range(n)]
        + [f"v_{i+1}" for i in range(n)]
        + ["multiplicity", "persistence"]
    )
    lines = [",".join(header)]
    for k in degrees:
        for c in sample_space(cx, k, p=p):
            vcoords = ["inf"] * n if c.at_infinity else [str(x) for x in c.v.coords]
            kind = "at_infinity" if c.at_infinity else "proper"
            lines.append(
                ",".join(
                    [str(k), kind]
                    + [str(x) for x in c.u.coords]
                    + vcoords
                    + [str(c.multiplicity), _pers_str(c.persistence)]
                )
            )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args) -> int:
    cx = _load(args.complex)
    degrees = _degrees(args, cx)
    if args.csv:
        _emit(args, _space_csv(cx, degrees, args.field))
    else:
        _emit(args, json.dumps(_space_json(cx, degrees, args.field), indent=2))
    return EXIT_OK


def cmd_pbn(args) -> int:
    cx = _load(args.complex)
    value = pbn(cx, args.k, _parse_grade(args.u), _parse_grade(args.v), args.field)
    _emit(args, str(value))
    return EXIT_OK


def cmd_mu(args) -> int:
    cx = _load(args.complex)
    u = _parse_grade(args.u)
    if args.infinity:
        value = mu_infinity(cx, args.k, u, args.field)
    else:
        if not args.v:
            raise ComplexFormatError("mu needs --v or --infinity")
        value = mu_proper(cx, args.k, u, _parse_grade(args.v), args.field)
    _emit(args, str(value))
    return EXIT_OK


def cmd_window_count(args) -> int:
    cx = _load(args.complex)
    u = _parse_grade(args.u)
    e = _parse_grade(args.e)
    if args.infinity:
        value = window_count_infinity(cx, args.k, u, e, args.field)
    else:
        if not args.v:
            raise ComplexFormatError("window-count needs --v or --infinity")
        value = window_count_proper(cx, args.k, (u, _parse_grade(args.v)), e, args.field)
    _emit(args, str(value))
    return EXIT_OK


def cmd_diagram(args) -> int:
    cx = _load(args.complex)
    degrees = _degrees(args, cx)
    doc = {
        str(k): [
            [str(b), _pers_str(d)] for b, d in diagram_1d(cx, k, args.field)
        ]
        for k in degrees
    }
    _emit(args, json.dumps(doc, indent=2))
    return EXIT_OK


def _random_query(rng, cx):
    grid = coordinate_grid(cx)
    ucoords, vcoords = [], []
    for ax in grid.axes:
        vals = sorted(
            set(ax)
            | {(a + b) / 2 for a, b in zip(ax, ax[1:])}
            | {min(ax) - 1, max(ax) + 1}
        )
        a, b = sorted(rng.sample(vals, 2))
        ucoords.append(a)
        vcoords.append(b)
    e = Grade(
        tuple(rng.choice([Fraction(1), Fraction(1, 2), Fraction(2), Fraction(1, 3)]) for _ in ucoords)
    )
    return Grade(tuple(ucoords)), Grade(tuple(vcoords)), e


def cmd_reconstruct_check(args) -> int:
    rng = random.Random(args.seed)
    if args.complex:
        complexes = [_load(args.complex)]
    else:
        complexes = [
            random_complex(rng.randrange(1 << 30), size=args.size, n=args.params)
            for _ in range(args.complexes)
        ]
    trials = 0
    mismatches = []
    for cx in complexes:
        if cx.size == 0:
            continue
        degrees = _degrees(args, cx)
        for _ in range(args.trials):
            u, v, e = _random_query(rng, cx)
            for k in degrees:
                expected = pbn(cx, k, u, v, args.field)
                got = reconstruct_pbn(ray_section(cx, k, u, v, e, args.field))
                trials += 1
                if got != expected:
                    mismatches.append(
                        {"k": k, "u": u.as_strings(), "v": v.as_strings(),
                         "e": e.as_strings(), "pbn": expected, "reconstructed": got}
                    )
        if cx.n == 1:
            for k in degrees:
                if not _diagram_matches(cx, k, args.field):
                    mismatches.append({"k": k, "oracle": "diagram_1d"})
    doc = {"trials": trials, "mismatches": mismatches, "pass": not mismatches}
    _emit(args, json.dumps(doc, indent=2))
    return EXIT_OK if not mismatches else EXIT_VIOLATION


def _diagram_matches(cx, k, p) -> bool:
    from collections import Counter

    diagram = Counter(diagram_1d(cx, k, p))
    sampled = Counter()
    for c in sample_space(cx, k, p=p):
        birth = c.u.coords[0]
        death = math.inf if c.at_infinity else c.v.coords[0]
        sampled[(birth, death)] += c.multiplicity
    return diagram == sampled


def _perturb(cx, bound: Fraction, rng) -> MultiFilteredComplex:
    """Seeded rational noise of sup-norm at most `bound` per coordinate,
    re-monotonized by componentwise max over faces (stays within the bound)."""
    from .complexes import Simplex

    noisy = {}
    for s, g in cx.simplices:
        delta = tuple(bound * Fraction(rng.randint(-8, 8), 8) for _ in g.coords)
        coords = [a + d for a, d in zip(g.coords, delta)]
        for f in s.facets():
            fg = noisy[f.vertices]
            coords = [max(a, b) for a, b in zip(coords, fg)]
        noisy[s.vertices] = tuple(coords)
    return MultiFilteredComplex(
        cx.n, [(Simplex(v), Grade(c)) for v, c in noisy.items()]
    )


def cmd_stability_check(args) -> int:
    f = _load(args.complex)
    if args.other:
        g = _load(args.other)
    elif args.perturb is not None:
        g = _perturb(f, rational(args.perturb), random.Random(args.seed))
    else:
        raise ComplexFormatError("stability-check needs a second file or --perturb")
    degrees = _degrees(args, f)
    reports = []
    ok = True
    for k in degrees:
        rep = stability_check(f, g, k, p=args.field)
        reports.append(rep.to_json())
        ok = ok and rep.ok
    if args.path_steps:
        m = args.path_steps
        steps = [interpolate(f, g, Fraction(j, m)) for j in range(m + 1)]
        for a, b in zip(steps, steps[1:]):
            for k in degrees:
                rep = stability_check(a, b, k, p=args.field)
                reports.append(rep.to_json())
                ok = ok and rep.ok
    doc = {
        "epsilon": str(sup_norm_distance(f, g)),
        "reports": reports,
        "pass": ok,
    }
    _emit(args, json.dumps(doc, indent=2))
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_critical_check(args) -> int:
    cx = _load(args.complex)
    rng = random.Random(args.seed)
    degrees = _degrees(args, cx)
    grid = coordinate_grid(cx)
    failures = []
    checked = 0
    for k in degrees:
        for c in sample_space(cx, k, p=args.field):
            rep = check_cornerpoint_critical(cx, k, c, args.field)
            checked += 1
            if not rep.ok:
                failures.append(rep.to_json())
    probes_ok = 0
    for _ in range(args.probes):
        coords = []
        for ax in grid.axes:
            cells = list(zip(ax, ax[1:])) or [(Fraction(0), Fraction(1))]
            a, b = rng.choice(cells)
            coords.append(a + (b - a) * Fraction(rng.randint(1, 7), 8))
        u = Grade(tuple(coords))
        if any(u.coords[i] in grid.axes[i] for i in range(cx.n)):
            continue  # landed on a grid hyperplane; not an off-grid probe
        for k in degrees:
            if is_homological_critical(cx, k, u, p=args.field) is not None:
                failures.append({"k": k, "probe": u.as_strings(), "issue": "off-grid probe reported critical"})
        probes_ok += 1
    doc = {
        "cornerpoints_checked": checked,
        "off_grid_probes": probes_ok,
        "failures": failures,
        "pass": not failures,
    }
    _emit(args, json.dumps(doc, indent=2))
    return EXIT_OK if not failures else EXIT_VIOLATION


def cmd_random_complex(args) -> int:
    cx = random_complex(
        args.seed, size=args.size, n=args.params, grid=args.grid, max_dim=args.dimension
    )
    _emit(args, complex_to_text(cx))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perspaces",
        description="Persistence spaces of multi-parameter filtrations on "
        "finite simplicial complexes (exact rational arithmetic).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=int, default=2, help="prime field modulus")
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument("--degree", type=int, nargs="+", help="homology degrees")
    common.add_argument("--output", help="write the result to this path")
    common.add_argument("--csv", action="store_true", help="emit CSV where supported")

    p = sub.add_parser("compute", parents=[common], help="sample the persistence space")
    p.add_argument("complex")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("pbn", parents=[common], help="persistent Betti number")
    p.add_argument("complex")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-u", required=True, help="comma-separated rationals")
    p.add_argument("-v", required=True)
    p.set_defaults(func=cmd_pbn)

    p = sub.add_parser("mu", parents=[common], help="cornerpoint multiplicity")
    p.add_argument("complex")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-u", required=True)
    p.add_argument("-v")
    p.add_argument("--infinity", action="store_true")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("window-count", parents=[common], help="exact window count")
    p.add_argument("complex")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-u", required=True)
    p.add_argument("-v")
    p.add_argument("-e", required=True, help="window radius vector")
    p.add_argument("--infinity", action="store_true")
    p.set_defaults(func=cmd_window_count)

    p = sub.add_parser("diagram", parents=[common], help="1-parameter persistence diagram")
    p.add_argument("complex")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser(
        "reconstruct-check", parents=[common],
        help="verify PBN reconstruction from ray sections",
    )
    p.add_argument("complex", nargs="?")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--complexes", type=int, default=5, help="random complexes when no file given")
    p.add_argument("--size", type=int, default=25)
    p.add_argument("--params", type=int, default=2)
    p.set_defaults(func=cmd_reconstruct_check)

    p = sub.add_parser("stability-check", parents=[common], help="verify the stability bound")
    p.add_argument("complex")
    p.add_argument("other", nargs="?")
    p.add_argument("--perturb", help="perturbation bound (rational) when no second file")
    p.add_argument("--path-steps", type=int, help="also check consecutive interpolates")
    p.set_defaults(func=cmd_stability_check)

    p = sub.add_parser("critical-check", parents=[common], help="verify critical-value properties")
    p.add_argument("complex")
    p.add_argument("--probes", type=int, default=20)
    p.set_defaults(func=cmd_critical_check)

    p = sub.add_parser("random-complex", parents=[common], help="emit a seeded random complex")
    p.add_argument("--size", type=int, default=20)
    p.add_argument("--params", type=int, default=2)
    p.add_argument("--grid", type=int, default=5)
    p.add_argument("--dimension", type=int, default=2)
    p.set_defaults(func=cmd_random_complex)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ComplexFormatError, ValidationError, SkeletonMismatch, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
