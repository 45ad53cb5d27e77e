"""Command-line front end with JSON I/O and machine-readable exit codes.

Exit codes: 0 success (or nonvanishing for the test subcommands), 10
vanishing, 2 invalid input, 3 existence-check failure, 4 minor budget
exhausted (unconfirmed resultant).  JSON outputs carry a top-level
``"schema": "detres/1"`` field and are byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from .chern_degree import (
    ExistenceError,
    ProblemSpec,
    existence_check,
    multidegree,
    total_degree,
)
from .partition_schur import complex_terms
from .polyring import PolyError, Polynomial
from .resultant_engine import (
    ConcreteMorphism,
    SigmaMatrix,
    build_sigma,
    concrete_morphism,
    critical_degree,
    generic_morphism,
    rational_rank,
    resultant_gcd,
)
from .scroll_chow import (
    PlaneStiefel,
    ScrollSpec,
    chow_generic_morphism,
    chow_form,
    chow_problem,
    plane_diagnostics,
)

SCHEMA = "detres/1"

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_EXISTENCE = 3
EXIT_BUDGET = 4
EXIT_VANISHES = 10


class InputError(Exception):
    """Invalid user input: bad file, bad JSON, bad shape."""


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_spec(path: str) -> ProblemSpec:
    data = _load_json(path)
    try:
        return ProblemSpec(
            m=int(data["m"]),
            n=int(data["n"]),
            r=int(data["r"]),
            d=tuple(int(x) for x in data["d"]),
            k=tuple(int(x) for x in data["k"]),
        )
    except (KeyError, TypeError, ValueError, ExistenceError) as exc:
        raise InputError(f"bad problem spec in {path}: {exc}") from exc


def _load_phi(path: str, spec: ProblemSpec) -> ConcreteMorphism:
    data = _load_json(path)
    try:
        rows = [[Polynomial.from_json(cell) for cell in row] for row in data]
        return concrete_morphism(spec, rows)
    except (KeyError, TypeError, ValueError, PolyError) as exc:
        raise InputError(f"bad morphism in {path}: {exc}") from exc


def _load_plane(path: str) -> PlaneStiefel:
    data = _load_json(path)
    try:
        return PlaneStiefel(
            rows=tuple(
                tuple(Fraction(str(v)) for v in row) for row in data
            )
        )
    except (TypeError, ValueError, PolyError) as exc:
        raise InputError(f"bad plane in {path}: {exc}") from exc


def _parse_scroll(text: str) -> ScrollSpec:
    try:
        return ScrollSpec(tuple(int(x) for x in text.split(",")))
    except (ValueError, ExistenceError) as exc:
        raise InputError(f"bad scroll degrees {text!r}: {exc}") from exc


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _sigma_json(sigma: SigmaMatrix) -> dict:
    if sigma.symbolic:
        entries = [[e.to_json() for e in row] for row in sigma.entries]
    else:
        entries = [[str(e) for e in row] for row in sigma.entries]
    return {
        "d": sigma.d,
        "symbolic": sigma.symbolic,
        "row_basis": [list(e) for e in sigma.row_basis],
        "col_basis": [
            {"J": list(J), "I": list(I), "mu": list(mu)}
            for J, I, mu in sigma.col_basis
        ],
        "entries": entries,
        "omitted_columns": sigma.omitted_columns,
    }


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_degree(args) -> int:
    spec = _load_spec(args.spec)
    ok, bad = existence_check(spec)
    if not ok:
        if args.json:
            _emit_json({"schema": SCHEMA, "exists": False, "diagnostics": bad})
        else:
            print("exists: false")
            for b in bad:
                print(f"  {b}")
        return EXIT_EXISTENCE
    md = multidegree(spec)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "exists": True,
                "N": spec.N,
                "multidegree": list(md),
                "total_degree": sum(md),
                "critical_degree": critical_degree(spec),
            }
        )
    else:
        print(f"exists: true")
        print(f"N: {spec.N}")
        print(f"multidegree: {list(md)}")
        print(f"total_degree: {sum(md)}")
        print(f"critical_degree: {critical_degree(spec)}")
    return EXIT_OK


def _cmd_matrix(args) -> int:
    spec = _load_spec(args.spec)
    ok, bad = existence_check(spec)
    if not ok:
        print("; ".join(bad), file=sys.stderr)
        return EXIT_EXISTENCE
    d = args.degree if args.degree is not None else critical_degree(spec)
    if args.phi:
        phi = _load_phi(args.phi, spec)
    else:
        phi = generic_morphism(spec)
    sigma = build_sigma(spec, d, phi)
    if args.json:
        _emit_json({"schema": SCHEMA, **_sigma_json(sigma)})
    else:
        rows, cols = sigma.shape
        print(f"sigma_{d}: {rows} x {cols} ({sigma.omitted_columns} omitted column groups)")
        for row in sigma.entries:
            print("  [" + ", ".join(str(e) for e in row) + "]")
    return EXIT_OK


def _resultant_payload(out) -> dict:
    return {
        "polynomial": out.polynomial.to_json(),
        "block_degrees": list(out.block_degrees),
        "confirmed": out.confirmed,
        "minors_used": out.minors_used,
        "normalization": out.normalization,
    }


def _cmd_resultant(args) -> int:
    spec = _load_spec(args.spec)
    ok, bad = existence_check(spec)
    if not ok:
        print("; ".join(bad), file=sys.stderr)
        return EXIT_EXISTENCE
    out = resultant_gcd(spec, d=args.degree, minor_budget=args.budget)
    if args.json:
        _emit_json({"schema": SCHEMA, **_resultant_payload(out)})
    else:
        print(f"degree per column block: {list(out.block_degrees)}")
        print(f"confirmed: {out.confirmed} (minors used: {out.minors_used})")
        print(out.polynomial)
    return EXIT_OK if out.confirmed else EXIT_BUDGET


def _cmd_test(args) -> int:
    spec = _load_spec(args.spec)
    ok, bad = existence_check(spec)
    if not ok:
        print("; ".join(bad), file=sys.stderr)
        return EXIT_EXISTENCE
    phi = _load_phi(args.phi, spec)
    d = args.degree if args.degree is not None else critical_degree(spec)
    sigma = build_sigma(spec, d, phi)
    rows, cols = sigma.shape
    rank = rational_rank(sigma.entries)
    vanishes = rank < rows
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "d": d,
                "rows": rows,
                "cols": cols,
                "rank": rank,
                "vanishes": vanishes,
            }
        )
    else:
        print(f"rank: {rank} of {rows}")
        print(f"vanishes: {str(vanishes).lower()}")
    return EXIT_VANISHES if vanishes else EXIT_OK


def _cmd_chow(args) -> int:
    scroll = _parse_scroll(args.scroll)
    problem = chow_problem(scroll)
    phi = chow_generic_morphism(scroll)
    sigma = build_sigma(problem, critical_degree(problem), phi)
    payload: dict = {"schema": SCHEMA, "matrix": _sigma_json(sigma)}
    code = EXIT_OK
    out = None
    if not args.matrix_only:
        out = chow_form(scroll, minor_budget=args.budget)
        payload["chow_form"] = _resultant_payload(out)
        if not out.confirmed:
            code = EXIT_BUDGET
    if args.json:
        _emit_json(payload)
    else:
        rows, cols = sigma.shape
        print(f"chow matrix: {rows} x {cols}")
        for row in sigma.entries:
            print("  [" + ", ".join(str(e) for e in row) + "]")
        if out is not None:
            print(f"chow form degrees per block: {list(out.block_degrees)}")
            print(f"confirmed: {out.confirmed}")
            print(out.polynomial)
    return code


def _cmd_chow_test(args) -> int:
    scroll = _parse_scroll(args.scroll)
    plane = _load_plane(args.plane)
    diag = plane_diagnostics(scroll, plane)
    if args.json:
        _emit_json({"schema": SCHEMA, **diag})
    else:
        print(f"stiefel rank: {diag['stiefel_rank']}")
        if diag["degenerate"]:
            print("warning: degenerate plane (rank-deficient Stiefel matrix)")
        print(f"meets scroll: {str(diag['meets_scroll']).lower()}")
    return EXIT_VANISHES if diag["meets_scroll"] else EXIT_OK


def _cmd_complex(args) -> int:
    spec = _load_spec(args.spec)
    ok, bad = existence_check(spec)
    if not ok:
        print("; ".join(bad), file=sys.stderr)
        return EXIT_EXISTENCE
    q = spec.n - spec.r
    lo = q * spec.r - spec.m * q
    indices = [args.p] if args.p is not None else list(range(lo, 1))
    terms = []
    for p in indices:
        terms.extend(complex_terms(spec.m, spec.n, spec.r, p))
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "terms": [
                    {
                        "p": t.homological_index,
                        "I": list(t.I),
                        "I_prime": list(t.I_prime),
                        "n_of_I": t.ampleness,
                    }
                    for t in terms
                ],
            }
        )
    else:
        for t in terms:
            print(
                f"p={t.homological_index} I={tuple(t.I)} "
                f"I'={tuple(t.I_prime)} n(I)={t.ampleness}"
            )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detres",
        description="Determinantal resultants of split bundle morphisms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("degree", help="existence, multidegree and total degree")
    p.add_argument("--spec", required=True)
    add_json(p)
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("matrix", help="build the sigma_d matrix")
    p.add_argument("--spec", required=True)
    p.add_argument("--degree", type=int, default=None)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--generic", action="store_true", help="generic morphism (default)")
    g.add_argument("--phi", default=None, help="concrete morphism JSON file")
    add_json(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("resultant", help="resultant as a gcd of maximal minors")
    p.add_argument("--spec", required=True)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--budget", type=int, default=8)
    add_json(p)
    p.set_defaults(func=_cmd_resultant)

    p = sub.add_parser("test", help="rank-based vanishing test")
    p.add_argument("--spec", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--degree", type=int, default=None)
    add_json(p)
    p.set_defaults(func=_cmd_test)

    p = sub.add_parser("chow", help="Chow matrix/form of a rational normal scroll")
    p.add_argument("--scroll", required=True, help="comma-separated degrees, e.g. 2,1")
    p.add_argument("--budget", type=int, default=8)
    p.add_argument("--matrix-only", action="store_true")
    add_json(p)
    p.set_defaults(func=_cmd_chow)

    p = sub.add_parser("chow-test", help="does a plane meet the scroll?")
    p.add_argument("--scroll", required=True)
    p.add_argument("--plane", required=True, help="JSON: rows of rational strings")
    add_json(p)
    p.set_defaults(func=_cmd_chow_test)

    p = sub.add_parser("complex", help="terms of the resolution by homological index")
    p.add_argument("--spec", required=True)
    p.add_argument("-p", type=int, default=None, help="homological index (default: all)")
    add_json(p)
    p.set_defaults(func=_cmd_complex)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    # Read but do not require: the implementation is sequential; the cap is
    # honored trivially.
    os.environ.get("DETRES_THREADS")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ExistenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXISTENCE
    except PolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
