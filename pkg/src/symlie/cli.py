"""Command-line front end.

Every command prints one JSON report (stdout, or ``--out``).  Exit codes:
0 success, 1 malformed input, 2 domain error (not an eigenvector, eigenvalues
outside the field, singular matrix), 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from .analysis import (
    DEFAULT_ISO_BUDGET,
    brute_force_iso,
    center,
    check_alternating_jacobi,
    derived_series,
    fingerprint,
    is_nilpotent,
    lower_central_series,
    verify_hom,
)
from .bracket import LieTable, graded_table, structure_constants, validate_seed
from .classify import classify
from .errors import BudgetExceeded, EigenvaluesNotInField, NotAnEigenvector, Singular, SymlieError
from .fields import field_from_tag
from .linalg import Matrix
from .orbits import DEFAULT_ENUM_BUDGET, iso_classes, gl_orbits

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _load_json_arg(text: str):
    if os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot parse {text!r} as JSON or find it as a file") from exc


def _check_exact(values):
    for x in values:
        if isinstance(x, float):
            raise InputError(f"floating-point entry {x!r}; use integers or strings such as '1/2' or '1+2i'")


def _field(args):
    return field_from_tag(args.field, args.p)


def _matrix(args) -> Matrix:
    if args.matrix is None:
        raise InputError("--matrix is required")
    obj = _load_json_arg(args.matrix)
    F = _field(args)
    if isinstance(obj, dict):
        obj = obj["rows"]
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise InputError("matrix must be a list of rows")
    for r in obj:
        _check_exact(r)
    return Matrix(obj, F)


def _vector(args) -> list:
    if args.w is None:
        raise InputError("--w is required")
    obj = _load_json_arg(args.w)
    if not isinstance(obj, list):
        raise InputError("vector must be a JSON list")
    _check_exact(obj)
    F = _field(args)
    return [F(x) for x in obj]


def _seed(args):
    return validate_seed(_matrix(args), _vector(args))


def _load_table(path: str) -> LieTable:
    obj = _load_json_arg(path)
    if not isinstance(obj, dict):
        raise InputError("a table file must hold a JSON object")
    return LieTable.from_json(obj)


def cmd_construct(args):
    if args.degree is None:
        raise InputError("--degree is required")
    return structure_constants(_seed(args), args.degree).to_json()


def cmd_graded(args):
    if args.max_degree is None:
        raise InputError("--max-degree is required")
    return graded_table(_seed(args), args.max_degree).to_json()


def analysis_report(t: LieTable) -> dict:
    viol = check_alternating_jacobi(t)
    nil, cls = is_nilpotent(t)
    ds = derived_series(t)
    return {
        "table": t.digest(),
        "jacobi": "ok" if viol is None else {"i": viol.i, "j": viol.j, "k": viol.k},
        "derived_series": ds.to_json(),
        "lower_central_series": lower_central_series(t).to_json(),
        "solvable": ds.terminated_at_zero,
        "nilpotent": nil,
        "nilpotency_class": cls,
        "center_dim": center(t).dim,
        "fingerprint": fingerprint(t).to_json(),
    }


def cmd_analyze(args):
    return analysis_report(_load_table(args.table))


def cmd_classify(args):
    if args.degree is None:
        raise InputError("--degree is required")
    return classify(_seed(args), args.degree).to_json()


def cmd_enumerate(args):
    p = args.p
    if p is None:
        F = field_from_tag(args.field)
        p = getattr(F, "p", None)
        if p is None:
            raise InputError("enumerate needs a prime field (--p)")
    budget = args.budget if args.budget is not None else DEFAULT_ENUM_BUDGET
    iso_budget = args.iso_budget if args.iso_budget is not None else DEFAULT_ISO_BUDGET
    if args.degree is not None:
        rep = iso_classes(args.n, p, args.degree, args.include_zero_w, budget, iso_budget)
        out = rep.orbits.to_json()
        out["iso_classes"] = rep.to_json()
        orbits = rep.orbits
    else:
        orbits = gl_orbits(args.n, p, args.include_zero_w, budget, iso_budget)
        out = orbits.to_json()
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(orbits.to_csv())
    return out


def cmd_verify_iso(args):
    src, dst = _load_table(args.source), _load_table(args.target)
    if args.map is not None:
        obj = _load_json_arg(args.map)
        if isinstance(obj, dict):
            obj = obj["rows"]
        _check_exact([x for r in obj for x in r])
        w = verify_hom(src, dst, Matrix(obj, src.field))
        return {"method": "verify", "isomorphic": w.verified, "witness": w.to_json()}
    budget = args.budget if args.budget is not None else DEFAULT_ISO_BUDGET
    w = brute_force_iso(src, dst, budget)
    return {"method": "search", "isomorphic": w is not None, "witness": None if w is None else w.to_json()}


COMMANDS = {
    "construct": cmd_construct,
    "graded": cmd_graded,
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "verify-iso": cmd_verify_iso,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symlie", description="Lie algebra structures on symmetric powers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("--field", default="Q", help="Q, Qi, Fp (with --p) or Fp(5)")
        p.add_argument("--p", type=int, default=None, help="prime for --field Fp")
        if seed:
            p.add_argument("--matrix", help="matrix as inline JSON or a JSON file")
            p.add_argument("--w", help="eigenvector as inline JSON or a JSON file")
        p.add_argument("--out", help="write the JSON report here instead of stdout")

    p = sub.add_parser("construct", help="structure constants of one degree")
    common(p)
    p.add_argument("--degree", type=int)

    p = sub.add_parser("graded", help="truncated graded algebra over degrees 0..max")
    common(p)
    p.add_argument("--max-degree", type=int)

    p = sub.add_parser("analyze", help="Jacobi check, series, center and fingerprint of a table file")
    p.add_argument("table", help="table JSON (file or inline)")
    p.add_argument("--out")

    p = sub.add_parser("classify", help="classify a 2x2 seed over Qi or Q")
    common(p)
    p.add_argument("--degree", type=int)

    p = sub.add_parser("enumerate", help="seed pairs and conjugation orbits over F_p")
    common(p, seed=False)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--degree", type=int, help="also group orbit representatives into iso classes")
    p.add_argument("--include-zero-w", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("--iso-budget", type=int)
    p.add_argument("--csv", help="write orbit sizes as CSV here")

    p = sub.add_parser("verify-iso", help="verify a given map or search for an isomorphism")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--map", help="candidate map; omit to search exhaustively (prime fields)")
    p.add_argument("--budget", type=int)
    p.add_argument("--out")
    return parser


def dumps(report) -> str:
    return json.dumps(report, indent=2) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report = COMMANDS[args.command](args)
    except NotAnEigenvector as exc:
        print(f"error: {exc}; the bracket needs w to be an eigenvector of the matrix", file=stderr)
        return EXIT_DOMAIN
    except (EigenvaluesNotInField, Singular) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_BUDGET
    except (InputError, SymlieError, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: malformed input: {exc}", file=stderr)
        return EXIT_INPUT
    text = dumps(report)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
