"""Command-line interface.

Exit status: 0 on success, 1 on invalid input, 2 when an internal
invariant fails (a bug).
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import InvariantError, NotInModuleError, PreconditionError, ValidationError
from .poly import MINUS_INFINITY, VectorPoly, height
from .problem import Problem, check_solution, normalize_problem
from .scalars import DEFAULT_TOL, EXACT, ApproxField
from . import solver, testkit

EXIT_OK, EXIT_INVALID, EXIT_INVARIANT = 0, 1, 2

COMMANDS = ("generators", "solve", "decompose", "check", "dim", "selftest")


def _range(text: str) -> tuple:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vecinterp",
        description="Exact generators and solutions for vector polynomial interpolation.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", "-i", default="-", help="problem JSON (default: stdin)")
    parser.add_argument("--output", "-o", default="-", help="result JSON (default: stdout)")
    parser.add_argument("--backend", choices=("exact", "approx"), default="exact")
    parser.add_argument("--tol", type=float, default=None,
                        help=f"zero tolerance of the approx backend (default {DEFAULT_TOL})")
    parser.add_argument("--cap", type=int, default=None, help="height cap for 'dim'")
    parser.add_argument("--poly", default=None,
                        help="vector polynomial JSON for 'decompose' / 'check'")
    parser.add_argument("--seeds", type=int, default=50, help="number of selftest cases")
    parser.add_argument("--n-range", type=_range, default=(2, 5), dest="n_range")
    parser.add_argument("--N-range", type=_range, default=(1, 8), dest="N_range")
    return parser


def _load_json(path: str, what: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ValidationError(f"{what}: cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{what}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _field(args):
    if args.backend == "exact":
        return EXACT
    return ApproxField(DEFAULT_TOL if args.tol is None else args.tol)


def _load_polys(path, field, n):
    obj = _load_json(path, "--poly")
    items = obj if isinstance(obj, list) else obj.get("polys", [obj]) if isinstance(obj, dict) else None
    if items is None:
        raise ValidationError("--poly: expected a vector polynomial object or a list of them")
    polys = []
    for idx, item in enumerate(items):
        try:
            p = VectorPoly.from_json(item, field)
        except ValidationError as exc:
            raise ValidationError(f"--poly[{idx}]: {exc}") from None
        if p.n != n:
            raise ValidationError(f"--poly[{idx}]: dimension {p.n} does not match problem n={n}")
        polys.append(p)
    return polys, isinstance(obj, dict) and "entries" in obj


def _height_json(h):
    return None if h is MINUS_INFINITY else h


def execute(args) -> dict:
    """Run one command and return its JSON payload."""
    if args.command == "selftest":
        if args.seeds < 1:
            raise ValidationError("--seeds must be positive")
        cases = testkit.run_sweep(args.seeds, args.n_range, args.N_range)
        failed = [c["case"] for c in cases if not c["passed"]]
        return {
            "command": "selftest",
            "cases": cases,
            "failed": failed,
            "passed": not failed,
        }

    field = _field(args)
    prob = normalize_problem(Problem.from_json(_load_json(args.input, "--input"), field))
    out = {"command": args.command, "n": prob.n, "N": prob.N}
    if prob.diagnostics:
        out["diagnostics"] = list(prob.diagnostics)

    if args.command == "generators":
        gens = solver.generators(prob)
        out.update(gens.to_json(field))
        out["certificate"] = solver.certificate(prob, gens)
    elif args.command == "solve":
        if prob.N == 0:
            raise ValidationError("solve needs at least one node")
        r = solver.constructive_solution(prob)
        out.update(solution=r.to_json(field), height=_height_json(height(r)),
                   verified=check_solution(r, prob))
    elif args.command == "decompose":
        if args.poly is None:
            raise ValidationError("decompose requires --poly")
        polys, single = _load_polys(args.poly, field, prob.n)
        gens = solver.generators(prob)
        results = []
        for p in polys:
            try:
                S = solver.decompose(p, gens)
                results.append({"in_module": True, "coefficients": [s.to_json(field) for s in S]})
            except NotInModuleError as exc:
                results.append({"in_module": False, "diagnostic": f"not in module: {exc}"})
        out["heights"] = list(gens.heights)
        if single:
            out.update(results[0])
        else:
            out["results"] = results
    elif args.command == "check":
        if args.poly is None:
            raise ValidationError("check requires --poly")
        polys, single = _load_polys(args.poly, field, prob.n)
        results = [check_solution(p, prob) for p in polys]
        out["results"] = results
        if single:
            out["result"] = results[0]
    elif args.command == "dim":
        if args.cap is None:
            raise ValidationError("dim requires --cap")
        if args.cap < 0:
            raise ValidationError(f"--cap must be >= 0, got {args.cap}")
        out.update(cap=args.cap, dim=solver.solution_dim(prob, args.cap))
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.backend == "approx" and args.tol is not None and not args.tol > 0:
        print("error: --tol must be > 0 for the approx backend", file=stderr)
        return EXIT_INVALID
    try:
        payload = execute(args)
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=stderr)
        return EXIT_INVARIANT
    except (ValidationError, PreconditionError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    text = json.dumps(payload, indent=2) + "\n"
    if args.output == "-":
        stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.command == "selftest" and not payload["passed"]:
        return EXIT_INVARIANT
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
