"""Command-line front end.

Exit-code contract, shared by every subcommand:

* 0 - success (for ``chow verify``: verification passed)
* 2 - verification failed
* 3 - a dimension guard was violated (see PERMCHOW_GUARD_OVERRIDE)
* 4 - malformed input (bad flags, unreadable or invalid files)
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

import numpy as np

from . import serialization
from .chow import (
    TargetSpec,
    build_glynn,
    build_ryser,
    decompose_bivariate_quadratic,
    verify_against_target,
)
from .errors import GuardError, check_guard
from .monoid import (
    SignPattern,
    enumerate_classes,
    hardy_ramanujan_estimate,
    partition_count,
)
from .orbital import SolverConfig, solve
from .permcore import (
    NAIVE_GUARD,
    POWER_GUARD,
    SCHEME_GLYNN,
    SCHEME_RYSER,
    per_glynn,
    per_naive,
    per_ryser,
    per_via_hadamard,
    random_matrix,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 2
EXIT_GUARD = 3
EXIT_BAD_INPUT = 4


class _Parser(argparse.ArgumentParser):
    """argparse parser that reports usage errors with exit code 4."""

    def error(self, message: str):  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        self.exit(EXIT_BAD_INPUT, f"{self.prog}: error: {message}\n")


def _parse_step(text: str):
    """Grid step: exact int or fraction when possible, float otherwise."""
    for parse in (int, Fraction):
        try:
            return parse(text)
        except ValueError:
            continue
    return float(text)


def _parse_complex(text: str) -> complex:
    return complex(text.strip().replace(" ", ""))


def _format_scalar(value) -> str:
    if isinstance(value, complex):
        return json.dumps([value.real, value.imag])
    return str(value)  # int and Fraction both print exactly


_EVAL_ALGOS = {
    "naive": lambda A, h: per_naive(A),
    "ryser": lambda A, h: per_ryser(A),
    "glynn": lambda A, h: per_glynn(A),
    "hadamard-ryser": lambda A, h: per_via_hadamard(A, scheme=SCHEME_RYSER, h=h),
    "hadamard-glynn": lambda A, h: per_via_hadamard(A, scheme=SCHEME_GLYNN, h=h),
}


def _algo_guard_limit(algo: str) -> int:
    return NAIVE_GUARD if algo == "naive" else POWER_GUARD


# ---------------------------------------------------------------------------
# Handlers


def _cmd_perm_eval(args) -> int:
    A = serialization.load_matrix(args.matrix)
    value = _EVAL_ALGOS[args.algo](A, args.h)
    print(_format_scalar(value))
    return EXIT_OK


def _cmd_perm_bench(args) -> int:
    algos = [piece.strip() for piece in args.algo.split(",") if piece.strip()]
    if not algos:
        raise serialization.FormatError("--algo needs at least one algorithm")
    for algo in algos:
        if algo not in _EVAL_ALGOS:
            raise serialization.FormatError(f"unknown algorithm {algo!r}")
    if args.n_from < 1 or args.n_to < args.n_from:
        raise serialization.FormatError("need 1 <= --n-from <= --n-to")
    if args.reps < 1:
        raise serialization.FormatError("--reps must be >= 1")
    for algo in algos:
        check_guard(args.n_to, _algo_guard_limit(algo), f"bench {algo}")

    print("n,algo,wall_ms,checksum")
    for n in range(args.n_from, args.n_to + 1):
        rng = np.random.default_rng(args.seed + n)
        A = random_matrix(n, rng)
        for algo in algos:
            run = _EVAL_ALGOS[algo]
            for _ in range(args.reps):
                start = time.perf_counter()
                value = run(A, 1)
                wall_ms = (time.perf_counter() - start) * 1e3
                print(f"{n},{algo},{wall_ms:.3f},{_format_scalar(value)}")
    return EXIT_OK


def _cmd_classes_list(args) -> int:
    records = enumerate_classes(args.n)
    if args.json:
        payload = [
            {
                "partition": list(record.partition),
                "representative": "".join(str(v) for v in record.representative.values),
                "orbit_size": record.orbit_size,
                "stabilizer_order": record.stabilizer_order,
            }
            for record in records
        ]
        print(json.dumps(payload, indent=2))
    else:
        for record in records:
            partition = "+".join(str(p) for p in record.partition)
            digits = "".join(str(v) for v in record.representative.values)
            print(f"{partition} {digits} {record.orbit_size} {record.stabilizer_order}")
    return EXIT_OK


def _cmd_partition(args) -> int:
    if args.estimate:
        print(hardy_ramanujan_estimate(args.n))
    else:
        print(partition_count(args.n))
    return EXIT_OK


def _cmd_chow_build(args) -> int:
    builder = build_ryser if args.method == "ryser" else build_glynn
    D = builder(args.n)
    serialization.dump_decomposition(D, args.output)
    print(f"wrote rank-{D.rho} certificate for n={D.n} to {args.output}")
    return EXIT_OK


def _parse_target(name: str, n: int) -> tuple[TargetSpec, str]:
    if name == "per":
        return TargetSpec.permanent(n), "per"
    if name == "signed-default":
        return TargetSpec.signed(SignPattern.default_signed(n)), "signed-default"
    if name.startswith("signed:"):
        pattern = serialization.load_sign_pattern(name[len("signed:"):])
        if pattern.n != n:
            raise serialization.FormatError(
                f"sign pattern is for n={pattern.n}, decomposition has n={n}"
            )
        return TargetSpec.signed(pattern), name
    raise serialization.FormatError(
        f"target must be per, signed-default or signed:FILE, got {name!r}"
    )


def _cmd_chow_verify(args) -> int:
    D = serialization.load_decomposition(args.decomp)
    target, _ = _parse_target(args.target, D.n)
    report = verify_against_target(D, target, tol=args.tol)
    status = "PASS" if report.passed else "FAIL"
    print(
        f"{status} checked={report.checked} violations={report.violations} "
        f"max_error={report.max_error:.3g} tol={report.tol:.3g}"
    )
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_chow_quad(args) -> int:
    pieces = [piece for piece in args.coeffs.split(",")]
    if len(pieces) != 7:
        raise serialization.FormatError(
            "--coeffs needs 7 comma-separated values: a,b0,b1,c00,c01,c10,c11"
        )
    try:
        values = [_parse_complex(piece) for piece in pieces]
    except ValueError as exc:
        raise serialization.FormatError(f"bad coefficient: {exc}") from exc
    D = decompose_bivariate_quadratic(*values)
    print(json.dumps(serialization.general_decomposition_to_json(D), indent=2))
    return EXIT_OK


def _cmd_chow_solve(args) -> int:
    target, target_name = _parse_target(args.target, args.n)
    if target_name.startswith("signed:"):
        raise serialization.FormatError("solve supports per and signed-default targets")
    config = SolverConfig(
        rho=args.rho,
        field=args.field,
        seed=args.seed,
        restarts=args.restarts,
        max_iters=args.max_iters,
        residual_tol=args.residual_tol,
    )
    report = solve(args.n, target, config, reduced_only=args.reduced_only)
    serialization.dump_solve_report(
        report,
        args.output,
        n=args.n,
        target_name=target_name,
        reduced_only=args.reduced_only,
    )
    print(
        f"converged={report.converged} best_residual={report.best_residual:.3e} "
        f"restarts_run={report.restarts_run} report={args.output}"
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser assembly


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="permchow",
        description="Exact permanents, class census, and product-rank decompositions.",
        epilog=(
            "Dimension guards protect against accidental exponential blowups; "
            "set PERMCHOW_GUARD_OVERRIDE=1 to lift them at your own risk."
        ),
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    perm = sub.add_parser("perm", help="permanent computations")
    perm_sub = perm.add_subparsers(dest="subcommand", parser_class=_Parser)

    peval = perm_sub.add_parser("eval", help="evaluate one permanent")
    peval.add_argument("--matrix", required=True, help="matrix JSON file")
    peval.add_argument("--algo", required=True, choices=sorted(_EVAL_ALGOS))
    peval.add_argument(
        "--h",
        type=_parse_step,
        default="1",
        help="grid step for the hadamard schemes (int, p/q or float; default 1)",
    )
    peval.set_defaults(handler=_cmd_perm_eval)

    bench = perm_sub.add_parser("bench", help="CSV timing comparison")
    bench.add_argument("--n-from", type=int, required=True)
    bench.add_argument("--n-to", type=int, required=True)
    bench.add_argument("--algo", required=True, help="comma-separated algorithm list")
    bench.add_argument("--reps", type=int, default=1)
    bench.add_argument("--seed", type=int, default=0)
    bench.set_defaults(handler=_cmd_perm_bench)

    classes = sub.add_parser("classes", help="function-class census")
    classes_sub = classes.add_subparsers(dest="subcommand", parser_class=_Parser)
    clist = classes_sub.add_parser("list", help="list all classes for one n")
    clist.add_argument("--n", type=int, required=True)
    clist.add_argument("--json", action="store_true")
    clist.set_defaults(handler=_cmd_classes_list)

    part = sub.add_parser("partition", help="integer partition count")
    part.add_argument("--n", type=int, required=True)
    part.add_argument(
        "--estimate",
        action="store_true",
        help="print the Hardy-Ramanujan estimate instead of the exact count",
    )
    part.set_defaults(handler=_cmd_partition)

    chow = sub.add_parser("chow", help="product-rank decompositions")
    chow_sub = chow.add_subparsers(dest="subcommand", parser_class=_Parser)

    cbuild = chow_sub.add_parser("build", help="write a certificate decomposition")
    cbuild.add_argument("--method", required=True, choices=("ryser", "glynn"))
    cbuild.add_argument("--n", type=int, required=True)
    cbuild.add_argument("-o", "--output", required=True)
    cbuild.set_defaults(handler=_cmd_chow_build)

    cverify = chow_sub.add_parser("verify", help="check a decomposition against a target")
    cverify.add_argument("--decomp", required=True, help="decomposition JSON file")
    cverify.add_argument(
        "--target", required=True, help="per, signed-default, or signed:FILE"
    )
    cverify.add_argument("--tol", type=float, default=None)
    cverify.set_defaults(handler=_cmd_chow_verify)

    cquad = chow_sub.add_parser("quad", help="split a bivariate quadratic")
    cquad.add_argument(
        "--coeffs", required=True, help="a,b0,b1,c00,c01,c10,c11 (complex accepted)"
    )
    cquad.set_defaults(handler=_cmd_chow_quad)

    csolve = chow_sub.add_parser("solve", help="numeric rank search")
    csolve.add_argument("--n", type=int, required=True)
    csolve.add_argument("--rho", type=int, required=True)
    csolve.add_argument("--target", required=True, help="per or signed-default")
    csolve.add_argument("--seed", type=int, default=0)
    csolve.add_argument("--restarts", type=int, default=1)
    csolve.add_argument("--field", choices=("real", "complex"), default="real")
    csolve.add_argument("--reduced-only", action="store_true")
    csolve.add_argument("--max-iters", type=int, default=500)
    csolve.add_argument("--residual-tol", type=float, default=1e-10)
    csolve.add_argument("-o", "--output", required=True)
    csolve.set_defaults(handler=_cmd_chow_solve)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_BAD_INPUT
    if not hasattr(args, "handler"):
        parser.print_usage(sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return args.handler(args)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (
        serialization.FormatError,
        json.JSONDecodeError,
        OSError,
        KeyError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def entry_point() -> None:
    sys.exit(main())
