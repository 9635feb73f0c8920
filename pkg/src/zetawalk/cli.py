"""Command-line interface.

Subcommands: gen, matrix dump, charpoly, verify konno-sato, series,
zeta-eval, torus-limit, converge. Exit codes: 0 for success (including a
verification that holds), 1 for a verification that fails, 2 for usage or
domain errors. Output is deterministic: rationals print exactly as "p/q"
via str(Fraction), floats with 15 significant digits, JSON with two-space
indentation and fixed key order.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Sequence

from . import graphs, limits, operators, zeta
from .polynomials import Poly
from .rational import RatMatrix

FLOAT_FORMAT = ".15g"
DEFAULT_TOLERANCE = 1e-12
# default safety margin on |u| for the ihara kind on the d-torus, inside
# the true positivity bound |u| < 1/(2d-1)
IHARA_MARGIN = 0.9


def _fmt(x: float) -> str:
    return format(float(x), FLOAT_FORMAT)


def _json_float(x: float) -> float:
    # round-trip through the printed precision so JSON and text agree
    return float(_fmt(x))


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _poly_strings(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def _load(args: argparse.Namespace) -> graphs.Graph:
    return graphs.load_graph(args.graph)


def _check_ihara_margin(args: argparse.Namespace, u: float) -> None:
    if args.which != "ihara" or args.full_domain:
        return
    bound = IHARA_MARGIN / (2 * args.d - 1)
    if abs(u) > bound:
        raise ValueError(
            f"|u| = {abs(u)} exceeds the default ihara-kind margin "
            f"{IHARA_MARGIN}/(2d-1) = {_fmt(bound)} for d = {args.d}; "
            f"pass --full-domain to evaluate up to the positivity bound"
        )


# -- gen ----------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    if family == "cycle":
        _require_params(family, args, need_n=True)
        g = graphs.cycle_graph(args.N)
    elif family == "torus":
        _require_params(family, args, need_n=True, need_d=True)
        g = graphs.torus_graph(args.d, args.N)
    elif family == "complete":
        _require_params(family, args, need_n=True)
        g = graphs.complete_graph(args.N)
    elif family == "petersen":
        _require_params(family, args)
        g = graphs.petersen_graph()
    else:
        _require_params(family, args, need_d=True)
        g = graphs.hypercube_graph(args.d)
    if args.out is None:
        print(json.dumps(graphs.graph_payload(g), indent=2, sort_keys=True))
    else:
        graphs.save_graph(g, args.out)
    return 0


def _require_params(
    family: str, args: argparse.Namespace, need_n: bool = False, need_d: bool = False
) -> None:
    if need_n and args.N is None:
        raise ValueError(f"family {family!r} requires --N")
    if not need_n and args.N is not None:
        raise ValueError(f"family {family!r} does not take --N")
    if need_d and args.d is None:
        raise ValueError(f"family {family!r} requires --d")
    if not need_d and args.d is not None:
        raise ValueError(f"family {family!r} does not take --d")


# -- matrix dump ----------------------------------------------------------


_MATRIX_OPERATORS = (
    "adjacency",
    "degree",
    "transition",
    "laplacian",
    "shift",
    "coin",
    "grover",
    "positive-support",
)


def _build_operator(g: graphs.Graph, name: str) -> RatMatrix:
    if name in ("adjacency", "degree", "transition", "laplacian"):
        return {
            "adjacency": operators.adjacency,
            "degree": operators.degree_matrix,
            "transition": operators.transition,
            "laplacian": operators.laplacian,
        }[name](g)
    arcs = graphs.arc_space(g)
    if name == "shift":
        return operators.shift(arcs)
    if name == "coin":
        return operators.coin(g, arcs)
    if name == "grover":
        return operators.grover(g, arcs)
    return operators.grover_positive_support(g, arcs)


def _cmd_matrix_dump(args: argparse.Namespace) -> int:
    g = _load(args)
    matrix = _build_operator(g, args.operator)
    _emit(
        {
            "rows": matrix.rows,
            "cols": matrix.cols,
            "entries": [[i, j, str(v)] for i, j, v in matrix.nonzero_items()],
        }
    )
    return 0


# -- charpoly -------------------------------------------------------------


def _cmd_charpoly(args: argparse.Namespace) -> int:
    g = _load(args)
    if args.matrix == "grover":
        p = zeta.grover_zeta_reciprocal(g, workers=args.workers)
    elif args.matrix == "positive-support":
        p = zeta.ihara_reciprocal_edge(g, workers=args.workers)
    else:
        p = zeta.ihara_reciprocal_bass(g, workers=args.workers)
    _emit({"coeffs": _poly_strings(p)})
    return 0


# -- verify konno-sato -----------------------------------------------------


def _cmd_verify_konno_sato(args: argparse.Namespace) -> int:
    g = _load(args)
    report = zeta.konno_sato_check(g, workers=args.workers)
    if args.json:
        payload = {
            "graph": report.graph_summary,
            "regular_degree": report.regular_degree,
            "identities": [
                {"tag": check.tag, "holds": check.holds}
                for check in report.identities
            ],
            "failing": [
                {
                    "tag": check.tag,
                    "lhs": _poly_strings(check.lhs),
                    "rhs": _poly_strings(check.rhs),
                }
                for check in report.failing()
            ],
            "all_hold": report.all_hold,
        }
        _emit(payload)
    else:
        print(report.graph_summary)
        for check in report.identities:
            print(f"{check.tag}: {'ok' if check.holds else 'FAIL'}")
        if report.all_hold:
            print("all identities hold")
        else:
            print(f"{len(report.failing())} identity check(s) failed")
    return 0 if report.all_hold else 1


# -- series ---------------------------------------------------------------


def _cmd_series(args: argparse.Namespace) -> int:
    g = _load(args)
    if args.which == "grover":
        series = zeta.weighted_cycle_counts(g, args.order)
    elif args.which == "ihara":
        series = zeta.reduced_cycle_counts(g, args.order)
    elif args.which == "oracle-weighted":
        series = zeta.cycle_oracle(g, args.order, "weighted")
    else:
        series = zeta.cycle_oracle(g, args.order, "reduced")
    if args.json:
        _emit({"N": [str(c) for c in series.counts]})
    else:
        for r, value in enumerate(series.counts, start=1):
            print(f"{r} {value}")
    return 0


# -- zeta-eval --------------------------------------------------------------


def _cmd_zeta_eval(args: argparse.Namespace) -> int:
    g = _load(args)
    u = Fraction(args.u)
    spectral = None
    charpoly = None
    if args.method in ("spectral", "both"):
        spectral = zeta.spectral_zeta_reciprocal(g, float(u), args.which, args.route)
    if args.method in ("charpoly", "both"):
        charpoly = zeta.charpoly_zeta_reciprocal(g, u, args.which, workers=args.workers)

    agree = None
    if args.method == "both":
        agree = abs(spectral - charpoly) <= args.tol

    if args.json:
        payload = {
            "u": str(u),
            "which": args.which,
            "route": args.route,
            "method": args.method,
        }
        if spectral is not None:
            payload["spectral"] = _json_float(spectral)
        if charpoly is not None:
            payload["charpoly"] = _json_float(charpoly)
        if agree is not None:
            payload["tolerance"] = args.tol
            payload["agree"] = agree
        _emit(payload)
    else:
        if spectral is not None:
            print(f"spectral {_fmt(spectral)}")
        if charpoly is not None:
            print(f"charpoly {_fmt(charpoly)}")
        if agree is not None:
            print(f"difference {_fmt(abs(spectral - charpoly))}")
            print(f"agree within {_fmt(args.tol)}: {'yes' if agree else 'NO'}")
    return 0 if agree in (None, True) else 1


# -- torus-limit -------------------------------------------------------------


def _cmd_torus_limit(args: argparse.Namespace) -> int:
    u = float(Fraction(args.u))
    _check_ihara_margin(args, u)
    log_mean = limits.torus_limit_log_mean(
        args.d, u, args.which, args.grid, args.allow_high_dimension
    )
    prefactor = limits.torus_prefactor(args.d, u)
    value = prefactor * math.exp(log_mean)
    if args.json:
        _emit(
            {
                "value": _json_float(value),
                "grid": args.grid,
                "prefactor": _json_float(prefactor),
            }
        )
    else:
        print(_fmt(value))
    return 0


# -- converge ----------------------------------------------------------------


def _cmd_converge(args: argparse.Namespace) -> int:
    sides = _parse_sides(args.N)
    u = float(Fraction(args.u))
    _check_ihara_margin(args, u)
    study = limits.convergence_study(
        args.d,
        u,
        sides,
        args.which,
        reference_grid=args.reference_grid,
        allow_high_dimension=args.allow_high_dimension,
    )
    monotone = study.errors_monotone()
    if args.json:
        _emit(
            {
                "d": study.d,
                "u": _json_float(study.u),
                "which": study.which,
                "reference_grid": study.reference_grid,
                "reference_value": _json_float(study.reference_value),
                "rows": [
                    {
                        "N": row.n,
                        "value": _json_float(row.value),
                        "abs_error": _json_float(row.abs_error),
                    }
                    for row in study.rows
                ],
                "errors_monotone": monotone,
            }
        )
    else:
        print("N,value,abs_error")
        for row in study.rows:
            print(f"{row.n},{_fmt(row.value)},{_fmt(row.abs_error)}")
    if args.require_monotone and not monotone:
        return 1
    return 0


def _parse_sides(text: str) -> list[int]:
    try:
        sides = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValueError(f"--N must be comma-separated integers, got {text!r}") from exc
    if not sides:
        raise ValueError("--N must list at least one torus side")
    return sides


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetawalk",
        description="Exact zeta functions of Grover walks on finite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named graph family as JSON")
    gen.add_argument(
        "--family",
        required=True,
        choices=["cycle", "torus", "complete", "petersen", "hypercube"],
    )
    gen.add_argument("--N", type=int, default=None, help="side or vertex count")
    gen.add_argument("--d", type=int, default=None, help="dimension parameter")
    gen.add_argument("--out", default=None, help="output path (default: stdout)")
    gen.set_defaults(func=_cmd_gen)

    matrix = sub.add_parser("matrix", help="matrix operations")
    matrix_sub = matrix.add_subparsers(dest="matrix_command", required=True)
    dump = matrix_sub.add_parser("dump", help="dump a walk operator as sparse JSON")
    dump.add_argument("--graph", required=True, help="graph JSON path")
    dump.add_argument("--operator", required=True, choices=list(_MATRIX_OPERATORS))
    dump.set_defaults(func=_cmd_matrix_dump)

    charpoly = sub.add_parser(
        "charpoly", help="exact zeta reciprocal polynomial as JSON coefficients"
    )
    charpoly.add_argument("--graph", required=True)
    charpoly.add_argument(
        "--matrix",
        default="grover",
        choices=["grover", "positive-support", "bass"],
        help="grover: det(I-uU); positive-support: det(I-uU+); bass: Ihara-Bass form",
    )
    charpoly.add_argument("--workers", type=int, default=1)
    charpoly.set_defaults(func=_cmd_charpoly)

    verify = sub.add_parser("verify", help="verification suites")
    verify_sub = verify.add_subparsers(dest="verify_command", required=True)
    ks = verify_sub.add_parser(
        "konno-sato", help="check the four determinant factorizations exactly"
    )
    ks.add_argument("--graph", required=True)
    ks.add_argument("--workers", type=int, default=1)
    ks.add_argument("--json", action="store_true")
    ks.set_defaults(func=_cmd_verify_konno_sato)

    series = sub.add_parser("series", help="cycle-count series N_1..N_K")
    series.add_argument("--graph", required=True)
    series.add_argument("--order", type=int, required=True)
    series.add_argument(
        "--which",
        required=True,
        choices=["grover", "ihara", "oracle-weighted", "oracle-reduced"],
        help="grover: Tr U^r; ihara: Tr (U+)^r; oracle-*: brute-force enumeration",
    )
    series.add_argument("--json", action="store_true")
    series.set_defaults(func=_cmd_series)

    zeta_eval = sub.add_parser(
        "zeta-eval", help="evaluate the generalized zeta reciprocal at a point"
    )
    zeta_eval.add_argument("--graph", required=True)
    zeta_eval.add_argument("--u", required=True, help='rational or decimal, e.g. "1/5" or "0.2"')
    zeta_eval.add_argument("--which", default="grover", choices=["grover", "ihara"])
    zeta_eval.add_argument(
        "--route", default="transition", choices=["transition", "laplacian"]
    )
    zeta_eval.add_argument(
        "--method", default="both", choices=["spectral", "charpoly", "both"]
    )
    zeta_eval.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    zeta_eval.add_argument("--workers", type=int, default=1)
    zeta_eval.add_argument("--json", action="store_true")
    zeta_eval.set_defaults(func=_cmd_zeta_eval)

    torus_limit = sub.add_parser(
        "torus-limit", help="infinite-volume torus zeta reciprocal by quadrature"
    )
    torus_limit.add_argument("--d", type=int, required=True)
    torus_limit.add_argument("--u", required=True)
    torus_limit.add_argument("--which", default="grover", choices=["grover", "ihara"])
    torus_limit.add_argument("--grid", type=int, default=64)
    torus_limit.add_argument(
        "--full-domain",
        action="store_true",
        help="lift the default ihara-kind margin |u| <= 0.9/(2d-1)",
    )
    torus_limit.add_argument("--allow-high-dimension", action="store_true")
    torus_limit.add_argument("--json", action="store_true")
    torus_limit.set_defaults(func=_cmd_torus_limit)

    converge = sub.add_parser(
        "converge", help="finite torus values against the limit reference (CSV)"
    )
    converge.add_argument("--d", type=int, required=True)
    converge.add_argument("--u", required=True)
    converge.add_argument("--N", required=True, help="comma-separated sides, e.g. 4,8,16,32")
    converge.add_argument("--which", default="grover", choices=["grover", "ihara"])
    converge.add_argument("--reference-grid", type=int, default=None)
    converge.add_argument("--require-monotone", action="store_true")
    converge.add_argument(
        "--full-domain",
        action="store_true",
        help="lift the default ihara-kind margin |u| <= 0.9/(2d-1)",
    )
    converge.add_argument("--allow-high-dimension", action="store_true")
    converge.add_argument("--json", action="store_true")
    converge.set_defaults(func=_cmd_converge)

    return parser


def entrypoint(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(entrypoint())


if __name__ == "__main__":
    main()
