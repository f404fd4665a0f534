"""Command-line front end.

Machine-readable JSON goes to stdout (sorted keys, stable formatting); short
human summaries go to stderr.  Exit status: 0 on success, 1 on domain errors
including flag problems, 2 on verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import chains, hbn, strata, tableaux, verify
from .errors import DomainError, OracleViolation, SearchBudgetExceeded
from .jsonio import dumps_canonical, frac_str, parse_frac
from .lattice import MukaiVector, SurfaceParams, line_bundle_vector, square
from .stability import StabilityParams, default_epsilon, wall_on_axis
from .svg import render_wall_diagram

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_VERIFICATION_FAILURE = 2


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that reports usage problems as domain errors (exit 1)."""

    def error(self, message):
        raise DomainError(message, code="bad_usage")


def _parse_vector(text: str) -> MukaiVector:
    parts = text.split(",")
    if len(parts) != 4:
        raise DomainError(f"expected r,x,y,s with four entries, got {text!r}", code="bad_vector")
    try:
        r, x, y, s = (int(p) for p in parts)
    except ValueError as exc:
        raise DomainError(f"bad vector {text!r}: {exc}", code="bad_vector") from exc
    return MukaiVector(r, x, y, s)


def _parse_type(text: str) -> strata.StabilityType:
    try:
        pairs = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"bad type JSON {text!r}: {exc}", code="bad_type") from exc
    return strata.StabilityType.from_list(pairs)


def _parse_viewport(text: str) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 4:
        raise DomainError(f"expected bmin,bmax,wmin,wmax, got {text!r}", code="bad_viewport")
    try:
        return tuple(Fraction(p) for p in parts)  # accepts both p/q and decimals
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad viewport {text!r}: {exc}", code="bad_viewport") from exc


def _stability_params(args) -> tuple[SurfaceParams, StabilityParams, str]:
    params = SurfaceParams(args.g, args.k)
    v = _parse_vector(args.v)
    if args.eps is not None:
        eps = parse_frac(args.eps)
    else:
        eps = default_epsilon(params, v)
    return params, StabilityParams(params, eps), frac_str(eps)


def _type_verdict(params, v, t: strata.StabilityType) -> str:
    residual = strata.residual_vector(params, v, t)
    if square(params, residual) < -2:
        return strata.Verdict.EMPTY_BY_NECESSITY.value
    pairs = t.pairs
    balanced = len(pairs) == 1 or (len(pairs) == 2 and pairs[0][0] == pairs[1][0] + 1)
    if balanced and v.r <= 0 and v.x == 1 and v.y <= 0:
        if v.ch2 < 0:
            case = strata.DegreeCase.GENERIC
        elif v.ch2 == 0 and v.r == 0:
            case = strata.DegreeCase.GENUS_MINUS_ONE
        else:
            return strata.Verdict.UNKNOWN.value
        return strata.balanced_nonempty(params, v, t, case).verdict.value
    return strata.Verdict.UNKNOWN.value


def _report(command: str, inputs: dict, result, warnings: list[str]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "warnings": warnings,
    }


def _emit(report: dict, summary: str) -> None:
    sys.stdout.write(dumps_canonical(report))
    sys.stderr.write(summary + "\n")


# ------------------------------------------------------------- subcommands

def _cmd_rho(args) -> int:
    value = hbn.rho(args.g, args.r, args.d)
    report = _report("rho", {"g": args.g, "r": args.r, "d": args.d}, {"rho": value}, [])
    _emit(report, f"rho(g={args.g}, r={args.r}, d={args.d}) = {value}")
    return EXIT_OK


def _cmd_rho_k(args) -> int:
    value, argmax = hbn.rho_k(args.g, args.k, args.r, args.d)
    result = {"rho_k": value, "argmax_ell": argmax}
    inputs = {"g": args.g, "k": args.k, "r": args.r, "d": args.d}
    _emit(
        _report("rho-k", inputs, result, []),
        f"rho_{args.k}(g={args.g}, r={args.r}, d={args.d}) = {value}, "
        f"argmax ell = {argmax}",
    )
    return EXIT_OK


def _cmd_decompose(args) -> int:
    dec = hbn.ell_decompose(args.r, args.ell)
    result = {"ell": dec.ell, "e": dec.e, "m1": dec.m1, "m2": dec.m2}
    inputs = {"r": args.r, "ell": args.ell}
    warnings: list[str] = []
    if args.g is not None and args.k is not None and args.d is not None:
        inputs.update({"g": args.g, "k": args.k, "d": args.d})
        dims = hbn.degeneracy_dims(args.g, args.k, args.d, args.r, args.ell)
        result["degeneracy"] = {
            "s": dims.s,
            "rk_e": dims.rk_e,
            "rk_f": dims.rk_f,
            "expected_dim": dims.expected_dim,
            "h0_conditions": (
                f"vanishing h0 after twisting down e+2 = {dec.e + 2} pencil steps; "
                f"h0 = m1 = {dec.m1} after e+1 steps"
            ),
        }
    elif args.g is not None or args.k is not None or args.d is not None:
        warnings.append("degeneracy block needs all of --g, --k, --d; skipped")
    _emit(
        _report("decompose", inputs, result, warnings),
        f"ell={args.ell} on r={args.r}: e={dec.e}, m1={dec.m1}, m2={dec.m2}",
    )
    return EXIT_OK


def _cmd_types(args) -> int:
    params = SurfaceParams(args.g, args.k)
    v = _parse_vector(args.v)
    enum = strata.enumerate_types(
        params, v, args.r, refined=args.refined, square_filtered=args.square_filter
    )
    items = []
    for t in enum.items:
        items.append(
            {
                "type": t.to_list(),
                "dim": strata.stratum_dimension(params, v, t),
                "ell": strata.ell_value(t, args.r),
                "verdict": _type_verdict(params, v, t),
            }
        )
    result = {
        "r": enum.r,
        "refined": enum.refined,
        "square_filtered": enum.square_filtered,
        "items": items,
    }
    inputs = {"g": args.g, "k": args.k, "v": args.v, "r": args.r,
              "refined": args.refined, "square_filter": args.square_filter}
    _emit(
        _report("types", inputs, result, []),
        f"{len(items)} stability types for r={args.r}",
    )
    return EXIT_OK


def _cmd_walls(args) -> int:
    params, sp, eps_text = _stability_params(args)
    v = _parse_vector(args.v)
    t = _parse_type(args.type)
    walls = strata.wall_sequence(sp, v, t)
    result = {"eps": eps_text, "walls": [w.to_dict() for w in walls]}
    inputs = {"g": args.g, "k": args.k, "eps": args.eps, "v": args.v, "type": args.type}
    _emit(
        _report("walls", inputs, result, []),
        "walls at w = " + ", ".join(frac_str(w.w) for w in walls),
    )
    return EXIT_OK


def _cmd_tableaux(args) -> int:
    report = tableaux.oracle_check(args.g, args.k, args.r, args.d, budget=args.budget)
    result = {
        "feasible": report.feasible,
        "omitted": report.omitted,
        "rho_k": report.rho_k,
        "argmax_ell": list(report.argmax_ell),
        "equality": report.equality,
        "witness": report.witness.to_list() if report.witness else None,
    }
    inputs = {"g": args.g, "k": args.k, "r": args.r, "d": args.d}
    summary = (
        f"omitted = {report.omitted}, rho_k = {report.rho_k}"
        if report.feasible
        else f"no valid tableau; rho_k = {report.rho_k}"
    )
    _emit(_report("tableaux", inputs, result, []), summary)
    return EXIT_OK


def _cmd_chain(args) -> int:
    chain = chains.build_chain(args.g, args.k, args.r, args.d)
    report = chains.verify_chain(chain)
    result = dict(chain.to_dict())
    result["report"] = report.to_dict()
    inputs = {"g": args.g, "k": args.k, "r": args.r, "d": args.d}
    _emit(
        _report("chain", inputs, result, []),
        f"{len(chain.components)} components, total adjusted = {report.total_adjusted}, "
        f"ok = {report.ok}",
    )
    return EXIT_VERIFICATION_FAILURE if not report.ok else EXIT_OK


def _cmd_verify(args) -> int:
    results = verify.run_checks(args.suite, args.max_g, args.max_k)
    for res in results:
        sys.stderr.write(f"{'PASS' if res.ok else 'FAIL'} {res.name}: {res.detail}\n")
    failed = [res for res in results if not res.ok]
    result = {
        "suite": args.suite,
        "max_g": args.max_g,
        "max_k": args.max_k,
        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
        "passed": len(results) - len(failed),
        "failed": len(failed),
    }
    inputs = {"suite": args.suite, "max_g": args.max_g, "max_k": args.max_k}
    sys.stdout.write(dumps_canonical(_report("verify", inputs, result, [])))
    sys.stderr.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_VERIFICATION_FAILURE if failed else EXIT_OK


def _cmd_plot_walls(args) -> int:
    params, sp, eps_text = _stability_params(args)
    v = _parse_vector(args.v)
    walls = []
    if args.type is not None:
        t = _parse_type(args.type)
        for e, _m in t.pairs:
            walls.append(wall_on_axis(sp, v, line_bundle_vector(e)))
    viewport = _parse_viewport(args.viewport)
    svg, warnings = render_wall_diagram(sp, v, walls, viewport)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    result = {
        "eps": eps_text,
        "out": args.out,
        "wall_count": len(walls),
        "viewport": args.viewport,
    }
    inputs = {"g": args.g, "k": args.k, "eps": args.eps, "v": args.v,
              "type": args.type, "viewport": args.viewport, "out": args.out}
    _emit(
        _report("plot-walls", inputs, result, warnings),
        f"wrote {args.out} with {len(walls)} wall lines",
    )
    return EXIT_OK


# ------------------------------------------------------------------ parser

def _add_int(parser, name, required=True, default=None):
    parser.add_argument(name, type=int, required=required, default=default)


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="k3walls", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rho", help="Brill-Noether number")
    for flag in ("--g", "--r", "--d"):
        _add_int(p, flag)
    p.set_defaults(fn=_cmd_rho)

    p = sub.add_parser("rho-k", help="pencil-adjusted Brill-Noether number with maximizers")
    for flag in ("--g", "--k", "--r", "--d"):
        _add_int(p, flag)
    p.set_defaults(fn=_cmd_rho_k)

    p = sub.add_parser("decompose", help="balanced decomposition of an index ell")
    for flag in ("--r", "--ell"):
        _add_int(p, flag)
    for flag in ("--g", "--k", "--d"):
        _add_int(p, flag, required=False)
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("types", help="enumerate destabilization types")
    for flag in ("--g", "--k", "--r"):
        _add_int(p, flag)
    p.add_argument("--v", required=True, help="Mukai vector r,x,y,s")
    p.add_argument("--refined", action="store_true")
    p.add_argument("--square-filter", dest="square_filter", action="store_true")
    p.set_defaults(fn=_cmd_types)

    p = sub.add_parser("walls", help="wall sequence of a type on the central ray")
    for flag in ("--g", "--k"):
        _add_int(p, flag)
    p.add_argument("--eps", default=None, help='slice parameter "p/q"; default is the heuristic')
    p.add_argument("--v", required=True, help="Mukai vector r,x,y,s")
    p.add_argument("--type", required=True, help="JSON list of [e, m] pairs")
    p.set_defaults(fn=_cmd_walls)

    p = sub.add_parser("tableaux", help="displacement-tableau oracle vs the closed formula")
    for flag in ("--g", "--k", "--r", "--d"):
        _add_int(p, flag)
    p.add_argument("--budget", type=int, default=None, help="search node limit")
    p.set_defaults(fn=_cmd_tableaux)

    p = sub.add_parser("chain", help="elliptic-chain ramification data and its verification")
    for flag in ("--g", "--k", "--r", "--d"):
        _add_int(p, flag)
    p.set_defaults(fn=_cmd_chain)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", default="all", help="all or one of: " + ", ".join(verify.SUITES))
    p.add_argument("--max-g", dest="max_g", type=int, default=8)
    p.add_argument("--max-k", dest="max_k", type=int, default=5)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("plot-walls", help="SVG diagram of walls in the (b, w) plane")
    for flag in ("--g", "--k"):
        _add_int(p, flag)
    p.add_argument("--eps", default=None)
    p.add_argument("--v", required=True, help="Mukai vector r,x,y,s")
    p.add_argument("--type", default=None, help="JSON list of [e, m] pairs selecting walls")
    p.add_argument("--viewport", default="-1,1,-0.2,1", help="bmin,bmax,wmin,wmax")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(fn=_cmd_plot_walls)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except DomainError as exc:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "error": {"code": exc.code, "message": str(exc)},
        }
        sys.stdout.write(dumps_canonical(payload))
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN_ERROR
    except SearchBudgetExceeded as exc:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "error": {"code": "budget_exhausted", "message": str(exc)},
        }
        sys.stdout.write(dumps_canonical(payload))
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN_ERROR
    except OracleViolation as exc:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "error": {"code": "oracle_violation", "message": str(exc)},
        }
        sys.stdout.write(dumps_canonical(payload))
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VERIFICATION_FAILURE


if __name__ == "__main__":
    sys.exit(main())
