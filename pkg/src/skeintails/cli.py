"""Command-line front end.

Subcommands:

  series  NAME [--k 2 ...] --order N [--format text|json|csv]
  verify  SUITE [--order N] [--jobs J] [--slow] [--out PATH]
  jones   --f F --n N [--normalized] [--format text|json|csv]
  oracle  FILE [--format text|json] [--max-crossings C] [--max-box-color B]

Exit codes: 0 all passed / value printed, 1 verification failure, 2 usage,
parse, or capacity error.  Output is byte-deterministic for fixed inputs:
the verify runner may evaluate cases concurrently but always reports them
in suite order.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources

from .errors import CapacityError, DomainError, SkeinError
from .networks import ClosedNetwork, bracket_closed
from .qcore import QSeries
from .qidentities import SERIES_REGISTRY, named_series
from .skein_formulas import colored_jones_torus
from .tails_engine import normalize
from .tl_oracle import DEFAULT_CONFIG, OracleConfig
from .verifycases import run_check

_EXIT_PASS = 0
_EXIT_FAIL = 1
_EXIT_USAGE = 2


def _series_text(s: QSeries) -> str:
    return s.format(max_terms=1_000_000)


def _series_csv(s: QSeries) -> str:
    lines = ["exponent,numerator,denominator"]
    for j, c in enumerate(s.coeffs):
        lines.append(f"{s.shift + j},{c.numerator},{c.denominator}")
    return "\n".join(lines)


def _emit_series(s: QSeries, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(s.to_json_obj(), sort_keys=True), file=out)
    elif fmt == "csv":
        print(_series_csv(s), file=out)
    else:
        print(_series_text(s), file=out)


def _cmd_series(args, extra: dict[str, int], out) -> int:
    if args.name not in SERIES_REGISTRY:
        print(f"error: unknown series {args.name!r}; known: "
              f"{', '.join(sorted(SERIES_REGISTRY))}", file=sys.stderr)
        return _EXIT_USAGE
    try:
        s = named_series(args.name, extra, args.order)
    except SkeinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    _emit_series(s, args.format, out)
    return _EXIT_PASS


def _load_suite(spec: str) -> tuple[str, list[dict]]:
    if spec.startswith("builtin:"):
        name = spec.split(":", 1)[1]
        ref = resources.files("skeintails") / "suites" / f"{name}.json"
        if not ref.is_file():
            raise DomainError(f"no builtin suite {name!r}")
        data = json.loads(ref.read_text())
    else:
        with open(spec) as fh:
            data = json.load(fh)
    cases = data["cases"]
    ids = [c["id"] for c in cases]
    if len(set(ids)) != len(ids):
        raise DomainError("case ids are not unique")
    return data.get("suite", spec), cases


def _run_case(case: dict, order_override: int | None) -> dict:
    params = dict(case.get("params", {}))
    if order_override is not None and "order" in params:
        params["order"] = order_override
    try:
        ok, detail = run_check(case["check"], params)
        status = "pass" if ok else "fail"
    except SkeinError as exc:
        status, detail = "error", f"{type(exc).__name__}: {exc}"
    return {"id": case["id"], "status": status, "detail": detail}


def _cmd_verify(args, out) -> int:
    try:
        suite_name, cases = _load_suite(args.suite)
    except (OSError, KeyError, json.JSONDecodeError, DomainError) as exc:
        print(f"error: cannot load suite: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    if not args.slow:
        cases = [c for c in cases if not c.get("slow")]
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(lambda c: _run_case(c, args.order), cases))
    else:
        results = [_run_case(c, args.order) for c in cases]
    report = {
        "suite": suite_name,
        "cases": results,
        "passed": all(r["status"] == "pass" for r in results),
    }
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    for r in results:
        print(f"[{r['status'].upper():5s}] {r['id']}: {r['detail']}", file=out)
    print(
        f"{sum(r['status'] == 'pass' for r in results)}/{len(results)} cases passed",
        file=out,
    )
    if any(r["status"] == "error" for r in results):
        return _EXIT_USAGE
    return _EXIT_PASS if report["passed"] else _EXIT_FAIL


def _cmd_jones(args, out) -> int:
    if args.f < 1 or args.n < 0:
        print("error: need --f >= 1 and --n >= 0", file=sys.stderr)
        return _EXIT_USAGE
    value = colored_jones_torus(args.f, args.n)
    if args.normalized:
        s = normalize(value)
        if args.order is not None:
            s = s.with_order(args.order)
        _emit_series(s, args.format, out)
    else:
        if args.format == "json":
            print(json.dumps(value.to_json_obj(), sort_keys=True), file=out)
        elif args.format == "csv":
            lines = ["v_exponent,numerator,denominator"]
            for e in sorted(value.terms):
                c = value.terms[e]
                lines.append(f"{e},{c.numerator},{c.denominator}")
            print("\n".join(lines), file=out)
        else:
            print(value.format(), file=out)
    return _EXIT_PASS


def _cmd_oracle(args, out) -> int:
    try:
        with open(args.file) as fh:
            net = ClosedNetwork.parse(fh.read())
        config = OracleConfig(
            max_box_color=args.max_box_color,
            max_crossings=args.max_crossings,
            max_frontier=DEFAULT_CONFIG.max_frontier,
        )
        value = bracket_closed(net, config)
    except (OSError, DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    if args.format == "json":
        obj = {
            "numerator": value.num.to_json_obj(),
            "denominator": value.den.to_json_obj(),
        }
        print(json.dumps(obj, sort_keys=True), file=out)
    else:
        if value.is_poly():
            print(value.num.format(), file=out)
        else:
            print(f"({value.num.format()}) / ({value.den.format()})", file=out)
    return _EXIT_PASS


def _parse_unknown_int_flags(unknown: list[str]) -> dict[str, int]:
    """Turn ['--k', '2', '--c', '5'] into {'k': 2, 'c': 5}."""
    params: dict[str, int] = {}
    i = 0
    while i < len(unknown):
        tok = unknown[i]
        if not tok.startswith("--"):
            raise DomainError(f"unexpected argument {tok!r}")
        key = tok[2:]
        if "=" in key:
            key, val = key.split("=", 1)
        else:
            i += 1
            if i >= len(unknown):
                raise DomainError(f"flag --{key} needs a value")
            val = unknown[i]
        params[key.replace("-", "_")] = int(val)
        i += 1
    return params


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeintails",
        description="Exact skein evaluations, q-series tails, and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="print a named q-series")
    p.add_argument("name")
    p.add_argument("--order", "-N", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="builtin:NAME or a JSON file path")
    p.add_argument("--order", "-N", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--slow", action="store_true", help="include slow cases")
    p.add_argument("--out", help="write the JSON report here")

    p = sub.add_parser("jones", help="colored Jones of the (2,f) torus link")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--order", "-N", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("oracle", help="evaluate a closed network file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-crossings", type=int, default=DEFAULT_CONFIG.max_crossings)
    p.add_argument("--max-box-color", type=int, default=DEFAULT_CONFIG.max_box_color)

    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and argv[0] == "series":
            args, unknown = parser.parse_known_args(argv)
            extra = _parse_unknown_int_flags(unknown)
            return _cmd_series(args, extra, out)
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return _EXIT_USAGE if exc.code not in (0, None) else 0
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    try:
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "jones":
            return _cmd_jones(args, out)
        if args.command == "oracle":
            return _cmd_oracle(args, out)
    except SkeinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    parser.error("no command")
    return _EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
