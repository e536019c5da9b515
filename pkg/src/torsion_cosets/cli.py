"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 resource cap,
3 verification failure or internal error.
"""

import argparse
import json
import logging
import sys

from . import __version__
from .bounds import DEFAULT_BIT_BUDGET, bounds_report
from .enumerator import EnumConfig, enumerate_maximal_cosets, verification_checks
from .errors import BoundViolation, CapTooLarge, ParseError, TorsionCosetError, ZeroPolynomial
from .newton import polytope_summary, support
from .parse import parse_poly
from .scan import BACKENDS

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_FAIL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        if set(obj) == {"log_e"}:
            yield prefix, f"exp({obj['log_e']!r})"
            return
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else k)
    elif isinstance(obj, list) and obj and all(isinstance(v, dict) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, json.dumps(obj) if not isinstance(obj, str) else obj


def render_table(doc):
    """Aligned two-column text rendering of a JSON document."""
    rows = list(_flatten(doc))
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _emit(doc, as_json):
    print(dumps(doc) if as_json else render_table(doc))


def _common(p):
    p.add_argument("--p", type=int, default=2, help="first prime of sigma (default 2)")
    p.add_argument("--q", type=int, default=3, help="second prime of sigma (default 3)")
    p.add_argument("--no-aliev", action="store_true", help="use the k^(k/2) exponent cap")
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p.add_argument("--bit-budget", type=int, default=DEFAULT_BIT_BUDGET)


def _enum_flags(p):
    p.add_argument("poly", help='polynomial, e.g. "x + y - 1"')
    p.add_argument("--order-cap", type=int, default=None)
    p.add_argument("--no-sieve", action="store_true")
    p.add_argument("--backend", choices=BACKENDS, default=None)
    _common(p)


def build_parser():
    parser = _Parser(prog="torsion-cosets", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bounds", help="evaluate every bound for (n, d, dim V)")
    b.add_argument("-n", type=int, required=True, help="ambient dimension")
    b.add_argument("-d", type=int, required=True, help="degree of V")
    b.add_argument("--dim", type=int, required=True, help="dimension of V")
    b.add_argument("--volume", type=int, default=None, help="normalized Newton volume")
    _common(b)

    _enum_flags(sub.add_parser("enumerate", help="list maximal torsion cosets of a plane curve"))
    _enum_flags(sub.add_parser("verify", help="cross-check brute force against the sieve"))

    a = sub.add_parser("analyze", help="Newton polytope and bounds of a hypersurface")
    a.add_argument("poly")
    a.add_argument("--dim", type=int, default=None, help="override dim V (default n-1)")
    _common(a)
    return parser


def cmd_bounds(args):
    if args.n < 1 or args.d < 1 or not 0 <= args.dim <= args.n:
        raise ValueError("need n >= 1, d >= 1 and 0 <= dim <= n")
    rep = bounds_report(
        args.n,
        args.d,
        args.dim,
        args.p,
        args.q,
        norm_volume=args.volume,
        aliev=not args.no_aliev,
        bit_budget=args.bit_budget,
    )
    return {"command": "bounds", "bounds": rep.to_json()}


def _config(args):
    return EnumConfig(
        order_cap=args.order_cap,
        use_aliev=not args.no_aliev,
        p=args.p,
        q=args.q,
        sieve_enabled=not args.no_sieve,
        bit_budget=args.bit_budget,
        backend=args.backend,
    )


def cmd_enumerate(args):
    expr = parse_poly(args.poly)
    res = enumerate_maximal_cosets(expr.poly, _config(args))
    return {"command": "enumerate", "polynomial": str(expr.poly), **res.to_json()}


def cmd_verify(args):
    expr = parse_poly(args.poly)
    checks = verification_checks(expr.poly, _config(args))
    return {
        "command": "verify",
        "polynomial": str(expr.poly),
        "checks": checks,
        "passed": all(checks.values()),
    }


def cmd_analyze(args):
    expr = parse_poly(args.poly)
    f = expr.poly
    n = f.nvars
    dim_v = n - 1 if args.dim is None else args.dim
    summary = polytope_summary(support(f))
    rep = bounds_report(
        n,
        max(f.total_degree(), 1),
        dim_v,
        args.p,
        args.q,
        card=summary.card,
        sq_diameter=summary.sq_diameter,
        norm_volume=summary.norm_volume_2d,
        aliev=not args.no_aliev,
        bit_budget=args.bit_budget,
    )
    return {
        "command": "analyze",
        "polynomial": str(f),
        "polytope": summary.to_json(),
        "bounds": rep.to_json(),
    }


COMMANDS = {
    "bounds": cmd_bounds,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "analyze": cmd_analyze,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        doc = COMMANDS[args.command](args)
    except (ParseError, ZeroPolynomial, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapTooLarge as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (BoundViolation, TorsionCosetError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except Exception as exc:  # noqa: BLE001 - exit-code contract
        logging.exception("internal error")
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(doc, args.json)
    if args.command == "verify" and not doc["passed"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
