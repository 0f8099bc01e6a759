"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 degenerate q, 4 continued fraction did not stabilise.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .closedforms import F_from_h, F_from_recurrence, H_series, f_from_H, f_from_h
from .closedforms import f_from_recurrence, h_series
from .contfrac import CATALOGUE, cf_catalogue, cf_convergent, cf_stabilized
from .errors import DegenerateQError, DomainError, NonStabilizingError
from .exactnum import QPoly, parse_qpoly, parse_rational, scalar_to_json
from .qkit import qexp_inv_series, qexp_series
from .schroeder import DEFAULT_ORDER, FAMILIES, Params, generate
from .verifier import REGISTRY, SamplePlan, hankel_det, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE, EXIT_NONSTABLE = 0, 1, 2, 3, 4


def _fmt(v) -> str:
    return v.format() if isinstance(v, QPoly) else str(v)


def _emit_sequence(values, fmt: str, meta: dict, key: str = "terms", start: int = 0) -> None:
    if fmt == "json":
        print(json.dumps({**meta, key: [scalar_to_json(v) for v in values]}, indent=2))
    elif fmt == "csv":
        print("n,value")
        for n, v in enumerate(values, start):
            print(f"{n},{_fmt(v)}")
    else:
        print(",".join(_fmt(v) for v in values))


def _rational_params(args) -> Params:
    return Params.rational(args.q, args.x, args.y, args.order)


def cmd_gen(args) -> int:
    family = args.family
    if args.mode == "qpoly":
        if family not in ("A", "a", "carlitz", "carlitz-catalan"):
            raise DomainError(f"family {family!r} has no polynomial mode")
        x = parse_qpoly(args.x_raw or "1")
        y = parse_qpoly(args.y_raw or "q")
        p = Params.symbolic(x, y, args.order)
        terms = generate(family, args.nmax, None if family.startswith("carlitz") else p)
    else:
        p = _rational_params(args)
        terms = generate(family, args.nmax, p)
    _emit_sequence(terms, args.format, {"family": family, "mode": args.mode,
                                        "params": p.to_json()})
    return EXIT_OK


_SERIES = {
    "h": h_series,
    "H": H_series,
    "F": F_from_h,
    "f": f_from_h,
}


def cmd_series(args) -> int:
    p = _rational_params(args)
    if args.which in ("e", "einv"):
        build = qexp_series if args.which == "e" else qexp_inv_series
        s = build(args.order, p.q, p.x)
    elif args.via == "recurrence" and args.which in ("F", "f"):
        s = (F_from_recurrence if args.which == "F" else f_from_recurrence)(p)
    elif args.via == "H" and args.which == "f":
        s = f_from_H(p)
    else:
        s = _SERIES[args.which](p)
    if args.format == "json":
        print(json.dumps({"which": args.which, "params": p.to_json(),
                          "series": s.to_json()}, indent=2))
    else:
        _emit_sequence(s.coeffs, args.format, {})
    return EXIT_OK


def cmd_cf(args) -> int:
    spec = cf_catalogue(args.id, _rational_params(args))
    conv = cf_stabilized(spec) if args.depth is None else cf_convergent(spec, args.depth)
    if args.format == "json":
        print(json.dumps({"id": args.id, "params": spec.params.to_json(),
                          "depth": conv.depth, "stabilized_to": conv.stabilized_to,
                          "series": conv.value.to_json()}, indent=2))
    else:
        _emit_sequence(conv.value.coeffs, args.format, {})
        print(f"# depth={conv.depth} stabilized_to={conv.stabilized_to}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = None
    if args.ids:
        ids = [s.strip() for s in args.ids.split(",") if s.strip()]
        unknown = [i for i in ids if i not in REGISTRY]
        if unknown:
            raise DomainError(f"unknown identity ids: {', '.join(unknown)}")
    plan = SamplePlan(seed=args.seed, points=args.points, N=args.order)
    reports = verify_all(plan, ids, corrupt_at=args.corrupt_at)
    ok = all(r.passed for r in reports)
    if args.format in ("json", None):
        doc = {"seed": plan.seed, "points": plan.points, "N": plan.N,
               "reports": [r.to_json() for r in reports],
               "verdict": "pass" if ok else "fail"}
        print(json.dumps(doc, indent=2))
    else:
        for r in reports:
            print(f"{r.verdict.upper():4s} {r.id} ({len(r.points)} points)")
        print("verdict:", "pass" if ok else "fail")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_hankel(args) -> int:
    p = _rational_params(args)
    count = 2 * args.nmax - 1 + args.offset if args.terms is None else args.terms
    seq = generate(args.family, max(count - 1, 0), p)
    dets = [hankel_det(seq, n, args.offset) for n in range(1, args.nmax + 1)]
    _emit_sequence(dets, args.format, {"family": args.family, "params": p.to_json(),
                                       "offset": args.offset}, key="determinants", start=1)
    return EXIT_OK


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qschroeder",
        description="Exact q-Schroeder numbers, q-series and their continued fractions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default="plain"):
        sp.add_argument("--q", type=_rational_arg, default=parse_rational("1"))
        sp.add_argument("--x", dest="x_raw", default=None)
        sp.add_argument("--y", dest="y_raw", default=None)
        sp.add_argument("--order", "-N", type=int, default=DEFAULT_ORDER)
        sp.add_argument("--seed", type=int, default=42)
        sp.add_argument("--format", choices=("plain", "json", "csv"), default=fmt_default)

    g = sub.add_parser("gen", help="generate a sequence family")
    g.add_argument("--family", required=True, choices=FAMILIES + ("carlitz",))
    g.add_argument("--nmax", type=int, default=DEFAULT_ORDER)
    g.add_argument("--mode", choices=("rational", "qpoly"), default="rational")
    common(g)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("series", help="build a closed-form series")
    s.add_argument("--which", required=True, choices=("F", "f", "h", "H", "e", "einv"))
    s.add_argument("--via", choices=("h", "H", "recurrence"), default="h",
                   help="construction path for F and f")
    common(s)
    s.set_defaults(func=cmd_series)

    c = sub.add_parser("cf", help="evaluate a catalogue continued fraction")
    c.add_argument("--id", required=True)
    c.add_argument("--depth", type=int, default=None)
    common(c)
    c.set_defaults(func=cmd_cf)

    v = sub.add_parser("verify", help="verify identities at seeded sample points")
    v.add_argument("--ids", default=None, help="comma-separated registry ids")
    v.add_argument("--points", type=int, default=5)
    v.add_argument("--corrupt-at", type=int, default=None, help=argparse.SUPPRESS)
    common(v, fmt_default="json")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("hankel", help="Hankel determinants of a sequence family")
    h.add_argument("--family", required=True, choices=FAMILIES + ("carlitz",))
    h.add_argument("--nmax", type=int, required=True)
    h.add_argument("--offset", type=int, default=0)
    h.add_argument("--terms", type=int, default=None, help=argparse.SUPPRESS)
    common(h)
    h.set_defaults(func=cmd_hankel)
    return parser


_VALUE_FLAGS = ("--q", "--x", "--y")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--y -1/3`` into ``--y=-1/3``; argparse would read -1/3 as a flag."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        if getattr(args, "mode", "rational") != "qpoly":
            args.x = parse_rational(args.x_raw or "1")
            args.y = parse_rational(args.y_raw or "1")
        if args.command == "cf" and args.id not in CATALOGUE:
            raise DomainError(f"unknown continued fraction id {args.id!r}; "
                              f"known: {', '.join(CATALOGUE)}")
        return args.func(args)
    except DegenerateQError as exc:
        print(f"error: degenerate q: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except NonStabilizingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONSTABLE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
