"""Command-line front end.

Examples::

    gochow piece --ring go --n 1 --degree 2
    gochow torsion --ring file:so3.pres --kunneth --max-degree 6
    gochow verify --check all --n 2 --max-degree 8 --format json
    gochow lift --n 3 --p 5

Exit status: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog
from .exprparse import ParseError, parse_poly_expression
from .gradedring import (RingMapSpec, graded_piece, hilbert_function, induced_map_in_degree,
                         multiplication_map, torsion_summary)
from .polycore import enumerate_monomials
from .verifier import (CHECKS, CheckReport, ResourceLimitExceeded, default_max_degree,
                       find_torsion_lift, run_check, run_suite)

RINGS = ("go", "o", "torus", "b")
MAPS = ("torus", "o", "lambda", "b")

__all__ = ["main", "emit_report", "parse_poly_expression", "ParseError"]


class UsageError(Exception):
    pass


def emit_report(reports: Sequence[CheckReport], fmt: str = "table") -> str:
    """Render reports as JSON (stable schema) or an aligned text table."""
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports], indent=2)
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    for r in reports:
        title = CHECKS[r.check].title if r.check in CHECKS else "torsion lifts"
        lines.append(f"{r.check:<5} n={r.n} max_degree={r.max_degree}  "
                     f"{'PASS' if r.passed else 'FAIL'}  {title}")
        for d in r.per_degree:
            status = "pass" if d.passed else "fail"
            text = d.detail
            if not d.passed:
                text = json.dumps(d.witness, sort_keys=True)
            lines.append(f"  {d.m:>4}  {status:<4}  {text}".rstrip())
    return "\n".join(lines)


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def _ring_arg(text: str) -> str:
    if text in RINGS or (text.startswith("file:") and len(text) > 5):
        return text
    raise argparse.ArgumentTypeError(f"unknown ring {text!r}; valid: {', '.join(RINGS)}, file:<path>")


def _check_arg(text: str) -> str:
    if text == "all" or text in CHECKS:
        return text
    raise argparse.ArgumentTypeError(f"unknown check {text!r}; valid: {', '.join(CHECKS)}, all")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gochow", description="Graded pieces of presented rings and the GO(2n) check suite.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, ring=True):
        if ring:
            p.add_argument("--ring", type=_ring_arg, default="go")
            p.add_argument("--kunneth", action="store_true", help="adjoin a free degree-1 generator l")
        p.add_argument("--n", type=_positive, default=1)
        p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("piece", help="structure of one graded piece")
    common(p)
    p.add_argument("--degree", type=_nonneg, required=True)

    for name in ("hilbert", "torsion"):
        p = sub.add_parser(name, help=f"{name} data through a degree bound")
        common(p)
        p.add_argument("--max-degree", type=_nonneg, required=True)

    p = sub.add_parser("map-kernel", help="kernel and image of a map in one degree")
    common(p, ring=False)
    p.add_argument("--map", choices=MAPS, default="torus")
    p.add_argument("--degree", type=_nonneg, required=True)

    p = sub.add_parser("verify", help="run checks C1..C12")
    common(p, ring=False)
    p.add_argument("--check", type=_check_arg, default="all")
    p.add_argument("--max-degree", type=_nonneg, default=None)

    p = sub.add_parser("lift", help="2-torsion lift of an odd Chern class")
    common(p, ring=False)
    p.add_argument("--p", type=_positive, required=True)
    return parser


def _ring(args):
    if args.ring.startswith("file:"):
        P = catalog.load_presentation(args.ring[5:])
    else:
        P = {"go": catalog.go_presentation, "o": lambda n: catalog.o_presentation(2 * n),
             "torus": catalog.torus_presentation, "b": catalog.b_presentation}[args.ring](args.n)
    if args.kunneth:
        P = catalog.kunneth_extend(P)
    return P


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _cmd_piece(args) -> tuple[int, str]:
    P = _ring(args)
    piece = graded_piece(P, args.degree)
    if args.format == "json":
        return 0, json.dumps({"ring": P.name, "degree": args.degree,
                              "structure": piece.structure.to_json(),
                              "basis": [P.context.format_monomial(m) for m in piece.basis]}, indent=2)
    return 0, _table([["degree", "monomials", "structure"],
                      [str(args.degree), str(piece.rank), str(piece.structure)]])


def _cmd_hilbert(args) -> tuple[int, str]:
    P = _ring(args)
    ranks = hilbert_function(P, args.max_degree)
    counts = [len(enumerate_monomials(P.context, m)) for m in range(args.max_degree + 1)]
    if args.format == "json":
        return 0, json.dumps({"ring": P.name, "free_ranks": ranks, "monomials": counts}, indent=2)
    rows = [["degree", "monomials", "free_rank"]]
    rows += [[str(m), str(c), str(r)] for m, (c, r) in enumerate(zip(counts, ranks))]
    return 0, _table(rows)


def _cmd_torsion(args) -> tuple[int, str]:
    P = _ring(args)
    summary = torsion_summary(P, args.max_degree)
    if args.format == "json":
        return 0, json.dumps({"ring": P.name, "torsion": [
            {"m": e.degree, "invariant_factors": list(e.invariant_factors), "cardinality": e.cardinality}
            for e in summary]}, indent=2)
    rows = [["degree", "invariant_factors", "cardinality"]]
    rows += [[str(e.degree), " ".join(map(str, e.invariant_factors)) or "-", str(e.cardinality)]
             for e in summary]
    return 0, _table(rows)


def _cmd_map_kernel(args) -> tuple[int, str]:
    n, m = args.n, args.degree
    if args.map == "lambda":
        R = catalog.go_presentation(n)
        ind = multiplication_map(R, R.var(catalog.LAMBDA), m)
        label = "l: R_m -> R_m+1"
    else:
        spec: RingMapSpec = {"torus": catalog.torus_map, "o": catalog.o_map, "b": catalog.b_inclusion}[args.map](n)
        ind = induced_map_in_degree(spec, m)
        label = spec.name
    data = {"map": label, "n": n, "degree": m, "source": str(ind.source.structure),
            "target": str(ind.target.structure), "kernel": str(ind.kernel), "image": str(ind.image),
            "kernel_generators": [str(g) for g in ind.kernel_generators()]}
    if args.format == "json":
        return 0, json.dumps(data, indent=2)
    rows = [["field", "value"]] + [[k, ", ".join(v) if isinstance(v, list) else str(v)] for k, v in data.items()]
    return 0, _table(rows)


def _cmd_verify(args) -> tuple[int, str]:
    max_degree = default_max_degree(args.n) if args.max_degree is None else args.max_degree
    if args.check == "all":
        reports = run_suite(args.n, max_degree)
    else:
        reports = [run_check(args.check, args.n, max_degree)]
    return (0 if all(r.passed for r in reports) else 1), emit_report(reports, args.format)


def _cmd_lift(args) -> tuple[int, str]:
    if args.p % 2 == 0 or args.p >= 2 * args.n:
        raise UsageError(f"--p must be odd and smaller than 2n = {2 * args.n}")
    lift = find_torsion_lift(args.n, args.p)
    cert = lift.certificate()
    ctx = lift.element.ctx
    if args.format == "json":
        return 0, json.dumps({"n": lift.n, "p": lift.p, "element": str(lift.element),
                              "coordinates": {ctx.format_monomial(m): c for m, c in sorted(lift.coordinates.items())},
                              "certificate": cert}, indent=2)
    rows = [["n", "p", "beta", "2*beta = 0", "beta = c_p mod l"],
            [str(lift.n), str(lift.p), str(lift.element), str(cert["twice_in_relations"]),
             str(cert["maps_to_c_p"])]]
    return (0 if all(cert.values()) else 1), _table(rows)


COMMANDS = {"piece": _cmd_piece, "hilbert": _cmd_hilbert, "torsion": _cmd_torsion,
            "map-kernel": _cmd_map_kernel, "verify": _cmd_verify, "lift": _cmd_lift}


def execute(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run a command line; return ``(status, stdout_text, stderr_text)``."""
    try:
        args = build_parser().parse_args(list(argv))
        status, out = COMMANDS[args.command](args)
        return status, out, ""
    except UsageError as exc:
        return 2, "", f"gochow: error: {exc}"
    except (ParseError, catalog.PresentationFormatError, ResourceLimitExceeded,
            ValueError, KeyError, OSError) as exc:
        return 2, "", f"gochow: error: {exc}"


def main(argv: Sequence[str] | None = None) -> int:
    status, out, err = execute(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
