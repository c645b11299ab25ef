"""Command line interface: ``ezd analyze|pair|seq|koszul|tor|search|census``.

Exit status: 0 when a verdict was computed (whatever it is), 1 on input
errors, 2 when a size guard refused the work, 3 when a census finds a
cross-check that does not hold.
"""

from __future__ import annotations

import argparse
import sys

from ezd import report as rp
from ezd.census import run_census
from ezd.classify import classify
from ezd.engine import (
    GuardError,
    SEARCH_MODES,
    check_sequence,
    pair_test,
    search,
    tor_periodic,
)
from ezd.ideals import ideal_of, zero_ideal
from ezd.koszul import t2_check
from ezd.parser import ParseError
from ezd.ringfile import load_ring_file

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_INCONSISTENT = 0, 1, 2, 3

CHECKS = {
    "minimal": ("minimal",),
    "permutable": ("minimal", "permutable"),
    "strong": ("minimal", "strong"),
    "all": ("minimal", "permutable", "strong"),
}


def _global_options(p: argparse.ArgumentParser, suppress: bool):
    # subcommands accept the global options too, without overriding them
    p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS if suppress else "json")
    p.add_argument("--order", choices=("grevlex", "lex", "grlex"), default=argparse.SUPPRESS if suppress else None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ezd", description="Exact zero-divisors on artinian local rings.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _global_options(p, suppress=True)
        return p

    p = cmd("analyze", "invariants and classification of a ring")
    p.add_argument("file")

    p = cmd("pair", "is X an exact zero-divisor (modulo an ideal)?")
    p.add_argument("file")
    p.add_argument("--x", required=True)
    p.add_argument("--mod", default="", help='generators separated by ";"')

    p = cmd("seq", "sequence test with optional extra checks")
    p.add_argument("file")
    p.add_argument("--xs", required=True, help='elements separated by ";"')
    p.add_argument("--check", choices=tuple(CHECKS), default="minimal")

    p = cmd("koszul", "Koszul homology characterisation versus the direct test")
    p.add_argument("file")
    p.add_argument("--xs", required=True)

    p = cmd("tor", "periodic Tor dimensions of R/(x) against R/J")
    p.add_argument("file")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--mod", default="")

    p = cmd("search", "enumerate pairs, sequences or strong sequences")
    p.add_argument("file")
    p.add_argument("--mode", choices=SEARCH_MODES, default="sequences")
    p.add_argument("--len", dest="length", type=int, default=1)
    p.add_argument("--pool", choices=("linear", "all"), default="linear")
    p.add_argument("--limit", type=int, default=None)

    p = cmd("census", "cross-check every ring file in a directory")
    p.add_argument("dir")
    return parser


def _load(args):
    rf = load_ring_file(args.file)
    ring = rf.build(args.order)
    return rf, ring


def _run(args) -> tuple[dict, dict | None, object, int]:
    """Returns (command echo, ring summary, result payload, exit code)."""
    echo = _echo(args)
    if args.command == "census":
        entries = run_census(args.dir, args.order)
        rows = [rp.census_entry_payload(e) for e in entries]
        checked = [r for r in rows if "error" not in r]
        summary = {
            "rings": len(rows),
            "errors": len(rows) - len(checked),
            "consistent": sum(1 for r in checked if r["consistent"]),
            "inconsistent": sum(1 for r in checked if not r["consistent"]),
            "tuples_tested": sum(r["tuples_tested"] for r in checked),
        }
        code = EXIT_INCONSISTENT if summary["inconsistent"] else EXIT_OK
        return echo, None, {"summary": summary, "rings": rows}, code

    rf, ring = _load(args)
    summary = rp.ring_summary(ring, rf)
    if args.command == "analyze":
        result = rp.classify_payload(classify(ring, represent=True))
    elif args.command == "pair":
        J = ideal_of(ring, rf.elements_of(ring, args.mod)) if args.mod.strip() else zero_ideal(ring)
        result = rp.pair_payload(pair_test(ring, rf.element(ring, args.x), J))
    elif args.command == "seq":
        checks = CHECKS[args.check]
        rep = check_sequence(ring, rf.elements_of(ring, args.xs), checks)
        result = rp.sequence_payload(rep, checks)
    elif args.command == "koszul":
        result = rp.koszul_payload(t2_check(ring, rf.elements_of(ring, args.xs)))
    elif args.command == "tor":
        J = ideal_of(ring, rf.elements_of(ring, args.mod)) if args.mod.strip() else zero_ideal(ring)
        rep = tor_periodic(ring, rf.element(ring, args.x), rf.element(ring, args.y), J)
        result = rp.tor_payload(rep)
    elif args.command == "search":
        hits = search(ring, args.mode, args.length, args.pool, limit=args.limit)
        result = {"count": len(hits), "hits": [rp.witness_payload(w) for w in hits]}
    else:  # pragma: no cover - argparse rejects unknown commands
        raise AssertionError(args.command)
    return echo, summary, result, EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        echo, summary, result, code = _run(args)
        report = rp.envelope(echo, summary, result)
    except (ValueError, OSError, ArithmeticError) as exc:
        code = EXIT_GUARD if isinstance(exc, GuardError) else EXIT_INPUT
        err = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            err["position"] = exc.pos
        report = rp.envelope(_echo(args), error=err)
        print(f"ezd: {err['type']}: {err['message']}", file=sys.stderr)
    out = rp.to_json(report) if args.format == "json" else rp.to_text(report)
    sys.stdout.write(out)
    return code


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "format" and v is not None}


if __name__ == "__main__":
    sys.exit(main())
