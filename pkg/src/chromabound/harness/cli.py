"""Command-line entry point.

Exit codes: 0 everything passed, 1 a violation (or conjecture counterexample)
was found, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from typing import Sequence

from ..graph import GraphError, make_family, parse_graph6, read_graph6_lines
from .records import analyze
from .suites import HUNTS, SUITES, InputError, analyze_all, enumerated_corpus, file_corpus, run_hunt, run_suite

log = logging.getLogger("chromabound")

CSV_FIELDS = (
    "graph6", "n", "m", "min_degree", "max_degree", "connected", "chi", "col", "grundy", "psi",
    "randic", "harmonic", "harmonic_float", "r_prime", "r_prime_float", "eigenvalues", "inertia",
    "s_plus", "s_minus", "zero_tol", "near_zero_review", "family_match", "equality_flags",
)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def p4_example() -> list[tuple[str, float, str]]:
    """Rows ``(label, computed value, printed value)`` for the path on four vertices."""
    rec = analyze(make_family("path", 4))
    mu1, mu2 = rec.spectrum.eigenvalues[:2]
    two_m = 2 * rec.m
    return [
        ("chi", rec.chi, "2"),
        ("col", rec.col, "2"),
        ("Gamma", rec.grundy, "3"),
        ("psi", rec.psi, "3"),
        ("Delta+1", rec.max_degree + 1, "3"),
        ("2R'", float(2 * rec.r_prime), "3"),
        ("2H", float(2 * rec.harmonic), "3.67"),
        ("2R", 2 * rec.randic, "3.83"),
        ("mu_1", mu1, "1.618"),
        ("mu_2", mu2, "0.618"),
        ("2m/mu_1", two_m / mu1, "3.71"),
        ("2m/sqrt(s+)", two_m / math.sqrt(rec.spectrum.s_plus), "3.46"),
    ]


def format_printed(value: float, printed: str) -> str:
    """Round ``value`` to the number of decimals shown in ``printed``."""
    decimals = len(printed.split(".")[1]) if "." in printed else 0
    return f"{value:.{decimals}f}"


def cmd_example_p4(args) -> int:
    rows = p4_example()
    ok = True
    print(f"{'quantity':<12} {'2dp':>6} {'printed':>8} {'full precision':>20}  match")
    for label, value, printed in rows:
        match = format_printed(value, printed) == printed
        ok &= match
        print(f"{label:<12} {value:>6.2f} {printed:>8} {value!r:>20}  {'yes' if match else 'NO'}")
    return 0 if ok else 1


def cmd_invariants(args) -> int:
    stream = open(args.file) if args.file and args.file != "-" else sys.stdin
    failed = False
    writer = None
    if args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
    try:
        for lineno, text in read_graph6_lines(stream):
            try:
                G = parse_graph6(text)
            except (ValueError, GraphError) as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                failed = True
                continue
            row = analyze(G).to_dict()
            if writer is None:
                print(_dumps(row))
            else:
                row["eigenvalues"] = ";".join(repr(x) for x in row["eigenvalues"])
                row["inertia"] = ";".join(map(str, row["inertia"]))
                row["equality_flags"] = ";".join(row["equality_flags"])
                writer.writerow(row)
    finally:
        if stream is not sys.stdin:
            stream.close()
    return 2 if failed and args.strict else 0


def _corpus(args):
    if args.corpus:
        with open(args.corpus) as fh:
            return file_corpus(fh, args.connected), f"file {args.corpus}" + (" (connected)" if args.connected else "")
    if args.n_max is None:
        raise InputError("one of --n-max or --corpus is required")
    kind = "connected graphs" if args.connected else "all graphs"
    return enumerated_corpus(args.n_max, args.connected), f"{kind}, 1 <= n <= {args.n_max}, one per isomorphism class"


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    graphs, corpus = _corpus(args)
    records = analyze_all(graphs, args.jobs)
    status = 0
    for name in names:
        suite = SUITES[name]
        result = run_suite(suite, records, corpus)
        print(f"# suite {name}: {corpus}; hypotheses: "
              + "; ".join(f"{b} [{h}]" for b, h in suite.hypotheses.items()), file=sys.stderr)
        print(_dumps(result.to_dict()))
        if not result.passed:
            status = 1
            log.warning("suite %s: %d violation(s)", name, len(result.violations))
    return status


def cmd_hunt(args) -> int:
    hunt = HUNTS[args.conjecture]
    if hunt.hypothesis == "connected":
        args.connected = True
    graphs, corpus = _corpus(args)
    result = run_hunt(hunt, analyze_all(graphs, args.jobs), corpus)
    print(f"# hunt {hunt.name}: {hunt.statement} over {corpus} [{hunt.hypothesis}]", file=sys.stderr)
    print(_dumps(result.to_dict()))
    if result.found:
        log.warning("hunt %s: %d counterexample(s) found", hunt.name, len(result.counterexamples))
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromabound", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="per-graph invariants for graph6 input")
    p.add_argument("file", nargs="?", help="graph6 file (default: stdin)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--strict", action="store_true", help="exit 2 if any line fails to parse")
    p.set_defaults(func=cmd_invariants)

    for name, func, choices in (
        ("verify", cmd_verify, list(SUITES) + ["all"]),
        ("hunt", cmd_hunt, list(HUNTS)),
    ):
        p = sub.add_parser(name)
        p.add_argument("suite" if name == "verify" else "conjecture", choices=choices)
        p.add_argument("--n-max", type=int)
        p.add_argument("--corpus", help="graph6 file used instead of exhaustive enumeration")
        p.add_argument("--connected", action="store_true", help="restrict to connected graphs")
        p.add_argument("--jobs", type=int, default=1)
        p.set_defaults(func=func)

    p = sub.add_parser("example-p4", help="reproduce the worked P4 example")
    p.set_defaults(func=cmd_example_p4)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
