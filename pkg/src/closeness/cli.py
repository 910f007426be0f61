"""Command-line interface.

Exit codes: 0 success, 1 asserted violation or oracle mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .asymptotics import asymptotic_run
from .bounds import BOUND_IDS, all_bounds, detect_class_tags
from .corpus import CorpusSpec, load_input
from .generators import FamilySpec, make_family
from .graph import DisconnectedGraphError, GraphInputError, distance_matrix, structural_summary
from .independence import DEFAULT_EXACT_LIMIT, independence_number
from .ledger import run_ledger
from .metrics import full_profile
from .spectral import laplacian_spectrum

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
SPECTRAL_LIMIT = 128


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x} ({float(x):.12g})"
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _analyse(text: str):
    entry = load_input(text)
    g = entry.graph
    dm = distance_matrix(g)
    if not dm.connected:
        raise DisconnectedGraphError()
    if g.n < 2:
        raise GraphInputError("closeness undefined for a single vertex")
    return entry, g, dm, structural_summary(g, dm), full_profile(g, dm)


def cmd_metrics(args) -> int:
    entry, g, dm, summary, profile = _analyse(args.input)
    rows = [
        ("graph", entry.graph_id),
        ("n", g.n),
        ("m", g.m),
        ("min_degree", summary.min_degree),
        ("max_degree", summary.max_degree),
        ("radius", summary.radius),
        ("diameter", summary.diameter),
        ("mean_distance", profile.mean_distance),
        ("closeness", profile.graph_closeness),
        ("betweenness", profile.graph_betweenness),
        ("transmission_regular", profile.transmission_regular),
    ]
    for key, value in rows:
        print(f"{key:<22}{_fmt(value)}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    wanted = None
    if args.only:
        wanted = {s.strip() for s in args.only.split(",") if s.strip()}
        unknown = wanted - set(BOUND_IDS)
        if unknown:
            raise GraphInputError(f"unknown bound id(s): {', '.join(sorted(unknown))}")
    entry, g, dm, summary, profile = _analyse(args.input)
    spectral = laplacian_spectrum(g) if g.n <= SPECTRAL_LIMIT else None
    alpha = independence_number(g).alpha if g.n <= DEFAULT_EXACT_LIMIT else None
    records = all_bounds(g, summary, profile, spectral, alpha, set(entry.tags) | detect_class_tags(g))
    print(f"# {entry.graph_id}: n={g.n} m={g.m} closeness={_fmt(profile.graph_closeness)}")
    print(f"{'bound':<24}{'kind':<7}{'status':<10}{'holds':<7}{'value':<28}margin")
    failed = False
    for r in records:
        if wanted and r.id not in wanted:
            continue
        if not r.applicable:
            print(f"{r.id:<24}{r.kind:<7}{r.status:<10}{'-':<7}n/a: {r.reason}")
            continue
        failed |= r.status == "ASSERTED" and not r.holds
        print(f"{r.id:<24}{r.kind:<7}{r.status:<10}{str(r.holds).lower():<7}{_fmt(r.value):<28}{_fmt(r.margin)}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args) -> int:
    spec = CorpusSpec.load(args.corpus) if args.corpus else CorpusSpec()
    report = run_ledger(spec, args.out, jobs=args.jobs)
    s = report.summary
    print(f"graphs verified:        {s['graphs']}")
    print(f"asserted violations:    {len(s['assertedViolations'])}")
    print(f"oracle mismatches:      {len(s['oracleMismatches'])}")
    print(f"audit violations:       {len(s['auditViolations'])} {s['auditViolationCounts']}")
    print(f"documented discrepancies: {len(s['discrepancies'])}")
    print(f"edge-deletion samples:  {s['edgeDeletion']['samples']} ({len(s['edgeDeletion']['violations'])} violations)")
    print(f"report written to {Path(args.out) / 'ledger.json'}")
    return report.exit_code


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(float(s)) for s in text.split(",") if s.strip()]
    except ValueError:
        raise GraphInputError(f"bad --sizes value {text!r}") from None
    if not sizes or min(sizes) < 2:
        raise GraphInputError("sizes must be integers >= 2")
    return sizes


def cmd_asymptotics(args) -> int:
    rows = asymptotic_run(args.family, _sizes(args.sizes))
    header = ["n", "lower", "exact", "exact_float", "upper", "n_times_exact", "pi_gap", "contained"]
    table = []
    for r in rows:
        exact = str(r.exact) if r.exact is not None else ""
        table.append([r.n, repr(r.lower), exact, repr(r.exact_float), repr(r.upper),
                      repr(r.n * r.exact_float), repr(r.pi_gap), str(r.contained).lower()])
    print(f"{'n':>9} {'lower':>14} {'exact':>14} {'upper':>14} {'n*exact':>12} {'pi_gap':>10} ok")
    for r in rows:
        print(f"{r.n:>9} {r.lower:>14.8g} {r.exact_float:>14.8g} {r.upper:>14.8g} "
              f"{r.n * r.exact_float:>12.8f} {r.pi_gap:>10.3g} {'yes' if r.contained else 'NO'}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(table)
    return EXIT_OK if all(r.contained for r in rows) else EXIT_FAIL


def cmd_family(args) -> int:
    text = args.spec[len("family:"):] if args.spec.startswith("family:") else args.spec
    g = make_family(FamilySpec.parse(text))
    data = g.to_edgelist()
    if args.out:
        Path(args.out).write_text(data)
    else:
        sys.stdout.write(data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="closeness", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metrics", help="distance and centrality summary for one graph")
    p.add_argument("input", help="edge-list file or graph id such as family:cycle:5")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("bounds", help="evaluate every bound on one graph")
    p.add_argument("input")
    p.add_argument("--only", help="comma-separated bound ids")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run the full ledger over a corpus")
    p.add_argument("--corpus", help="JSON corpus spec (default: built-in corpus)")
    p.add_argument("--out", default="ledger", help="output directory (default: ./ledger)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asymptotics", help="path/ladder sandwich table")
    p.add_argument("--family", choices=["path", "ladder"], required=True)
    p.add_argument("--sizes", required=True, help="e.g. 4,100,1000000")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("family", help="emit a generated family graph")
    p.add_argument("spec", help="e.g. hypercube:3 or bipartite:3,4")
    p.add_argument("--emit", choices=["edgelist"], default="edgelist")
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (GraphInputError, DisconnectedGraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
