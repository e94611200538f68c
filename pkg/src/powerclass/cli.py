"""Command-line front end.

Three subcommands:

* ``analyze <group-ref> --prime p`` — group structure, eta series, p-series,
  and closure summary for one group (a corpus label or a group-file path);
* ``verify --suite ... --corpus ... --format text|json|csv --jobs k`` — run
  the theorem harness over a corpus and emit a report;
* ``corpus-list`` — table of corpus entries with freshly computed tags.

The default corpus is the shipped file; the ``POWERCLASS_CORPUS``
environment variable or the ``--corpus`` flag override it (the flag wins).
Exit codes: 0 success / no FAILED rows, 1 at least one FAILED row,
2 infrastructure problems (unreadable corpus, unknown label, caps).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .corpus import CorpusEntry, SHIPPED_CORPUS_PATH, find_entry, load
from .errors import GroupError
from .fusion import is_strongly_closed, is_weakly_closed
from .groups import nilpotency_class, subgroup_from_members, upper_central_series
from .harness import THEOREM_IDS, run_suite, run_suite_parallel
from .powerful import eta, eta_profile
from .psylow import is_p_power, sylow_p, upper_p_series
from .reports import VerificationReport

ENV_CORPUS = "POWERCLASS_CORPUS"


def _corpus_path(flag: Optional[Path]) -> Path:
    if flag is not None:
        return flag
    env = os.environ.get(ENV_CORPUS)
    if env:
        return Path(env)
    return SHIPPED_CORPUS_PATH


def _analyze_one(entry: CorpusEntry, p: int, out) -> None:
    G = entry.group
    if G.order % p != 0:
        raise GroupError(f"{p} does not divide |{G.label}| = {G.order}")
    print(f"group: {G.label}  (order {G.order}, degree {G.degree})", file=out)
    print(f"prime: {p}", file=out)
    P = sylow_p(G, p)
    PG = P.as_group()
    whole = " (the whole group)" if P.order == G.order else f" (index {G.order // P.order})"
    print(f"sylow subgroup: order {P.order}{whole}", file=out)
    cls = nilpotency_class(G)
    print(f"nilpotency class: {'not nilpotent' if cls is None else cls}", file=out)

    profile = eta_profile(PG, p)
    print(f"eta series orders (sylow): {profile.series.orders()}", file=out)
    print(f"powerful class: {profile.powerful_class}", file=out)
    print(f"powerful: {profile.is_powerful}", file=out)
    print(f"small powerful class (pwc < p): {profile.small_powerful_class}", file=out)
    if is_p_power(G.order, p):
        z_terms = upper_central_series(G).terms
        e_terms = profile.series.terms
        same = len(z_terms) == len(e_terms) and all(
            a.members == b.members for a, b in zip(e_terms, z_terms)
        )
        print(f"eta series equals upper central series: {same}", file=out)

    series = upper_p_series(G, p)
    print(f"p-series orders: {series.chain.orders()}  kinds: {series.factor_kinds}", file=out)
    if series.p_solvable:
        print(f"p-solvable: True, p-length: {series.p_length}", file=out)
    else:
        print("p-solvable: False", file=out)

    W = subgroup_from_members(G, eta(PG, p).members)
    weak = is_weakly_closed(W, P, G).holds
    strong = is_strongly_closed(W, P, G).holds
    print(
        f"eta closure in ambient group: weakly closed: {weak}, strongly closed: {strong}",
        file=out,
    )


def cmd_analyze(args) -> int:
    ref = args.group_ref
    path = Path(ref)
    if path.suffix == ".json" or path.exists():
        entries = load(path)
        if not entries:
            print(f"error: {path} contains no groups", file=sys.stderr)
            return 2
    else:
        entries = [find_entry(load(_corpus_path(args.corpus)), ref)]
    for i, entry in enumerate(entries):
        if i:
            print(file=sys.stdout)
        _analyze_one(entry, args.prime, sys.stdout)
    return 0


def cmd_verify(args) -> int:
    path = _corpus_path(args.corpus)
    entries = load(path)
    if not entries:
        print("error: corpus is empty, no rows to verify", file=sys.stderr)
        return 2
    if args.jobs > 1:
        report = run_suite_parallel(path, args.suite, args.jobs)
    else:
        report = run_suite(entries, args.suite)
    body = report.render(args.format)
    if args.out:
        Path(args.out).write_text(body)
        print(report.summary_line())
    else:
        sys.stdout.write(body)
        print(report.summary_line(), file=sys.stderr)
    return report.exit_code()


def cmd_corpus_list(args) -> int:
    entries = load(_corpus_path(args.corpus))
    if args.format == "json":
        payload = {
            "schema": 1,
            "entries": [
                {
                    "label": e.label,
                    "order": e.group.order,
                    "degree": e.group.degree,
                    "primes": list(e.primes_of_interest),
                    "tags": sorted(e.tags),
                    "provenance": e.provenance,
                }
                for e in entries
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"{'label':<12} {'order':>6} {'degree':>6} {'primes':<8} tags")
    for e in entries:
        primes = ",".join(str(p) for p in e.primes_of_interest)
        print(f"{e.label:<12} {e.group.order:>6} {e.group.degree:>6} {primes:<8} {', '.join(sorted(e.tags))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powerclass",
        description="Powerfully embedded subgroups, eta series, and theorem verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze one group at one prime")
    analyze.add_argument("group_ref", help="corpus label or path to a group file")
    analyze.add_argument("--prime", type=int, required=True)
    analyze.add_argument("--corpus", type=Path, default=None, help="corpus file for label lookups")
    analyze.set_defaults(func=cmd_analyze)

    verify = sub.add_parser("verify", help="run the theorem harness over a corpus")
    verify.add_argument(
        "--suite",
        default="all",
        help=f"'all' or one of: {', '.join(THEOREM_IDS)}",
    )
    verify.add_argument("--corpus", type=Path, default=None)
    verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    verify.add_argument("--jobs", type=int, default=1, help="parallel workers across corpus entries")
    verify.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    verify.set_defaults(func=cmd_verify)

    listing = sub.add_parser("corpus-list", help="list corpus entries with recomputed tags")
    listing.add_argument("--corpus", type=Path, default=None)
    listing.add_argument("--format", choices=("text", "json"), default="text")
    listing.set_defaults(func=cmd_corpus_list)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
