#!/usr/bin/env python3
"""Regenerate the shipped corpus file from the canonical constructors."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from powerclass.corpus import SHIPPED_CORPUS_PATH, build_shipped_corpus, load, save


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=Path,
        default=SHIPPED_CORPUS_PATH,
        help="where to write the corpus JSON (default: the shipped path)",
    )
    args = parser.parse_args()

    entries = build_shipped_corpus()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    save(entries, args.out)

    reloaded = load(args.out)
    assert len(reloaded) == len(entries)
    for old, new in zip(entries, reloaded):
        assert old.group.generators == new.group.generators, old.label
        assert old.primes_of_interest == new.primes_of_interest, old.label
    print(f"wrote {len(entries)} entries to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
