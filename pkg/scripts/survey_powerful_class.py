#!/usr/bin/env python3
"""Survey the powerful class of every p-group in the corpus.

Prints one line per (group, prime) with the ascending-series orders, the
powerful class, and whether the class is small (pwc < p).  The order-15625
wreath product takes a minute or two; skip it with --quick.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from powerclass.corpus import build_shipped_corpus
from powerclass.powerful import eta_profile
from powerclass.psylow import is_p_power


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="skip groups of order > 2000")
    args = parser.parse_args()

    print(f"{'group':>10} {'p':>2} {'order':>6} {'pwc':>3} {'small':>5} {'powerful':>8}  series orders")
    for e in build_shipped_corpus():
        for p in e.primes_of_interest:
            if not is_p_power(e.group.order, p):
                continue
            if args.quick and e.group.order > 2000:
                continue
            t0 = time.time()
            profile = eta_profile(e.group, p)
            took = time.time() - t0
            print(
                f"{e.label:>10} {p:>2} {e.group.order:>6} {profile.powerful_class:>3}"
                f" {str(profile.small_powerful_class):>5} {str(profile.is_powerful):>8}"
                f"  {profile.series.orders()}  ({took:.1f}s)"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
