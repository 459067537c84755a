"""Tabulate unmixed polymatroidal ideals that are not Cohen-Macaulay.

One row per isomorphism class (variable permutations), tab separated, for a
handful of small search spaces.  Output goes to stdout.

    python scripts/unmixed_census.py --n 6 --d 2 --cap 1
    python scripts/unmixed_census.py            # default batch
"""

import argparse
from collections import Counter

from monideal.enumeration import CensusRow, EnumSpec, census_unmixed

DEFAULT = [(4, 2, 1), (5, 2, 1), (6, 2, 1), (5, 3, 1), (3, 2, 2), (3, 3, 3), (2, 4, 4)]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int)
    parser.add_argument("--d", type=int)
    parser.add_argument("--cap", type=int, default=1)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()
    batch = [(args.n, args.d, args.cap)] if args.n else DEFAULT

    print("\t".join(("space",) + CensusRow.COLUMNS))
    for n, d, cap in batch:
        spec = EnumSpec(n, d, cap, modulo_symmetry=True)
        rows = list(census_unmixed(spec, args.workers))
        for row in rows:
            print(f"n{n}d{d}c{cap}\t{row.to_line()}")
        by_h = Counter((r.h, r.q) for r in rows)
        print(f"# n={n} d={d} cap={cap}: {len(rows)} classes; (h, q) counts {dict(sorted(by_h.items()))}")


if __name__ == "__main__":
    main()
