"""Run the exhaustive classification checks and print one summary line per sweep.

    python scripts/verify_sweeps.py [--workers N] [--paths]
"""

import argparse
import json
import sys

from monideal.enumeration import EnumSpec, VerificationError, verify_classification

SWEEPS = [
    EnumSpec(4, 2, 1), EnumSpec(5, 2, 1), EnumSpec(6, 2, 1), EnumSpec(5, 3, 1),
    EnumSpec(3, 2, 2), EnumSpec(2, 3, 3), EnumSpec(3, 3, 3), EnumSpec(4, 2, 2, max_gens=6),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--paths", action="store_true", help="audit exchange paths too")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    total = 0.0
    for spec in SWEEPS:
        try:
            report = verify_classification(spec, args.workers, paths=args.paths)
        except VerificationError as exc:
            print(f"VIOLATION in {spec}:\n{exc}")
            return 1
        s = report.summary()
        total += report.seconds
        if args.json:
            print(json.dumps(s))
        else:
            print(f"n={spec.n} d={spec.d} cap={spec.cap} max_gens={spec.max_gens}: "
                  f"ideals={s['ideals']} polymatroidal={s['polymatroidal']} "
                  f"cm={s['cm']} verdicts={s['verdicts']} "
                  f"violations=0 {s['seconds']:.1f}s")
    print(f"total {total:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
