"""Sampled local connectivity of n-slices as the truncation deepens.

    python scripts/probe_slices.py --levels 0 1 --depth 4 --trials 50
"""

import argparse
import json

from minoruniv.verify import slice_connectivity_probe


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--levels", type=int, nargs="+", default=[0, 1])
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="full reports instead of a table")
    args = ap.parse_args(argv)

    reports = [slice_connectivity_probe(n, args.depth, args.trials, args.seed) for n in args.levels]
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=1))
        return
    print("n  target  " + "  ".join(f"d={d}" for d in range(1, args.depth + 1)) + "  monotone")
    for r in reports:
        cells = "  ".join(f"{r.min_cut[d]:>3}" for d in range(1, args.depth + 1))
        print(f"{r.n}  {r.target:>6}  {cells}  {r.monotone}")


if __name__ == "__main__":
    main()
