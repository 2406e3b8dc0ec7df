"""Vertex, edge and face counts per level, with traced face lengths where affordable.

    python scripts/census_table.py --max-level 6 --trace-up-to 4
"""

import argparse
import csv
import sys
from collections import Counter

from minoruniv.planar import faces
from minoruniv.universal import census, generate


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-level", type=int, default=6)
    ap.add_argument("--trace-up-to", type=int, default=4, help="trace faces of the actual graph up to this level")
    args = ap.parse_args(argv)

    out = csv.writer(sys.stdout)
    out.writerow(["level", "V", "E", "F", "euler", "traced_face_lengths"])
    for n in range(args.max_level + 1):
        v, e, f = census(n)
        hist = ""
        if n <= args.trace_up_to:
            g = generate(n).graph
            assert (g.num_vertices(), g.num_edges()) == (v, e)
            hist = " ".join(f"{k}:{c}" for k, c in sorted(Counter(len(fc) for fc in faces(g)).items()))
        out.writerow([n, v, e, f, v - e + f, hist])


if __name__ == "__main__":
    main()
