"""Embed and verify every corpus graph, reporting host size and time per graph.

    python scripts/embed_corpus.py [--only K4 cube] [--seed 0] [--out results.csv]
"""

import argparse
import csv
import logging
import sys
import time
from dataclasses import dataclass

from minoruniv import corpus
from minoruniv.embed import EmbedConfig, embed, embed_any
from minoruniv.verify import check_inflated_copy


@dataclass
class Row:
    name: str
    mode: str
    vertices: int
    edges: int
    host_vertices: int
    deepest: int
    ok: bool
    seconds: float


def run_one(name, g, config) -> Row:
    mode = "embed" if name in corpus.subcubic_two_connected() else "embed_any"
    t0 = time.perf_counter()
    model = (embed if mode == "embed" else embed_any)(g, config)
    ok = check_inflated_copy(model).ok
    dt = time.perf_counter() - t0
    deepest = max((f.depth for f in model.host.expanded), default=-1) + 1
    return Row(name, mode, g.num_vertices(), g.num_edges(), model.host.num_vertices(), deepest, ok, round(dt, 3))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", nargs="*", default=None)
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--max-extra-depth", type=int, default=EmbedConfig.max_extra_depth)
    ap.add_argument("--out", default="-")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    graphs = {**corpus.subcubic_two_connected(), **corpus.general()}
    if args.only:
        graphs = {k: graphs[k] for k in args.only}
    config = EmbedConfig(max_extra_depth=args.max_extra_depth, seed=args.seed)

    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh)
    w.writerow(list(Row.__dataclass_fields__))
    total = 0.0
    failures = 0
    for name, g in graphs.items():
        row = run_one(name, g, config)
        total += row.seconds
        failures += not row.ok
        w.writerow(list(vars(row).values()))
        fh.flush()
    print(f"# {len(graphs)} graphs, {failures} failures, {total:.1f}s", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
