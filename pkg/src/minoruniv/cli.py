"""Command-line entry point: ``minoruniv <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .embed import EmbedConfig, embed, embed_any
from .ears import default_edge_order, ear_decomposition
from .planar import GraphError, load_graph
from .reduce import reduce
from .universal import DEFAULT_CAP, TooLarge, census, generate
from .verify import DanglingAddress, check_inflated_copy, model_from_json, slice_connectivity_probe


def _dump(obj, out=None) -> None:
    text = json.dumps(obj, indent=1, sort_keys=True)
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_generate(args) -> int:
    t = generate(args.n, cap=args.cap)
    if args.format == "dot":
        sys.stdout.write(t.graph.to_dot(f"G{args.n}"))
    else:
        _dump(t.to_json())
    return 0


def cmd_census(args) -> int:
    print(*census(args.n))
    return 0


def cmd_stats(args) -> int:
    rows = []
    for k in range(args.n + 1):
        v, e, f = census(k)
        rows.append({"level": k, "V": v, "E": e, "F": f, "face_lengths": {str(2 * k + 3): f}})
    if args.n <= 4:
        # histogram from the actual faces, not the formula
        hist = Counter(len(fc) for fc in generate(args.n, cap=args.cap).faces.values())
        rows[-1]["face_lengths"] = {str(k): c for k, c in sorted(hist.items())}
    _dump({"levels": rows})
    return 0


def cmd_reduce(args) -> int:
    g = load_graph(args.input)
    out, w = reduce(g)
    _dump({"graph": out.to_json(), "witness": w.to_json()})
    return 0


def cmd_ears(args) -> int:
    g = load_graph(args.input)
    dec = ear_decomposition(g, default_edge_order(g, args.seed))
    _dump(dec.to_json())
    return 0


def _config(args) -> EmbedConfig:
    return EmbedConfig(max_extra_depth=args.max_extra_depth, seed=args.seed)


def cmd_embed(args) -> int:
    model = embed(load_graph(args.input), _config(args))
    _dump(model.to_json(), args.out)
    return 0


def cmd_embed_any(args) -> int:
    model = embed_any(load_graph(args.input), _config(args))
    _dump(model.to_json(), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.model == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.model) as fh:
            data = json.load(fh)
    try:
        m = model_from_json(data)
    except DanglingAddress as exc:
        _dump({"ok": False, "error": f"dangling address: {exc}"})
        return 1
    report = check_inflated_copy(m, m["graph"], m["host"])
    _dump(report.to_json())
    return 0 if report.ok else 1


def cmd_probe_slice(args) -> int:
    rep = slice_connectivity_probe(args.n, args.d, args.trials, args.seed)
    _dump(rep.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minoruniv", description="Universal planar graph truncations and minor models.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("generate", help="level-n truncation as JSON or DOT")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("census", help="V E F of level n")
    s.add_argument("-n", type=int, required=True)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("stats", help="count table and face-length histogram")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("reduce", help="sub-cubic 2-connected supergraph with witness")
    s.add_argument("input")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("ears", help="ear decomposition")
    s.add_argument("input")
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_ears)

    for name, func in (("embed", cmd_embed), ("embed-any", cmd_embed_any)):
        s = sub.add_parser(name, help="minor model in the universal graph")
        s.add_argument("input")
        s.add_argument("--max-extra-depth", type=int, default=EmbedConfig.max_extra_depth)
        s.add_argument("--seed", type=int, default=None)
        s.add_argument("--out", default=None)
        s.set_defaults(func=func)

    s = sub.add_parser("verify", help="check a model file ('-' for stdin)")
    s.add_argument("model")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("probe-slice", help="sampled connectivity of an n-slice")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-d", type=int, required=True)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_probe_slice)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
