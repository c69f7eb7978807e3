"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input file, 3 failed check or
experiment assertion.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import generators as gen
from . import harness
from .oracle import Unsupported, node_orbits
from .tgraph import InvalidInput, aggregate, dumps, read_graph
from .wl import WlConfig, distinguish, run_wl

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_CHECK = 0, 1, 2, 3

VARIANT_NAMES = {
    "static": "static",
    "time-and": "time_and",
    "graph-then-time": "graph_then_time",
    "time-then": "time_then",
    "scheduled": "scheduled",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _skips(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad skip list {text!r}")


def _alphabet(text: str) -> list:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(int(tok) if tok.lstrip("-").isdigit() else tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tgexpress", description="Temporal-graph 1-WL expressiveness lab.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate graphs or datasets")
    gsub = g.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    c = gsub.add_parser("csl", help="CSL snapshot sequence as a temporal graph")
    c.add_argument("--n", type=int, default=19)
    c.add_argument("--skips", "--skip", type=_skips, default=[2],
                   help="comma-separated skip per step, e.g. 2,3")
    c.add_argument("--out")
    d = gsub.add_parser("dynamic-csl", help="DynamicCSL dataset directory")
    d.add_argument("--seed", type=int, default=7)
    d.add_argument("--count", type=int, default=150)
    d.add_argument("--horizon", type=int, default=8)
    d.add_argument("--n", type=int, default=19)
    d.add_argument("--candidates", type=_skips, default=[2, 3, 4, 5, 6])
    d.add_argument("--unstratified", action="store_true")
    d.add_argument("--out", required=True, help="output directory")
    f = gsub.add_parser("foodweb", help="two-component food-web graph")
    f.add_argument("--out")
    r = gsub.add_parser("random", help="random temporal graph")
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--n", type=int, default=6)
    r.add_argument("--horizon", type=int, default=3)
    r.add_argument("--p", type=float, default=0.5)
    r.add_argument("--alphabet", type=_alphabet, default=[1])
    r.add_argument("--directed", action="store_true")
    r.add_argument("--out")

    w = sub.add_parser("wl", help="refine one graph and export its colouring")
    w.add_argument("--variant", choices=sorted(VARIANT_NAMES), required=True)
    w.add_argument("--layers", type=int, default=2)
    w.add_argument("--iterations", type=int)
    w.add_argument("--input", required=True)
    w.add_argument("--out")

    cmp_ = sub.add_parser("compare", help="joint refinement of two graphs")
    cmp_.add_argument("--variant", choices=sorted(VARIANT_NAMES), required=True)
    cmp_.add_argument("--layers", type=int, default=2)
    cmp_.add_argument("a")
    cmp_.add_argument("b")

    e = sub.add_parser("experiment", help="run an experiment")
    esub = e.add_subparsers(dest="name", required=True, parser_class=_Parser)
    dc = esub.add_parser("dyncsl")
    dc.add_argument("--seed", type=int, default=7)
    dc.add_argument("--layers", type=int, default=2)
    dc.add_argument("--report")
    dc.add_argument("--csv")
    dc.add_argument("--timing", action="store_true",
                    help="record wall time in runtime_ms (output no longer byte-stable)")

    ch = sub.add_parser("check", help="run a theorem check suite")
    ch.add_argument("--suite", choices=["theorem1", "theorem2", "equivariance", "oracle"],
                    required=True)
    ch.add_argument("--trials", type=int, default=100)
    ch.add_argument("--seed", type=int, default=0)
    ch.add_argument("--layers", type=int, default=2)
    ch.add_argument("--report")

    o = sub.add_parser("orbits", help="automorphism orbits by exhaustive search")
    o.add_argument("--input", required=True)
    o.add_argument("--node-limit", type=int, default=9)
    return p


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise InvalidInput(f"{path}: {exc.strerror}") from exc
    except InvalidInput as exc:
        raise InvalidInput(f"{path}: {exc}") from exc


def _cmd_gen(args) -> int:
    if args.kind == "csl":
        _emit(dumps(aggregate([gen.gen_csl(args.n, s) for s in args.skips])), args.out)
    elif args.kind == "dynamic-csl":
        samples, manifest = gen.gen_dyncsl_dataset(
            args.seed, args.count, args.horizon, args.n, args.candidates,
            stratified=not args.unstratified)
        gen.write_dataset(samples, manifest, args.out)
    elif args.kind == "foodweb":
        _emit(dumps(gen.gen_foodweb()), args.out)
    elif args.kind == "random":
        tg = gen.gen_random_temporal(args.seed, args.n, args.horizon, args.p, args.alphabet,
                                     args.directed)
        _emit(dumps(tg), args.out)
    return EXIT_OK


def _cmd_wl(args) -> int:
    tg = _load(args.input)
    cfg = WlConfig(VARIANT_NAMES[args.variant], args.layers, args.iterations)
    _emit(run_wl(tg, cfg).to_json(), args.out)
    return EXIT_OK


def _cmd_compare(args) -> int:
    a, b = _load(args.a), _load(args.b)
    result = distinguish(a, b, WlConfig(VARIANT_NAMES[args.variant], args.layers))
    _emit(json.dumps({"distinguished": result}) + "\n", None)
    return EXIT_OK


def _cmd_experiment(args) -> int:
    report = harness.run_experiment_dyncsl(args.seed, args.layers, timing=args.timing)
    _emit(report.to_json(), args.report)
    if args.csv:
        _emit(report.to_csv(), args.csv)
    v = report.variants
    for name in harness.EXPERIMENT_VARIANTS:
        print(f"{name}: accuracy={v[name]['accuracy']} distinct_digests="
              f"{v[name]['distinct_digests']}", file=sys.stderr)
    ok = (v["time_then"]["accuracy"] == 1.0 and v["time_and"]["distinct_digests"] == 1
          and v["graph_then_time"]["distinct_digests"] == 1)
    return EXIT_OK if ok else EXIT_CHECK


def _cmd_check(args) -> int:
    rep = harness.run_checks(args.suite, args.trials, args.seed, args.layers)
    for line in rep.lines():
        print(line, file=sys.stderr)
    _emit(rep.to_json(), args.report)
    return EXIT_OK if rep.ok else EXIT_CHECK


def _cmd_orbits(args) -> int:
    tg = _load(args.input)
    _emit(harness.partition_to_json(node_orbits(tg, args.node_limit)), None)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = {"gen": _cmd_gen, "wl": _cmd_wl, "compare": _cmd_compare,
               "experiment": _cmd_experiment, "check": _cmd_check,
               "orbits": _cmd_orbits}[args.command]
    try:
        return handler(args)
    except (InvalidInput, Unsupported) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
