"""Command line entry point.

Exit status: 0 on success, 1 on bad input, 2 when a work budget refuses.
Every subcommand builds a JSON-ready dict; ``--json FILE`` writes it (``-``
for stdout) and the text printed otherwise is derived from the same dict.
"""

from __future__ import annotations

import argparse
import concurrent.futures as cf
import json
import os
import sys
from pathlib import Path

from .budget import BudgetExceeded


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_group(spec: str):
    from .catalog import catalog_group
    from .perm import read_group_file
    if spec.startswith("@"):
        path = Path(spec[1:])
        return path.stem, read_group_file(path)
    return spec, catalog_group(spec)


def _executor(jobs: int):
    return cf.ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None


def _shards(jobs: int) -> int:
    return 4 * jobs


def _perm_1based(p) -> list[int]:
    return [x + 1 for x in p.images]


def cmd_classify(args) -> dict:
    from .search import classify_group
    name, G = _load_group(args.group)
    mode = "exhaustive" if args.exhaustive or args.deterministic else "fast"
    ex = _executor(args.jobs)
    try:
        report = classify_group(G, name, mode=mode, executor=ex, shards=_shards(args.jobs))
    finally:
        if ex:
            ex.shutdown(cancel_futures=True)
    return report.as_dict()


def cmd_exceptions(args) -> dict:
    from .catalog import catalog_entries, catalog_group
    from .search import exception_scan, exceptional_classes
    groups = [(e.name, catalog_group(e.name))
              for e in catalog_entries(args.max_degree, include_slow=args.include_slow)
              if args.min_degree is None or e.degree >= args.min_degree]
    ex = _executor(args.jobs)
    try:
        reports = exception_scan(groups, mode="exhaustive", executor=ex, shards=_shards(args.jobs))
    finally:
        if ex:
            ex.shutdown(cancel_futures=True)
    return {"reports": [r.as_dict() for r in reports], "exceptions": exceptional_classes(reports)}


def cmd_aut(args) -> dict:
    from .autom import graph_aut, hypergraph_aut
    from .graphs import read_graph_file
    from .twograph import read_triple_file
    if args.graph:
        G = graph_aut(read_graph_file(args.graph))
        kind = "graph"
    else:
        G = hypergraph_aut(read_triple_file(args.two_graph))
        kind = "two-graph"
    return {"kind": kind, "degree": G.degree, "order": str(G.order),
            "generators": [_perm_1based(g) for g in G.generators]}


def cmd_scan(args) -> dict:
    from .search import find_trivial_graph
    from .twograph import read_two_graph_file
    t = read_two_graph_file(args.two_graph)
    ex = _executor(args.jobs)
    try:
        res = find_trivial_graph(t, "fast" if args.fast else "exhaustive", executor=ex,
                                 shards=_shards(args.jobs))
    finally:
        if ex:
            ex.shutdown(cancel_futures=True)
    status = "witness_found" if res.witness is not None else ("exception" if res.complete else "incomplete")
    return {"degree": t.n, "triples": len(t), "status": status,
            "witness": None if res.witness is None else [v + 1 for v in res.witness],
            "scanned": res.scanned, "class_size": 2 ** (t.n - 1)}


def cmd_counts(args) -> dict:
    from .counting import maroti_bound, orbit_report, orbits_on_all_switching_classes, type2_inequality
    name, G = _load_group(args.group)
    prod_form, power_form = maroti_bound(G.degree)
    return {
        "group": {"name": name, "degree": G.degree, "order": str(G.order)},
        "orbit_counts": orbit_report(G).as_dict(),
        "orbits_on_all_switching_classes": orbits_on_all_switching_classes(G),
        "type2_inequality": type2_inequality(G).as_dict(),
        "maroti_bound": {"product_form": str(prod_form), "power_form": str(power_form)},
    }


def cmd_regular_orbit(args) -> dict:
    from .counting import regular_subset_orbit
    name, G = _load_group(args.group)
    x = regular_subset_orbit(G, max_size=args.max_size)
    return {"group": {"name": name, "degree": G.degree, "order": str(G.order)},
            "regular_subset": None if x is None else [v + 1 for v in x]}


def cmd_catalog(args) -> dict:
    from .catalog import catalog_list
    return {"objects": [{"kind": k, "name": n, "degree": d, "order": None if o is None else str(o)}
                        for k, n, d, o in catalog_list()]}


# -- text rendering -------------------------------------------------------------

def _render_report(rep: dict) -> list[str]:
    g = rep["group"]
    lines = [f"{g['name']} degree {g['degree']} order {g['order']}"]
    if "error" in rep:
        lines.append(f"  error: {rep['error']}")
    for c in rep["candidates"]:
        if c["status"] == "discarded_not_two_graph":
            continue
        line = f"  orbits {c['orbits']} triples {c['triples']} aut {c['aut_order']}: {c['status']}"
        if c["witness"] is not None:
            line += f" X={c['witness']}"
        if c["status"] in ("exception", "witness_found"):
            line += f", scanned {c['scanned']}"
        lines.append(line)
    return lines


def render(command: str, data: dict) -> str:
    if command == "classify":
        return "\n".join(_render_report(data))
    if command == "exceptions":
        lines = []
        for e in data["exceptions"]:
            lines.append(f"exception: {e['group']} degree {e['degree']} aut {e['aut_order']}, scanned {e['scanned']}")
        lines.append(f"{len(data['exceptions'])} exceptional switching classes")
        for r in data["reports"]:
            if "error" in r:
                lines.append(f"{r['group']['name']}: {r['error']}")
        return "\n".join(lines)
    if command == "aut":
        return f"order {data['order']}\n" + "\n".join(" ".join(map(str, g)) for g in data["generators"])
    if command == "scan":
        if data["status"] == "witness_found":
            return f"witness {data['witness']}, scanned {data['scanned']}"
        return f"{data['status']}, scanned {data['scanned']}"
    if command == "regular-orbit":
        x = data["regular_subset"]
        return "no regular orbit" if x is None else f"regular subset {x}"
    if command == "catalog":
        return "\n".join(f"{o['kind']} {o['name']} degree {o['degree']} order {o['order'] or '-'}"
                         for o in data["objects"])
    return json.dumps(data, indent=2)


# -- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker processes (default: available CPUs)")
    common.add_argument("--json", metavar="FILE", help="write the JSON report to FILE ('-' for stdout)")

    p = _Parser(prog="switchscan", description="Seidel switching classes and two-graphs")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", parents=[common], help="run the two-graph pipeline for a group")
    c.add_argument("--group", required=True, help="catalog name or @file")
    c.add_argument("--exhaustive", action="store_true", help="report the Gray-earliest witness")
    c.add_argument("--deterministic", action="store_true",
                   help="output independent of run and of --jobs (implies ordered shard merging)")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("exceptions", parents=[common], help="reproduce the exceptional classes over the catalog")
    e.add_argument("--max-degree", type=int, default=16)
    e.add_argument("--min-degree", type=int, default=None)
    e.add_argument("--include-slow", action="store_true", help="also run the degree-28 groups")
    e.set_defaults(func=cmd_exceptions)

    a = sub.add_parser("aut", parents=[common], help="automorphism group of a graph or triple system")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE")
    src.add_argument("--two-graph", metavar="FILE")
    a.set_defaults(func=cmd_aut)

    s = sub.add_parser("scan", parents=[common], help="scan a switching class for a rigid graph")
    s.add_argument("--two-graph", required=True, metavar="FILE")
    s.add_argument("--fast", action="store_true", help="first witness from any shard")
    s.set_defaults(func=cmd_scan)

    k = sub.add_parser("counts", parents=[common], help="orbit counts and bounds for a group")
    k.add_argument("--group", required=True)
    k.set_defaults(func=cmd_counts)

    r = sub.add_parser("regular-orbit", parents=[common], help="least subset with trivial stabiliser")
    r.add_argument("--group", required=True)
    r.add_argument("--max-size", type=int, default=None)
    r.set_defaults(func=cmd_regular_orbit)

    cat = sub.add_parser("catalog", parents=[common], help="catalog listing")
    cat.add_argument("action", choices=["list"])
    cat.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        print("switchscan: --jobs must be positive", file=sys.stderr)
        return 1
    try:
        data = args.func(args)
    except BudgetExceeded as exc:
        print(f"switchscan: refused: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"switchscan: error: {msg}", file=sys.stderr)
        return 1
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if args.json == "-":
        sys.stdout.write(text)
    else:
        if args.json:
            Path(args.json).write_text(text)
        print(render(args.command, data))
    return 0


if __name__ == "__main__":
    sys.exit(main())
