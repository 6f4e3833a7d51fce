"""Command-line interface: ``coalition-lab {compute,tables,conjecture,coalition-graph,catalog}``.

Exit codes: 0 success, 2 parse error, 3 order cap exceeded, 4 conjecture
counterexample found.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import Counter
from contextlib import nullcontext
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import graph as gr
from .catalog import CATALOG_SIZES, all_catalog_entries, catalog_entry, load_catalog
from .coalition import coalition_bounds, coalition_graph, coalition_number, verify_certificate
from .domination import domatic_number, domination_number
from .graph import Graph, GraphError, OrderCapExceeded
from .partitions import parse_partition
from .total import total_coalition_number

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_COUNTEREXAMPLE = 0, 2, 3, 4

WHAT_CHOICES = ("coalition", "total", "gamma", "domatic")

# Coalition numbers claimed for every cubic graph of each order, as multisets.
CLAIMED_MULTISETS = {
    6: Counter({6: 2}),
    8: Counter({8: 3, 7: 1, 6: 2}),
    10: Counter({8: 1, 7: 16, 6: 4}),
}
PETERSEN_CLAIM = 6
CONJECTURED_VALUES = frozenset({6, 7, 8})


@dataclass(frozen=True)
class GraphInput:
    source: str
    graph: Graph


def graph_from_name(name: str) -> Graph:
    """Built-in graphs: petersen, K<n>, C<n>, K<a>,<b>, prism, prism<k>, cubic<n>:<i>."""
    key = name.strip()
    low = key.lower()
    if low == "petersen":
        return gr.petersen()
    if low.startswith("cubic"):
        return catalog_entry(low).graph
    if m := re.fullmatch(r"k(\d+),(\d+)", low):
        return gr.complete_bipartite(int(m[1]), int(m[2]))
    if m := re.fullmatch(r"k(\d+)", low):
        return gr.complete(int(m[1]))
    if m := re.fullmatch(r"c(\d+)", low):
        return gr.cycle(int(m[1]))
    if m := re.fullmatch(r"prism(\d*)", low):
        return gr.prism(int(m[1]) if m[1] else 3)
    raise GraphError(f"unknown graph name {name!r}")


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return gr.from_graph6(text)
    if fmt == "edgelist":
        return gr.parse_edge_list(text)
    if fmt == "name":
        return graph_from_name(text)
    raise ValueError(f"unknown format {fmt!r}")


def _open_input(path: str):
    return nullcontext(sys.stdin) if path == "-" else open(path)


def read_inputs(path: str | None, inline: list[str], fmt: str) -> list[GraphInput]:
    """Parse every input up front; raises GraphError naming the offending line."""
    items: list[tuple[str, str]] = [(f"arg:{i}", text) for i, text in enumerate(inline, 1)]
    if path is not None:
        if path == "catalog":
            return [GraphInput(e.ref, e.graph) for e in all_catalog_entries()]
        label = "stdin" if path == "-" else path
        with _open_input(path) as fh:
            if fmt == "graph6":
                items += [(f"{label}:{n}", s) for n, s in gr.read_graph6_lines(fh)]
            else:
                items += [(f"{label}:{n}", s.strip()) for n, s in enumerate(fh, 1) if s.strip() and not s.lstrip().startswith("#")]
    out = []
    for source, text in items:
        try:
            out.append(GraphInput(source if fmt != "name" else text.strip(), parse_graph(text, fmt)))
        except (GraphError, ValueError) as exc:
            raise GraphError(f"{source}: {exc}") from None
    return out


def compute_record(item: GraphInput, what: tuple[str, ...], method: str, cap: int | None) -> dict:
    g = item.graph
    record = {
        "source": item.source,
        "graph6": gr.to_graph6(g),
        "order": g.order,
        "connected": gr.is_connected(g),
        "gamma": None,
        "domatic": None,
        "coalition": None,
        "total_coalition": None,
        "certificate": None,
        "total_certificate": None,
        "stats": {},
    }
    if "gamma" in what:
        gr.check_cap(g.order, cap, "domination_number")
        record["gamma"] = domination_number(g)
    if "domatic" in what:
        record["domatic"] = domatic_number(g, cap)[0]
    if "coalition" in what:
        rep = coalition_number(g, method, cap)
        lower, upper = coalition_bounds(g)
        if not lower <= rep.value <= upper:
            raise AssertionError(f"{item.source}: C={rep.value} outside bounds [{lower}, {upper}]")
        record["coalition"] = rep.value
        record["certificate"] = rep.certificate.to_json()
        record["stats"]["coalition"] = rep.stats()
    if "total" in what:
        rep = total_coalition_number(g, method, cap)
        record["total_coalition"] = rep.value
        record["total_certificate"] = rep.certificate.to_json() if rep.certificate else None
        record["stats"]["total"] = rep.stats()
    return record


def _compute_task(args):
    item, what, method, cap = args
    try:
        return compute_record(item, what, method, cap)
    except OrderCapExceeded as exc:
        return {"error": "cap", "message": f"{item.source}: {exc}"}
    except GraphError as exc:
        return {"error": "parse", "message": f"{item.source}: {exc}"}


def iter_records(items, what, method, cap, jobs: int):
    tasks = [(item, what, method, cap) for item in items]
    if jobs <= 1:
        yield from map(_compute_task, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields in submission order, which keeps output aligned with input
        yield from pool.map(_compute_task, tasks)


def _parse_what(text: str) -> tuple[str, ...]:
    parts = tuple(p.strip() for p in text.split(",") if p.strip())
    bad = [p for p in parts if p not in WHAT_CHOICES]
    if bad or not parts:
        raise argparse.ArgumentTypeError(f"--what takes a comma list from {', '.join(WHAT_CHOICES)}")
    return parts


def cmd_compute(args) -> int:
    try:
        items = read_inputs(args.input, args.graph, args.format)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    for rec in iter_records(items, args.what, args.method, args.cap, args.jobs):
        if "error" in rec:
            print(f"error: {rec['message']}", file=sys.stderr)
            return EXIT_CAP if rec["error"] == "cap" else EXIT_PARSE
        print(json.dumps(rec, sort_keys=True), flush=True)
    return EXIT_OK


def classification_tables(method: str = "auto") -> list[dict]:
    rows = []
    for order in sorted(CATALOG_SIZES):
        computed = Counter()
        petersen_value = None
        for entry in load_catalog(order):
            value = coalition_number(entry.graph, method).value
            computed[value] += 1
            if entry.is_petersen:
                petersen_value = value
        claimed = CLAIMED_MULTISETS[order]
        rows.append({
            "order": order,
            "computed": dict(sorted(computed.items())),
            "claimed": dict(sorted(claimed.items())),
            "verdict": "PASS" if computed == claimed else "FAIL",
            "petersen": petersen_value,
        })
    return rows


def _fmt_multiset(counts: dict) -> str:
    parts = [f"{c}x{k}" if c > 1 else str(k) for k, c in sorted(counts.items(), reverse=True)]
    return "{" + ", ".join(parts) + "}"


def cmd_tables(args) -> int:
    rows = classification_tables(args.method)
    if args.json:
        for row in rows:
            print(json.dumps(row, sort_keys=True))
        return EXIT_OK
    print(f"{'order':>5}  {'computed C multiset':<24}  {'claimed C multiset':<24}  verdict")
    for row in rows:
        print(f"{row['order']:>5}  {_fmt_multiset(row['computed']):<24}  {_fmt_multiset(row['claimed']):<24}  {row['verdict']}")
    for row in rows:
        if row["petersen"] is not None:
            verdict = "PASS" if row["petersen"] == PETERSEN_CLAIM else "FAIL"
            print(f"Petersen graph: computed C={row['petersen']}, claimed C={PETERSEN_CLAIM}  {verdict}")
    return EXIT_OK


def cmd_conjecture(args) -> int:
    try:
        items = read_inputs(args.input, [], "graph6")
        if args.expect_cubic:
            for item in items:
                if not gr.is_regular(item.graph, 3):
                    raise GraphError(f"{item.source}: graph is not cubic")
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    hits = []
    tally = Counter()
    for rec in iter_records(items, ("coalition",), args.method, args.cap, args.jobs):
        if "error" in rec:
            print(f"error: {rec['message']}", file=sys.stderr)
            return EXIT_CAP if rec["error"] == "cap" else EXIT_PARSE
        tally[rec["coalition"]] += 1
        flag = "" if rec["coalition"] in CONJECTURED_VALUES else "  <-- outside {6,7,8}"
        print(f"{rec['source']}\t{rec['graph6']}\tC={rec['coalition']}{flag}")
        if flag:
            hits.append(rec)
    print(f"graphs: {sum(tally.values())}; C distribution: {dict(sorted(tally.items()))}")
    if hits:
        print(f"potential counterexamples: {len(hits)}")
        for rec in hits:
            print(json.dumps({"source": rec["source"], "graph6": rec["graph6"],
                              "coalition": rec["coalition"], "certificate": rec["certificate"]}))
        return EXIT_COUNTEREXAMPLE
    print("no counterexample found")
    return EXIT_OK


def coalition_graph_dot(g: Graph, partition_text: str) -> str:
    p = parse_partition(partition_text, g.order)
    cg = coalition_graph(g, p).graph
    lines = ["graph coalition {"]
    for i, block in enumerate(p.block_lists()):
        lines.append(f'  b{i} [label="{{{",".join(map(str, block))}}}"];')
    for i, j in cg.edges():
        lines.append(f"  b{i} -- b{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_coalition_graph(args) -> int:
    try:
        g = parse_graph(args.graph, args.format)
        dot = coalition_graph_dot(g, args.partition)
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def cmd_catalog(args) -> int:
    for order in args.order or sorted(CATALOG_SIZES):
        for e in load_catalog(order):
            tags = ["connected" if e.connected else "disconnected"] + (["petersen"] if e.is_petersen else [])
            print(f"{e.ref}\t{e.graph6}\t{','.join(tags)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    """Re-validate the certificates in JSON lines produced by ``compute``."""
    from .coalition import CoalitionCertificate

    bad = 0
    with _open_input(args.input) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                g = gr.from_graph6(rec["graph6"])
                cert = CoalitionCertificate.from_json(rec["certificate"], g.order)
            except (ValueError, KeyError, TypeError) as exc:
                print(f"error: line {lineno}: {exc}", file=sys.stderr)
                return EXIT_PARSE
            ok = verify_certificate(g, cert) and cert.order == rec["coalition"]
            bad += not ok
            print(f"{rec['source']}\t{'ok' if ok else 'INVALID'}")
    return EXIT_OK if not bad else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coalition-lab", description="Exact coalition numbers of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_flags(p):
        p.add_argument("--method", choices=("auto", "oracle", "pruned"), default="auto",
                       help="auto uses the exhaustive oracle for n <= 9 and the pruned search above")
        p.add_argument("--cap", type=int, default=None,
                       help=f"order cap for exact search (default {gr.DEFAULT_SEARCH_CAP}, env COALITION_LAB_CAP)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes; output order still follows input")

    p = sub.add_parser("compute", help="compute invariants, one JSON line per graph")
    p.add_argument("input", nargs="?", help="file of graphs, '-' for stdin, or 'catalog' for the embedded catalogs")
    p.add_argument("-g", "--graph", action="append", default=[], help="inline graph (repeatable)")
    p.add_argument("--format", choices=("graph6", "edgelist", "name"), default="graph6")
    p.add_argument("--what", type=_parse_what, default=("coalition", "gamma", "domatic"),
                   help="comma list from coalition,total,gamma,domatic")
    solver_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("tables", help="recompute the cubic classification for orders 6, 8, 10")
    p.add_argument("--method", choices=("auto", "oracle", "pruned"), default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("conjecture", help="look for cubic graphs with C outside {6,7,8}")
    p.add_argument("input", help="graph6 file, '-' for stdin, or 'catalog'")
    p.add_argument("--expect-cubic", action="store_true", help="reject any graph that is not 3-regular")
    solver_flags(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("coalition-graph", help="DOT rendering of the coalition graph of a partition")
    p.add_argument("graph")
    p.add_argument("partition", help='blocks of 0-based vertices, e.g. "0,3|1,4|2,5"')
    p.add_argument("--format", choices=("graph6", "edgelist", "name"), default="graph6")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_coalition_graph)

    p = sub.add_parser("catalog", help="list the embedded cubic catalogs")
    p.add_argument("--order", type=int, action="append", choices=sorted(CATALOG_SIZES))
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="re-validate certificates from compute output")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OrderCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
