"""Command line interface.

Graph files: the first line is the vertex count n, every further non-empty
line is an edge ``u v`` with 1 <= u < v <= n.  Results go to stdout as JSON
(or plain text with ``--format text``); diagnostics go to stderr.

Exit codes: 0 success, 1 bad input, 2 an internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .graphcore import SimpleGraph, is_connected, longest_induced_path
from .hposet import enumerate_hposets, sorted_posets, strict_ppartition_enumerator
from .hyper import level_hypergraph, level_path_hypergraph
from .invsearch import collision_search
from .qsym import (InconsistentResult, QSymElement, f_polynomial, fq_oracle, from_constants, psi,
                   specialize_q, stabilization_index)

EXIT_INPUT = 1
EXIT_INTERNAL = 2


class InputError(Exception):
    pass


class CheckFailed(Exception):
    def __init__(self, message: str, document: dict):
        super().__init__(message)
        self.document = document


def parse_graph(text: str, source: str = "<graph>") -> SimpleGraph:
    lines = text.replace("\r\n", "\n").split("\n")
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if header is None:
            try:
                header = int(line)
            except ValueError:
                raise InputError(f"{source}:{lineno}: expected vertex count, got {line!r}") from None
            if header < 0:
                raise InputError(f"{source}:{lineno}: vertex count must be >= 0")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"{source}:{lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"{source}:{lineno}: edge endpoints must be integers") from None
        if u == v:
            raise InputError(f"{source}:{lineno}: self-loop at {u}")
        if not 1 <= u < v <= header:
            raise InputError(f"{source}:{lineno}: edge must satisfy 1 <= u < v <= {header}")
        if (u, v) in seen:
            raise InputError(f"{source}:{lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise InputError(f"{source}: empty graph file")
    return SimpleGraph.from_edges(header, edges)


def read_graph(path: str) -> SimpleGraph:
    try:
        text = Path(path).read_bytes().decode("ascii")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path}: graph files must be ASCII") from None
    return parse_graph(text, path)


# -- documents -----------------------------------------------------------

def qsym_document(e: QSymElement) -> dict:
    return {
        "degree": e.degree,
        "terms": [{"composition": list(a), "q_coefficients": list(p.coeffs)} for a, p in e.items()],
    }


def poset_document(p) -> list[list[int]]:
    return [list(r) for r in p.relations()]


def graph_document(g: SimpleGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_labels()]}


def _level(g: SimpleGraph, m: int | None) -> int:
    if m is None:
        raise InputError("--m is required")
    top = max(g.n - 1, 1)
    if not 1 <= m <= top:
        raise InputError(f"--m must lie in [1, {top}] for n={g.n}")
    return m


def _nonempty(g: SimpleGraph) -> None:
    if g.n == 0:
        raise InputError("graph has no vertices")


def cmd_psi(g: SimpleGraph, m: int, q: int | None = None) -> dict:
    _nonempty(g)
    m = _level(g, m)
    e = psi(g, m)
    doc = {"command": "psi", "m": m}
    if q is not None:
        e = specialize_q(e, q)
        doc["q"] = q
    doc.update(qsym_document(e))
    return doc


def cmd_fpoly(g: SimpleGraph, m: int) -> dict:
    _nonempty(g)
    m = _level(g, m)
    return {"command": "fpoly", "m": m, "coefficients": list(f_polynomial(psi(g, m)))}


def cmd_hposets(g: SimpleGraph, m: int, mode: str = "count") -> dict:
    _nonempty(g)
    m = _level(g, m)
    posets = enumerate_hposets(level_hypergraph(g, m))
    doc = {"command": "hposets", "m": m, "count": len(posets)}
    if mode == "list":
        doc["posets"] = [poset_document(p) for p in sorted_posets(posets)]
    return doc


def cmd_stabilize(g: SimpleGraph) -> dict:
    _nonempty(g)
    if not is_connected(g) or g.n < 2:
        raise InputError("stabilization needs a connected graph on at least 2 vertices")
    return {
        "command": "stabilize",
        "longest_induced_path": longest_induced_path(g),
        "stabilization_index": stabilization_index(g),
    }


def check_level(g: SimpleGraph, m: int, stable_at: int) -> dict:
    e = psi(g, m)
    h = level_hypergraph(g, m)
    posets = enumerate_hposets(h)
    fpoly = f_polynomial(e)
    total = from_constants(g.n, {})
    for p in posets:
        total = total + strict_ppartition_enumerator(p)
    return {
        "psi_equals_oracle": e == fq_oracle(h),
        "chromatic_equals_ppartitions": specialize_q(e, 0) == total,
        "vertex_count_equals_f0": len(posets) == fpoly[0],
        "euler_relation": sum((-1) ** i * c for i, c in enumerate(fpoly)) == 1,
        "hposets_equal_path_hposets": posets == enumerate_hposets(level_path_hypergraph(g, m)),
        "stable_beyond_index": m <= stable_at or e == psi(g, stable_at),
    }


def cmd_check(g: SimpleGraph, max_m: int | None = None) -> dict:
    _nonempty(g)
    if not is_connected(g):
        raise InputError("check needs a connected graph")
    if g.n > 6:
        raise InputError("check supports n <= 6")
    if g.n == 1:
        raise InputError("check needs at least 2 vertices")
    top = g.n - 1
    max_m = top if max_m is None else max_m
    if not 1 <= max_m <= top:
        raise InputError(f"--max-m must lie in [1, {top}]")
    stable_at = stabilization_index(g)
    rows = [{"m": m, "checks": check_level(g, m, stable_at)} for m in range(1, max_m + 1)]
    passed = all(all(r["checks"].values()) for r in rows)
    doc = {"command": "check", "graph": graph_document(g), "stabilization_index": stable_at,
           "levels": rows, "passed": passed}
    if not passed:
        for r in rows:
            for name, ok in r["checks"].items():
                if not ok:
                    raise CheckFailed(f"check {name} failed at m={r['m']}", doc)
    return doc


def cmd_search(n: int, level: str) -> dict:
    if not 2 <= n <= 6:
        raise InputError("search supports 2 <= n <= 6")
    if level not in ("csf", "cqf"):
        try:
            int(level)
        except ValueError:
            raise InputError("--level must be csf, cqf or an integer") from None
    try:
        report = collision_search(n, level if level in ("csf", "cqf") else int(level))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return {
        "command": "search",
        "n": n,
        "level": level,
        "m": report.m,
        "count": len(report.pairs),
        "pairs": [{"graphs": [graph_document(a), graph_document(b)], "value": qsym_document(v)}
                  for (a, b), v in zip(report.pairs, report.values)],
    }


# -- text rendering ------------------------------------------------------

def render_text(doc: dict) -> str:
    cmd = doc["command"]
    if cmd == "psi":
        lines = [f"degree {doc['degree']}, m={doc['m']}" + (f", q={doc['q']}" if "q" in doc else "")]
        for t in doc["terms"]:
            lines.append(f"M_{','.join(map(str, t['composition']))}: {' '.join(map(str, t['q_coefficients']))}")
        return "\n".join(lines)
    if cmd == "fpoly":
        return " ".join(map(str, doc["coefficients"]))
    if cmd == "hposets":
        lines = [str(doc["count"])]
        for rel in doc.get("posets", []):
            lines.append(" ".join(f"{a}<{b}" for a, b in rel) or "(antichain)")
        return "\n".join(lines)
    if cmd == "stabilize":
        return f"|M|={doc['longest_induced_path']} index={doc['stabilization_index']}"
    if cmd == "check":
        names = list(doc["levels"][0]["checks"]) if doc["levels"] else []
        lines = ["m " + " ".join(names)]
        for r in doc["levels"]:
            lines.append(f"{r['m']} " + " ".join("pass" if r["checks"][k] else "FAIL" for k in names))
        lines.append(f"stabilization index {doc['stabilization_index']}")
        lines.append("all checks passed" if doc["passed"] else "FAILED")
        return "\n".join(lines)
    if cmd == "search":
        lines = [f"n={doc['n']} level={doc['level']} (m={doc['m']}): {doc['count']} pair(s)"]
        for p in doc["pairs"]:
            a, b = p["graphs"]
            fmt = lambda g: " ".join(f"{u}{v}" for u, v in g["edges"])
            lines.append(f"  {{{fmt(a)}}} ~ {{{fmt(b)}}}")
        return "\n".join(lines)
    raise ValueError(cmd)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphpoly", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_graph(name, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("--graph", required=True, metavar="PATH")
        return p

    p = with_graph("psi", "weighted quasisymmetric enumerator")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int)
    p = with_graph("fpoly", "f-polynomial, ascending by dimension")
    p.add_argument("--m", type=int, required=True)
    p = with_graph("hposets", "H-posets of the level hypergraph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=("count", "list"), default="count")
    p = with_graph("check", "run every cross-validation for one graph")
    p.add_argument("--max-m", type=int)
    with_graph("stabilize", "stabilization index")
    p = sub.add_parser("search", help="collision search over connected graphs", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", default="csf", help="csf, cqf or an integer m")
    return parser


def run(args: argparse.Namespace) -> dict:
    if args.command == "search":
        return cmd_search(args.n, args.level)
    g = read_graph(args.graph)
    if args.command == "psi":
        return cmd_psi(g, args.m, args.q)
    if args.command == "fpoly":
        return cmd_fpoly(g, args.m)
    if args.command == "hposets":
        return cmd_hposets(g, args.m, args.mode)
    if args.command == "check":
        return cmd_check(g, args.max_m)
    if args.command == "stabilize":
        return cmd_stabilize(g)
    raise InputError(f"unknown command {args.command}")


def emit(doc: dict, fmt: str) -> None:
    if fmt == "text":
        sys.stdout.write(render_text(doc) + "\n")
    else:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CheckFailed as exc:
        emit(exc.document, args.format)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except InconsistentResult as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    emit(doc, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
