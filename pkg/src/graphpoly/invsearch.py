"""Collision search for the q = 0 enumerators over small connected graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphcore import SimpleGraph, canonical_graph, connected_catalog
from .qsym import QSymElement, psi, specialize_q

LEVEL_NAMES = ("csf", "cqf")


def resolve_level(level: int | str, n: int) -> int:
    """Map "csf" to m = 1 and "cqf" to m = n - 1; integers pass through."""
    if level == "csf":
        return 1
    if level == "cqf":
        return n - 1
    m = int(level)
    if not 1 <= m <= max(n - 1, 1):
        raise ValueError(f"level {m} out of range for n={n}")
    return m


def chromatic(g: SimpleGraph, m: int) -> QSymElement:
    return specialize_q(psi(g, m), 0)


@dataclass
class InvariantReport:
    n: int
    level: int | str
    m: int
    pairs: list[tuple[SimpleGraph, SimpleGraph]] = field(default_factory=list)
    values: list[QSymElement] = field(default_factory=list)


def _graph_key(g: SimpleGraph):
    return (len(g.edges()), g.edges())


def collision_search(n: int, level: int | str) -> InvariantReport:
    """All pairs of non-isomorphic connected graphs on n vertices with equal Psi^m_0."""
    if not 2 <= n <= 6:
        raise ValueError("collision search supports 2 <= n <= 6")
    m = resolve_level(level, n)
    groups: dict[QSymElement, list[SimpleGraph]] = {}
    for g in connected_catalog(n):
        groups.setdefault(chromatic(g, m), []).append(g)
    report = InvariantReport(n, level, m)
    found = []
    for value, graphs in groups.items():
        graphs = sorted(graphs, key=_graph_key)
        for a, b in combinations(graphs, 2):
            found.append((_graph_key(a), _graph_key(b), a, b, value))
    for *_, a, b, value in sorted(found, key=lambda t: (t[0], t[1])):
        report.pairs.append((a, b))
        report.values.append(value)
    return report


def separating_level(g1: SimpleGraph, g2: SimpleGraph) -> int | None:
    """Smallest m whose Psi^m_0 tells the two graphs apart, if any."""
    if g1.n != g2.n:
        raise ValueError("graphs must have the same number of vertices")
    if canonical_graph(g1) == canonical_graph(g2):
        return None
    for m in range(1, max(g1.n - 1, 1) + 1):
        if chromatic(g1, m) != chromatic(g2, m):
            return m
    return None
