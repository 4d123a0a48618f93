"""Hypergraphs on [n] and the level hypergraphs of a simple graph.

Hyperedges of size < 2 are never stored: a singleton simplex is a point and
only translates the Minkowski sum.  Component counts therefore treat every
uncovered ground vertex as its own component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .flags import Flag
from .graphcore import SimpleGraph, full_set, is_connected, is_induced_path, labels, popcount


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: frozenset[int]

    def __post_init__(self):
        full = full_set(self.n)
        for e in self.edges:
            if e & ~full:
                raise ValueError("hyperedge outside [n]")
            if popcount(e) < 2:
                raise ValueError("hyperedges of size < 2 are not stored")

    @classmethod
    def of(cls, n: int, edges: Iterable[int]) -> "Hypergraph":
        """Build from masks, silently dropping sets of size < 2."""
        return cls(n, frozenset(e for e in edges if popcount(e) >= 2))

    def sorted_edges(self) -> list[int]:
        """Edges by decreasing size, then by increasing label tuple."""
        return sorted(self.edges, key=lambda e: (-popcount(e), labels(e)))

    def __len__(self):
        return len(self.edges)

    def __str__(self):
        es = sorted(self.edges, key=lambda e: (popcount(e), labels(e)))
        return "{" + ",".join("".join(map(str, labels(e))) for e in es) + "}"


def _connected_sets(g: SimpleGraph, m: int, keep) -> Hypergraph:
    if m < 1:
        raise ValueError("level m must be >= 1")
    out = []
    for s in range(1, 1 << g.n):
        k = popcount(s)
        if 2 <= k <= m + 1 and keep(g, s):
            out.append(s)
    return Hypergraph(g.n, frozenset(out))


def level_hypergraph(g: SimpleGraph, m: int) -> Hypergraph:
    """Connected vertex sets of size 2..m+1."""
    return _connected_sets(g, m, is_connected)


def level_path_hypergraph(g: SimpleGraph, m: int) -> Hypergraph:
    """Vertex sets of size 2..m+1 inducing a path."""
    return _connected_sets(g, m, is_induced_path)


def restrict(h: Hypergraph, f: int) -> list[int]:
    return [e for e in h.edges if e & ~f == 0]


def contract(edges: Iterable[int], f: int) -> list[int]:
    return [e & ~f for e in edges if popcount(e & ~f) >= 2]


def split_by_flag_h(h: Hypergraph, f: Flag) -> Hypergraph:
    """Disjoint union over blocks of (h restricted to F_i) contracted by F_{i-1}."""
    if f.ground != full_set(h.n):
        raise ValueError("flag must end at [n]")
    out = set()
    for prev, cur in f.steps():
        out.update(contract(restrict(h, cur), prev))
    return Hypergraph(h.n, frozenset(out))


def n_components(h: Hypergraph) -> int:
    """Components of the ground set linked by overlapping hyperedges."""
    comps: list[int] = []
    for e in h.edges:
        merged = e
        keep = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                keep.append(c)
        keep.append(merged)
        comps = keep
    covered = 0
    for c in comps:
        covered |= c
    return len(comps) + h.n - popcount(covered)


def rank(h: Hypergraph) -> int:
    return h.n - n_components(h)
