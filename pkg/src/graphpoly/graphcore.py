"""Simple graphs on [n] stored as bitsets.

Vertex labels are 1-based in every user-facing place (files, CLI output,
``from_edges``) and 0-based bit positions internally: label ``v`` is bit
``v - 1``.  A vertex set is a plain ``int`` mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations, permutations
from typing import Iterable, Iterator

MAX_CANON_N = 8
MAX_CATALOG_N = 7


class UnsupportedSize(ValueError):
    pass


# -- vertex sets ---------------------------------------------------------

def vertex_set(labels: Iterable[int]) -> int:
    """Mask for a collection of 1-based labels."""
    mask = 0
    for v in labels:
        if v < 1:
            raise ValueError(f"vertex labels are 1-based, got {v}")
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> Iterator[int]:
    """0-based bit positions set in ``mask``, increasing."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def labels(mask: int) -> tuple[int, ...]:
    return tuple(v + 1 for v in members(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_set(n: int) -> int:
    return (1 << n) - 1


def subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask``), increasing."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


# -- graphs --------------------------------------------------------------

@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = full_set(self.n)
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v + 1} has a neighbour outside [n]")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v + 1}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        """Build from 1-based edge pairs."""
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}{v} outside [1, {n}]")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        """0-based edges (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    def edge_labels(self) -> list[tuple[int, int]]:
        return [(u + 1, v + 1) for u, v in self.edges()]

    @property
    def vertices(self) -> int:
        return full_set(self.n)

    def relabel(self, perm: tuple[int, ...]) -> "SimpleGraph":
        """Graph with old vertex ``v`` renamed ``perm[v]`` (0-based)."""
        adj = [0] * self.n
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        return SimpleGraph(self.n, tuple(adj))

    def __str__(self):
        es = " ".join(f"{u}{v}" if self.n < 10 else f"{u}-{v}" for u, v in self.edge_labels())
        return f"SimpleGraph(n={self.n}, edges={{{es}}})"


def induced_subgraph(g: SimpleGraph, s: int) -> SimpleGraph:
    """Restriction to ``s``, relabelled 1..|s| by increasing original label."""
    if s & ~g.vertices:
        raise ValueError("subset is not contained in [n]")
    verts = list(members(s))
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        nb = 0
        for u in members(g.adj[v] & s):
            nb |= 1 << pos[u]
        adj.append(nb)
    return SimpleGraph(len(verts), tuple(adj))


def component_of(g: SimpleGraph, s: int, start: int) -> int:
    """Vertices of ``s`` reachable from bit ``start`` inside ``g|_s``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        frontier = nxt & s & ~seen
        seen |= frontier
    return seen


def is_connected(g: SimpleGraph, s: int | None = None) -> bool:
    """Whether ``g|_s`` is connected; empty sets and singletons are."""
    if s is None:
        s = g.vertices
    if s & (s - 1) == 0:
        return True
    start = (s & -s).bit_length() - 1
    return component_of(g, s, start) == s


def components(g: SimpleGraph, s: int | None = None) -> list[int]:
    if s is None:
        s = g.vertices
    comps = []
    rest = s
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_of(g, s, start)
        comps.append(comp)
        rest &= ~comp
    return comps


def is_induced_path(g: SimpleGraph, s: int) -> bool:
    """Whether ``g|_s`` is a path on |s| vertices (a single vertex counts)."""
    k = popcount(s)
    if k == 0:
        return False
    degs = [popcount(g.adj[v] & s) for v in members(s)]
    n_edges = sum(degs) // 2
    return n_edges == k - 1 and max(degs) <= 2 and is_connected(g, s)


def longest_induced_path(g: SimpleGraph) -> int:
    """Largest |M| with ``g|_M`` isomorphic to the path on |M| vertices."""
    if g.n == 0:
        raise ValueError("graph has no vertices")
    best = 1
    # grow paths from each endpoint; induced paths are extended one end at a time
    def extend(path_mask: int, end: int, length: int):
        nonlocal best
        best = max(best, length)
        for u in members(g.adj[end] & ~path_mask):
            # u may touch only `end` among the current path vertices
            if g.adj[u] & path_mask == 1 << end:
                extend(path_mask | 1 << u, u, length + 1)

    for v in range(g.n):
        extend(1 << v, v, 1)
    return best


def family(kind: str, n: int) -> SimpleGraph:
    if n < 1:
        raise ValueError("family graphs need n >= 1")
    if kind == "path":
        edges = [(i, i + 1) for i in range(1, n)]
    elif kind == "complete":
        edges = list(combinations(range(1, n + 1), 2))
    elif kind == "star":
        edges = [(1, i) for i in range(2, n + 1)]
    elif kind == "edgeless":
        edges = []
    else:
        raise ValueError(f"unknown graph family {kind!r}")
    return SimpleGraph.from_edges(n, edges)


# -- canonical forms -----------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    edge_code: tuple[tuple[int, int], ...]

    def graph(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.n, [(u + 1, v + 1) for u, v in self.edge_code])


def degree_respecting_orders(keys: list, n: int) -> Iterator[tuple[int, ...]]:
    """Relabelings that place vertices in non-increasing ``degree`` key order.

    The admissible set depends only on the (isomorphism-invariant) keys, so
    minimizing over it still yields an isomorphism-complete invariant while
    skipping most of the n! orders.
    """
    order = sorted(set(keys), reverse=True)
    groups = [[v for v in range(n) if keys[v] == k] for k in order]

    def rec(i: int, prefix: list[int]):
        if i == len(groups):
            yield tuple(prefix)
            return
        for p in permutations(groups[i]):
            yield from rec(i + 1, prefix + list(p))

    for seq in rec(0, []):
        # seq lists old vertices in new-label order; invert to old -> new
        perm = [0] * n
        for new, old in enumerate(seq):
            perm[old] = new
        yield tuple(perm)


def canonical_form(g: SimpleGraph) -> CanonicalForm:
    """Minimal sorted edge list over degree-respecting relabelings."""
    if g.n > MAX_CANON_N:
        raise UnsupportedSize(f"canonical forms are limited to n <= {MAX_CANON_N}")
    edges = g.edges()
    key = [(popcount(g.adj[v]), tuple(sorted(popcount(g.adj[u]) for u in members(g.adj[v]))))
           for v in range(g.n)]
    best = None
    for perm in degree_respecting_orders(key, g.n):
        code = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
        if best is None or code < best:
            best = code
    return CanonicalForm(g.n, best if best is not None else ())


def canonical_graph(g: SimpleGraph) -> SimpleGraph:
    return canonical_form(g).graph()


@cache
def all_graphs(n: int) -> tuple[SimpleGraph, ...]:
    """One canonical representative per isomorphism class of graphs on n vertices."""
    if n == 0:
        return (SimpleGraph(0, ()),)
    seen = {}
    for base in all_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            adj = list(base.adj) + [nb]
            for u in members(nb):
                adj[u] |= 1 << (n - 1)
            cf = canonical_form(SimpleGraph(n, tuple(adj)))
            seen.setdefault(cf, None)
    return tuple(cf.graph() for cf in sorted(seen, key=lambda c: (len(c.edge_code), c.edge_code)))


def connected_catalog(n: int) -> list[SimpleGraph]:
    """Canonical representatives of the connected graphs on n vertices."""
    if not 1 <= n <= MAX_CATALOG_N:
        raise ValueError(f"catalog supports 1 <= n <= {MAX_CATALOG_N}")
    return [g for g in all_graphs(n) if is_connected(g)]
