"""Acyclic 1-orientations, H-posets and what they say about Q_H.

Conventions: a 1-orientation picks a root in each hyperedge and draws
arrows root -> other members.  ``j <_P i`` exactly when there is a directed
path from i to j, so every root is the maximum of its hyperedge.  Posets are
compared as labelled relations; relabelling would identify different cones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator

from .graphcore import full_set, members, popcount, subsets
from .hyper import Hypergraph
from .qsym import QSymElement, from_constants


@dataclass(frozen=True)
class Poset:
    """Strict order on 0..n-1; ``up[i]`` is the mask of j with i < j."""

    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.n:
            raise ValueError("relation size mismatch")
        for i, mask in enumerate(self.up):
            if mask >> i & 1:
                raise ValueError("relation must be irreflexive")
            for j in members(mask):
                if self.up[j] & ~mask:
                    raise ValueError("relation is not transitive")

    @classmethod
    def from_relations(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Transitive closure of 1-based pairs (a, b) meaning a < b."""
        up = [0] * n
        for a, b in pairs:
            up[a - 1] |= 1 << (b - 1)
        return cls(n, close(up))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, (0,) * n)

    def lt(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def relations(self) -> list[tuple[int, int]]:
        """1-based pairs (a, b) with a < b, sorted."""
        return sorted((i + 1, j + 1) for i in range(self.n) for j in members(self.up[i]))

    def down(self, j: int) -> int:
        return sum(1 << i for i in range(self.n) if self.up[i] >> j & 1)

    def covers(self) -> list[tuple[int, int]]:
        """0-based pairs (i, j) with i covered by j."""
        out = []
        for i in range(self.n):
            for j in members(self.up[i]):
                if not any(self.up[k] >> j & 1 for k in members(self.up[i])):
                    out.append((i, j))
        return out

    def __str__(self):
        return "P(" + ",".join(f"{a}<{b}" for a, b in self.relations()) + ")"


def close(up: list[int]) -> tuple[int, ...]:
    """Transitive closure of an ``up`` relation; raises on cycles."""
    n = len(up)
    up = list(up)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in members(up[i]):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        if up[i] >> i & 1:
            raise ValueError("relation has a directed cycle")
    return tuple(up)


# -- orientations --------------------------------------------------------

Orientation = dict  # hyperedge mask -> root bit


def enumerate_acyclic_orientations(h: Hypergraph) -> Iterator[dict[int, int]]:
    """Every root assignment whose arrow multigraph is acyclic.

    Hyperedges are processed largest first while a running transitive
    closure rejects a root as soon as it would close a cycle.
    """
    edges = h.sorted_edges()
    n = h.n
    roots: dict[int, int] = {}

    def rec(i: int, above: list[int]):
        if i == len(edges):
            yield dict(roots)
            return
        e = edges[i]
        for r in members(e):
            rest = e & ~(1 << r)
            # r -> x makes x < r; a cycle appears iff some x already sits above r
            if above[r] & rest:
                continue
            lift = (1 << r) | above[r]
            new = list(above)
            for x in range(n):
                if rest >> x & 1 or above[x] & rest:
                    new[x] |= lift
            roots[e] = r
            yield from rec(i + 1, new)
            del roots[e]

    yield from rec(0, [0] * n)


def is_acyclic(o: dict[int, int], n: int) -> bool:
    try:
        transitive_closure(o, n)
    except ValueError:
        return False
    return True


def transitive_closure(o: dict[int, int], n: int) -> Poset:
    """Poset with x < r for every arrow r -> x, closed transitively."""
    up = [0] * n
    for e, r in o.items():
        if not e >> r & 1:
            raise ValueError("root is not a member of its hyperedge")
        for x in members(e & ~(1 << r)):
            up[x] |= 1 << r
    return Poset(n, close(up))


# -- H-posets ------------------------------------------------------------

def restriction_is_rooted_tree(p: Poset, e: int) -> bool:
    """Hasse diagram of P restricted to ``e`` is a tree with a unique top."""
    maxima = [v for v in members(e) if not p.up[v] & e]
    if len(maxima) != 1:
        return False
    for v in members(e):
        if v == maxima[0]:
            continue
        above = p.up[v] & e
        # upper covers inside the restriction
        n_covers = sum(1 for u in members(above) if not p.up[u] & above)
        if n_covers != 1:
            return False
    return True


def covers_witnessed(p: Poset, h: Hypergraph) -> bool:
    """Each cover i < j lies in a hyperedge whose restriction has top j.

    Merely sharing a hyperedge is too weak: on the star 12, 13 the chain
    3 < 2 < 1 would pass although no acyclic orientation produces it.
    """
    for i, j in p.covers():
        pair = (1 << i) | (1 << j)
        if not any(e & pair == pair and not p.up[j] & e for e in h.edges):
            return False
    return True


def is_hposet(p: Poset, h: Hypergraph) -> bool:
    if p.n != h.n:
        raise ValueError("poset and hypergraph live on different ground sets")
    return all(restriction_is_rooted_tree(p, e) for e in h.edges) and covers_witnessed(p, h)


def enumerate_hposets(h: Hypergraph) -> set[Poset]:
    return {transitive_closure(o, h.n) for o in enumerate_acyclic_orientations(h)}


def sorted_posets(posets: Iterable[Poset]) -> list[Poset]:
    return sorted(posets, key=Poset.relations)


def _previous_level(h: Hypergraph) -> Hypergraph:
    if not h.edges:
        return h
    top = max(popcount(e) for e in h.edges)
    return Hypergraph(h.n, frozenset(e for e in h.edges if popcount(e) < top))


def lift_hposets(p: Poset, h_next: Hypergraph, h_prev: Hypergraph | None = None) -> set[Poset]:
    """H-posets of ``h_next`` reachable from ``p`` by adding relations.

    While some hyperedge restriction is not a rooted tree, two maximal
    elements of that restriction are made comparable in both possible ways.
    Every qualifying pair is branched on, so the result is complete.
    """
    if h_prev is None:
        h_prev = _previous_level(h_next)
    if not (is_hposet(p, h_next) or is_hposet(p, h_prev)):
        raise ValueError("input is not an H-poset of the previous level")

    found: set[Poset] = set()
    seen: set[Poset] = set()
    stack = [p]
    edges = h_next.sorted_edges()
    while stack:
        q = stack.pop()
        if q in seen:
            continue
        seen.add(q)
        if is_hposet(q, h_next):
            found.add(q)
            continue
        for e in edges:
            if restriction_is_rooted_tree(q, e):
                continue
            maxima = [v for v in members(e) if not q.up[v] & e]
            if len(maxima) < 2:
                continue
            for a_i, a in enumerate(maxima):
                for b in maxima[a_i + 1:]:
                    for lo, hi in ((a, b), (b, a)):
                        up = list(q.up)
                        up[lo] |= 1 << hi
                        try:
                            stack.append(Poset(q.n, close(up)))
                        except ValueError:
                            pass
            break
    return {r for r in found if covers_witnessed(r, h_next)}


def strict_ppartition_enumerator(p: Poset) -> QSymElement:
    """Coefficient of M_alpha counts ordered set partitions whose level map is strict on P.

    Each block must consist of minimal elements of what remains, so blocks are
    peeled off recursively with memoization on the remaining set.
    """

    @cache
    def peel(rest: int) -> dict[tuple[int, ...], int]:
        if not rest:
            return {(): 1}
        minimal = 0
        for v in members(rest):
            if not p.down(v) & rest:
                minimal |= 1 << v
        out: dict[tuple[int, ...], int] = {}
        for block in subsets(minimal):
            if not block:
                continue
            size = popcount(block)
            for tail, c in peel(rest & ~block).items():
                key = (size, *tail)
                out[key] = out.get(key, 0) + c
        return out

    return from_constants(p.n, peel(full_set(p.n)))


def vertex_coordinates(p: Poset, h: Hypergraph) -> tuple[int, ...]:
    """Vertex of Q_H picked out by the cone of P: one unit at each hyperedge's root."""
    if not is_hposet(p, h):
        raise ValueError("poset is not an H-poset of this hypergraph")
    coords = [0] * h.n
    for e in h.edges:
        (top,) = [v for v in members(e) if not p.up[v] & e]
        coords[top] += 1
    return tuple(coords)


def normally_equivalent(h1: Hypergraph, h2: Hypergraph) -> bool:
    if h1.n != h2.n:
        raise ValueError("hypergraphs on different ground sets")
    return enumerate_hposets(h1) == enumerate_hposets(h2)


def all_posets(n: int) -> list[Poset]:
    """Every labelled poset on n elements, built by inserting one element at a time."""
    if n == 0:
        return [Poset(0, ())]
    out = []
    for base in all_posets(n - 1):
        m = n - 1
        for below in range(1 << m):
            if any(base.down(x) & ~below for x in members(below)):
                continue  # not a down-set
            for above in range(1 << m):
                if above & below:
                    continue
                if any(base.up[x] & ~above for x in members(above)):
                    continue  # not an up-set
                if any(base.up[x] & above != above for x in members(below)):
                    continue  # every lower element must sit below every upper one
                up = list(base.up)
                for x in members(below):
                    up[x] |= 1 << m
                up.append(above)
                out.append(Poset(n, tuple(up)))
    return out
