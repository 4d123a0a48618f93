"""Decorated (edge-weighted) graphs and their Hopf algebra operations.

A decorated graph keeps its vertices as a mask over the original labels, so
ripping and sewing never renumber anything.  Renumbering to 0..k-1 happens
only in ``compress`` / ``canonical``, which is what isomorphism classes and
products need.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator

from .flags import Flag, flags_on
from .graphcore import MAX_CANON_N, SimpleGraph, UnsupportedSize, full_set, members, popcount, subsets


@dataclass(frozen=True)
class DecoratedGraph:
    ground: int
    edges: tuple[tuple[int, int, int], ...]  # sorted (u, v, w), u < v, 0-based

    def __post_init__(self):
        for u, v, w in self.edges:
            if not u < v:
                raise ValueError("edge endpoints must be distinct and ordered")
            if not (self.ground >> u & 1 and self.ground >> v & 1):
                raise ValueError("edge endpoint outside the ground set")
            if w < 1:
                raise ValueError("decorations must be positive integers")

    @classmethod
    def from_weights(cls, n: int, weights: dict[tuple[int, int], int]) -> "DecoratedGraph":
        """Build on [n] from 1-based pairs."""
        edges = {}
        for (u, v), w in weights.items():
            a, b = sorted((u - 1, v - 1))
            if a == b or a < 0 or b >= n:
                raise ValueError(f"bad pair {u}{v} for n={n}")
            edges[a, b] = w
        return cls._make(full_set(n), edges)

    @classmethod
    def _make(cls, ground: int, edges: dict[tuple[int, int], int]) -> "DecoratedGraph":
        return cls(ground, tuple(sorted((u, v, w) for (u, v), w in edges.items())))

    @property
    def n(self) -> int:
        return popcount(self.ground)

    @cached_property
    def weights(self) -> dict[tuple[int, int], int]:
        return {(u, v): w for u, v, w in self.edges}

    def weight(self, u: int, v: int) -> int | None:
        return self.weights.get((min(u, v), max(u, v)))

    def __str__(self):
        verts = ",".join(str(v + 1) for v in members(self.ground))
        es = " ".join(f"{u + 1}{v + 1}:{w}" for u, v, w in self.edges)
        return f"<{verts} | {es}>"


EMPTY = DecoratedGraph(0, ())


def uniform(g: SimpleGraph, w: int = 1) -> DecoratedGraph:
    """The decorated graph with every edge of ``g`` weighted ``w``."""
    return DecoratedGraph(g.vertices, tuple((u, v, w) for u, v in g.edges()))


def rip(g: DecoratedGraph, s: int) -> DecoratedGraph:
    if s & ~g.ground:
        raise ValueError("ripping set is not inside the ground set")
    return DecoratedGraph(s, tuple(e for e in g.edges if s >> e[0] & 1 and s >> e[1] & 1))


def sew(g: DecoratedGraph, s: int) -> DecoratedGraph:
    """Contract ``s``: keep the rest, joining u, v by the cheapest path through ``s``."""
    if s & ~g.ground:
        raise ValueError("sewing set is not inside the ground set")
    if not s:
        return g
    verts = list(members(g.ground))
    dist = {u: {} for u in verts}
    for u, v, w in g.edges:
        dist[u][v] = w
        dist[v][u] = w
    # Floyd-Warshall restricted to intermediates in s: afterwards dist[u][v]
    # is the cheapest u-v path whose interior lies in s
    for k in members(s):
        dk = dist[k]
        for u in verts:
            duk = dist[u].get(k)
            if duk is None or u == k:
                continue
            du = dist[u]
            for v, dkv in dk.items():
                if v == u:
                    continue
                cand = duk + dkv
                old = du.get(v)
                if old is None or cand < old:
                    du[v] = cand
    rest = g.ground & ~s
    edges = {}
    for u in members(rest):
        for v, d in dist[u].items():
            if u < v and rest >> v & 1:
                edges[u, v] = d
    return DecoratedGraph._make(rest, edges)


def pr(g: DecoratedGraph, m: int) -> DecoratedGraph:
    if m < 1:
        raise ValueError("pr_m needs m >= 1")
    return DecoratedGraph(g.ground, tuple(e for e in g.edges if e[2] <= m))


def compress(g: DecoratedGraph) -> DecoratedGraph:
    """Relabel the ground set to 0..k-1 preserving order."""
    pos = {v: i for i, v in enumerate(members(g.ground))}
    return DecoratedGraph(full_set(len(pos)), tuple((pos[u], pos[v], w) for u, v, w in g.edges))


def product(g1: DecoratedGraph, g2: DecoratedGraph) -> DecoratedGraph:
    """Disjoint union, with ``g2`` placed after ``g1``."""
    a, b = compress(g1), compress(g2)
    shift = a.n
    edges = a.edges + tuple((u + shift, v + shift, w) for u, v, w in b.edges)
    return DecoratedGraph(full_set(a.n + b.n), tuple(sorted(edges)))


def canonical(g: DecoratedGraph) -> DecoratedGraph:
    """Isomorphism-class representative: minimal weighted edge code over all relabelings."""
    c = compress(g)
    n = c.n
    if n > MAX_CANON_N:
        raise UnsupportedSize(f"decorated canonical forms are limited to n <= {MAX_CANON_N}")
    if not c.edges:
        return c
    best = None
    for perm in permutations(range(n)):
        code = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v]), w) for u, v, w in c.edges))
        if best is None or code < best:
            best = code
    return DecoratedGraph(c.ground, best)


def n_components(g: DecoratedGraph) -> int:
    parent = {v: v for v in members(g.ground)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = len(parent)
    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def split_block(g: DecoratedGraph, prev: int, cur: int, m: int) -> DecoratedGraph:
    """pr_m(g|_cur / prev), living on cur minus prev."""
    return pr(sew(rip(g, cur), prev), m)


def split_by_flag(g: DecoratedGraph, f: Flag, m: int) -> list[DecoratedGraph]:
    if f.ground != g.ground:
        raise ValueError("flag does not cover the ground set")
    return [split_block(g, prev, cur, m) for prev, cur in f.steps()]


def coproduct(g: DecoratedGraph, m: int) -> list[tuple[DecoratedGraph, DecoratedGraph]]:
    if m < 1:
        raise ValueError("coproduct needs m >= 1")
    return [(pr(rip(g, s), m), pr(sew(g, s), m)) for s in subsets(g.ground)]


def counit(g: DecoratedGraph) -> int:
    return 1 if g.ground == 0 else 0


class DecoratedSum:
    """Integer combination of isomorphism classes of decorated graphs."""

    def __init__(self, terms: dict[DecoratedGraph, int] | None = None):
        self.terms: dict[DecoratedGraph, int] = {}
        for g, c in (terms or {}).items():
            self.add(g, c)

    @classmethod
    def of(cls, g: DecoratedGraph, coeff: int = 1) -> "DecoratedSum":
        out = cls()
        out.add(g, coeff)
        return out

    def add(self, g: DecoratedGraph, coeff: int = 1) -> None:
        key = canonical(g)
        c = self.terms.get(key, 0) + coeff
        if c:
            self.terms[key] = c
        else:
            self.terms.pop(key, None)

    def __iadd__(self, other: "DecoratedSum") -> "DecoratedSum":
        for g, c in other.terms.items():
            self.add(g, c)
        return self

    def times(self, g: DecoratedGraph) -> "DecoratedSum":
        """Right multiplication by a single decorated graph."""
        out = DecoratedSum()
        for h, c in self.terms.items():
            out.add(product(h, g), c)
        return out

    def items(self) -> Iterator[tuple[DecoratedGraph, int]]:
        return iter(sorted(self.terms.items(), key=lambda kv: (kv[0].ground, kv[0].edges)))

    def __eq__(self, other):
        return isinstance(other, DecoratedSum) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{g}" for g, c in self.items())


def takeuchi_antipode(g: DecoratedGraph, m: int) -> DecoratedSum:
    """Sum over flags of (-1)^k times the product of the pr_m-split blocks."""
    if g.ground == 0:
        raise ValueError("the antipode of the unit is the unit; call with n >= 1")
    out = DecoratedSum()
    for f in flags_on(g.ground):
        parts = split_by_flag(g, f, m)
        prod = EMPTY
        for part in parts:
            prod = product(prod, part)
        out.add(prod, (-1) ** len(parts))
    return out


def antipode(g: DecoratedGraph, m: int) -> DecoratedSum:
    if g.ground == 0:
        return DecoratedSum.of(EMPTY)
    return takeuchi_antipode(g, m)


def antipode_convolution(g: DecoratedGraph, m: int) -> DecoratedSum:
    """mu o (S (x) Id) o Delta_m applied to ``g``; equals counit(g) times the unit."""
    out = DecoratedSum()
    for left, right in coproduct(g, m):
        out += antipode(left, m).times(right)
    return out


def iterate_coproduct(g: DecoratedGraph, m: int, k: int) -> list[tuple[DecoratedGraph, ...]]:
    """The (k-1)-fold iterated coproduct as a list of k-tuples."""
    terms = [(g,)]
    for _ in range(k - 1):
        nxt = []
        for t in terms:
            for a, b in coproduct(t[-1], m):
                nxt.append(t[:-1] + (a, b))
        terms = nxt
    return terms


def all_decorated(n: int, weights: Iterable[int]) -> Iterator[DecoratedGraph]:
    """Every decorated graph on [n] with decorations drawn from ``weights``."""
    weights = list(weights)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    choices = [None] + weights

    def rec(i, acc):
        if i == len(pairs):
            yield DecoratedGraph(full_set(n), tuple(acc))
            return
        for w in choices:
            if w is None:
                yield from rec(i + 1, acc)
            else:
                yield from rec(i + 1, acc + [(*pairs[i], w)])

    yield from rec(0, [])


def block_components(g: DecoratedGraph, f: Flag, m: int) -> int:
    return sum(n_components(part) for part in split_by_flag(g, f, m))


def group_by_canonical(pairs: Iterable[tuple[DecoratedGraph, ...]]) -> dict:
    counts = defaultdict(int)
    for t in pairs:
        counts[tuple(canonical(x) for x in t)] += 1
    return dict(counts)
