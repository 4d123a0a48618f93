from collections import Counter
from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphpoly import decorated as dec
from graphpoly.decorated import DecoratedGraph, DecoratedSum, canonical, coproduct, pr, rip, sew
from graphpoly.flags import Flag
from graphpoly.graphcore import family, members, subsets, vertex_set

L4 = dec.uniform(family("path", 4))
K2 = dec.uniform(family("complete", 2))
DOT = DecoratedGraph(1, ())
TWO_DOTS = DecoratedGraph(0b11, ())


@st.composite
def decorated(draw, max_n=5, max_w=4):
    n = draw(st.integers(1, max_n))
    weights = {}
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            w = draw(st.integers(0, max_w))
            if w:
                weights[u, v] = w
    return DecoratedGraph.from_weights(n, weights)


def path_oracle(g: DecoratedGraph, s: int) -> dict:
    """Cheapest u-v weight over simple paths with every interior vertex in s, by DFS."""
    rest = g.ground & ~s
    adj = {v: {} for v in members(g.ground)}
    for u, v, w in g.edges:
        adj[u][v] = w
        adj[v][u] = w
    best = {}
    for start in members(rest):
        stack = [(start, 0, 1 << start)]
        while stack:
            v, cost, used = stack.pop()
            for u, w in adj[v].items():
                if used >> u & 1:
                    continue
                if rest >> u & 1:
                    if start < u:
                        key = (start, u)
                        best[key] = min(best.get(key, cost + w), cost + w)
                elif s >> u & 1:
                    stack.append((u, cost + w, used | 1 << u))
    return best


def test_rip_examples():
    assert rip(L4, vertex_set([1, 2])) == DecoratedGraph(0b11, ((0, 1, 1),))
    assert rip(L4, L4.ground) == L4
    assert rip(L4, vertex_set([1, 3])).edges == ()


def test_sew_examples():
    out = sew(L4, vertex_set([2, 3]))
    assert out.ground == vertex_set([1, 4])
    assert out.edges == ((0, 3, 3),)
    assert sew(L4, 0) == L4
    tri = DecoratedGraph.from_weights(3, {(1, 2): 1, (2, 3): 1, (1, 3): 5})
    # path_oracle(tri, {2}) gives {(0, 2): 2}
    assert sew(tri, vertex_set([2])).edges == ((0, 2, 2),)
    assert path_oracle(tri, vertex_set([2])) == {(0, 2): 2}


@settings(max_examples=150, deadline=None)
@given(decorated(), st.data())
def test_sew_matches_path_oracle(g, data):
    s = data.draw(st.integers(0, g.ground)) & g.ground
    assert sew(g, s).weights == path_oracle(g, s)


def test_pr_examples():
    edge14 = DecoratedGraph(vertex_set([1, 4]), ((0, 3, 3),))
    assert pr(edge14, 2).edges == ()
    assert pr(L4, 1) == L4 and pr(L4, 5) == L4
    g = DecoratedGraph.from_weights(4, {(1, 2): 1, (2, 3): 2, (3, 4): 3})
    assert pr(g, 2).weights == {(0, 1): 1, (1, 2): 2}


@settings(max_examples=100, deadline=None)
@given(decorated(), st.integers(1, 4))
def test_pr_idempotent_and_monotone(g, m):
    assert pr(pr(g, m), m) == pr(g, m)
    assert set(pr(g, m).edges) <= set(pr(g, m + 1).edges)


def test_product_examples():
    assert dec.product(dec.EMPTY, L4) == L4
    assert dec.product(K2, K2) == DecoratedGraph.from_weights(4, {(1, 2): 1, (3, 4): 1})
    a = DecoratedGraph.from_weights(3, {(1, 2): 2, (2, 3): 1})
    assert canonical(dec.product(a, K2)) == canonical(dec.product(K2, a))


def test_split_by_flag_examples():
    one_block = Flag((L4.ground,))
    for m in (1, 2, 3):
        assert dec.split_by_flag(L4, one_block, m) == [L4]
    parts = dec.split_by_flag(L4, Flag((vertex_set([2, 3]), L4.ground)), 1)
    assert parts[0] == DecoratedGraph(vertex_set([2, 3]), ((1, 2, 1),))
    assert parts[1] == DecoratedGraph(vertex_set([1, 4]), ())
    full = Flag.from_blocks([1 << v for v in range(4)])
    assert [p.n for p in dec.split_by_flag(L4, full, 1)] == [1, 1, 1, 1]
    assert all(not p.edges for p in dec.split_by_flag(L4, full, 1))


def test_coproduct_examples():
    assert coproduct(DOT, 1) == [(dec.EMPTY, DOT), (DOT, dec.EMPTY)]
    terms = [(canonical(a), canonical(b)) for a, b in coproduct(K2, 1)]
    dot = canonical(DOT)
    assert Counter(terms) == Counter({(dec.EMPTY, canonical(K2)): 1, (dot, dot): 2,
                                      (canonical(K2), dec.EMPTY): 1})
    assert len(coproduct(L4, 2)) == 16


def test_antipode_examples():
    assert dec.takeuchi_antipode(DOT, 1) == DecoratedSum.of(DOT, -1)
    expected = DecoratedSum({K2: -1, TWO_DOTS: 2})
    assert dec.takeuchi_antipode(K2, 1) == expected
    with pytest.raises(ValueError):
        dec.takeuchi_antipode(dec.EMPTY, 1)


def nested_pairs(ground):
    for s2 in subsets(ground):
        for s1 in subsets(s2):
            yield s1, s2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_nested_sewing_and_restriction_identity(n):
    weights = [1, 2] if n == 4 else [1, 2, 3]
    for g in dec.all_decorated(n, weights):
        for s1, s2 in nested_pairs(g.ground):
            assert sew(sew(g, s1), s2 & ~s1) == sew(g, s2)
            for m in (1, 2, 3):
                assert pr(sew(rip(g, s2), s1), m) == pr(rip(sew(g, s1), s2 & ~s1), m)


def coassociativity_sides(g, m):
    left = Counter()
    for a, b in coproduct(g, m):
        for a1, a2 in coproduct(a, m):
            left[canonical(a1), canonical(a2), canonical(b)] += 1
    right = Counter()
    for a, b in coproduct(g, m):
        for b1, b2 in coproduct(b, m):
            right[canonical(a), canonical(b1), canonical(b2)] += 1
    return left, right


@settings(max_examples=25, deadline=None)
@given(decorated(max_n=4, max_w=3), st.integers(1, 3))
def test_coassociativity_on_four_vertices(g, m):
    left, right = coassociativity_sides(g, m)
    assert left == right


def test_rip_sew_commute_with_product():
    small = [g for n in (1, 2, 3) for g in dec.all_decorated(n, [1, 2])]
    for g1, g2 in cartesian(small[:12], small):
        prod = dec.product(g1, g2)
        shift = g1.n
        for s1 in subsets(g1.ground):
            for s2 in subsets(g2.ground):
                s = s1 | s2 << shift
                assert dec.product(rip(g1, s1), rip(g2, s2)) == dec.compress(rip(prod, s))
                assert dec.product(sew(g1, s1), sew(g2, s2)) == dec.compress(sew(prod, s))


def test_decorated_sum_cancels():
    s = DecoratedSum({K2: 3})
    s.add(DecoratedGraph.from_weights(2, {(2, 1): 1}), -3)
    assert not s
