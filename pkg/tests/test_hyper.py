from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from graphpoly.flags import Flag, enumerate_flags
from graphpoly.graphcore import SimpleGraph, connected_catalog, family, vertex_set
from graphpoly.hyper import Hypergraph, level_hypergraph, level_path_hypergraph, rank, split_by_flag_h


def hg(n, *sets):
    return Hypergraph(n, frozenset(vertex_set(s) for s in sets))


def test_level_hypergraph_examples():
    l4 = family("path", 4)
    assert level_hypergraph(l4, 1) == hg(4, [1, 2], [2, 3], [3, 4])
    assert level_hypergraph(l4, 2) == hg(4, [1, 2], [2, 3], [3, 4], [1, 2, 3], [2, 3, 4])
    assert level_hypergraph(family("complete", 3), 5) == hg(3, [1, 2], [1, 3], [2, 3], [1, 2, 3])


def test_level_path_hypergraph_examples():
    l4 = family("path", 4)
    full = hg(4, [1, 2], [2, 3], [3, 4], [1, 2, 3], [2, 3, 4], [1, 2, 3, 4])
    for m in (3, 4, 7):
        assert level_path_hypergraph(l4, m) == full
    assert level_path_hypergraph(family("complete", 3), 2) == hg(3, [1, 2], [1, 3], [2, 3])
    star = level_path_hypergraph(family("star", 4), 3)
    assert star == hg(4, [1, 2], [1, 3], [1, 4], [1, 2, 3], [1, 2, 4], [1, 3, 4])


def test_path_hypergraph_is_sub_hypergraph():
    for n in range(2, 6):
        for g in connected_catalog(n):
            for m in range(1, n + 1):
                assert level_path_hypergraph(g, m).edges <= level_hypergraph(g, m).edges
    for n in range(2, 7):
        ln = family("path", n)
        for m in range(1, n + 1):
            assert level_path_hypergraph(ln, m) == level_hypergraph(ln, m)


def test_split_examples():
    h2 = level_hypergraph(family("path", 4), 2)
    assert split_by_flag_h(h2, Flag((0b1111,))) == h2
    full = Flag.from_blocks([1, 2, 4, 8])
    assert split_by_flag_h(h2, full).edges == frozenset()
    assert split_by_flag_h(h2, Flag((vertex_set([2, 3]), 0b1111))) == hg(4, [2, 3])


def test_rank_examples():
    assert rank(level_hypergraph(family("path", 4), 1)) == 3
    assert rank(Hypergraph(4, frozenset())) == 0
    assert rank(hg(5, [1, 2], [3, 4])) == 2


@st.composite
def hypergraphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    candidates = [s for s in range(1 << n) if bin(s).count("1") >= 2]
    edges = draw(st.lists(st.sampled_from(candidates), unique=True, max_size=8)) if candidates else []
    return Hypergraph(n, frozenset(edges))


@settings(max_examples=150, deadline=None)
@given(hypergraphs(), st.data())
def test_rank_monotone_and_bounded(h, data):
    r = rank(h)
    assert 0 <= r <= max(h.n - 1, 0)
    extra = [s for s in range(1 << h.n) if bin(s).count("1") >= 2]
    if extra:
        e = data.draw(st.sampled_from(extra))
        assert rank(Hypergraph(h.n, h.edges | {e})) >= r


def test_rank_matches_graph_rank_for_two_element_edges():
    # for ordinary graphs, rank = n - components
    g = SimpleGraph.from_edges(6, [(1, 2), (2, 3), (5, 6)])
    assert rank(Hypergraph(6, frozenset((1 << (u - 1)) | (1 << (v - 1)) for u, v in g.edge_labels()))) == 3


def test_split_blocks_stay_inside_blocks():
    h = level_hypergraph(family("complete", 4), 3)
    for f in enumerate_flags(4):
        blocks = f.blocks()
        for e in split_by_flag_h(h, f).edges:
            assert any(e & ~b == 0 for b in blocks)


def test_hypergraph_rejects_small_edges():
    assert len(Hypergraph.of(3, [0b001, 0b011, 0b011])) == 1
    for pair in combinations(range(3), 1):
        try:
            Hypergraph(3, frozenset([1 << pair[0]]))
        except ValueError:
            pass
        else:
            raise AssertionError("singleton hyperedge accepted")
