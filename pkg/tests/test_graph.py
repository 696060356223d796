import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kitefree_chroma.graph import (
    Graph, GraphError, Relation, antihole, build_graph, complement, cycle_graph, disjoint_union,
    first_edge, is_anticomplete, is_clique, is_complete, is_stable, join, set_relation,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_build_merges_duplicates_and_counts_edges():
    g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.N(1) == {0, 2}


@pytest.mark.parametrize("n, edges", [(2, [(0, 0)]), (2, [(0, 2)]), (-1, [])])
def test_build_rejects_bad_input(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_complement_is_an_involution(g):
    h = complement(g)
    assert complement(h) == g
    assert g.m + h.m == g.n * (g.n - 1) // 2


@settings(max_examples=40, deadline=None)
@given(graphs(5), graphs(5))
def test_join_and_union_edge_counts(g, h):
    assert disjoint_union(g, h).m == g.m + h.m
    assert join(g, h).m == g.m + h.m + g.n * h.n
    assert complement(join(g, h)) == disjoint_union(complement(g), complement(h))


def test_antihole_labelling():
    g = antihole(7)
    assert not g.has_edge(0, 1) and not g.has_edge(6, 0)
    assert g.has_edge(0, 2) and g.m == 14
    assert complement(g) == cycle_graph(7)


def test_induced_relabels_in_order():
    g = cycle_graph(5)
    sub, back = g.induced([4, 0, 1])
    assert back == (0, 1, 4)
    assert sub.edges() == [(0, 1), (0, 2)]


def test_set_relations_and_vacuous_empty_side():
    g = join(build_graph(2, []), build_graph(2, [(0, 1)]))
    assert set_relation(g, {0, 1}, {2, 3}) == (Relation.COMPLETE, False)
    assert set_relation(g, {0}, {1}) == (Relation.ANTICOMPLETE, False)
    assert set_relation(g, {0}, {1, 2}).kind is Relation.MIXED
    rel = set_relation(g, set(), {1})
    assert rel.vacuous
    assert is_complete(g, set(), {1}) and is_anticomplete(g, set(), {1})
    with pytest.raises(GraphError):
        set_relation(g, {0, 1}, {1})


def test_stable_clique_and_first_edge():
    g = build_graph(4, [(0, 1), (1, 2), (0, 2)])
    assert is_clique(g, {0, 1, 2}) and not is_clique(g, {0, 1, 3})
    assert is_stable(g, {0, 3}) and not is_stable(g, {1, 2, 3})
    assert first_edge(g, {3, 2, 1}) == (1, 2)
    assert first_edge(g, {0, 3}) is None
