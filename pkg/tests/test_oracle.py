import pytest

from kitefree_chroma.graph import antihole, complete_graph, cycle_graph, empty_graph, join
from kitefree_chroma.oracle import (
    OracleBoundError, bipartite_2color, check_coloring, chromatic_number, clique_number,
    k_colorable, max_clique, optimal_coloring,
)

from conftest import random_graph
from oracles import chromatic_number as ref_chi
from oracles import clique_number as ref_omega
from oracles import is_proper, to_nx


def test_agrees_with_subset_dp_and_networkx(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(0, 10), rng.choice((0.2, 0.5, 0.8)))
        h = to_nx(g)
        col = optimal_coloring(g)
        assert is_proper(h, col.colors)
        assert col.used == chromatic_number(g) == ref_chi(h)
        clique = max_clique(g)
        assert len(clique) == clique_number(g) == ref_omega(h)
        assert all(g.has_edge(u, v) for u in clique for v in clique if u != v)


@pytest.mark.parametrize("g, chi, omega", [
    (cycle_graph(5), 3, 2),
    (join(antihole(5), antihole(5)), 6, 4),
    (complete_graph(6), 6, 6),
    (antihole(7), 4, 3),
    (antihole(9), 5, 4),
    (empty_graph(0), 0, 0),
])
def test_known_values(g, chi, omega):
    assert chromatic_number(g) == chi
    assert clique_number(g) == omega


def test_k_colorable_threshold():
    g = antihole(7)
    assert k_colorable(g, 3) is None
    col = k_colorable(g, 4)
    assert check_coloring(g, col.colors, 4) is None


def test_bound_guard():
    with pytest.raises(OracleBoundError):
        chromatic_number(empty_graph(5), bound=4)


def test_check_coloring_messages():
    g = cycle_graph(4)
    assert check_coloring(g, [0, 1, 0, 1], 2) is None
    assert "monochromatic" in check_coloring(g, [0, 0, 1, 1])
    assert "covers" in check_coloring(g, [0, 1])
    assert "budget" in check_coloring(g, [0, 1, 0, 2], 2)


def test_bipartite():
    assert bipartite_2color(cycle_graph(5)) is None
    col = bipartite_2color(cycle_graph(6))
    assert check_coloring(cycle_graph(6), col.colors, 2) is None
