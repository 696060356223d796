"""Independent reference implementations used only by the tests.

Nothing here imports the package's detection or coloring code: patterns are
rebuilt with networkx, containment is decided by subset enumeration plus
VF2, and the chromatic number comes from a subset DP over stable sets.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _kite() -> nx.Graph:
    # P4 a-b-c-d plus e adjacent to a, b, c
    h = nx.path_graph(4)
    h.add_edges_from([(4, 0), (4, 1), (4, 2)])
    return h


def _union(*parts) -> nx.Graph:
    return nx.disjoint_union_all(parts)


def pattern(pid: str) -> nx.Graph:
    if pid == "P5":
        return nx.path_graph(5)
    if pid == "kite":
        return _kite()
    if pid == "2K2":
        return _union(nx.complete_graph(2), nx.complete_graph(2))
    if pid == "K3+K1":
        return _union(nx.complete_graph(3), nx.empty_graph(1))
    if pid == "C5+K1":
        return _union(nx.cycle_graph(5), nx.empty_graph(1))
    if pid == "C7bar_dominated":
        h = nx.complement(nx.cycle_graph(7))
        h.add_edges_from((7, v) for v in range(7))
        return h
    if pid.startswith("K"):
        return nx.complete_graph(int(pid[1:]))
    if pid.endswith("bar"):
        return nx.complement(nx.cycle_graph(int(pid[1:-3])))
    if pid.startswith("C"):
        return nx.cycle_graph(int(pid[1:]))
    raise KeyError(pid)


def _signature(h: nx.Graph):
    return h.number_of_nodes(), h.number_of_edges(), tuple(sorted(d for _, d in h.degree()))


def contains_induced(host: nx.Graph, pat: nx.Graph) -> bool:
    k = pat.number_of_nodes()
    want = _signature(pat)
    for sub in combinations(host.nodes, k):
        h = host.subgraph(sub)
        if _signature(h) == want and nx.is_isomorphic(h, pat):
            return True
    return False


def induced_is(host: nx.Graph, vertices, pat: nx.Graph) -> bool:
    return len(set(vertices)) == len(vertices) and nx.is_isomorphic(host.subgraph(vertices), pat)


def in_class(host: nx.Graph, pids) -> bool:
    return not any(contains_induced(host, pattern(p)) for p in pids)


def chromatic_number(h: nx.Graph) -> int:
    """Subset DP: chi(S) = 1 + min chi(S - I) over stable I containing min(S)."""
    nodes = list(h.nodes)
    idx = {v: i for i, v in enumerate(nodes)}
    adj = [0] * len(nodes)
    for u, v in h.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]

    @lru_cache(maxsize=None)
    def chi(s: int) -> int:
        if s == 0:
            return 0
        low = (s & -s).bit_length() - 1
        best = len(nodes)
        # enumerate stable sets containing `low` inside s
        rest = s & ~(1 << low) & ~adj[low]
        stack = [(1 << low, rest)]
        while stack:
            chosen, cand = stack.pop()
            best = min(best, 1 + chi(s & ~chosen))
            while cand:
                b = cand & -cand
                cand &= ~b
                v = b.bit_length() - 1
                stack.append((chosen | b, cand & ~adj[v]))
        return best

    return chi((1 << len(nodes)) - 1)


def clique_number(h: nx.Graph) -> int:
    return max((len(c) for c in nx.find_cliques(h)), default=0)


def is_proper(h: nx.Graph, colors) -> bool:
    return len(colors) == h.number_of_nodes() and all(colors[u] != colors[v] for u, v in h.edges)
