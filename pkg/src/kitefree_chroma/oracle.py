"""Exact desk-scale oracles: k-colorability, chromatic and clique number."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, bits

DEFAULT_BOUND = 40


class OracleBoundError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]  # colors[v] for v in 0..n-1, 0-based
    bound: int

    @property
    def used(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[frozenset]:
        out: dict[int, set] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, set()).add(v)
        return [frozenset(out[c]) for c in sorted(out)]

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "bound": self.bound, "used": self.used}


def check_coloring(g: Graph, colors, bound: int | None = None) -> str | None:
    """Independent certificate check; returns a failure message or ``None``."""
    colors = list(colors)
    if len(colors) != g.n:
        return f"coloring covers {len(colors)} of {g.n} vertices"
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return f"edge ({u}, {v}) is monochromatic (color {colors[u]})"
    if bound is not None and colors and (min(colors) < 0 or max(colors) >= bound):
        return f"color ids span {min(colors)}..{max(colors)}, budget is {bound}"
    return None


def _guard(g: Graph, bound: int) -> None:
    if g.n > bound:
        raise OracleBoundError(f"graph has {g.n} vertices, oracle bound is {bound}")


def k_colorable(g: Graph, k: int, bound: int = DEFAULT_BOUND) -> Coloring | None:
    """Backtracking with DSATUR vertex choice and increasing-color symmetry breaking."""
    _guard(g, bound)
    n = g.n
    if n == 0:
        return Coloring((), k)
    if k <= 0:
        return None
    colors = [-1] * n
    # forbidden[v][c] counts colored neighbors of v that carry color c
    forbidden = [[0] * k for _ in range(n)]
    sat = [0] * n

    def assign(v: int, c: int, delta: int) -> None:
        for u in bits(g.adj[v]):
            row = forbidden[u]
            if delta > 0:
                if row[c] == 0:
                    sat[u] += 1
                row[c] += 1
            else:
                row[c] -= 1
                if row[c] == 0:
                    sat[u] -= 1

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (sat[u], g.degree(u), -u))
        row = forbidden[v]
        for c in range(min(used + 1, k)):
            if row[c]:
                continue
            colors[v] = c
            assign(v, c, +1)
            if rec(done + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            colors[v] = -1
        return False

    if rec(0, 0):
        return Coloring(tuple(colors), k)
    return None


def clique_number(g: Graph, bound: int = DEFAULT_BOUND) -> int:
    return len(max_clique(g, bound))


def max_clique(g: Graph, bound: int = DEFAULT_BOUND) -> frozenset:
    """Branch and bound; greedy coloring of the candidate set gives the upper bound."""
    _guard(g, bound)
    best: list[int] = []

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # returns (vertex, color number) in non-decreasing color order
        order = []
        color = 0
        left = cand
        while left:
            color += 1
            avail = left
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~g.adj[v] & ~(1 << v)
                left &= ~(1 << v)
                order.append((v, color))
        return order

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        for v, col in reversed(color_bound(cand)):
            if len(clique) + col <= len(best):
                return
            clique.append(v)
            nxt = cand & g.adj[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], g.full_mask)
    return frozenset(best)


def chromatic_number(g: Graph, bound: int = DEFAULT_BOUND) -> int:
    return len(optimal_coloring(g, bound).classes())


def optimal_coloring(g: Graph, bound: int = DEFAULT_BOUND) -> Coloring:
    _guard(g, bound)
    if g.n == 0:
        return Coloring((), 0)
    k = max(clique_number(g, bound), 1)
    while True:
        col = k_colorable(g, k, bound)
        if col is not None:
            return col
        k += 1


def bipartite_2color(g: Graph) -> Coloring | None:
    colors = [-1] * g.n
    for s in range(g.n):
        if colors[s] >= 0:
            continue
        colors[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if colors[u] < 0:
                    colors[u] = 1 - colors[v]
                    queue.append(u)
                elif colors[u] == colors[v]:
                    return None
    return Coloring(tuple(colors), 2)
