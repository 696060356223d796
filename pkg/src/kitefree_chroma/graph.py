"""Immutable simple graphs over dense integer vertex ids.

Adjacency is stored as one int bitmask per vertex; vertex sets handed to and
from the rest of the package are plain ``frozenset`` objects of ids in the
host graph, so witnesses stay valid across module boundaries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

VertexSet = frozenset


class GraphError(ValueError):
    """Raised for malformed graph construction input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @cached_property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @cached_property
    def _nbr_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(bits(row)) for row in self.adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def N(self, v: int) -> frozenset:
        """Open neighborhood of ``v``."""
        return self._nbr_sets[v]

    def non_neighbors(self, v: int) -> frozenset:
        """Vertices other than ``v`` that are not adjacent to it."""
        return frozenset(bits(self.full_mask & ~self.adj[v] & ~(1 << v)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabeled to 0..k-1, plus the map back to host ids."""
        order = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            row = 0
            for u in bits(self.adj[v] & to_mask(order)):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(order), tuple(rows)), order

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``0..n-1``; duplicate edges are merged."""
    if n < 0:
        raise GraphError("negative vertex count")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


class Compose(str, enum.Enum):
    DISJOINT_UNION = "disjoint_union"
    JOIN = "join"


def compose(kind: Compose | str, g: Graph, h: Graph) -> Graph:
    """``G + H`` or ``G v H``; the vertices of ``h`` are shifted past those of ``g``."""
    kind = Compose(kind)
    shift = g.n
    g_rows = list(g.adj)
    h_rows = [row << shift for row in h.adj]
    if kind is Compose.JOIN:
        g_all = g.full_mask
        h_all = h.full_mask << shift
        g_rows = [row | h_all for row in g_rows]
        h_rows = [row | g_all for row in h_rows]
    return Graph(g.n + h.n, tuple(g_rows + h_rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return compose(Compose.DISJOINT_UNION, g, h)


def join(g: Graph, h: Graph) -> Graph:
    return compose(Compose.JOIN, g, h)


# -- named small graphs ------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return complement(empty_graph(n))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def antihole(n: int) -> Graph:
    """Complement of ``C_n``; vertices ``i`` and ``i+1`` are the NON-adjacent pairs."""
    return complement(cycle_graph(n))


# -- set relations -------------------------------------------------------------

class Relation(str, enum.Enum):
    COMPLETE = "complete"
    ANTICOMPLETE = "anticomplete"
    MIXED = "mixed"


class RelationReport(NamedTuple):
    kind: Relation
    vacuous: bool  # an empty side makes the pair both complete and anticomplete


def set_relation(g: Graph, s: Iterable[int], t: Iterable[int]) -> RelationReport:
    s, t = frozenset(s), frozenset(t)
    if s & t:
        raise GraphError(f"sets overlap on {sorted(s & t)}")
    if not s or not t:
        return RelationReport(Relation.COMPLETE, True)
    t_mask = to_mask(t)
    hits = [(g.adj[u] & t_mask).bit_count() for u in s]
    if all(h == len(t) for h in hits):
        return RelationReport(Relation.COMPLETE, False)
    if not any(hits):
        return RelationReport(Relation.ANTICOMPLETE, False)
    return RelationReport(Relation.MIXED, False)


def is_complete(g: Graph, s: Iterable[int], t: Iterable[int]) -> bool:
    t_mask = to_mask(t)
    return all(g.adj[u] & t_mask == t_mask & ~(1 << u) for u in s)


def is_anticomplete(g: Graph, s: Iterable[int], t: Iterable[int]) -> bool:
    t_mask = to_mask(t)
    return not any(g.adj[u] & t_mask for u in s)


def is_stable(g: Graph, s: Iterable[int]) -> bool:
    mask = to_mask(s)
    return not any(g.adj[u] & mask for u in bits(mask))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    mask = to_mask(s)
    return all(g.adj[u] & mask == mask & ~(1 << u) for u in bits(mask))


def set_kind(g: Graph, s: Iterable[int], mode: str) -> bool:
    if mode == "stable":
        return is_stable(g, s)
    if mode == "clique":
        return is_clique(g, s)
    raise ValueError(f"unknown mode {mode!r}")


def first_edge(g: Graph, s: Iterable[int]) -> tuple[int, int] | None:
    """An edge inside ``s`` (least endpoints first), or ``None`` if ``s`` is stable."""
    s = sorted(s)
    for u, v in combinations(s, 2):
        if g.has_edge(u, v):
            return (u, v)
    return None


def neighbors_in(g: Graph, v: int, s: Iterable[int]) -> frozenset:
    return g.N(v) & frozenset(s)
