"""Helpers shared by the colorers: cyclic index access, stable-set assembly."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..graph import Graph, first_edge
from ..oracle import Coloring, bipartite_2color, check_coloring, k_colorable
from .trace import Kind, SoundnessError

EMPTY: frozenset = frozenset()


class Ring:
    """Read-only sequence indexed 1..k with indices taken modulo k."""

    __slots__ = ("items",)

    def __init__(self, items: Sequence):
        self.items = tuple(items)

    def __getitem__(self, i: int):
        return self.items[(i - 1) % len(self.items)]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def union(self, *indices: int) -> frozenset:
        out = set()
        for i in indices:
            out |= self[i]
        return frozenset(out)

    def all(self) -> frozenset:
        return frozenset().union(*self.items)

    def relabel(self, perm: Sequence[int]) -> "Ring":
        """New ring whose entry ``j`` (1-based) is old entry ``perm[j-1]``."""
        return Ring(self[p] for p in perm)


def dihedral_perms(k: int) -> list[tuple[int, ...]]:
    """1-based index maps ``j -> r + j`` then ``j -> r - j`` for r = 0..k-1."""
    out = []
    for s in (1, -1):
        for r in range(k):
            out.append(tuple((r + s * j - 1) % k + 1 for j in range(1, k + 1)))
    return out


def stable_or_raise(g: Graph, s: Iterable[int], what: str, trace) -> frozenset:
    s = frozenset(s)
    e = first_edge(g, s)
    if e is not None:
        raise SoundnessError(Kind.STABLE_SET_VIOLATED, f"{what} contains edge {e}", e, trace)
    return s


def all_stable(g: Graph, sets: Iterable[Iterable[int]]) -> bool:
    return all(first_edge(g, s) is None for s in sets)


def assemble(g: Graph, classes: Sequence[Iterable[int]], vertices: Iterable[int], trace,
             what: str = "color class") -> list[frozenset]:
    """Check that ``classes`` are stable and cover ``vertices``; make them disjoint.

    A vertex listed in several classes keeps the first one.
    """
    vertices = frozenset(vertices)
    seen: set = set()
    out = []
    for idx, c in enumerate(classes, 1):
        c = stable_or_raise(g, c, f"{what} {idx}", trace)
        out.append(frozenset(c - seen))
        seen |= c
    missing = vertices - seen
    if missing:
        raise SoundnessError(Kind.PARTITION_INCOMPLETE,
                             f"vertices {sorted(missing)} left uncolored", sorted(missing), trace)
    stray = seen - vertices
    if stray:
        raise SoundnessError(Kind.PARTITION_INCOMPLETE,
                             f"classes reach outside the target set: {sorted(stray)}",
                             sorted(stray), trace)
    return [c for c in out if c]


def exact_classes(g: Graph, s: Iterable[int], k: int, trace, what: str) -> list[frozenset]:
    """Exact ``k``-coloring of ``G[s]``; failure means the input left the class."""
    sub, back = g.induced(s)
    col = bipartite_2color(sub) if k == 2 else k_colorable(sub, k, bound=max(sub.n, 1))
    if col is None:
        raise SoundnessError(Kind.OUT_OF_CLASS,
                             f"{what} is not {k}-colorable", list(back), trace)
    return [frozenset(back[v] for v in c) for c in col.classes()]


def to_coloring(g: Graph, classes: Sequence[frozenset], budget: int, trace) -> Coloring:
    colors = [-1] * g.n
    for c, cls in enumerate(classes):
        for v in cls:
            colors[v] = c
    problem = check_coloring(g, colors, budget)
    if problem is not None or -1 in colors:
        raise SoundnessError(Kind.STABLE_SET_VIOLATED, problem or "uncolored vertex", (), trace)
    return Coloring(tuple(colors), budget)


def map_classes(classes: Iterable[Iterable[int]], back: Sequence[int]) -> list[frozenset]:
    return [frozenset(back[v] for v in c) for c in classes]
