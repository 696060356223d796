"""Pivot lifting: color N(v) with a base colorer and {v} plus non-neighbors with two more."""

from __future__ import annotations

from typing import Callable

from ..graph import Graph
from ..oracle import Coloring, bipartite_2color
from .common import map_classes, to_coloring
from .trace import CaseTrace, Kind, SoundnessError

BaseColorer = Callable[[Graph, CaseTrace], Coloring]


def two_color_rest(g: Graph, v: int, trace=None) -> dict[int, int]:
    """Proper 2-coloring of ``G[{v} + non-neighbors of v]`` as a vertex -> color map."""
    sub, back = g.induced(g.non_neighbors(v) | {v})
    col = bipartite_2color(sub)
    if col is None:
        raise SoundnessError(Kind.OUT_OF_CLASS,
                             f"non-neighborhood of {v} plus {v} is not bipartite",
                             list(back), trace)
    return {back[i]: c for i, c in enumerate(col.colors)}


def lift_classes(g: Graph, base: BaseColorer, trace: CaseTrace, tag: str,
                 pivot: int = 0) -> tuple[list[frozenset], int]:
    """Color classes of the lifted coloring and the number of base colors used."""
    trace.add(tag)
    sub, back = g.induced(g.N(pivot))
    if sub.n == 0:
        trace.add("lift:trivial")
        base_classes = []
    else:
        base_classes = map_classes(base(sub, trace).classes(), back)
    rest = two_color_rest(g, pivot, trace)
    fresh = [frozenset(u for u, c in rest.items() if c == k) for k in (0, 1)]
    return base_classes + [c for c in fresh if c], len(base_classes)


def lift_color(g: Graph, base: BaseColorer, trace: CaseTrace | None = None,
               tag: str = "c5free:lift", budget: int | None = None) -> Coloring:
    """Least-id pivot; base colors come first, the two fresh colors after them."""
    trace = CaseTrace() if trace is None else trace
    if g.n == 0:
        return Coloring((), budget or 0)
    classes, q = lift_classes(g, base, trace, tag)
    return to_coloring(g, classes, budget if budget is not None else q + 2, trace)
