"""Top-level colorers: C5-free pipeline, the 7-color bound and K_t lifting."""

from __future__ import annotations

from ..detect import class_check, find_induced
from ..graph import Graph
from ..oracle import Coloring
from .c5case import build_c5_partition, c5_classes
from .c7bar import c7bar_classes
from .c9bar import c9bar_classes
from .common import to_coloring
from .lift import lift_classes
from .trace import CaseTrace, Kind, SoundnessError

MAIN_CLASS = "main2K2K6"


def budget_for(t: int) -> int:
    """Color budget for (2K2, K3+K1, C5+K1, K_t)-free graphs, t >= 6."""
    if t < 6:
        raise ValueError("t must be at least 6")
    return 2 * t - 5


def _refuse_unless_member(g: Graph, class_id: str, trace) -> None:
    report = class_check(g, class_id)
    if not report.member:
        pid, emb = report.violations[0]
        raise SoundnessError(Kind.OUT_OF_CLASS, f"input contains an induced {pid}",
                             emb.map, trace, report=report)


def color_c5free_k5free(g: Graph, trace: CaseTrace | None = None) -> Coloring:
    """5 colors for (2K2, K3+K1, C5, K5)-free graphs."""
    trace = CaseTrace() if trace is None else trace
    emb = find_induced(g, "C9bar")
    if emb is not None:
        trace.add("c5k5:c9bar")
        classes = c9bar_classes(g, emb, trace)
    else:
        trace.add("c5k5:c7bar")
        classes = c7bar_classes(g, trace)
    return to_coloring(g, classes, 5, trace)


def color_c5free(g: Graph, trace: CaseTrace | None = None) -> Coloring:
    """7 colors for (2K2, K3+K1, C5, K6)-free graphs: pivot lift over the 5-color case."""
    trace = CaseTrace() if trace is None else trace
    if g.n == 0:
        return Coloring((), 7)
    classes, _ = lift_classes(g, color_c5free_k5free, trace, "c5free:lift")
    return to_coloring(g, classes, 7, trace)


def _main(g: Graph, trace: CaseTrace) -> Coloring:
    if g.n == 0:
        trace.add("main:empty")
        return Coloring((), 7)
    emb = find_induced(g, "C5")
    if emb is None:
        trace.add("main:noC5")
        return color_c5free(g, trace)
    trace.add("main:hasC5")
    part = build_c5_partition(g, emb, trace)
    return to_coloring(g, c5_classes(g, part, trace), 7, trace)


def color_main(g: Graph, precheck: bool = True) -> tuple[Coloring, CaseTrace]:
    """Certified 7-coloring of a (2K2, K3+K1, C5+K1, K6)-free graph."""
    trace = CaseTrace()
    if precheck:
        _refuse_unless_member(g, MAIN_CLASS, trace)
    return _main(g, trace), trace


def _ktfree(g: Graph, t: int, trace: CaseTrace) -> Coloring:
    if t == 6:
        return _main(g, trace)
    if g.n == 0:
        trace.add("main:empty")
        return Coloring((), budget_for(t))
    classes, _ = lift_classes(g, lambda sub, tr: _ktfree(sub, t - 1, tr), trace, "ktfree:lift")
    return to_coloring(g, classes, budget_for(t), trace)


def color_ktfree(g: Graph, t: int, precheck: bool = True,
                 trace: CaseTrace | None = None) -> Coloring:
    """At most 2t - 5 colors for (2K2, K3+K1, C5+K1, K_t)-free graphs, t >= 6."""
    budget_for(t)
    trace = CaseTrace() if trace is None else trace
    if precheck:
        _refuse_unless_member(g, f"main2K2K{t}", trace)
    return _ktfree(g, t, trace)
