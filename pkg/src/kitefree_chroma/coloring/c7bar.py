"""Five-coloring of (2K2, K3+K1, C5, K5, C9bar)-free graphs.

Without a C7bar dominated by a vertex, the pivot's neighborhood is a K4-free
perfect graph and is 3-colored by exact search. Otherwise the graph is split
around the dominated C7bar (labelled v_1..v_7, consecutive vertices
non-adjacent) into A_i, B_i, D_i and W.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..detect import find_dominated_c7bar
from ..graph import Graph, is_anticomplete, is_complete
from ..oracle import Coloring, bipartite_2color
from .common import EMPTY, Ring, assemble, dihedral_perms, exact_classes, to_coloring
from .lift import two_color_rest
from .trace import CaseTrace, Kind, SoundnessError

K = 7


@dataclass(frozen=True)
class C7barPartition:
    Q: Ring
    w: int
    A: Ring  # Q-neighborhood is exactly {v_{i-1}, v_i, v_{i+1}}
    B: Ring  # Q-neighborhood is Q minus {v_{i-1}, v_i, v_{i+1}}
    D: Ring  # Q-neighborhood is Q minus {v_{i-3}, v_{i+3}}
    W: frozenset  # complete to Q

    def relabel(self, perm) -> "C7barPartition":
        return C7barPartition(self.Q.relabel(perm), self.w, self.A.relabel(perm),
                              self.B.relabel(perm), self.D.relabel(perm), self.W)

    def v(self, *indices: int) -> frozenset:
        return frozenset(self.Q[i] for i in indices)


def _ring_set(i: int, offsets) -> frozenset:
    return frozenset((i + d - 1) % K + 1 for d in offsets)


_FULL = frozenset(range(1, K + 1))
_SIG = {}
for _i in range(1, K + 1):
    _SIG[_ring_set(_i, (-1, 0, 1))] = ("A", _i)
    _SIG[_FULL - _ring_set(_i, (-1, 0, 1))] = ("B", _i)
    _SIG[_FULL - _ring_set(_i, (-3, 3))] = ("D", _i)
_SIG[_FULL] = ("W", 0)


def build_c7bar_partition(g: Graph, q, w: int, trace=None) -> C7barPartition:
    qset = frozenset(q)
    sets = {name: [set() for _ in range(K)] for name in "ABD"}
    w_set = set()
    for u in g.vertices:
        if u in qset:
            continue
        sig = frozenset(i + 1 for i in range(K) if g.has_edge(u, q[i]))
        if sig not in _SIG:
            raise SoundnessError(Kind.PARTITION_INCOMPLETE,
                                 f"vertex {u} sees v_{sorted(sig)} on the C7bar", [u], trace)
        name, i = _SIG[sig]
        if name == "W":
            w_set.add(u)
        else:
            sets[name][i - 1].add(u)
    rings = {name: Ring(map(frozenset, rows)) for name, rows in sets.items()}
    part = C7barPartition(Ring(q), w, rings["A"], rings["B"], rings["D"], frozenset(w_set))
    _verify(g, part, trace)
    return part


def _verify(g: Graph, p: C7barPartition, trace) -> None:
    A, B, D, W = p.A, p.B, p.D, p.W

    def need(ok, msg, witness=()):
        if not ok:
            raise SoundnessError(Kind.OUT_OF_CLASS, msg, sorted(witness), trace)

    need(is_anticomplete(g, W, W), "W is not stable", W)
    need(is_complete(g, W, A.all() | B.all()), "W is not complete to A and B", W)
    need(is_anticomplete(g, W, D.all()), "W touches D", W)
    sub, _ = g.induced(D.all())
    need(bipartite_2color(sub) is not None, "D is not bipartite", D.all())
    for i in range(1, K + 1):
        need(is_anticomplete(g, A[i], A[i] | A[i + 1]), f"A_{i} not stable or touches A_{i + 1}", A[i])
        need(not A[i] or not (A[i + 3] | A[i - 3]), f"A_{i} and A_{i}+-3 both nonempty", A[i])
        need(is_anticomplete(g, B[i], B[i] | B[i + 1]), f"B_{i} not stable or touches B_{i + 1}", B[i])
        need(is_anticomplete(g, D[i], D[i]), f"D_{i} not stable", D[i])
        need(is_anticomplete(g, A[i], B[i + 3] | B[i - 3]), f"A_{i} touches B_{i}+-3", A[i])
        for a in A[i]:
            need(not (g.N(a) & B[i + 2] and g.N(a) & B[i - 2]),
                 f"{a} in A_{i} sees both B_{i + 2} and B_{i - 2}", [a])
        need(is_complete(g, D[i], D[i + 2] | D[i - 2] | D[i + 3] | D[i - 3]),
             f"D_{i} not complete to D_{i}+-2, D_{i}+-3", D[i])
        need(is_anticomplete(g, D[i], D[i + 1]), f"D_{i} touches D_{i + 1}", D[i])
        need(is_anticomplete(g, A[i], D[i + 1] | D[i - 1]), f"A_{i} touches D_{i}+-1", A[i])
        need(not A[i] or not D[i + 1] or not D[i - 1], f"A_{i}, D_{i + 1}, D_{i - 1} all nonempty", A[i])
        need(is_complete(g, A[i], A[i + 2] | A[i - 2] | D[i + 2] | D[i - 2]),
             f"A_{i} not complete to A_{i}+-2, D_{i}+-2", A[i])
        need(is_anticomplete(g, B[i], D[i + 3] | D[i - 3]), f"B_{i} touches D_{i}+-3", B[i])


def _minus_d(g: Graph, p: C7barPartition):
    """Five classes on G - D plus the block {v_3} + B_3 that may take color 3 or 4."""
    A, B = p.A, p.B
    a3_hit = frozenset(a for a in A[3] if g.N(a) & B[1])
    base = [
        p.v(5, 6) | A[2] | B[5] | B[6] | a3_hit,
        p.v(1, 7) | A[4] | B[1] | B[7] | (A[3] - a3_hit),
        p.v(2) | B[2],
        p.v(4) | B[4],
        p.W,
    ]
    return base, p.v(3) | B[3]


def _d_recipes(p: C7barPartition):
    """Yield (tag, extra sets per color 1..5, color for {v_3}+B_3) for this labelling."""
    D = p.D
    everything = D.all()
    s1 = D[5] | D[6]
    yield "c7bar:D56", [EMPTY, EMPTY, s1, EMPTY, everything - s1], 4
    s1 = D[6] | D[7]
    yield "c7bar:D67", [EMPTY, EMPTY, D[6], D[7], everything - s1], 3
    if not p.A[2] and not p.A[3]:
        s1 = D[1] | D[2]
        yield "c7bar:D12", [EMPTY, D[2], EMPTY, D[1], everything - s1], 3


def _dominated_classes(g: Graph, part: C7barPartition, trace: CaseTrace) -> list[frozenset]:
    everything = frozenset(g.vertices)
    a_all = part.A.all()
    first_error = None
    for perm in dihedral_perms(K):
        p = part.relabel(perm)
        if not a_all <= p.A[2] | p.A[3] | p.A[4]:
            continue
        base, block = _minus_d(g, p)
        for tag, extra, block_color in _d_recipes(p):
            classes = [c | e for c, e in zip(base, extra)]
            classes[block_color - 1] |= block
            try:
                out = assemble(g, classes, everything, trace, "c7bar color")
            except SoundnessError as exc:
                first_error = first_error or exc
                continue
            trace.add(tag)
            return out
    raise SoundnessError(Kind.CASE_EXHAUSTED,
                         "no labelling of the dominated C7bar fits a D-split recipe"
                         + (f" (first failure: {first_error.message})" if first_error else ""),
                         first_error.witness if first_error else (), trace)


def c7bar_classes(g: Graph, trace: CaseTrace) -> list[frozenset]:
    if g.n == 0:
        trace.add("c7bar:pivot")
        return []
    found = find_dominated_c7bar(g)
    if found is None:
        trace.add("c7bar:pivot")
        v = 0
        inner = exact_classes(g, g.N(v), 3, trace, f"neighborhood of {v}") if g.N(v) else []
        rest = two_color_rest(g, v, trace)
        fresh = [frozenset(u for u, c in rest.items() if c == k) for k in (0, 1)]
        return [c for c in inner + fresh if c]
    emb, w = found
    trace.add("c7bar:dominated")
    part = build_c7bar_partition(g, emb.map, w, trace)
    return _dominated_classes(g, part, trace)


def color_c7bar(g: Graph, trace: CaseTrace | None = None) -> Coloring:
    trace = CaseTrace() if trace is None else trace
    return to_coloring(g, c7bar_classes(g, trace), 5, trace)
