"""Five-coloring around an induced complement of C9.

Indices are 1-based and cyclic, matching the labelling v_1..v_9 in which
consecutive vertices are NON-adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..detect import Embedding, verify_embedding
from ..graph import Graph, is_anticomplete
from ..oracle import Coloring
from .common import Ring, assemble, dihedral_perms, to_coloring
from .trace import CaseTrace, Kind, SoundnessError

K = 9


@dataclass(frozen=True)
class C9barPartition:
    Q: Ring  # v_1..v_9
    A: Ring  # A_i: Q-neighborhood misses exactly v_{i+3..i+6}
    B: Ring  # B_i: Q-neighborhood misses exactly v_{i-1}, v_i, v_{i+1}

    def relabel(self, perm) -> "C9barPartition":
        return C9barPartition(self.Q.relabel(perm), self.A.relabel(perm), self.B.relabel(perm))

    def v(self, *indices: int) -> frozenset:
        return frozenset(self.Q[i] for i in indices)


def _signatures():
    a_sig, b_sig = {}, {}
    full = frozenset(range(1, K + 1))
    for i in range(1, K + 1):
        a_sig[full - {(i + d - 1) % K + 1 for d in (3, 4, 5, 6)}] = i
        b_sig[full - {(i + d - 1) % K + 1 for d in (-1, 0, 1)}] = i
    return a_sig, b_sig


_A_SIG, _B_SIG = _signatures()


def build_c9bar_partition(g: Graph, emb: Embedding, trace=None) -> C9barPartition:
    if emb.pattern_id != "C9bar" or not verify_embedding(g, emb):
        raise SoundnessError(Kind.PRECONDITION, "embedding is not an induced C9bar",
                             emb.map, trace)
    q = emb.map
    qset = frozenset(q)
    a = [set() for _ in range(K)]
    b = [set() for _ in range(K)]
    for u in g.vertices:
        if u in qset:
            continue
        sig = frozenset(i + 1 for i in range(K) if g.has_edge(u, q[i]))
        if sig in _A_SIG:
            a[_A_SIG[sig] - 1].add(u)
        elif sig in _B_SIG:
            b[_B_SIG[sig] - 1].add(u)
        else:
            raise SoundnessError(Kind.PARTITION_INCOMPLETE,
                                 f"vertex {u} sees v_{sorted(sig)} on the C9bar", [u], trace)
    part = C9barPartition(Ring(q), Ring(map(frozenset, a)), Ring(map(frozenset, b)))
    _verify(g, part, trace)
    return part


def _verify(g: Graph, p: C9barPartition, trace) -> None:
    A, B = p.A, p.B

    def fail(msg, witness):
        raise SoundnessError(Kind.OUT_OF_CLASS, msg, witness, trace)

    for i in range(1, K + 1):
        for name, X in (("A", A), ("B", B)):
            if not is_anticomplete(g, X[i], X[i]) or not is_anticomplete(g, X[i], X[i + 1]):
                fail(f"{name}_{i} is not stable or touches {name}_{i + 1}", sorted(X[i]))
        if not is_anticomplete(g, A[i], B[i + 4] | B[i - 4]):
            fail(f"A_{i} touches B_{i + 4} or B_{i - 4}", sorted(A[i]))
        for a in A[i]:
            if g.N(a) & B[i + 3] and g.N(a) & B[i - 3]:
                fail(f"{a} in A_{i} sees both B_{i + 3} and B_{i - 3}", [a])


def _case1_sets(g: Graph, p: C9barPartition) -> list[frozenset]:
    A, B = p.A, p.B
    a2_hit = frozenset(a for a in A[2] if g.N(a) & B[5])
    a4_hit = frozenset(a for a in A[4] if g.N(a) & B[1])
    return [
        p.v(1, 2) | A[6] | A[7] | B[2],
        p.v(3, 4) | A[8] | A[9] | B[3] | B[4],
        p.v(5, 6) | A[1] | B[5] | B[6] | (A[2] - a2_hit),
        p.v(9) | A[5] | B[1] | B[9] | (A[4] - a4_hit),
        p.v(7, 8) | A[3] | B[7] | B[8] | a2_hit | a4_hit,
    ]


def _case2_sets(g: Graph, p: C9barPartition) -> list[frozenset]:
    A, B = p.A, p.B
    a7_hit = frozenset(a for a in A[7] if g.N(a) & B[1])
    a9_hit = frozenset(a for a in A[9] if g.N(a) & B[6])
    b8_hit = frozenset(b for b in B[8] if g.N(b) & A[2])
    return [
        p.v(1, 2) | A[6] | B[1] | B[2] | (A[7] - a7_hit),
        p.v(3, 4) | A[8] | B[3] | B[4] | a7_hit | a9_hit,
        p.v(5, 6) | A[1] | B[5] | B[6] | (A[9] - a9_hit),
        p.v(7, 8) | A[2] | A[3] | B[7] | (B[8] - b8_hit),
        p.v(9) | A[4] | A[5] | B[9] | b8_hit,
    ]


def c9bar_classes(g: Graph, emb: Embedding, trace: CaseTrace) -> list[frozenset]:
    part = build_c9bar_partition(g, emb, trace)
    everything = frozenset(g.vertices)
    for perm in dihedral_perms(K):
        p = part.relabel(perm)
        if is_anticomplete(g, p.A[9], p.B[3]):
            trace.add("c9bar:case1")
            return assemble(g, _case1_sets(g, p), everything, trace, "c9bar case-1 set")
    trace.add("c9bar:case2")
    return assemble(g, _case2_sets(g, part), everything, trace, "c9bar case-2 set")


def color_c9bar(g: Graph, emb: Embedding, trace: CaseTrace | None = None) -> Coloring:
    trace = CaseTrace() if trace is None else trace
    return to_coloring(g, c9bar_classes(g, emb, trace), 5, trace)
