"""Induced-subgraph detection for small fixed patterns and class membership.

Matching is plain backtracking over the pattern vertices (most constrained
first) with host candidates tried in increasing id order, so the witness
returned for a given input is always the same. Twin pattern vertices are
matched to increasing host ids, so each vertex set is reported once per
non-twin labelling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .graph import (
    Graph,
    antihole,
    bits,
    build_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    path_graph,
)

MAX_PATTERN = 10
ODD_HOLE_BOUND = 16


class DetectError(ValueError):
    pass


@dataclass(frozen=True)
class Pattern:
    id: str
    template: Graph
    cyclic: int = 0  # cycle length for hole/antihole labelled patterns, else 0


@dataclass(frozen=True)
class Embedding:
    pattern_id: str
    map: tuple[int, ...]  # pattern vertex i -> host vertex map[i]

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.map)

    def __getitem__(self, i: int) -> int:
        return self.map[i]


@dataclass(frozen=True)
class ClassReport:
    class_id: str
    member: bool
    violations: tuple[tuple[str, Embedding], ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "class_id": self.class_id,
            "member": self.member,
            "violations": [{"pattern": p, "map": list(e.map)} for p, e in self.violations],
        }


def _kite() -> Graph:
    # P4 0-1-2-3 plus vertex 4 adjacent to all of it except the end 0
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2), (4, 3)])


_FIXED = {
    "P5": lambda: Pattern("P5", path_graph(5)),
    "kite": lambda: Pattern("kite", _kite()),
    "2K2": lambda: Pattern("2K2", disjoint_union(complete_graph(2), complete_graph(2))),
    "K3+K1": lambda: Pattern("K3+K1", disjoint_union(complete_graph(3), empty_graph(1))),
    "C5+K1": lambda: Pattern("C5+K1", disjoint_union(cycle_graph(5), empty_graph(1))),
    "C7bar_dominated": lambda: Pattern("C7bar_dominated", join(antihole(7), empty_graph(1))),
}

_HOLE = re.compile(r"^C(\d+)(bar)?$")
_CLIQUE = re.compile(r"^K(\d+)$")


@lru_cache(maxsize=None)
def get_pattern(pid: str) -> Pattern:
    """Look up a pattern by name: fixed names, ``K<t>``, ``C<k>`` or ``C<k>bar``."""
    if pid in _FIXED:
        return _FIXED[pid]()
    m = _CLIQUE.match(pid)
    if m:
        return Pattern(pid, complete_graph(int(m.group(1))))
    m = _HOLE.match(pid)
    if m:
        k = int(m.group(1))
        if k < 3:
            raise DetectError(f"no cycle on {k} vertices")
        tmpl = antihole(k) if m.group(2) else cycle_graph(k)
        return Pattern(pid, tmpl, cyclic=k)
    raise DetectError(f"unknown pattern {pid!r}")


PATTERN_IDS = ("P5", "kite", "2K2", "K3+K1", "C5", "C5+K1", "C6bar", "C7bar", "C9bar",
               *(f"K{t}" for t in range(1, 8)), "C7bar_dominated")

CLASSES: dict[str, tuple[str, ...]] = {
    "P5kite": ("P5", "kite"),
    "P5kiteK6": ("P5", "kite", "K6"),
    "P5kiteK7": ("P5", "kite", "K7"),
    "base2K2": ("2K2", "K3+K1", "C5+K1"),
    "main2K2K6": ("2K2", "K3+K1", "C5+K1", "K6"),
    "main2K2K7": ("2K2", "K3+K1", "C5+K1", "K7"),
    "c5free2K2K6": ("2K2", "K3+K1", "C5", "K6"),
    "c5free2K2K5": ("2K2", "K3+K1", "C5", "K5"),
    "c9barfree": ("2K2", "K3+K1", "C5", "K5", "C9bar"),
}


def class_patterns(class_id: str) -> tuple[str, ...]:
    """Forbidden list for a class; ``main2K2K<t>`` is accepted for any t >= 1."""
    if class_id in CLASSES:
        return CLASSES[class_id]
    m = re.match(r"^main2K2K(\d+)$", class_id)
    if m and int(m.group(1)) >= 1:
        return ("2K2", "K3+K1", "C5+K1", f"K{m.group(1)}")
    raise DetectError(f"unknown class {class_id!r}; known: {', '.join(CLASSES)}")


# -- matcher ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _match_order(tmpl: Graph) -> tuple[int, ...]:
    order: list[int] = []
    left = set(tmpl.vertices)
    while left:
        placed = sum(1 << p for p in order)
        best = max(left, key=lambda p: ((tmpl.adj[p] & placed).bit_count(), tmpl.degree(p), -p))
        order.append(best)
        left.remove(best)
    return tuple(order)


@lru_cache(maxsize=None)
def _twin_links(tmpl: Graph, order: tuple[int, ...]) -> tuple[int, ...]:
    """For each depth, the depth of the latest earlier twin, or -1.

    Twins (same neighborhood apart from each other) can be permuted by an
    automorphism, so forcing increasing host ids inside a twin class loses no
    vertex set; without this K_t searches walk every ordering of every clique.
    """
    links = []
    for d, p in enumerate(order):
        link = -1
        for e in range(d):
            q = order[e]
            if tmpl.adj[p] & ~(1 << q) == tmpl.adj[q] & ~(1 << p):
                link = e
        links.append(link)
    return tuple(links)


def _search(g: Graph, tmpl: Graph, allowed: int):
    k = tmpl.n
    order = _match_order(tmpl)
    links = _twin_links(tmpl, order)
    assign = [-1] * k
    full = g.full_mask
    deg_ok = []
    for p in order:
        dp, ndp = tmpl.degree(p), k - 1 - tmpl.degree(p)
        mask = 0
        for v in bits(allowed):
            if g.degree(v) >= dp and g.n - 1 - g.degree(v) >= ndp:
                mask |= 1 << v
        deg_ok.append(mask)

    def rec(depth: int, used: int):
        if depth == k:
            yield tuple(assign)
            return
        p = order[depth]
        cand = deg_ok[depth] & ~used
        if links[depth] >= 0:
            cand &= ~((2 << assign[order[links[depth]]]) - 1)
        for q in order[:depth]:
            hv = assign[q]
            if tmpl.has_edge(p, q):
                cand &= g.adj[hv]
            else:
                cand &= full & ~g.adj[hv] & ~(1 << hv)
            if not cand:
                return
        for v in bits(cand):
            assign[p] = v
            yield from rec(depth + 1, used | 1 << v)
        assign[p] = -1

    return rec(0, 0)


def iter_induced(g: Graph, pattern: Pattern | str, within=None):
    """Yield every induced embedding of ``pattern``, optionally inside a vertex set."""
    if isinstance(pattern, str):
        pattern = get_pattern(pattern)
    if pattern.template.n > MAX_PATTERN:
        raise DetectError(f"pattern {pattern.id} exceeds {MAX_PATTERN} vertices")
    allowed = g.full_mask if within is None else sum(1 << v for v in within)
    for mp in _search(g, pattern.template, allowed):
        yield Embedding(pattern.id, mp)


def find_induced(g: Graph, pattern: Pattern | str, within=None) -> Embedding | None:
    return next(iter_induced(g, pattern, within), None)


def verify_embedding(g: Graph, emb: Embedding) -> bool:
    """Independent re-check: injective and adjacency/non-adjacency preserved."""
    tmpl = get_pattern(emb.pattern_id).template
    mp = emb.map
    if len(mp) != tmpl.n or len(set(mp)) != len(mp) or not all(0 <= v < g.n for v in mp):
        return False
    return all(tmpl.has_edge(i, j) == g.has_edge(mp[i], mp[j])
               for i, j in combinations(range(tmpl.n), 2))


def dihedral_relabelings(emb: Embedding) -> list[Embedding]:
    """All rotations then all reflections of a cyclically labelled embedding.

    Entry ``r`` (``r < k``) maps position ``j`` to old position ``r + j``;
    entry ``k + r`` maps it to ``r - j``.
    """
    k = get_pattern(emb.pattern_id).cyclic
    if not k:
        raise DetectError(f"pattern {emb.pattern_id} is not cyclic")
    out = []
    for s in (1, -1):
        for r in range(k):
            out.append(Embedding(emb.pattern_id, tuple(emb.map[(r + s * j) % k] for j in range(k))))
    return out


def class_check(g: Graph, class_id: str) -> ClassReport:
    violations = []
    for pid in class_patterns(class_id):
        emb = find_induced(g, pid)
        if emb is not None:
            violations.append((pid, emb))
    return ClassReport(class_id, not violations, tuple(violations))


def in_class(g: Graph, class_id: str) -> bool:
    return all(find_induced(g, pid) is None for pid in class_patterns(class_id))


def find_dominated_c7bar(g: Graph) -> tuple[Embedding, int] | None:
    emb = find_induced(g, "C7bar_dominated")
    if emb is None:
        return None
    return Embedding("C7bar", emb.map[:7]), emb.map[7]


def _cyclic_order(g: Graph, sub: tuple[int, ...], complemented: bool) -> tuple[int, ...] | None:
    """Order ``sub`` as a hole (or antihole) if it induces one, else ``None``."""
    k = len(sub)
    mask = sum(1 << v for v in sub)

    def nb(v):
        row = g.adj[v] & mask
        if complemented:
            row = mask & ~row & ~(1 << v)
        return row

    if any(nb(v).bit_count() != 2 for v in sub):
        return None
    order = [sub[0]]
    prev, cur = None, sub[0]
    while True:
        nxt = [u for u in bits(nb(cur)) if u != prev]
        if prev is None:
            nxt = nxt[:1]
        if not nxt or nxt[0] == sub[0]:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return tuple(order) if len(order) == k else None


def find_odd_hole_or_antihole(g: Graph, bound: int = ODD_HOLE_BOUND) -> Embedding | None:
    """Brute force over odd vertex subsets of size >= 5; smallest witness first."""
    if g.n > bound:
        raise DetectError(f"graph has {g.n} vertices, odd-hole search bound is {bound}")
    for k in range(5, g.n + 1, 2):
        for sub in combinations(range(g.n), k):
            order = _cyclic_order(g, sub, complemented=False)
            if order is not None:
                return Embedding(f"C{k}", order)
            order = _cyclic_order(g, sub, complemented=True)
            if order is not None:
                # consecutive entries are non-adjacent, matching the antihole template
                return Embedding(f"C{k}bar", order)
    return None
