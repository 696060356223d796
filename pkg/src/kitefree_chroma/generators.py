"""Tight examples, C5 blow-ups, seeded in-class samples and exhaustive enumeration."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator

from .detect import class_patterns, find_induced
from .graph import Graph, antihole, bits, empty_graph, join

P_SWEEP = (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8)
REJECTION_BOUND = 12
ENUMERATE_BOUND = 7

SEEDS = {
    "grow": lambda: empty_graph(0),
    "c5": lambda: antihole(5),
    "c9bar": lambda: antihole(9),
    "c7bar_dominated": lambda: join(antihole(7), empty_graph(1)),
    "2c5": lambda: join(antihole(5), antihole(5)),
}


class GenError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    kind: str  # tight | c5_blowup | random_class | exhaustive
    params: dict = field(default_factory=dict)

    def validate(self) -> None:
        p = self.params
        if self.kind == "tight":
            if int(p.get("n", 0)) < 1:
                raise GenError("tight needs n >= 1")
        elif self.kind == "c5_blowup":
            sizes = p.get("sizes", ())
            if len(sizes) != 5 or min(sizes) < 1:
                raise GenError("c5_blowup needs five sizes >= 1")
        elif self.kind == "random_class":
            if int(p.get("n", -1)) < 0 or "class_id" not in p:
                raise GenError("random_class needs n and class_id")
            class_patterns(p["class_id"])
            if p.get("mode", "grow") not in SEEDS and p.get("mode") != "rejection":
                raise GenError(f"unknown sampling mode {p.get('mode')!r}")
        elif self.kind == "exhaustive":
            if not 0 <= int(p.get("n", -1)) <= ENUMERATE_BOUND or "class_id" not in p:
                raise GenError(f"exhaustive needs class_id and 0 <= n <= {ENUMERATE_BOUND}")
            class_patterns(p["class_id"])
        else:
            raise GenError(f"unknown generator kind {self.kind!r}")

    def run(self) -> list[Graph]:
        self.validate()
        p = self.params
        if self.kind == "tight":
            return [tight_example(int(p["n"]), bool(p.get("plus_k1", False)))]
        if self.kind == "c5_blowup":
            return [c5_blowup(p["sizes"])]
        if self.kind == "random_class":
            g = random_in_class(p.get("seed", 0), int(p["n"]), p["class_id"], p.get("mode", "grow"))
            return [] if g is None else [g]
        return list(enumerate_small(int(p["n"]), p["class_id"], bool(p.get("dedup", False))))


def tight_example(n: int, plus_k1: bool = False) -> Graph:
    """Join of ``n`` copies of the C5 complement, optionally joined with a K1.

    Vertices ``5k..5k+4`` form factor ``k``; the apex, if any, comes last.
    """
    if n < 1:
        raise GenError("n must be at least 1")
    g = antihole(5)
    for _ in range(n - 1):
        g = join(g, antihole(5))
    if plus_k1:
        g = join(g, empty_graph(1))
    return g


def c5_blowup(sizes) -> Graph:
    """Five stable sets, each complete to its cyclic neighbors and anticomplete otherwise."""
    sizes = list(sizes)
    if len(sizes) != 5 or min(sizes) < 1:
        raise GenError("need five sizes >= 1")
    starts = [sum(sizes[:i]) for i in range(5)]
    n = sum(sizes)
    rows = [0] * n
    for i in range(5):
        nxt = (i + 1) % 5
        for a in range(starts[i], starts[i] + sizes[i]):
            for b in range(starts[nxt], starts[nxt] + sizes[nxt]):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return Graph(n, tuple(rows))


def _extend(g: Graph, nbrs: int) -> Graph:
    v = g.n
    rows = [row | ((nbrs >> u & 1) << v) for u, row in enumerate(g.adj)]
    rows.append(nbrs)
    return Graph(v + 1, tuple(rows))


def _member(g: Graph, patterns) -> bool:
    return all(find_induced(g, pid) is None for pid in patterns)


def _propose(rng: random.Random, g: Graph) -> int:
    if g.n == 0:
        return 0
    if rng.random() < 0.5:
        p = rng.choice(P_SWEEP)
        return sum(1 << u for u in range(g.n) if rng.random() < p)
    # near-twin of an existing vertex
    u = rng.randrange(g.n)
    nbrs = g.adj[u] | (1 << u if rng.random() < 0.5 else 0)
    for _ in range(rng.choice((0, 0, 1, 1, 2))):
        nbrs ^= 1 << rng.randrange(g.n)
    return nbrs


def random_in_class(seed, n: int, class_id: str, mode: str = "grow",
                    tries: int = 200) -> Graph | None:
    """Seeded member of ``class_id`` on ``n`` vertices, or ``None`` if sampling gives up.

    ``rejection`` draws whole G(n, p) graphs over the p sweep (n up to 12).
    The other modes grow a seed graph one vertex at a time, rejecting each
    proposed neighborhood that creates a forbidden pattern; since the classes
    are hereditary every member is reachable this way.
    """
    rng = random.Random(f"{seed}:{n}:{class_id}:{mode}")
    patterns = class_patterns(class_id)
    if mode == "rejection":
        if n > REJECTION_BOUND:
            raise GenError(f"rejection sampling is limited to n <= {REJECTION_BOUND}")
        for _ in range(tries):
            for p in P_SWEEP:
                rows = [0] * n
                for u in range(n):
                    for v in range(u + 1, n):
                        if rng.random() < p:
                            rows[u] |= 1 << v
                            rows[v] |= 1 << u
                g = Graph(n, tuple(rows))
                if _member(g, patterns):
                    return g
        return None
    if mode not in SEEDS:
        raise GenError(f"unknown sampling mode {mode!r}")
    g = SEEDS[mode]()
    if g.n > n or not _member(g, patterns):
        return None
    while g.n < n:
        for _ in range(tries):
            cand = _extend(g, _propose(rng, g))
            if _member(cand, patterns):
                g = cand
                break
        else:
            return None
    return g


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Least adjacency-row tuple over all vertex orders (brute force, small n only)."""
    best = ()
    for perm in permutations(range(g.n)):
        pos = [0] * g.n
        for i, v in enumerate(perm):
            pos[v] = i
        key = tuple(sum(1 << pos[u] for u in bits(g.adj[v])) for v in perm)
        if not best or key < best:
            best = key
    return best


def enumerate_small(n: int, class_id: str, dedup: bool = False) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices in the class, in edge-bitmask order."""
    if not 0 <= n <= ENUMERATE_BOUND:
        raise GenError(f"enumeration is limited to n <= {ENUMERATE_BOUND}")
    patterns = class_patterns(class_id)
    pairs = [(u, v) for v in range(n) for u in range(v)]
    seen = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if any(find_induced(g, pid) is not None for pid in patterns):
            continue
        if dedup:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


def slot_relations(base: Graph, slots, class_id: str) -> dict:
    """For every pair of slots, which adjacencies between two attached vertices stay in class.

    A slot is a neighborhood mask on ``base``. The result maps ``(s, t)`` with
    ``s <= t`` to a tuple of allowed edge states (subset of ``(False, True)``).
    """
    patterns = class_patterns(class_id)
    out = {}
    for s in range(len(slots)):
        for t in range(s, len(slots)):
            allowed = []
            for edge in (False, True):
                g = _extend(_extend(base, slots[s]), slots[t] | (int(edge) << base.n))
                if _member(g, patterns):
                    allowed.append(edge)
            out[s, t] = tuple(allowed)
    return out


def slot_sample(seed, base: Graph, slots, counts, class_id: str,
                bias: dict | None = None, pinned=(), rounds: int = 4000,
                relations: dict | None = None) -> tuple[Graph, list[int]]:
    """Attach ``counts[s]`` vertices with base-neighborhood ``slots[s]`` and repair to a member.

    Forced pair relations come from :func:`slot_relations`. Free pairs start
    at random (edge probability drawn per slot pair, or ``bias[(s, t)]``) and
    are flipped inside each violating witness until none is left; a witness
    with no free pair (and, rarely, any witness) loses one attached vertex.
    Vertices whose slot cannot coexist with an earlier one are dropped.
    Attached vertices are numbered slot by slot in ``counts`` order;
    ``pinned`` lists pairs ``(x, y)`` or ``(x, y, state)`` of those numbers
    whose adjacency is fixed (``state`` defaults to adjacent). Returns the graph and
    the slot of each attached vertex, in vertex order after the base.
    """
    rng = random.Random(f"slots:{seed}")
    patterns = class_patterns(class_id)
    rel = relations if relations is not None else slot_relations(base, slots, class_id)
    for s in range(len(slots)):
        if counts[s] and not _member(_extend(base, slots[s]), patterns):
            raise GenError(f"slot {s} is not in class on its own")
    bias = dict(bias or {})
    p = {}
    for key in rel:
        p[key] = bias.get(key, rng.choice((0.0, 0.25, 0.5, 0.75, 1.0)))
    slot_of = [s for s, c in enumerate(counts) for _ in range(c)]
    m = len(slot_of)
    # drop vertices whose slot cannot coexist with an earlier kept vertex
    alive = []
    for x in range(m):
        s = slot_of[x]
        if all(rel[min(s, slot_of[y]), max(s, slot_of[y])] for y in alive):
            alive.append(x)
    adj = [[False] * m for _ in range(m)]
    free = set()
    for x in range(m):
        for y in range(x + 1, m):
            key = (min(slot_of[x], slot_of[y]), max(slot_of[x], slot_of[y]))
            allowed = rel[key]
            if len(allowed) == 2:
                free.add((x, y))
                adj[x][y] = adj[y][x] = rng.random() < p[key]
            elif allowed:
                adj[x][y] = adj[y][x] = allowed[0]
    for pin in pinned:
        x, y = min(pin[:2]), max(pin[:2])
        state = pin[2] if len(pin) > 2 else True
        if x not in alive or y not in alive:
            raise GenError(f"pinned pair {(x, y)} uses a dropped vertex")
        if (x, y) not in free:
            if adj[x][y] != state:
                raise GenError(f"pinned pair {(x, y)} is forced the other way")
            continue
        free.discard((x, y))
        adj[x][y] = adj[y][x] = state
    protected = {x for pin in pinned for x in pin[:2]}

    def materialize():
        rows = list(base.adj) + [0] * len(alive)
        for k, x in enumerate(alive):
            v = base.n + k
            rows[v] |= slots[slot_of[x]]
            for u in bits(slots[slot_of[x]]):
                rows[u] |= 1 << v
            for k2, y in enumerate(alive):
                if adj[x][y]:
                    rows[v] |= 1 << (base.n + k2)
        return Graph(base.n + len(alive), tuple(rows))

    for _ in range(rounds):
        g = materialize()
        emb = None
        for pid in patterns:
            emb = find_induced(g, pid)
            if emb is not None:
                break
        if emb is None:
            return g, [slot_of[x] for x in alive]
        hit = sorted(alive[v - base.n] for v in emb.map if v >= base.n)
        flips = [(x, y) for i, x in enumerate(hit) for y in hit[i + 1:] if (x, y) in free]
        stuck = not flips or rng.random() < 0.02
        if not stuck:
            x, y = rng.choice(flips)
            adj[x][y] = adj[y][x] = not adj[x][y]
        else:
            # occasional removal keeps the repair from cycling
            loose = [x for x in hit if x not in protected]
            if loose:
                alive.remove(rng.choice(loose))
            elif flips:
                x, y = rng.choice(flips)
                adj[x][y] = adj[y][x] = not adj[x][y]
            else:
                raise GenError("a witness consists of pinned vertices only")
    raise GenError("slot repair did not converge")
