"""graph6, DIMACS ``.col`` and plain edge-list readers/writers."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, build_graph

FORMATS = ("graph6", "dimacs", "edgelist")
_EXTENSIONS = {".g6": "graph6", ".graph6": "graph6", ".col": "dimacs", ".txt": "edgelist"}


class ParseError(ValueError):
    pass


# -- graph6 ----------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> str:
    """Encode without the optional ``>>graph6<<`` header."""
    out = bytearray(_encode_n(g.n))
    bitstream = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bitstream += [0] * (-len(bitstream) % 6)
    for k in range(0, len(bitstream), 6):
        chunk = 0
        for bit in bitstream[k:k + 6]:
            chunk = chunk << 1 | bit
        out.append(chunk + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = line.encode("ascii")
    if not data or any(c < 63 or c > 126 for c in data):
        raise ParseError(f"not a graph6 string: {text!r}")
    vals = [c - 63 for c in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = n << 6 | v
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = n << 6 | v
    need = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    bitstream = [(v >> s) & 1 for v in body for s in range(5, -1, -1)]
    if any(bitstream[need:]):
        raise ParseError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


# -- DIMACS ----------------------------------------------------------------

def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        try:
            if tokens[0] == "p":
                if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                    raise ParseError(f"line {lineno}: bad problem line {raw!r}")
                n = int(tokens[2])
            elif tokens[0] == "e":
                if n is None:
                    raise ParseError(f"line {lineno}: edge before problem line")
                edges.append((int(tokens[1]) - 1, int(tokens[2]) - 1))
            else:
                raise ParseError(f"line {lineno}: unknown line {raw!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from exc
    if n is None:
        raise ParseError("missing 'p edge' line")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


# -- edge list -------------------------------------------------------------

def to_edgelist(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = [line.split("#")[0].split() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 1:
        raise ParseError("edge list must start with a vertex-count line")
    try:
        n = int(rows[0][0])
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise ParseError(f"bad edge line {' '.join(r)!r}")
            edges.append((int(r[0]), int(r[1])))
        return build_graph(n, edges)
    except ParseError:
        raise
    except (ValueError, GraphError) as exc:
        raise ParseError(str(exc)) from exc


_READERS = {"graph6": from_graph6, "dimacs": from_dimacs, "edgelist": from_edgelist}
_WRITERS = {"graph6": lambda g: to_graph6(g) + "\n", "dimacs": to_dimacs, "edgelist": to_edgelist}


def detect_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix not in _EXTENSIONS:
        raise ParseError(f"cannot infer format from extension {suffix!r}; pass --format")
    return _EXTENSIONS[suffix]


def parse(text: str, fmt: str) -> Graph:
    if fmt not in _READERS:
        raise ParseError(f"unknown format {fmt!r}")
    return _READERS[fmt](text)


def parse_graph6_lines(text: str) -> list[Graph]:
    return [from_graph6(line) for line in text.splitlines() if line.strip()]


def dumps(g: Graph, fmt: str) -> str:
    return _WRITERS[fmt](g)


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(path)
    return parse(Path(path).read_text(), fmt)
